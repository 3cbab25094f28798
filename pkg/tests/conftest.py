"""Shared fixtures: parsed corpora and built scenes, cached per session.

Tests treat the returned objects as read-only; caching keeps the larger
fixtures (the annotations snapshot in particular) to a single parse.
"""

from __future__ import annotations

import functools
from pathlib import Path

import pytest

from codeforest.pipeline import analyze, build_scene

FIXTURES = Path(__file__).parent / "fixtures"

CORPUS_NAMES = ["two_classes", "jfreechart_annotations", "calls", "overload",
                "nested", "multipkg"]


@functools.lru_cache(maxsize=None)
def corpus(name: str):
    return analyze(FIXTURES / name)


@functools.lru_cache(maxsize=None)
def scene(name: str):
    return build_scene(corpus(name))


@pytest.fixture
def two_classes():
    return corpus("two_classes")


@pytest.fixture
def annotations():
    return corpus("jfreechart_annotations")


@pytest.fixture
def two_classes_scene():
    return scene("two_classes")
