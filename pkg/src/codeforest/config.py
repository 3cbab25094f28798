"""Rendering configuration.

Config files are flat ``key = value`` lines; ``#`` starts a comment and
blank lines are ignored. Unknown keys are rejected rather than skipped
so typos surface immediately. All numeric knobs must be positive except
``seed``, which only has to be non-negative. Palette entries override
material colors and take four components in [0, 1]:

    seed = 7
    s_min = 2.5
    palette.water = 0.1 0.3 0.9 1.0
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import NonPositiveValue, UnknownKey
from .geometry import GeometryParams, Material, default_palette
from .layout import LayoutParams

_INT_KEYS = {"seed", "segments"}
_FLOAT_KEYS = {
    "s_min",
    "tier_drop",
    "base_radius_per_class",
    "island_margin",
    "h0",
    "h1",
    "r0",
    "c",
    "leaf_radius",
    "canopy_coefficient",
}
_PALETTE_NAMES = {m.name for m in default_palette()}


@dataclass
class Config:
    seed: int = 0
    s_min: float = 2.0
    tier_drop: float = 1.0
    base_radius_per_class: float = 1.5
    island_margin: float = 4.0
    h0: float = 1.0
    h1: float = 0.4
    r0: float = 0.15
    c: float = 1.0
    leaf_radius: float = 0.12
    canopy_coefficient: float = 0.5
    segments: int = 12
    palette_overrides: dict[str, tuple[float, float, float, float]] = field(
        default_factory=dict
    )

    def layout_params(self) -> LayoutParams:
        return LayoutParams(
            seed=self.seed,
            s_min=self.s_min,
            tier_drop=self.tier_drop,
            base_radius_per_class=self.base_radius_per_class,
            island_margin=self.island_margin,
        )

    def geometry_params(self) -> GeometryParams:
        return GeometryParams(
            h0=self.h0,
            h1=self.h1,
            r0=self.r0,
            fan_out_gain=self.c,
            canopy_coefficient=self.canopy_coefficient,
            leaf_radius=self.leaf_radius,
            segments=self.segments,
        )

    def palette(self) -> list[Material]:
        materials = default_palette()
        for i, mat in enumerate(materials):
            if mat.name in self.palette_overrides:
                materials[i] = replace(mat, base_color=self.palette_overrides[mat.name])
        return materials


def parse_config(text: str, file_id: str = "<config>") -> Config:
    cfg = Config()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{file_id}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        _apply(cfg, key, value, f"{file_id}:{lineno}")
    return cfg


def load_config(path: str | Path) -> Config:
    p = Path(path)
    return parse_config(p.read_text(encoding="utf-8"), file_id=str(p))


def _apply(cfg: Config, key: str, value: str, where: str) -> None:
    if key.startswith("palette."):
        name = key[len("palette."):]
        if name not in _PALETTE_NAMES:
            raise UnknownKey(key)
        parts = value.replace(",", " ").split()
        if len(parts) != 4:
            raise ValueError(f"{where}: palette colors take 4 components")
        rgba = tuple(_parse_float(key, part, where) for part in parts)
        for component in rgba:
            if not 0.0 <= component <= 1.0:
                raise NonPositiveValue(key, component, reason="needs components in [0, 1]")
        cfg.palette_overrides[name] = rgba
        return
    if key in _INT_KEYS:
        try:
            number = int(value)
        except ValueError:
            raise ValueError(f"{where}: {key} takes an integer, got {value!r}") from None
        if key == "seed":
            if number < 0:
                raise NonPositiveValue(key, number, reason="must be non-negative")
        elif number <= 0:
            raise NonPositiveValue(key, number)
        setattr(cfg, key, number)
        return
    if key in _FLOAT_KEYS:
        number = _parse_float(key, value, where)
        if number <= 0.0:
            raise NonPositiveValue(key, number)
        setattr(cfg, key, number)
        return
    raise UnknownKey(key)


def _parse_float(key: str, value: str, where: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ValueError(f"{where}: {key} takes a number, got {value!r}") from None
