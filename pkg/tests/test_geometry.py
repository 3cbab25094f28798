"""Mesh builders, tree sizing and scene assembly."""

import math

import numpy as np
import pytest

from codeforest.errors import DegenerateSegment
from codeforest.geometry import (
    CANOPY_LIFT,
    CANOPY_MIN_RADIUS,
    GeometryParams,
    Scene,
    SceneNode,
    assemble_scene,
    build_channel_mesh,
    build_island_mesh,
    build_tree_parts,
    default_palette,
    tree_dimensions,
    world_transforms,
)
from codeforest.layout import ChannelPath, IslandLayout, build_layout, LayoutParams
from codeforest.model import ClassMetrics
from conftest import CORPUS_NAMES, corpus, scene


def metrics(loc=10, methods=3, fan_out=0):
    return ClassMetrics(
        class_index=0,
        method_count=methods,
        loc=loc,
        depth=0,
        fan_in=0,
        fan_out=fan_out,
        cohesion=1.0,
        kind_histogram={},
    )


def island(radius=6.0, tiers=1):
    return IslandLayout(
        package_index=0,
        center=(0.0, 0.0),
        radius=radius,
        layer_lo=0,
        layer_hi=tiers - 1,
        tier_heights=[float(tiers - 1 - u) for u in range(tiers)],
    )


def check_mesh(mesh):
    assert mesh.positions.shape == mesh.normals.shape
    assert mesh.positions.dtype == np.float32
    assert mesh.indices.dtype == np.uint32
    assert mesh.indices.shape[0] % 3 == 0
    assert np.isfinite(mesh.positions).all()
    if mesh.indices.size:
        assert int(mesh.indices.max()) < mesh.vertex_count
    lengths = np.linalg.norm(mesh.normals.astype(np.float64), axis=1)
    assert np.abs(lengths - 1.0).max() <= 1e-6


# ---------------------------------------------------------------------------
# Island meshes.

def test_single_tier_island_vertex_count():
    mesh = build_island_mesh(island(), segments=8)
    assert mesh.vertex_count == 25  # 8 * 2 rings + 8 cap ring + 1 centre
    check_mesh(mesh)


def test_island_vertex_formula_general():
    for segments, tiers in ((8, 1), (8, 2), (12, 3), (16, 4)):
        mesh = build_island_mesh(island(tiers=tiers), segments=segments)
        assert mesh.vertex_count == segments * 2 * tiers + segments + 1
        check_mesh(mesh)


def test_two_tier_island_heights():
    mesh = build_island_mesh(island(tiers=2), segments=8)
    ys = mesh.positions[:, 1]
    assert float(ys.max()) == 1.0  # summit cap at the top tier height
    assert float(ys.min()) == 0.0  # shore tier at the bottom height


def test_island_radius_is_respected():
    mesh = build_island_mesh(island(radius=6.0), segments=16)
    r = np.hypot(mesh.positions[:, 0], mesh.positions[:, 2])
    assert float(r.max()) == pytest.approx(6.0)


def test_island_needs_at_least_eight_segments():
    with pytest.raises(ValueError):
        build_island_mesh(island(), segments=7)


# ---------------------------------------------------------------------------
# Channel meshes.

def channel(*points):
    return ChannelPath(edge=(0, 1), polyline=list(points))


def test_two_point_channel_is_one_quad():
    mesh = build_channel_mesh(channel((0, 1, 0), (4, 0, 0)))
    assert mesh.vertex_count == 4
    assert mesh.triangle_count == 2
    check_mesh(mesh)


def test_four_point_channel_has_six_triangles():
    mesh = build_channel_mesh(
        channel((0, 1, 0), (2, 1, 0), (2, 0, 0), (4, 0, 0))
    )
    assert mesh.vertex_count == 8
    assert mesh.triangle_count == 6
    check_mesh(mesh)


def test_channel_normals_point_up():
    mesh = build_channel_mesh(channel((0, 1, 0), (4, 0, 0)))
    assert np.allclose(mesh.normals, [0.0, 1.0, 0.0])


def test_channel_ribbon_width():
    mesh = build_channel_mesh(channel((0, 0, 0), (4, 0, 0)), width=0.5)
    z = mesh.positions[:, 2]
    assert float(z.max() - z.min()) == pytest.approx(0.5)


def test_zero_length_channel_raises():
    with pytest.raises(DegenerateSegment):
        build_channel_mesh(channel((1, 1, 1), (1, 1, 1)))


def test_channel_origin_shift():
    base = build_channel_mesh(channel((2, 1, 3), (6, 0, 3)))
    shifted = build_channel_mesh(channel((2, 1, 3), (6, 0, 3)), origin=(2.0, 3.0))
    assert np.allclose(shifted.positions[:, 0], base.positions[:, 0] - 2.0)
    assert np.allclose(shifted.positions[:, 2], base.positions[:, 2] - 3.0)
    assert np.allclose(shifted.positions[:, 1], base.positions[:, 1])


# ---------------------------------------------------------------------------
# Tree sizing.

def test_trunk_height_formula():
    dims = tree_dimensions(metrics(loc=10), 0, GeometryParams())
    assert dims.trunk_height == pytest.approx(1.0 + 0.4 * math.log(11))


def test_trunk_height_grows_with_loc():
    params = GeometryParams()
    heights = [
        tree_dimensions(metrics(loc=n), 0, params).trunk_height
        for n in (1, 5, 20, 100, 1000)
    ]
    assert heights == sorted(heights)
    assert len(set(heights)) == len(heights)


def test_trunk_radius_normalises_fan_out():
    params = GeometryParams()
    thin = tree_dimensions(metrics(fan_out=0), 8, params)
    thick = tree_dimensions(metrics(fan_out=8), 8, params)
    assert thin.trunk_radius == pytest.approx(0.15)
    assert thick.trunk_radius == pytest.approx(0.30)


def test_zero_max_fan_out_means_base_radius():
    dims = tree_dimensions(metrics(fan_out=0), 0, GeometryParams())
    assert dims.trunk_radius == pytest.approx(0.15)


def test_canopy_radius_floor():
    small = tree_dimensions(metrics(methods=0), 0, GeometryParams())
    assert small.canopy_radius == CANOPY_MIN_RADIUS
    big = tree_dimensions(metrics(methods=16), 0, GeometryParams())
    assert big.canopy_radius == pytest.approx(0.5 * 4.0)


# ---------------------------------------------------------------------------
# Tree parts.

def make_parts(methods=3, kinds=None, loc=10):
    dims = tree_dimensions(metrics(loc=loc, methods=methods), 0, GeometryParams())
    labels = [f"m{i}" for i in range(methods)]
    kinds = kinds or ["other"] * methods
    return build_tree_parts("pkg.K", labels, kinds, dims, segments=12), dims


def test_tree_part_names_and_order():
    parts, _ = make_parts(2)
    assert [p.name for p in parts] == [
        "trunk:pkg.K", "canopy:pkg.K", "leaf:pkg.K.m0", "leaf:pkg.K.m1"
    ]


def test_canopy_sits_above_trunk():
    parts, dims = make_parts()
    canopy = parts[1]
    assert canopy.translation[1] == pytest.approx(
        dims.trunk_height + CANOPY_LIFT * dims.canopy_radius
    )


def test_leaves_lie_on_the_canopy_sphere():
    parts, dims = make_parts(7)
    canopy = parts[1]
    for leaf in parts[2:]:
        d = math.dist(leaf.translation, canopy.translation)
        assert d == pytest.approx(dims.canopy_radius)


def test_zero_method_class_has_no_leaves():
    parts, _ = make_parts(0)
    assert [p.name for p in parts] == ["trunk:pkg.K", "canopy:pkg.K"]


def test_leaf_materials_follow_kinds():
    parts, _ = make_parts(
        4, kinds=["constructor", "accessor", "mutator", "other"]
    )
    mats = [p.mesh.material for p in parts[2:]]
    assert mats == [6, 4, 5, 7]


# ---------------------------------------------------------------------------
# Scene assembly.

def names_of(s):
    return [n.name for n in s.nodes]


def test_two_classes_scene_census(two_classes_scene):
    s = two_classes_scene
    names = names_of(s)
    assert len(names) == 14
    assert sum(1 for n in s.nodes if n.mesh is not None) == 11
    assert names[0] == "forest"
    assert set(names) == {
        "forest",
        "island:",
        "tree:.Ownerbbb", "trunk:.Ownerbbb", "canopy:.Ownerbbb",
        "leaf:.Ownerbbb.getMaxNumLeagues", "leaf:.Ownerbbb.setMaxNumLeagues",
        "tree:.Useraaa", "trunk:.Useraaa", "canopy:.Useraaa",
        "leaf:.Useraaa.getEmail", "leaf:.Useraaa.setEmail", "leaf:.Useraaa.notify",
        "channel:Useraaa->Ownerbbb",
    }


def test_annotation_scene_counts():
    s = scene("jfreechart_annotations")
    names = names_of(s)
    assert sum(1 for n in names if n.startswith("tree:")) == 15
    assert sum(1 for n in names if n.startswith("leaf:")) == 122
    assert sum(1 for n in names if n.startswith("channel:")) == 12
    assert sum(1 for n in names if n.startswith("island:")) == 1


def test_node_names_are_unique_everywhere():
    for name in CORPUS_NAMES:
        names = names_of(scene(name))
        assert len(names) == len(set(names))


def test_duplicate_simple_names_get_suffixes(tmp_path):
    for pkg in ("pa", "pb"):
        d = tmp_path / pkg
        d.mkdir()
        (d / "Base.java").write_text(f"package {pkg};\nclass Base {{ }}")
        (d / "Kid.java").write_text(
            f"package {pkg};\nclass Kid extends Base {{ }}"
        )
    from codeforest.pipeline import analyze, build_scene

    s = build_scene(analyze(tmp_path))
    channels = sorted(n.name for n in s.nodes if n.name.startswith("channel:"))
    assert channels == ["channel:Base->Kid", "channel:Base->Kid#2"]


def test_same_island_channels_hang_under_their_island(two_classes_scene):
    s = two_classes_scene
    by_name = {n.name: i for i, n in enumerate(s.nodes)}
    island_node = s.nodes[by_name["island:"]]
    assert by_name["channel:Useraaa->Ownerbbb"] in island_node.children


def test_cross_island_channels_hang_under_root():
    s = scene("multipkg")
    root_children = {s.nodes[i].name for i in s.nodes[0].children}
    assert "channel:Base->Child" in root_children


def test_world_positions_compose_through_the_node_chain(two_classes_scene):
    s = two_classes_scene
    by_name = {n.name: i for i, n in enumerate(s.nodes)}

    def manual_world(name):
        # Walk parents by construction: leaf -> tree -> island -> root.
        chain = []
        target = by_name[name]
        parent = {c: i for i, n in enumerate(s.nodes) for c in n.children}
        while target is not None:
            chain.append(s.nodes[target].translation)
            target = parent.get(target)
        return tuple(sum(axis) for axis in zip(*chain))

    transforms = world_transforms(s)
    leaf = by_name["leaf:.Useraaa.getEmail"]
    assert transforms[leaf][:3] == pytest.approx(manual_world("leaf:.Useraaa.getEmail"))


def test_all_fixture_meshes_are_valid():
    for name in CORPUS_NAMES:
        for mesh in scene(name).meshes:
            check_mesh(mesh)


def test_scene_build_is_bitwise_deterministic():
    info = corpus("jfreechart_annotations")
    from codeforest.pipeline import build_scene

    a = build_scene(info)
    b = build_scene(info)
    assert names_of(a) == names_of(b)
    for ma, mb in zip(a.meshes, b.meshes):
        assert ma.positions.tobytes() == mb.positions.tobytes()
        assert ma.normals.tobytes() == mb.normals.tobytes()
        assert ma.indices.tobytes() == mb.indices.tobytes()


def test_empty_corpus_gives_bare_root(tmp_path):
    from codeforest.pipeline import analyze, build_scene

    s = build_scene(analyze(tmp_path))
    assert len(s.nodes) == 1
    assert s.nodes[0].name == "forest"
    assert s.meshes == []


def test_default_palette_has_eight_slots():
    palette = default_palette()
    assert len(palette) == 8
    canopy = palette[2]
    assert canopy.base_color[3] < 1.0  # translucent canopy
    assert all(0.0 <= c <= 1.0 for m in palette for c in m.base_color)
