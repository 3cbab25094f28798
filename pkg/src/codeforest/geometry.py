"""Mesh construction and scene assembly.

Sizes encode metrics: trunk height grows with the log of class length,
trunk girth with normalized outgoing calls, canopy radius with the
square root of the method count, and each method contributes one leaf
sphere colored by its kind. Islands are terraced cones built from the
layout's tier heights; channels are flat water ribbons following the
layout polylines.

All meshes store float32 positions/normals and uint32 triangle
indices. Nodes form a single tree rooted at ``forest`` with stable,
unique names:

* ``island:<pkg>`` (carries the island mesh)
* ``tree:<pkg>.<Class>`` (grouping node at the trunk base)
* ``trunk:<pkg>.<Class>``, ``canopy:<pkg>.<Class>``
* ``leaf:<pkg>.<Class>.<method>`` with ``#k`` suffixes for overloads
* ``channel:<ParentClass>-><ChildClass>``

Same-island channels hang under their island node; channels between
islands hang under the root. Node order is deterministic: islands in
package order, trees in class order, then channels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSegment
from .layout import (
    GOLDEN_ANGLE,
    ChannelPath,
    ForestLayout,
    IslandLayout,
    TreePlacement,
    island_rings,
)
from .model import (
    KIND_ACCESSOR,
    KIND_CONSTRUCTOR,
    KIND_MUTATOR,
    KIND_OTHER,
    ClassMetrics,
    CodeModel,
    classify_method,
    method_labels,
)

CANOPY_MIN_RADIUS = 0.4
CANOPY_LIFT = 0.7  # canopy centre sits this fraction of its radius above the trunk
CHANNEL_WIDTH = 0.35

MAT_ISLAND = 0
MAT_TRUNK = 1
MAT_CANOPY = 2
MAT_WATER = 3
MAT_LEAF_ACCESSOR = 4
MAT_LEAF_MUTATOR = 5
MAT_LEAF_CONSTRUCTOR = 6
MAT_LEAF_OTHER = 7

_LEAF_MATERIAL = {
    KIND_ACCESSOR: MAT_LEAF_ACCESSOR,
    KIND_MUTATOR: MAT_LEAF_MUTATOR,
    KIND_CONSTRUCTOR: MAT_LEAF_CONSTRUCTOR,
    KIND_OTHER: MAT_LEAF_OTHER,
}


@dataclass
class Material:
    name: str
    base_color: tuple[float, float, float, float]


def default_palette() -> list[Material]:
    return [
        Material("island", (0.85, 0.78, 0.55, 1.0)),
        Material("trunk", (0.45, 0.30, 0.15, 1.0)),
        Material("canopy", (0.20, 0.55, 0.20, 0.35)),
        Material("water", (0.20, 0.45, 0.85, 1.0)),
        Material("leaf_accessor", (0.30, 0.75, 0.30, 1.0)),
        Material("leaf_mutator", (0.85, 0.35, 0.25, 1.0)),
        Material("leaf_constructor", (0.90, 0.80, 0.25, 1.0)),
        Material("leaf_other", (0.55, 0.55, 0.85, 1.0)),
    ]


@dataclass
class Mesh:
    positions: np.ndarray  # (n, 3) float32
    normals: np.ndarray  # (n, 3) float32
    indices: np.ndarray  # (3 * t,) uint32
    material: int

    @property
    def vertex_count(self) -> int:
        return int(self.positions.shape[0])

    @property
    def triangle_count(self) -> int:
        return int(self.indices.shape[0]) // 3


@dataclass
class SceneNode:
    name: str
    translation: tuple[float, float, float] = (0.0, 0.0, 0.0)
    scale: float = 1.0
    mesh: int | None = None
    children: list[int] = field(default_factory=list)


@dataclass
class Scene:
    nodes: list[SceneNode]
    meshes: list[Mesh]
    materials: list[Material]

    @property
    def root(self) -> int:
        return 0


@dataclass
class GeometryParams:
    h0: float = 1.0
    h1: float = 0.4
    r0: float = 0.15
    fan_out_gain: float = 1.0  # config key "c"
    canopy_coefficient: float = 0.5
    leaf_radius: float = 0.12
    segments: int = 12


@dataclass
class TreeDims:
    trunk_height: float
    trunk_radius: float
    canopy_radius: float
    leaf_radius: float


def tree_dimensions(
    metrics: ClassMetrics, max_fan_out: int, params: GeometryParams
) -> TreeDims:
    """Metric-driven dimensions for one tree.

    trunk_height   = h0 + h1 * ln(1 + loc)
    trunk_radius   = r0 * (1 + c * fan_out / max(fan_out over corpus))
    canopy_radius  = canopy_coefficient * sqrt(method_count), at least 0.4
    """
    fan_norm = metrics.fan_out / max_fan_out if max_fan_out > 0 else 0.0
    return TreeDims(
        trunk_height=params.h0 + params.h1 * math.log1p(metrics.loc),
        trunk_radius=params.r0 * (1.0 + params.fan_out_gain * fan_norm),
        canopy_radius=max(
            params.canopy_coefficient * math.sqrt(metrics.method_count),
            CANOPY_MIN_RADIUS,
        ),
        leaf_radius=params.leaf_radius,
    )


def _as_mesh(verts, norms, tris, material: int) -> Mesh:
    positions = np.asarray(verts, dtype=np.float64)
    normals = np.asarray(norms, dtype=np.float64)
    lengths = np.linalg.norm(normals, axis=1, keepdims=True)
    normals = normals / np.where(lengths == 0.0, 1.0, lengths)
    return Mesh(
        positions.astype(np.float32),
        normals.astype(np.float32),
        np.asarray(tris, dtype=np.uint32).reshape(-1),
        material,
    )


def _ring(radius: float, y: float, segments: int):
    pts = []
    for k in range(segments):
        a = 2.0 * math.pi * k / segments
        pts.append((radius * math.cos(a), y, radius * math.sin(a)))
    return pts


def _quad_up(a0, a1, b0, b1):
    """Two up-facing triangles between inner edge (a) and outer edge (b)."""
    return [(a0, b1, b0), (a0, a1, b1)]


def build_island_mesh(island: IslandLayout, segments: int, material: int = MAT_ISLAND) -> Mesh:
    """Terraced island: one flat annulus per tier plus walls and a cap.

    Vertex count is ``segments * 2 * tiers + segments + 1``: an inner
    and an outer ring per tier, plus the summit cap's own ring and
    centre vertex. The cap sits at the first tier height; the base
    ring is the outermost ring at the last tier height.
    """
    if segments < 8:
        raise ValueError("island tessellation needs at least 8 segments")
    tiers = island.layer_hi - island.layer_lo + 1
    heights = island.tier_heights
    rings = island_rings(island.radius, tiers)

    verts: list[tuple[float, float, float]] = []
    norms: list[tuple[float, float, float]] = []
    inner_base: list[int] = []
    outer_base: list[int] = []

    wall_run = rings[0][0]  # horizontal run of every wall
    for u in range(tiers):
        inner_r, outer_r = rings[u]
        y = heights[u]
        inner_base.append(len(verts))
        if u == 0:
            inner_norm = [(0.0, 1.0, 0.0)] * segments
        else:
            drop = heights[u - 1] - heights[u]
            slope = math.hypot(drop, wall_run)
            nr, ny = drop / slope, wall_run / slope
            inner_norm = [
                (nr * math.cos(2.0 * math.pi * k / segments), ny,
                 nr * math.sin(2.0 * math.pi * k / segments))
                for k in range(segments)
            ]
        verts.extend(_ring(inner_r, y, segments))
        norms.extend(inner_norm)

        outer_base.append(len(verts))
        verts.extend(_ring(outer_r, y, segments))
        if u == tiers - 1:
            norms.extend([(0.0, 1.0, 0.0)] * segments)
        else:
            drop = heights[u] - heights[u + 1]
            slope = math.hypot(drop, wall_run)
            nr, ny = drop / slope, wall_run / slope
            norms.extend(
                (nr * math.cos(2.0 * math.pi * k / segments), ny,
                 nr * math.sin(2.0 * math.pi * k / segments))
                for k in range(segments)
            )

    cap_base = len(verts)
    verts.extend(_ring(rings[0][0], heights[0], segments))
    norms.extend([(0.0, 1.0, 0.0)] * segments)
    center = len(verts)
    verts.append((0.0, heights[0], 0.0))
    norms.append((0.0, 1.0, 0.0))

    tris: list[tuple[int, int, int]] = []
    for k in range(segments):
        k1 = (k + 1) % segments
        tris.append((center, cap_base + k1, cap_base + k))
    for u in range(tiers):
        for k in range(segments):
            k1 = (k + 1) % segments
            tris.extend(
                _quad_up(inner_base[u] + k, inner_base[u] + k1,
                         outer_base[u] + k, outer_base[u] + k1)
            )
    for u in range(tiers - 1):
        for k in range(segments):
            k1 = (k + 1) % segments
            tris.extend(
                _quad_up(outer_base[u] + k, outer_base[u] + k1,
                         inner_base[u + 1] + k, inner_base[u + 1] + k1)
            )
    return _as_mesh(verts, norms, tris, material)


def _cylinder(radius: float, height: float, segments: int, material: int) -> Mesh:
    verts: list[tuple[float, float, float]] = []
    norms: list[tuple[float, float, float]] = []
    bottom = _ring(radius, 0.0, segments)
    top = _ring(radius, height, segments)
    side_norm = [
        (math.cos(2.0 * math.pi * k / segments), 0.0,
         math.sin(2.0 * math.pi * k / segments))
        for k in range(segments)
    ]
    verts.extend(bottom)
    norms.extend(side_norm)
    verts.extend(top)
    norms.extend(side_norm)
    cap_top = len(verts)
    verts.extend(top)
    norms.extend([(0.0, 1.0, 0.0)] * segments)
    c_top = len(verts)
    verts.append((0.0, height, 0.0))
    norms.append((0.0, 1.0, 0.0))
    cap_bot = len(verts)
    verts.extend(bottom)
    norms.extend([(0.0, -1.0, 0.0)] * segments)
    c_bot = len(verts)
    verts.append((0.0, 0.0, 0.0))
    norms.append((0.0, -1.0, 0.0))

    tris = []
    for k in range(segments):
        k1 = (k + 1) % segments
        tris.append((k, segments + k, segments + k1))
        tris.append((k, segments + k1, k1))
        tris.append((c_top, cap_top + k1, cap_top + k))
        tris.append((c_bot, cap_bot + k, cap_bot + k1))
    return _as_mesh(verts, norms, tris, material)


def _sphere(radius: float, segments: int, material: int) -> Mesh:
    lat = max(2, segments // 2)
    verts = [(0.0, radius, 0.0)]
    norms = [(0.0, 1.0, 0.0)]
    for i in range(1, lat):
        phi = math.pi * i / lat
        y = math.cos(phi)
        r = math.sin(phi)
        for k in range(segments):
            a = 2.0 * math.pi * k / segments
            n = (r * math.cos(a), y, r * math.sin(a))
            norms.append(n)
            verts.append((radius * n[0], radius * n[1], radius * n[2]))
    south = len(verts)
    verts.append((0.0, -radius, 0.0))
    norms.append((0.0, -1.0, 0.0))

    tris = []
    ring = lambda i, k: 1 + (i - 1) * segments + (k % segments)
    for k in range(segments):
        tris.append((0, ring(1, k + 1), ring(1, k)))
        tris.append((south, ring(lat - 1, k), ring(lat - 1, k + 1)))
    for i in range(1, lat - 1):
        for k in range(segments):
            a0, a1 = ring(i + 1, k), ring(i + 1, k + 1)  # lower ring
            t0, t1 = ring(i, k), ring(i, k + 1)  # upper ring
            tris.append((a0, t0, t1))
            tris.append((a0, t1, a1))
    return _as_mesh(verts, norms, tris, material)


def build_channel_mesh(path: ChannelPath, width: float = CHANNEL_WIDTH,
                       material: int = MAT_WATER,
                       origin: tuple[float, float] = (0.0, 0.0)) -> Mesh:
    """Flat water ribbon along the polyline, two triangles per segment.

    ``origin`` shifts the mesh into a parent node's local frame.
    Raises DegenerateSegment when consecutive points coincide.
    """
    pts = path.polyline
    if len(pts) < 2:
        raise DegenerateSegment(0)
    for i in range(len(pts) - 1):
        dx = pts[i + 1][0] - pts[i][0]
        dy = pts[i + 1][1] - pts[i][1]
        dz = pts[i + 1][2] - pts[i][2]
        if dx * dx + dy * dy + dz * dz < 1e-18:
            raise DegenerateSegment(i + 1)

    # Horizontal direction per segment; vertical drops borrow a neighbour.
    seg_dirs: list[tuple[float, float] | None] = []
    for i in range(len(pts) - 1):
        dx = pts[i + 1][0] - pts[i][0]
        dz = pts[i + 1][2] - pts[i][2]
        h = math.hypot(dx, dz)
        seg_dirs.append((dx / h, dz / h) if h > 1e-12 else None)
    fallback = next((d for d in seg_dirs if d is not None), (1.0, 0.0))
    seg_dirs = [d if d is not None else fallback for d in seg_dirs]

    half = width / 2.0
    ox, oz = origin
    verts = []
    norms = []
    for i, (x, y, z) in enumerate(pts):
        if i == 0:
            dx, dz = seg_dirs[0]
        elif i == len(pts) - 1:
            dx, dz = seg_dirs[-1]
        else:
            ax, az = seg_dirs[i - 1]
            bx, bz = seg_dirs[i]
            mx, mz = ax + bx, az + bz
            m = math.hypot(mx, mz)
            dx, dz = (mx / m, mz / m) if m > 1e-12 else seg_dirs[i]
        px, pz = -dz, dx
        verts.append((x - ox - px * half, y, z - oz - pz * half))  # right
        verts.append((x - ox + px * half, y, z - oz + pz * half))  # left
        norms.extend([(0.0, 1.0, 0.0)] * 2)

    tris = []
    for i in range(len(pts) - 1):
        r0, l0 = 2 * i, 2 * i + 1
        r1, l1 = 2 * i + 2, 2 * i + 3
        tris.append((r0, l0, l1))
        tris.append((r0, l1, r1))
    return _as_mesh(verts, norms, tris, material)


@dataclass
class ScenePart:
    name: str
    mesh: Mesh
    translation: tuple[float, float, float]


def build_tree_parts(
    qualified: str,
    labels: list[str],
    kinds: list[str],
    dims: TreeDims,
    segments: int,
) -> list[ScenePart]:
    """Trunk, canopy and one leaf per method, in declaration order.

    Leaves sit on the canopy sphere along a golden-angle spiral; all
    translations are local to the tree node at the trunk base.
    """
    parts = [
        ScenePart(f"trunk:{qualified}",
                  _cylinder(dims.trunk_radius, dims.trunk_height, segments, MAT_TRUNK),
                  (0.0, 0.0, 0.0)),
    ]
    cy = dims.trunk_height + CANOPY_LIFT * dims.canopy_radius
    parts.append(
        ScenePart(f"canopy:{qualified}",
                  _sphere(dims.canopy_radius, segments, MAT_CANOPY),
                  (0.0, cy, 0.0))
    )
    n = len(labels)
    for i, (label, kind) in enumerate(zip(labels, kinds)):
        y = 1.0 - 2.0 * (i + 0.5) / n
        r = math.sqrt(max(0.0, 1.0 - y * y))
        a = i * GOLDEN_ANGLE
        offset = (
            dims.canopy_radius * r * math.cos(a),
            cy + dims.canopy_radius * y,
            dims.canopy_radius * r * math.sin(a),
        )
        parts.append(
            ScenePart(f"leaf:{qualified}.{label}",
                      _sphere(dims.leaf_radius, segments, _LEAF_MATERIAL[kind]),
                      offset)
        )
    return parts


def assemble_scene(
    model: CodeModel,
    class_metrics: list[ClassMetrics],
    forest: ForestLayout,
    params: GeometryParams,
    palette: list[Material] | None = None,
) -> Scene:
    """Build the full node tree for a laid-out corpus."""
    nodes: list[SceneNode] = [SceneNode("forest")]
    meshes: list[Mesh] = []
    scene = Scene(nodes, meshes, palette if palette is not None else default_palette())

    def add_node(parent: int, node: SceneNode) -> int:
        nodes.append(node)
        idx = len(nodes) - 1
        nodes[parent].children.append(idx)
        return idx

    def add_mesh(mesh: Mesh) -> int:
        meshes.append(mesh)
        return len(meshes) - 1

    max_fan_out = max((cm.fan_out for cm in class_metrics), default=0)
    tree_by_class = {t.class_index: t for t in forest.trees}
    channel_names: dict[str, int] = {}

    cross_channels: list[ChannelPath] = []
    for island in forest.islands:
        pkg = model.packages[island.package_index]
        island_node = add_node(
            0,
            SceneNode(
                f"island:{pkg.name}",
                translation=(island.center[0], 0.0, island.center[1]),
                mesh=add_mesh(build_island_mesh(island, params.segments)),
            ),
        )
        for class_index in pkg.class_indices:
            cls = model.classes[class_index]
            placement = tree_by_class[class_index]
            qualified = model.qualified_name(class_index)
            dims = tree_dimensions(class_metrics[class_index], max_fan_out, params)
            kinds = [classify_method(m, cls.simple_name) for m in cls.methods]
            tree_node = add_node(
                island_node,
                SceneNode(
                    f"tree:{qualified}",
                    translation=(
                        placement.position[0] - island.center[0],
                        placement.trunk_base_y,
                        placement.position[1] - island.center[1],
                    ),
                ),
            )
            for part in build_tree_parts(
                qualified, method_labels(cls), kinds, dims, params.segments
            ):
                add_node(
                    tree_node,
                    SceneNode(part.name, translation=part.translation,
                              mesh=add_mesh(part.mesh)),
                )
        for channel in forest.channels:
            parent_cls, child_cls = channel.edge
            if model.package_of[parent_cls] != island.package_index:
                continue
            if model.package_of[child_cls] != island.package_index:
                continue
            add_node(
                island_node,
                SceneNode(
                    _channel_name(model, channel, channel_names),
                    mesh=add_mesh(
                        build_channel_mesh(channel, origin=island.center)
                    ),
                ),
            )
    for channel in forest.channels:
        parent_cls, child_cls = channel.edge
        if model.package_of[parent_cls] == model.package_of[child_cls]:
            continue
        add_node(
            0,
            SceneNode(
                _channel_name(model, channel, channel_names),
                mesh=add_mesh(build_channel_mesh(channel)),
            ),
        )
    return scene


def _channel_name(model: CodeModel, channel: ChannelPath, used: dict[str, int]) -> str:
    parent_cls, child_cls = channel.edge
    base = f"channel:{model.classes[parent_cls].name}->{model.classes[child_cls].name}"
    n = used.get(base, 0) + 1
    used[base] = n
    return base if n == 1 else f"{base}#{n}"


def world_transforms(scene: Scene) -> list[tuple[float, float, float, float]]:
    """Per node: world (tx, ty, tz, uniform scale), by scene walk."""
    out: list[tuple[float, float, float, float]] = [(0.0, 0.0, 0.0, 1.0)] * len(scene.nodes)
    stack = [(scene.root, (0.0, 0.0, 0.0), 1.0)]
    while stack:
        idx, base, scale = stack.pop()
        node = scene.nodes[idx]
        tx = base[0] + scale * node.translation[0]
        ty = base[1] + scale * node.translation[1]
        tz = base[2] + scale * node.translation[2]
        s = scale * node.scale
        out[idx] = (tx, ty, tz, s)
        for child in node.children:
            stack.append((child, (tx, ty, tz), s))
    return out
