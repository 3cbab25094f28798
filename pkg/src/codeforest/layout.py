"""Deterministic spatial layout: islands, trees and water channels.

One island per package, one tree per class, one channel per resolved
inheritance edge. All coordinates are pure functions of the model and
the layout parameters (including the seed), with no global random
state: the only randomness is hash-derived jitter keyed on seed,
package and class names.

Vertical structure follows inheritance layers computed corpus-wide:
layer ``k`` stands at ``(max_layer - k) * tier_drop``, so roots are
always highest and every channel can run downhill, even between
islands. Radially, an island is terraced: the lowest layer present on
the island is its summit disc and deeper layers occupy concentric
annuli further out and further down.

Within an annulus, trees step around a golden-angle spiral in class
name order from a seed-derived start angle, perturbed by jitter of at
most ``0.25 * s_min``. If that leaves two trunks closer than
``s_min``, positions are scaled radially outward, and as a last resort
re-gridded hexagonally (nearest slots to the centre go to the lowest
layers), so the separation invariant holds for any corpus that
physically fits its island.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

from .model import CodeModel, compute_layers

GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))

# Share of each tier's radial width spent on the sloped wall between
# terraces; the rest is flat, plantable ground.
_WALL_RUN = 0.3
_EDGE_PAD = 0.08


@dataclass
class LayoutParams:
    seed: int = 0
    s_min: float = 2.0
    tier_drop: float = 1.0
    base_radius_per_class: float = 1.5
    island_margin: float = 4.0


@dataclass
class IslandLayout:
    package_index: int
    center: tuple[float, float]  # (x, z)
    radius: float
    layer_lo: int  # lowest layer number present = summit
    layer_hi: int  # highest layer number present = shore
    tier_heights: list[float]  # y per layer, index 0 = layer_lo


@dataclass
class TreePlacement:
    class_index: int
    position: tuple[float, float]  # (x, z)
    layer: int
    trunk_base_y: float


@dataclass
class ChannelPath:
    edge: tuple[int, int]  # (parent class index, child class index)
    polyline: list[tuple[float, float, float]]


@dataclass
class ForestLayout:
    global_max_layer: int
    islands: list[IslandLayout]
    trees: list[TreePlacement]
    channels: list[ChannelPath]


def _hash01(*parts) -> float:
    digest = hashlib.sha256("\x1f".join(str(p) for p in parts).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") / 2.0**64


def island_rings(radius: float, tiers: int) -> list[tuple[float, float]]:
    """Flat-annulus (inner, outer) radii per tier, summit first.

    Tier ``u`` ends at ``radius * (u + 1) / tiers``; the first
    ``_WALL_RUN`` share of each tier's width is the sloped wall coming
    up from the next terrace out (for the summit: the cap disc).
    """
    step = radius / tiers
    rings = []
    for u in range(tiers):
        outer = step * (u + 1)
        inner = step * u + _WALL_RUN * step
        rings.append((inner, outer))
    return rings


def assign_layers(model: CodeModel) -> list[int]:
    """Inheritance layer per class: longest resolved path from a root."""
    return compute_layers(model)


def place_islands(
    model: CodeModel, layers: list[int], params: LayoutParams
) -> list[IslandLayout]:
    """Size islands from class counts and wind them onto a spiral.

    Islands appear in package-name order; the first sits at the
    origin, later ones advance along a golden-angle spiral until they
    clear every placed island by at least ``island_margin``.
    """
    gmax = max(layers, default=0)
    islands: list[IslandLayout] = []
    for p, pkg in enumerate(model.packages):
        count = len(pkg.class_indices)
        radius = max(params.base_radius_per_class * math.sqrt(count), 2.0 * params.s_min)
        member_layers = [layers[i] for i in pkg.class_indices]
        lo, hi = min(member_layers), max(member_layers)
        center = _spiral_slot(islands, radius, params)
        islands.append(
            IslandLayout(
                package_index=p,
                center=center,
                radius=radius,
                layer_lo=lo,
                layer_hi=hi,
                tier_heights=[(gmax - k) * params.tier_drop for k in range(lo, hi + 1)],
            )
        )
    return islands


def _spiral_slot(
    placed: list[IslandLayout], radius: float, params: LayoutParams
) -> tuple[float, float]:
    if not placed:
        return (0.0, 0.0)
    gain = max(1.0, 0.5 * params.island_margin)
    t = 1
    while True:
        r = gain * math.sqrt(t)
        x = r * math.cos(t * GOLDEN_ANGLE)
        z = r * math.sin(t * GOLDEN_ANGLE)
        ok = True
        for isl in placed:
            dx = x - isl.center[0]
            dz = z - isl.center[1]
            need = radius + isl.radius + params.island_margin
            if dx * dx + dz * dz < need * need:
                ok = False
                break
        if ok:
            return (x, z)
        t += 1


def place_trees(
    island: IslandLayout,
    model: CodeModel,
    layers: list[int],
    params: LayoutParams,
    global_max_layer: int,
) -> list[TreePlacement]:
    """Position one tree per class on the island's terraces."""
    pkg = model.packages[island.package_index]
    members = sorted(pkg.class_indices, key=lambda i: model.classes[i].name)
    cx, cz = island.center
    height_of = lambda k: (global_max_layer - k) * params.tier_drop

    if len(members) == 1:
        # A lone tree sits exactly at the summit centre, unjittered.
        only = members[0]
        return [
            TreePlacement(only, (cx, cz), layers[only], height_of(layers[only]))
        ]

    tiers = island.layer_hi - island.layer_lo + 1
    rings = island_rings(island.radius, tiers)
    pad = _EDGE_PAD * island.radius / tiers

    by_layer: dict[int, list[int]] = {}
    for idx in members:
        by_layer.setdefault(layers[idx], []).append(idx)

    rel: dict[int, tuple[float, float]] = {}
    pkg_name = pkg.name
    for layer_k in sorted(by_layer):
        group = by_layer[layer_k]
        u = layer_k - island.layer_lo
        inner, outer = rings[u]
        lo_r = 0.0 if u == 0 else inner + pad
        hi_r = max(outer - pad, lo_r + 1e-9)
        start = 2.0 * math.pi * _hash01(params.seed, "theta0", pkg_name, layer_k)
        n = len(group)
        for i, class_index in enumerate(group):
            if lo_r == 0.0:
                r = hi_r * math.sqrt(i / n)
            else:
                r = lo_r + (hi_r - lo_r) * math.sqrt((i + 0.5) / n)
            theta = start + i * GOLDEN_ANGLE
            name = model.classes[class_index].name
            jr = 0.25 * params.s_min * _hash01(params.seed, "jr", pkg_name, name)
            jt = 2.0 * math.pi * _hash01(params.seed, "jt", pkg_name, name)
            rel[class_index] = (
                r * math.cos(theta) + jr * math.cos(jt),
                r * math.sin(theta) + jr * math.sin(jt),
            )

    rel = _enforce_separation(rel, island.radius, params.s_min)
    return [
        TreePlacement(
            idx,
            (cx + rel[idx][0], cz + rel[idx][1]),
            layers[idx],
            height_of(layers[idx]),
        )
        for idx in members
    ]


def _min_separation(points: list[tuple[float, float]]) -> float:
    best = math.inf
    for i in range(len(points)):
        xi, zi = points[i]
        for j in range(i + 1, len(points)):
            dx = xi - points[j][0]
            dz = zi - points[j][1]
            best = min(best, math.hypot(dx, dz))
    return best


def _enforce_separation(
    rel: dict[int, tuple[float, float]], radius: float, s_min: float
) -> dict[int, tuple[float, float]]:
    order = sorted(rel)
    pts = [rel[i] for i in order]
    if _min_separation(pts) >= s_min:
        return rel

    # First remedy: scale everything radially outward from the centre.
    max_r = max(math.hypot(x, z) for x, z in pts) or 1e-9
    factor = 1.0
    while factor * 1.06 * max_r <= 0.96 * radius:
        factor *= 1.06
        scaled = [(x * factor, z * factor) for x, z in pts]
        if _min_separation(scaled) >= s_min:
            return dict(zip(order, scaled))

    # Last resort: hexagonal slots, nearest-to-centre first.
    slots = _hex_slots(radius * 0.95, s_min * 1.05)
    if len(slots) < len(order):
        slots = _hex_slots(radius * 0.97, s_min * 1.0005)
    if len(slots) < len(order):
        raise RuntimeError(
            f"island of radius {radius} cannot hold {len(order)} trees "
            f"at separation {s_min}"
        )
    return dict(zip(order, slots[: len(order)]))


def _hex_slots(radius: float, spacing: float) -> list[tuple[float, float]]:
    rows = int(radius / (spacing * math.sqrt(3.0) / 2.0)) + 1
    cols = int(radius / spacing) + 1
    out = []
    for kz in range(-rows, rows + 1):
        z = kz * spacing * math.sqrt(3.0) / 2.0
        shift = 0.5 * spacing if kz % 2 else 0.0
        for kx in range(-cols - 1, cols + 2):
            x = kx * spacing + shift
            if x * x + z * z <= radius * radius:
                out.append((x, z))
    out.sort(key=lambda p: (round(p[0] ** 2 + p[1] ** 2, 9), math.atan2(p[1], p[0])))
    return out


def route_channels(
    model: CodeModel,
    layers: list[int],
    trees: list[TreePlacement],
    params: LayoutParams,
    global_max_layer: int,
) -> list[ChannelPath]:
    """One downhill polyline per resolved inheritance edge.

    Same-island channels descend terrace by terrace: flat runs at each
    tier height with vertical drops at evenly spaced step points.
    Cross-island channels take the straight elevated line between the
    two trunk bases. Because layer heights are global, the child end
    is always strictly lower and y never increases along a path.
    """
    by_class = {t.class_index: t for t in trees}
    height_of = lambda k: (global_max_layer - k) * params.tier_drop
    channels = []
    for child, parent in model.inheritance_edges:
        tp = by_class[parent]
        tc = by_class[child]
        px, pz = tp.position
        cx, cz = tc.position
        same_island = model.package_of[parent] == model.package_of[child]
        if same_island:
            kp, kc = layers[parent], layers[child]
            steps = kc - kp
            points = [(px, tp.trunk_base_y, pz)]
            for m in range(1, steps + 1):
                t = m / (steps + 1)
                x = px + (cx - px) * t
                z = pz + (cz - pz) * t
                points.append((x, height_of(kp + m - 1), z))
                points.append((x, height_of(kp + m), z))
            points.append((cx, tc.trunk_base_y, cz))
        else:
            points = [(px, tp.trunk_base_y, pz), (cx, tc.trunk_base_y, cz)]
        channels.append(ChannelPath((parent, child), points))
    return channels


def build_layout(model: CodeModel, params: LayoutParams) -> ForestLayout:
    """Full layout pass: layers, islands, trees, channels."""
    layers = assign_layers(model)
    gmax = max(layers, default=0)
    islands = place_islands(model, layers, params)
    trees: list[TreePlacement] = []
    for island in islands:
        trees.extend(place_trees(island, model, layers, params, gmax))
    trees.sort(key=lambda t: t.class_index)
    channels = route_channels(model, layers, trees, params, gmax)
    return ForestLayout(gmax, islands, trees, channels)
