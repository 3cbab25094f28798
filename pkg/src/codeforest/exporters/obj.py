"""Wavefront OBJ export.

One ``o`` group per mesh-bearing node, vertices baked into world space
(the OBJ format has no node hierarchy). Vertex and normal indices are
global and 1-based; faces reference them as ``v//n``. A sibling .mtl
file carries the palette as ``newmtl``/``Kd``/``d`` entries.
"""

from __future__ import annotations

from pathlib import Path

from ..geometry import Scene, world_transforms


def obj_text(scene: Scene, mtl_name: str | None = None) -> str:
    transforms = world_transforms(scene)
    lines = []
    if mtl_name is not None:
        lines.append(f"mtllib {mtl_name}")
    offset = 1
    for idx, node in enumerate(scene.nodes):
        if node.mesh is None:
            continue
        mesh = scene.meshes[node.mesh]
        tx, ty, tz, s = transforms[idx]
        lines.append(f"o {node.name}")
        lines.append(f"usemtl {scene.materials[mesh.material].name}")
        for x, y, z in mesh.positions:
            lines.append(
                "v %.6f %.6f %.6f" % (tx + s * float(x), ty + s * float(y),
                                      tz + s * float(z))
            )
        for x, y, z in mesh.normals:
            lines.append("vn %.6f %.6f %.6f" % (float(x), float(y), float(z)))
        tris = mesh.indices.reshape(-1, 3)
        for a, b, c in tris:
            a, b, c = int(a) + offset, int(b) + offset, int(c) + offset
            lines.append(f"f {a}//{a} {b}//{b} {c}//{c}")
        offset += mesh.vertex_count
    return "\n".join(lines) + "\n"


def mtl_text(scene: Scene) -> str:
    lines = []
    for material in scene.materials:
        r, g, b, a = material.base_color
        lines.append(f"newmtl {material.name}")
        lines.append("Kd %.6f %.6f %.6f" % (r, g, b))
        lines.append("d %.6f" % a)
    return "\n".join(lines) + "\n"


def export_obj(scene: Scene, path: str | Path) -> tuple[Path, Path]:
    """Write ``<path>`` and a sibling ``.mtl`` with the same stem."""
    obj_path = Path(path)
    mtl_path = obj_path.with_suffix(".mtl")
    obj_path.write_text(obj_text(scene, mtl_name=mtl_path.name), encoding="utf-8")
    mtl_path.write_text(mtl_text(scene), encoding="utf-8")
    return obj_path, mtl_path
