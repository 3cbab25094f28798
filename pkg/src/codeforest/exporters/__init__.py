"""Scene and report writers: glTF 2.0, Wavefront OBJ, Maya MEL, JSON."""

from .gltf import build_gltf, export_gltf
from .mel import export_mel, mel_text
from .obj import export_obj, obj_text
from .report import export_report, report_text

__all__ = [
    "build_gltf",
    "export_gltf",
    "export_mel",
    "mel_text",
    "export_obj",
    "obj_text",
    "export_report",
    "report_text",
]
