"""Strong 9-edge-coloring of loopless subcubic planar multigraphs."""
from .planar_multigraph import PlaneMultigraph, build_plane_multigraph, embed_edge_list, trace_faces
from .reducer import color_graph
from .strong_coloring import PartialColoring, verify_strong

__all__ = [
    "PlaneMultigraph",
    "PartialColoring",
    "build_plane_multigraph",
    "color_graph",
    "embed_edge_list",
    "trace_faces",
    "verify_strong",
]
