"""Affine cover numbers of graphs: exact drawings, covers and bounds."""

from ._affcov import (
    Graph,
    bound_report,
    chromatic_number,
    draw,
    export,
    family,
    lva,
    targets,
    verify,
    vertex_thickness,
    __version__,
)

__all__ = [
    "Graph",
    "bound_report",
    "chromatic_number",
    "draw",
    "export",
    "family",
    "lva",
    "targets",
    "verify",
    "vertex_thickness",
    "__version__",
]
