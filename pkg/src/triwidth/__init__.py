"""triwidth: width invariants of 3-manifold triangulations.

Dual graphs of generalised triangulations, exact and heuristic
carving-width and treewidth, normal surface enumeration and crushing with
replayable dual-graph certificates, constructive generators (layered
solid tori, two-bridge knot complements, Dehn fillings, subdivisions),
and numeric lower-bound helpers for hyperbolic volume.
"""

__version__ = "0.1.0"

from ._kernels import kernel_name
from .multigraph import MultiGraph, read_gr, write_dot, write_gr
from .perms import Permutation4
from .triangulation import (
    BoundarySummary,
    SurfaceSummary,
    Triangulation,
)

__all__ = [
    "MultiGraph",
    "Permutation4",
    "Triangulation",
    "BoundarySummary",
    "SurfaceSummary",
    "read_gr",
    "write_gr",
    "write_dot",
    "kernel_name",
    "__version__",
]
