from .coords import (
    NormalCoords,
    matching_ok,
    matching_violations,
    quad_constraint_ok,
    read_coords,
    vertex_link_coords,
    write_coords,
)
from .crush import crush, crush_dual
from .ddenum import enumerate_vertex_surfaces, matching_rows
from .pipeline import crush_candidates, one_vertex_pipeline
from .quads import (
    PURSE_PAIRS,
    QUAD_EDGES,
    QUAD_SIDES,
    purse_partner,
    quad_crosses_edge,
    quad_type_of_pair,
)
from .surface import build_surface, surface_cells

__all__ = [
    "NormalCoords",
    "matching_ok",
    "matching_violations",
    "quad_constraint_ok",
    "read_coords",
    "vertex_link_coords",
    "write_coords",
    "crush",
    "crush_dual",
    "enumerate_vertex_surfaces",
    "matching_rows",
    "crush_candidates",
    "one_vertex_pipeline",
    "PURSE_PAIRS",
    "QUAD_EDGES",
    "QUAD_SIDES",
    "purse_partner",
    "quad_crosses_edge",
    "quad_type_of_pair",
    "build_surface",
    "surface_cells",
]
