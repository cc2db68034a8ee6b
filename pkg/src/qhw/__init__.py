"""Minimum-weight decoding hardness workbench."""

from qhw.lattice import (
    DecodingGraph,
    DefectType,
    ErrorSet,
    Scenario,
    Syndrome,
    build_color_code,
    build_surface_code,
    build_tcnot_graph,
)

__all__ = [
    "DecodingGraph",
    "DefectType",
    "ErrorSet",
    "Scenario",
    "Syndrome",
    "build_color_code",
    "build_surface_code",
    "build_tcnot_graph",
]

__version__ = "0.1.0"
