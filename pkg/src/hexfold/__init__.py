"""Periodic multi-fold colourings of plane distance-interval graphs."""

from .bounds import (
    DensityBound,
    HCount,
    InfeasibleParameterError,
    chi_f_upper,
    chi_f_upper_alt,
    count_contained_hexagons,
    h_lower_bound,
    solve_x,
)
from .constructions import (
    Interval,
    KernelColourMap,
    Layer,
    PeriodicColouring,
    classic_seven,
    colours_at,
    construct_2nm,
    construct_density,
    construct_nm,
    fold2_twelve,
    fold3_sixteen,
    fold7_thirtyseven,
    nm_colour_count,
    two_nm_colour_count,
)
from .geometry import ConvexPolygon, HexCell, HexGrid, Point
from .scheduler import (
    ConflictGraph,
    Schedule,
    Transmitter,
    build_conflict_graph,
    schedule_from_colouring,
    validate_schedule,
)
from .specfile import SpecFileError, load_colouring, save_colouring
from .verifier import (
    BOUNDARY_RESOLVED,
    SAFE,
    VIOLATION,
    CellPairFinding,
    VerificationReport,
    min_same_colour_separation,
    verify_exact,
    verify_sampled,
)

__all__ = [
    "BOUNDARY_RESOLVED",
    "SAFE",
    "VIOLATION",
    "CellPairFinding",
    "ConflictGraph",
    "ConvexPolygon",
    "DensityBound",
    "HCount",
    "HexCell",
    "HexGrid",
    "InfeasibleParameterError",
    "Interval",
    "KernelColourMap",
    "Layer",
    "PeriodicColouring",
    "Point",
    "Schedule",
    "SpecFileError",
    "Transmitter",
    "VerificationReport",
    "build_conflict_graph",
    "chi_f_upper",
    "chi_f_upper_alt",
    "classic_seven",
    "colours_at",
    "construct_2nm",
    "construct_density",
    "construct_nm",
    "count_contained_hexagons",
    "fold2_twelve",
    "fold3_sixteen",
    "fold7_thirtyseven",
    "h_lower_bound",
    "load_colouring",
    "min_same_colour_separation",
    "nm_colour_count",
    "save_colouring",
    "schedule_from_colouring",
    "solve_x",
    "two_nm_colour_count",
    "validate_schedule",
    "verify_exact",
    "verify_sampled",
]

__version__ = "0.1.0"
