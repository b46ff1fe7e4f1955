"""Linear parts, linearity defect, Tor maps and mapping cones."""
from .errors import LiftingConditionError
from .linear_part import (
    ideal_linearity_defect,
    is_componentwise_linear,
    linear_part,
    linear_part_of_complex,
    linearity_defect,
    top_nonvanishing_homology,
)
from .mapping_cone import (
    Inclusion,
    MappingConeReport,
    check_square_condition,
    comparison_maps,
    mapping_cone,
    mapping_cone_lind,
)
from .tor import TorMap, TorMapPiece, sega_map, sega_map_is_zero, tor_dimension, tor_piece_dimension

__all__ = [
    "LiftingConditionError",
    "ideal_linearity_defect",
    "is_componentwise_linear",
    "linear_part",
    "linear_part_of_complex",
    "linearity_defect",
    "top_nonvanishing_homology",
    "Inclusion",
    "MappingConeReport",
    "check_square_condition",
    "comparison_maps",
    "mapping_cone",
    "mapping_cone_lind",
    "TorMap",
    "TorMapPiece",
    "sega_map",
    "sega_map_is_zero",
    "tor_dimension",
    "tor_piece_dimension",
]
