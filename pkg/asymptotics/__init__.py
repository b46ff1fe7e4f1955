"""Rees presentations, persistence degrees and certified stabilization of lind."""
from .errors import ArtinReesSearchError, ThresholdViolation
from .persistence import NEG_INF, POS_INF, degree_json, fiber_hilbert, fiber_module, persistence_degree
from .rees import (
    PowerKind,
    ReesPresentation,
    ideal_generators,
    ideal_power,
    module_power,
    rees_component,
    rees_presentation,
    unit_module,
)
from .sequences import AsymptoticReport, Quasiperiod, Variant, detect_quasiperiod, detect_stable, lind_sequence
from .threshold import (
    FiltrationCache,
    InitialFormReading,
    LevelData,
    StabilityCertificate,
    artin_rees_number,
    flat_base_change_check,
    initial_form_module,
    read_initial_forms,
    stability_threshold,
    tor_image,
)

__all__ = [
    "ArtinReesSearchError",
    "ThresholdViolation",
    "NEG_INF",
    "POS_INF",
    "degree_json",
    "fiber_hilbert",
    "fiber_module",
    "persistence_degree",
    "PowerKind",
    "ReesPresentation",
    "ideal_generators",
    "ideal_power",
    "module_power",
    "rees_component",
    "rees_presentation",
    "unit_module",
    "AsymptoticReport",
    "Quasiperiod",
    "Variant",
    "detect_quasiperiod",
    "detect_stable",
    "lind_sequence",
    "FiltrationCache",
    "InitialFormReading",
    "LevelData",
    "StabilityCertificate",
    "artin_rees_number",
    "flat_base_change_check",
    "initial_form_module",
    "read_initial_forms",
    "stability_threshold",
    "tor_image",
]
