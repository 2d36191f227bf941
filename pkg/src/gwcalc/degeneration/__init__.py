"""Combinatorics of the degeneration formula for threefolds."""
from .enumeration import (
    Caps,
    DimensionCheck,
    Profile,
    dimension_filter,
    enumerate_admissible_triples,
    profile_dimension_check,
)
from .evaluation import InvariantTable, canonical_key, evaluate_degeneration
from .model import (
    AdmissibleTriple,
    GeometryModel,
    Marking,
    RelativeGraph,
    RelativeGraphComponent,
)
from .partitions import Partition, enumerate_partitions, zeta
from .presets import PRESET_NAMES, PRESETS, Preset, SurvivorReport, curve_presets, get_preset, survivors_report

__all__ = [
    "AdmissibleTriple",
    "Caps",
    "DimensionCheck",
    "GeometryModel",
    "InvariantTable",
    "Marking",
    "PRESETS",
    "PRESET_NAMES",
    "Partition",
    "Preset",
    "Profile",
    "RelativeGraph",
    "RelativeGraphComponent",
    "SurvivorReport",
    "canonical_key",
    "curve_presets",
    "dimension_filter",
    "enumerate_admissible_triples",
    "enumerate_partitions",
    "evaluate_degeneration",
    "get_preset",
    "profile_dimension_check",
    "survivors_report",
    "zeta",
]
