"""Exact GL(n) characters and dimensions of Schur modules of three-row diagrams."""

from .character import (
    CharacterSum,
    Contribution,
    PoleError,
    SpecializationPoleError,
    Variant,
    character_sum,
    evaluate_character,
    expand_character,
    specialize_q,
)
from .diagram import Diagram3, Partition3
from .dimension import DegenerateSSError, dimension, dimension_terms
from .oracle import (
    GeneralDiagram,
    OracleSizeError,
    schur_module_character,
    schur_module_dimension,
    schur_polynomial,
    weyl_dimension,
)
from .tabloid import Tabloid, classify, d_matrix, enumerate_tabloids
from .verify import CORPUS, RunReport, run_suite
from .weights import WeightCharacter

__version__ = "0.1.0"

__all__ = [
    "CORPUS",
    "CharacterSum",
    "Contribution",
    "DegenerateSSError",
    "Diagram3",
    "GeneralDiagram",
    "OracleSizeError",
    "Partition3",
    "PoleError",
    "RunReport",
    "SpecializationPoleError",
    "Tabloid",
    "Variant",
    "WeightCharacter",
    "character_sum",
    "classify",
    "d_matrix",
    "dimension",
    "dimension_terms",
    "enumerate_tabloids",
    "evaluate_character",
    "expand_character",
    "run_suite",
    "schur_module_character",
    "schur_module_dimension",
    "schur_polynomial",
    "specialize_q",
    "weyl_dimension",
]
