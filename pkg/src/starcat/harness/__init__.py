"""
Random instance generators and the law suite.
"""

from starcat.harness.config import GenConfig
from starcat.harness.generators import (
    Sampler,
    gen_contraction,
    gen_isometry,
    gen_matrix,
    gen_positive,
    gen_split_cospan,
)
from starcat.harness.laws import LAWS, Law, LawViolation, law, laws_for
from starcat.harness.report import (
    Counterexample,
    LawReport,
    LawResult,
    run_laws,
)

__all__ = [
    # Configuration
    "GenConfig",
    # Generators
    "Sampler",
    "gen_matrix",
    "gen_isometry",
    "gen_contraction",
    "gen_positive",
    "gen_split_cospan",
    # Laws
    "LAWS",
    "Law",
    "LawViolation",
    "law",
    "laws_for",
    # Reports
    "Counterexample",
    "LawResult",
    "LawReport",
    "run_laws",
]
