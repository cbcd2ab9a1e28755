"""Exact enumeration of graded posets and their (2+2)/(3+1)-avoiding subfamilies."""

from .engines import (
    all_graded_egf,
    graded_31_egf,
    graded_interval_egf,
    graded_semiorder_assembled_ogf,
    graded_semiorder_ogf,
    graded_semiorder_seed_egf,
    literature_gfs,
    weakly_graded_egf,
)
from .poset import Poset, canonical_form, contains, grading, parse_poset
from .routes import Engine, RunConfig, UnsupportedMethod
from .seeds import seed_of, sprout_ogf, trictionary
from .series import PowerSeries

__version__ = "0.1.0"

__all__ = [
    "Engine",
    "Poset",
    "PowerSeries",
    "RunConfig",
    "UnsupportedMethod",
    "all_graded_egf",
    "canonical_form",
    "contains",
    "graded_31_egf",
    "graded_interval_egf",
    "graded_semiorder_assembled_ogf",
    "graded_semiorder_ogf",
    "graded_semiorder_seed_egf",
    "grading",
    "literature_gfs",
    "parse_poset",
    "seed_of",
    "sprout_ogf",
    "trictionary",
    "weakly_graded_egf",
]
