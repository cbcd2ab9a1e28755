"""Which methods can produce which sequence, and the dispatch between them.

A sequence is named by a family and a kind:

* ``labeled_egf``: labeled counts, read from an EGF
* ``unlabeled_ogf``: unlabeled counts, read from an OGF
* ``seed_egf``: labeled seed counts, read from the seed EGF

Methods are ``transfer``, ``closed_form``, ``oracle`` and
``trictionary-from:<kind>``.  The last converts another kind of the same
family with the seed substitutions, so it is only offered for gardens whose
seeds are all primitive, i.e. the (2+2)-avoiding families.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import engines, oracle
from .series import PowerSeries
from .seeds import trictionary

KINDS = ("labeled_egf", "unlabeled_ogf", "seed_egf")
TRICTIONARY = "trictionary-from:"

ALIASES = {"all_graded": "graded"}

# oracle census family for each CLI family; weakly_graded_ranked has its own oracle
_CENSUS_KIND = {"labeled_egf": "labeled", "unlabeled_ogf": "unlabeled", "seed_egf": "labeled_seeds"}

# families whose seeds are primitive, so the trictionary applies
GARDENS = ("graded_semiorder", "graded_interval", "interval_order", "semiorder")

# substitution taking kind a to kind b
_DIRECTION = {
    ("seed_egf", "labeled_egf"): "seed_to_egf",
    ("seed_egf", "unlabeled_ogf"): "seed_to_ogf",
    ("unlabeled_ogf", "labeled_egf"): "ogf_to_egf",
    ("labeled_egf", "unlabeled_ogf"): "egf_to_ogf",
    ("labeled_egf", "seed_egf"): "egf_to_seed",
    ("unlabeled_ogf", "seed_egf"): "ogf_to_seed",
}


class UnsupportedMethod(ValueError):
    pass


Formula = Callable[[int, "int | None"], PowerSeries]


def _no_height(f: Callable[[int], PowerSeries]) -> Formula:
    def run(order, height):
        if height is not None:
            raise UnsupportedMethod("this method has no height filter")
        return f(order)

    return run


def _semiorder_by_height(order, height):
    if height is None:
        return engines.graded_semiorder_assembled_ogf(order)
    return engines.graded_semiorder_height_ogf(height, order)


# (family, kind) -> {method: formula(order, height)}
FORMULAS: dict[tuple[str, str], dict[str, Formula]] = {
    ("graded", "labeled_egf"): {
        "transfer": lambda N, h: engines.all_graded_egf(N, height=h),
    },
    ("weakly_graded_ranked", "labeled_egf"): {
        "transfer": lambda N, h: engines.weakly_graded_egf(N, height=h),
    },
    ("graded_31_avoiding", "labeled_egf"): {
        "closed_form": _no_height(engines.graded_31_egf),
    },
    ("graded_semiorder", "unlabeled_ogf"): {
        "closed_form": _no_height(engines.graded_semiorder_ogf),
        "transfer": _semiorder_by_height,
    },
    ("graded_semiorder", "seed_egf"): {
        "closed_form": _no_height(engines.graded_semiorder_seed_egf),
    },
    ("graded_interval", "labeled_egf"): {
        "transfer": lambda N, h: engines.graded_interval_egf(N, height=h),
    },
    ("interval_order", "labeled_egf"): {
        "closed_form": _no_height(lambda N: engines.literature_gfs("zagier", N)),
    },
    ("interval_order", "unlabeled_ogf"): {
        "closed_form": _no_height(lambda N: engines.literature_gfs("bousquet_melou", N)),
    },
    ("interval_order", "seed_egf"): {
        "closed_form": _no_height(lambda N: engines.literature_gfs("interval_seed", N)),
    },
    ("semiorder", "labeled_egf"): {
        "closed_form": _no_height(lambda N: engines.literature_gfs("stanley_semi", N)),
    },
    ("semiorder", "unlabeled_ogf"): {
        "closed_form": _no_height(lambda N: engines.literature_gfs("wine_freund", N)),
    },
}

FAMILIES = tuple(oracle.FAMILIES) + ("weakly_graded_ranked",)


def canonical_family(name: str) -> str:
    fam = ALIASES.get(name, name)
    if fam not in FAMILIES:
        known = ", ".join(sorted(FAMILIES + tuple(ALIASES)))
        raise UnsupportedMethod(f"unknown family {name!r} (known: {known})")
    return fam


def _has_oracle(family: str, kind: str) -> bool:
    if family == "weakly_graded_ranked":
        return kind == "labeled_egf"
    return True


def available_methods(family: str, kind: str) -> list[str]:
    """Methods that can produce (family, kind), in order of preference."""
    family = canonical_family(family)
    if kind not in KINDS:
        raise UnsupportedMethod(f"unknown kind {kind!r}; expected one of {KINDS}")
    out = [m for m in ("closed_form", "transfer") if m in FORMULAS.get((family, kind), {})]
    if _has_oracle(family, kind):
        out.append("oracle")
    if family in GARDENS:
        out += [TRICTIONARY + k for k in KINDS if k != kind]
    return out


@dataclass(frozen=True)
class RunConfig:
    family: str
    kind: str
    method: str
    n_max: int
    height: int | None = None
    format: str = "table"
    cache: str | None = None
    offset: int = 0
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", canonical_family(self.family))
        if self.n_max < -1:
            raise UnsupportedMethod("n_max must be at least -1 (empty range)")
        if self.height is not None and self.height < 0:
            raise UnsupportedMethod("height must be nonnegative")
        if self.format not in ("table", "json", "bfile"):
            raise UnsupportedMethod(f"unknown format {self.format!r}")
        methods = available_methods(self.family, self.kind)
        if self.method not in methods:
            raise UnsupportedMethod(
                f"method {self.method!r} is not available for {self.family} {self.kind}; "
                f"available: {', '.join(methods)}"
            )


class Engine:
    """Computes series for configs, sharing one census between requests."""

    def __init__(self, cache: str | None = None, workers: int = 1):
        self.cache = cache
        self.workers = workers
        self._census: oracle.CensusTable | None = None

    def census(self, n_max: int) -> oracle.CensusTable:
        if self._census is None or self._census.n_max < n_max:
            self._census = oracle.cached_census(n_max, self.cache, workers=self.workers)
        return self._census

    def _oracle_series(self, family: str, kind: str, order: int, height: int | None) -> PowerSeries:
        if height is not None:
            raise UnsupportedMethod("the oracle has no height filter")
        if family == "weakly_graded_ranked":
            return PowerSeries.from_egf_counts(oracle.ranked_weak_labeled_counts(order))
        counts = self.census(order).sequence(family, _CENSUS_KIND[kind])[: order + 1]
        if kind == "unlabeled_ogf":
            return PowerSeries(counts, order)
        return PowerSeries.from_egf_counts(counts)

    def series(self, family: str, kind: str, method: str, order: int, height: int | None = None) -> PowerSeries:
        family = canonical_family(family)
        if method not in available_methods(family, kind):
            raise UnsupportedMethod(f"method {method!r} is not available for {family} {kind}")
        if method == "oracle":
            return self._oracle_series(family, kind, order, height)
        if method.startswith(TRICTIONARY):
            if height is not None:
                raise UnsupportedMethod("the trictionary has no height filter")
            src = method[len(TRICTIONARY):]
            src_method = self.source_method(family, src)
            return trictionary(self.series(family, src, src_method, order), _DIRECTION[(src, kind)])
        return FORMULAS[(family, kind)][method](order, height)

    def source_method(self, family: str, kind: str) -> str:
        """Preferred non-trictionary method for a trictionary source."""
        for m in available_methods(family, kind):
            if not m.startswith(TRICTIONARY):
                return m
        raise UnsupportedMethod(f"no direct method for {family} {kind}")

    def counts(self, config: RunConfig) -> list[int]:
        """Integer counts for n = 0..n_max; raises if an EGF coefficient is not integral."""
        if config.n_max < 0:
            return []
        s = self.series(config.family, config.kind, config.method, config.n_max, config.height)
        return s.ogf_counts() if config.kind == "unlabeled_ogf" else s.egf_counts()
