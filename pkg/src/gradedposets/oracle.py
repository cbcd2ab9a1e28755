"""Brute-force ground truth for the formula engines.

Labeled posets on ``{0..n-1}`` are generated by adding vertex ``n-1`` to every
labeled poset on ``n-1`` vertices in all consistent ways (an order ideal below
it, an order filter above it).  Every labeled poset arises exactly once because
deleting the last vertex recovers its parent.  Unlabeled classes are grown the
same way from class representatives and deduplicated by canonical form.

Family membership only ever uses :func:`~gradedposets.poset.grading` and
:func:`~gradedposets.poset.contains`, never the locality shortcuts.
"""

from __future__ import annotations

import datetime as _dt
import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .poset import (
    GradingKind,
    Poset,
    _bits,
    automorphisms,
    canonical_form,
    contains,
    grading,
    weak_rank,
)
from .seeds import is_seed, seed_of

MAX_N = 7
CACHE_FORMAT = "gradedposets-census"
CACHE_VERSION = 1

FAMILIES = (
    "all_posets",
    "weakly_graded",
    "graded",
    "graded_semiorder",
    "graded_interval",
    "graded_31_avoiding",
    "interval_order",
    "semiorder",
)
KINDS = ("labeled", "unlabeled", "seeds", "labeled_seeds")

# (smaller, larger) family pairs that must be ordered at every n
CONTAINMENTS = (
    ("graded_semiorder", "graded_interval"),
    ("graded_interval", "graded"),
    ("graded_semiorder", "graded_31_avoiding"),
    ("graded_31_avoiding", "graded"),
    ("graded", "weakly_graded"),
    ("weakly_graded", "all_posets"),
    ("semiorder", "interval_order"),
    ("interval_order", "all_posets"),
)


class LimitExceeded(ValueError):
    pass


class CorruptCache(ValueError):
    pass


class CacheNotFound(FileNotFoundError):
    pass


def _check_limit(n: int, limit: int = MAX_N):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise LimitExceeded(f"exhaustive enumeration is limited to n <= {limit}, got {n}")


# -- generation --------------------------------------------------------------------


def _ideals(p: Poset) -> list[int]:
    """Down-closed vertex sets of p as masks."""
    return [m for m in range(1 << p.n) if all(p.down[v] & ~m == 0 for v in _bits(m))]


def _extensions(p: Poset) -> Iterator[Poset]:
    """All posets on n+1 vertices whose restriction to the first n is p."""
    n = p.n
    full = (1 << n) - 1
    filters = [full & ~m for m in _ideals(p)]
    for below in _ideals(p):
        allowed = full & ~below
        for d in _bits(below):
            allowed &= p.up[d]
        for above in filters:
            if above & ~allowed:
                continue
            down = list(p.down)
            bit = 1 << n
            for w in _bits(above):
                down[w] |= bit | below
            down.append(below)
            yield Poset(n + 1, down, check=False)


def enumerate_labeled(n: int) -> Iterator[Poset]:
    """Every labeled poset on ``{0..n-1}`` exactly once."""
    _check_limit(n)
    if n == 0:
        yield Poset(0, [])
        return
    for parent in enumerate_labeled(n - 1):
        yield from _extensions(parent)


@lru_cache(maxsize=None)
def unlabeled_classes(n: int) -> tuple[Poset, ...]:
    """One representative per isomorphism class, sorted by canonical form."""
    _check_limit(n)
    if n == 0:
        return (Poset(0, []),)
    reps: dict[bytes, Poset] = {}
    for parent in unlabeled_classes(n - 1):
        for child in _extensions(parent):
            key = canonical_form(child)
            if key not in reps:
                reps[key] = child
    return tuple(reps[k] for k in sorted(reps))


# -- classification ------------------------------------------------------------------


@dataclass(frozen=True)
class Membership:
    all_posets: bool
    weakly_graded: bool
    graded: bool
    graded_semiorder: bool
    graded_interval: bool
    graded_31_avoiding: bool
    interval_order: bool
    semiorder: bool

    def families(self) -> list[str]:
        return [f for f in FAMILIES if getattr(self, f)]


def classify(p: Poset) -> Membership:
    """Family membership from the exhaustive containment search."""
    kind = grading(p).kind
    graded = kind is GradingKind.STRONG
    no22 = not contains(p, (2, 2))
    no31 = not contains(p, (3, 1))
    return Membership(
        all_posets=True,
        weakly_graded=kind is not GradingKind.NOT_GRADED,
        graded=graded,
        graded_semiorder=graded and no22 and no31,
        graded_interval=graded and no22,
        graded_31_avoiding=graded and no31,
        interval_order=no22,
        semiorder=no22 and no31,
    )


# -- census ----------------------------------------------------------------------------


def _empty_counts(n_max: int) -> dict[str, dict[str, list[int]]]:
    return {f: {k: [0] * (n_max + 1) for k in KINDS} for f in FAMILIES}


@dataclass
class CensusTable:
    """Per-family, per-size counts with the automorphism data needed to re-check them.

    ``counts[family][kind][n]`` for kind in labeled, unlabeled, seeds (unlabeled
    seeds) and labeled_seeds.  ``aut[family][n]`` maps automorphism group order to
    the number of unlabeled classes with that order; ``seed_aut`` does the same
    for seed classes.
    """

    n_max: int
    counts: dict[str, dict[str, list[int]]]
    aut: dict[str, list[dict[int, int]]]
    seed_aut: dict[str, list[dict[int, int]]]
    method: str = "exhaustive"
    timestamp: str = field(default_factory=lambda: _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"))

    def sequence(self, family: str, kind: str) -> list[int]:
        return list(self.counts[family][kind])

    def verify(self) -> None:
        """Raise :class:`CorruptCache` unless every internal invariant holds."""
        for fam in FAMILIES:
            if fam not in self.counts:
                raise CorruptCache(f"missing family {fam}")
            c = self.counts[fam]
            for kind in KINDS:
                if len(c.get(kind, ())) != self.n_max + 1:
                    raise CorruptCache(f"{fam}/{kind} does not cover n = 0..{self.n_max}")
            for n in range(self.n_max + 1):
                hist = self.aut[fam][n]
                shist = self.seed_aut[fam][n]
                fact = math.factorial(n)
                if any(fact % g for g in list(hist) + list(shist)):
                    raise CorruptCache(f"{fam} n={n}: automorphism order does not divide n!")
                if c["unlabeled"][n] != sum(hist.values()):
                    raise CorruptCache(f"{fam} n={n}: unlabeled count disagrees with class data")
                if c["seeds"][n] != sum(shist.values()):
                    raise CorruptCache(f"{fam} n={n}: seed count disagrees with class data")
                if c["labeled"][n] != sum(fact // g * k for g, k in hist.items()):
                    raise CorruptCache(f"{fam} n={n}: labeled count != sum of n!/|Aut|")
                if c["labeled_seeds"][n] != sum(fact // g * k for g, k in shist.items()):
                    raise CorruptCache(f"{fam} n={n}: labeled seed count != sum of n!/|Aut|")
        for small, big in CONTAINMENTS:
            for kind in KINDS:
                a, b = self.counts[small][kind], self.counts[big][kind]
                if any(x > y for x, y in zip(a, b)):
                    raise CorruptCache(f"{kind} counts of {small} exceed those of {big}")

    def to_json(self) -> dict:
        return {
            "format": CACHE_FORMAT,
            "version": CACHE_VERSION,
            "method": self.method,
            "timestamp": self.timestamp,
            "n_max": self.n_max,
            "records": [
                {"family": f, "n": n, "kind": k, "count": self.counts[f][k][n]}
                for f in FAMILIES
                for k in KINDS
                for n in range(self.n_max + 1)
            ],
            "automorphisms": {
                f: [
                    {
                        "classes": {str(g): c for g, c in sorted(self.aut[f][n].items())},
                        "seeds": {str(g): c for g, c in sorted(self.seed_aut[f][n].items())},
                    }
                    for n in range(self.n_max + 1)
                ]
                for f in FAMILIES
            },
        }

    @classmethod
    def from_json(cls, doc: dict) -> CensusTable:
        try:
            if doc.get("format") != CACHE_FORMAT:
                raise CorruptCache(f"not a census file (format {doc.get('format')!r})")
            if doc.get("version") != CACHE_VERSION:
                raise CorruptCache(f"unsupported census version {doc.get('version')!r}")
            n_max = int(doc["n_max"])
            counts = _empty_counts(n_max)
            seen = set()
            for rec in doc["records"]:
                f, k, n = rec["family"], rec["kind"], int(rec["n"])
                if f not in counts or k not in KINDS or not 0 <= n <= n_max:
                    raise CorruptCache(f"bad record {rec}")
                if (f, k, n) in seen:
                    raise CorruptCache(f"duplicate record {rec}")
                seen.add((f, k, n))
                counts[f][k][n] = int(rec["count"])
            if len(seen) != len(FAMILIES) * len(KINDS) * (n_max + 1):
                raise CorruptCache("census file is missing records")
            aut = {f: [] for f in FAMILIES}
            seed_aut = {f: [] for f in FAMILIES}
            for f in FAMILIES:
                entries = doc["automorphisms"][f]
                if len(entries) != n_max + 1:
                    raise CorruptCache(f"automorphism data for {f} has the wrong length")
                for e in entries:
                    aut[f].append({int(g): int(c) for g, c in e["classes"].items()})
                    seed_aut[f].append({int(g): int(c) for g, c in e["seeds"].items()})
            table = cls(n_max, counts, aut, seed_aut, doc.get("method", "exhaustive"), doc.get("timestamp", ""))
        except CorruptCache:
            raise
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise CorruptCache(f"malformed census file: {exc}") from exc
        table.verify()
        return table


def _labeled_tally(n: int, parents: list[Poset]) -> dict[str, list[int]]:
    """Labeled and labeled-seed counts per family over the children of ``parents``."""
    out = {f: [0, 0] for f in FAMILIES}
    kids = _extensions_all(n, parents)
    for p in kids:
        m = classify(p)
        s = is_seed(p)
        for f in FAMILIES:
            if getattr(m, f):
                out[f][0] += 1
                if s:
                    out[f][1] += 1
    return out


def _extensions_all(n: int, parents: list[Poset]) -> Iterator[Poset]:
    if n == 0:
        yield Poset(0, [])
        return
    for parent in parents:
        yield from _extensions(parent)


def _labeled_counts(n: int, workers: int) -> dict[str, list[int]]:
    parents = list(enumerate_labeled(n - 1)) if n > 0 else []
    if workers <= 1 or n < 2:
        return _labeled_tally(n, parents)
    chunks = [parents[i::workers] for i in range(workers)]
    total = {f: [0, 0] for f in FAMILIES}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_labeled_tally, [n] * workers, chunks):
            for f in FAMILIES:
                total[f][0] += part[f][0]
                total[f][1] += part[f][1]
    return total


def census(n_max: int, *, workers: int = 1) -> CensusTable:
    """Exhaustive counts of every family for n = 0..n_max.

    Labeled counts come from classifying every labeled poset; unlabeled and seed
    counts from classifying class representatives.  The two are tied together by
    :meth:`CensusTable.verify` through the automorphism group orders.
    """
    _check_limit(n_max)
    counts = _empty_counts(n_max)
    aut = {f: [] for f in FAMILIES}
    seed_aut = {f: [] for f in FAMILIES}
    for n in range(n_max + 1):
        hist = {f: Counter() for f in FAMILIES}
        shist = {f: Counter() for f in FAMILIES}
        for rep in unlabeled_classes(n):
            m = classify(rep)
            g = automorphisms(rep)
            s = is_seed(rep)
            for f in m.families():
                hist[f][g] += 1
                if s:
                    shist[f][g] += 1
        labeled = _labeled_counts(n, workers)
        for f in FAMILIES:
            counts[f]["unlabeled"][n] = sum(hist[f].values())
            counts[f]["seeds"][n] = sum(shist[f].values())
            counts[f]["labeled"][n] = labeled[f][0]
            counts[f]["labeled_seeds"][n] = labeled[f][1]
            aut[f].append(dict(sorted(hist[f].items())))
            seed_aut[f].append(dict(sorted(shist[f].items())))
    table = CensusTable(n_max, counts, aut, seed_aut)
    table.verify()
    return table


def save(table: CensusTable, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(table.to_json(), indent=1, sort_keys=True) + "\n")


def load(path: str | Path) -> CensusTable:
    path = Path(path)
    if not path.exists():
        raise CacheNotFound(f"no census cache at {path}")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CorruptCache(f"{path} is not valid JSON: {exc}") from exc
    return CensusTable.from_json(doc)


def cached_census(n_max: int, path: str | Path | None, *, workers: int = 1) -> CensusTable:
    """Load a cache covering ``n_max`` if there is one, else compute and store it."""
    if path is not None:
        try:
            table = load(path)
        except CacheNotFound:
            table = None
        if table is not None and table.n_max >= n_max:
            return table
    table = census(n_max, workers=workers)
    if path is not None:
        save(table, path)
    return table


# -- targeted oracles -------------------------------------------------------------------


def members(family: str, n: int) -> list[Poset]:
    """Unlabeled class representatives of ``family`` on n vertices."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    return [p for p in unlabeled_classes(n) if getattr(classify(p), family)]


def sprout_counts(seed: Poset, n_max: int) -> tuple[list[int], list[int]]:
    """Unlabeled and labeled counts of posets whose seed is isomorphic to ``seed``.

    Labeled counts classify every labeled poset; unlabeled counts the classes.
    """
    _check_limit(n_max)
    key = canonical_form(seed)
    unl = [0] * (n_max + 1)
    lab = [0] * (n_max + 1)
    for n in range(n_max + 1):
        for p in unlabeled_classes(n):
            if canonical_form(seed_of(p).seed) == key:
                unl[n] += 1
        for p in enumerate_labeled(n):
            if canonical_form(seed_of(p).seed) == key:
                lab[n] += 1
    return unl, lab


def garden_labeled_counts(seed_test, n_max: int) -> list[int]:
    """Labeled posets whose seed satisfies ``seed_test``, for n = 0..n_max."""
    _check_limit(n_max)
    return [sum(1 for p in enumerate_labeled(n) if seed_test(seed_of(p).seed)) for n in range(n_max + 1)]


def _rank_function_count(p: Poset) -> int:
    """Rank functions of p with values filling 0..h-1 for some h, no level empty."""
    r = weak_rank(p)
    if r is None:
        return 0
    spans = [max(r[v] for v in comp) + 1 for comp in p.components()]
    if not spans:
        return 1
    limit = sum(spans)
    count = 0

    def place(i: int, occupied: int):
        nonlocal count
        if i == len(spans):
            # occupied ranks must be exactly 0..h-1
            if occupied & 1 and occupied & (occupied + 1) == 0:
                count += 1
            return
        for s in range(limit - spans[i] + 1):
            place(i + 1, occupied | ((1 << spans[i]) - 1) << s)

    place(0, 0)
    return count


def ranked_weak_labeled_counts(n_max: int) -> list[int]:
    """Labeled posets paired with a gap-free rank function, for n = 0..n_max."""
    _check_limit(n_max)
    out = []
    for n in range(n_max + 1):
        fact = math.factorial(n)
        out.append(sum(fact // automorphisms(p) * _rank_function_count(p) for p in unlabeled_classes(n)))
    return out
