"""Cloning, seeds, and the substitutions between seed, labeled and unlabeled counts.

Two incomparable vertices are exchangeable when they have the same strict
up-set and down-set.  Removing one of them (decloning) until none remain gives
the seed of a poset; the clone counts are kept as multiplicities.

For a garden whose seeds are all primitive (trivial automorphism group):

    E(x) = S(e^x - 1),    E(x) = O(1 - e^-x),    O(x) = S(x / (1 - x))

with S the seed EGF, O the unlabeled OGF and E the labeled EGF.  Seeds with
symmetry are handled through the cycle index of their automorphism group.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .poset import Poset, _bits, automorphism_group
from .series import PowerSeries, named_series


class NotExchangeable(ValueError):
    pass


class NotASeed(ValueError):
    pass


def exchangeable_pairs(p: Poset) -> list[tuple[int, int]]:
    """All pairs u < v (as integers) of exchangeable vertices."""
    out = []
    for u in range(p.n):
        for v in range(u + 1, p.n):
            if p.down[u] == p.down[v] and p.up[u] == p.up[v] and not p.comparable(u, v):
                out.append((u, v))
    return out


def is_seed(p: Poset) -> bool:
    seen = set()
    for v in range(p.n):
        key = (p.down[v], p.up[v])
        if key in seen:
            return False
        seen.add(key)
    return True


def clone(p: Poset, v: int) -> Poset:
    """Add vertex ``p.n`` exchangeable with v."""
    if not 0 <= v < p.n:
        raise IndexError(v)
    down = list(p.down)
    down.append(p.down[v])
    bit = 1 << p.n
    for w in _bits(p.up[v]):
        down[w] |= bit
    return Poset(p.n + 1, down, check=False)


def declone(p: Poset, v: int) -> Poset:
    """Remove v, which must have an exchangeable partner; later vertices shift down."""
    if not 0 <= v < p.n:
        raise IndexError(v)
    if not any(v in pair for pair in exchangeable_pairs(p)):
        raise NotExchangeable(f"vertex {v} has no exchangeable partner")
    return p.induced([u for u in range(p.n) if u != v])


@dataclass(frozen=True)
class SeedDecomposition:
    """A seed with clone counts; ``classes[i]`` lists the original vertices merged into seed vertex i."""

    seed: Poset
    multiplicity: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]


def seed_of(p: Poset, choose: Callable[[list[tuple[int, int]]], tuple[int, int]] | None = None) -> SeedDecomposition:
    """Declone repeatedly until no exchangeable pair is left.

    By default the larger vertex of the first exchangeable pair is removed.
    ``choose`` can pick a different pair (and the second vertex of the returned
    pair is removed), which the uniqueness tests use.
    """
    current = p
    names = list(range(p.n))
    merged = {v: [v] for v in range(p.n)}
    while True:
        pairs = exchangeable_pairs(current)
        if not pairs:
            break
        keep, drop = choose(pairs) if choose else pairs[0]
        merged[names[keep]].extend(merged.pop(names[drop]))
        current = current.induced([u for u in range(current.n) if u != drop])
        del names[drop]
    classes = tuple(tuple(sorted(merged[v])) for v in names)
    return SeedDecomposition(current, tuple(len(c) for c in classes), classes)


def sprout(seed: Poset, multiplicity: list[int] | tuple[int, ...]) -> Poset:
    """Clone seed vertex i until it appears ``multiplicity[i]`` times."""
    if len(multiplicity) != seed.n or any(m < 1 for m in multiplicity):
        raise ValueError("need a positive multiplicity for every seed vertex")
    p = seed
    for v, m in enumerate(multiplicity):
        for _ in range(m - 1):
            p = clone(p, v)
    return p


def is_primitive(p: Poset) -> bool:
    return len(automorphism_group(p)) == 1


# -- cycle indices ------------------------------------------------------------------


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        k = 0
        v = s
        while not seen[v]:
            seen[v] = True
            v = perm[v]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


@dataclass(frozen=True)
class CycleIndex:
    """Averaged power-sum monomials: ``terms[(l1, l2, ...)]`` weights p_l1 p_l2 ..."""

    terms: dict[tuple[int, ...], Fraction]
    group_order: int

    @classmethod
    def of_group(cls, perms: list[tuple[int, ...]]) -> CycleIndex:
        counts = Counter(cycle_type(g) for g in perms)
        total = len(perms)
        return cls({t: Fraction(c, total) for t, c in sorted(counts.items(), reverse=True)}, total)

    def evaluate(self, power_sum: Callable[[int], PowerSeries]) -> PowerSeries:
        """Substitute a series for each power sum p_k."""
        cache: dict[int, PowerSeries] = {}
        result = None
        for cyc, w in self.terms.items():
            term = None
            for k in cyc:
                if k not in cache:
                    cache[k] = power_sum(k)
                term = cache[k] if term is None else term * cache[k]
            if term is None:
                raise ValueError("cannot evaluate the cycle index of the empty set without an order")
            term = term * w
            result = term if result is None else result + term
        return result

    def __str__(self) -> str:
        def mono(cyc):
            c = Counter(cyc)
            return "".join(f"p{k}" + (f"^{e}" if e > 1 else "") for k, e in sorted(c.items()))

        return " + ".join(f"{w}*{mono(c)}" for c, w in self.terms.items())


def cycle_index(p: Poset) -> CycleIndex:
    """Cycle index of the automorphism group acting on the vertices."""
    return CycleIndex.of_group(automorphism_group(p))


def unlabeled_power_sum(order: int) -> Callable[[int], PowerSeries]:
    """p_k with one color per clone count i weighted x^i: x^k / (1 - x^k)."""
    geom = named_series("geom", order)
    return lambda k: geom.subs_power(k)


def _require_seed(p: Poset):
    if not is_seed(p):
        raise NotASeed("poset has exchangeable vertices")


def sprout_ogf(p: Poset, order: int) -> PowerSeries:
    """OGF of unlabeled sprouts of the seed p, by Polya counting."""
    _require_seed(p)
    if p.n == 0:
        return PowerSeries.one(order)
    return cycle_index(p).evaluate(unlabeled_power_sum(order))


def sprout_egf(p: Poset, order: int) -> PowerSeries:
    """EGF of labeled sprouts of the seed p: (e^x - 1)^m / |Aut(p)|.

    Summing x^n / |Aut| over unlabeled sprouts, the wreath-product stabilizers
    collapse to a plain average over clone-count vectors, so no cycle index is
    needed on the labeled side.
    """
    _require_seed(p)
    g = len(automorphism_group(p))
    return named_series("exp_minus_one", order) ** p.n / g


def faithful_part(p: Poset) -> list[int]:
    """Vertices moved by at least one automorphism."""
    moved = set()
    for g in automorphism_group(p):
        moved.update(v for v in range(p.n) if g[v] != v)
    return sorted(moved)


def r_k_factor(p: Poset, order: int) -> PowerSeries:
    """Correction factor R_K with sprout_ogf(p) = (x / (1 - x))^m R_K(x).

    Averages, over the automorphism group restricted to the faithful part K,
    the cycle monomial divided by p_1^|K|.  Equals 1 for a primitive seed.
    """
    _require_seed(p)
    K = faithful_part(p)
    k = len(K)
    if k == 0:
        return PowerSeries.one(order)
    N = order + k
    pos = {v: i for i, v in enumerate(K)}
    restricted = [tuple(pos[g[v]] for v in K) for g in automorphism_group(p)]
    z = CycleIndex.of_group(restricted).evaluate(unlabeled_power_sum(N))
    # divide by p_1^k = x^k / (1 - x)^k
    one_minus_x = 1 - PowerSeries.x(order)
    return z.shift_divide(k).truncate(order) * one_minus_x**k


# -- the three substitutions -------------------------------------------------------

DIRECTIONS = ("seed_to_egf", "seed_to_ogf", "ogf_to_egf", "egf_to_ogf", "egf_to_seed", "ogf_to_seed")


def _inner(direction: str, order: int) -> PowerSeries:
    x = PowerSeries.x(order)
    if direction == "seed_to_egf":
        return named_series("exp_minus_one", order)
    if direction == "seed_to_ogf":
        return named_series("geom", order)
    if direction == "ogf_to_egf":
        return named_series("one_minus_exp_neg", order)
    if direction == "egf_to_ogf":
        return named_series("neg_log_one_minus", order)
    if direction == "egf_to_seed":
        return named_series("log_one_plus", order)
    if direction == "ogf_to_seed":
        return x / (1 + x)
    raise ValueError(f"unknown direction {direction!r}; expected one of {DIRECTIONS}")


def trictionary(series: PowerSeries, direction: str) -> PowerSeries:
    """Convert between seed EGF, unlabeled OGF and labeled EGF of a primitive garden.

    ``egf_to_ogf``, ``egf_to_seed`` and ``ogf_to_seed`` invert the three forward
    substitutions.
    """
    return series.compose(_inner(direction, series.order))
