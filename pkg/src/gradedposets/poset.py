"""Finite posets on vertices ``0..n-1``.

The order relation is stored as two tuples of bitmasks: ``down[v]`` has bit u
set iff ``u < v`` and ``up[v]`` has bit w set iff ``v < w``.  Everything else
(cover relations, levels, patterns) is derived from those.

Text format used by fixtures and the command line::

    5
    0 < 1
    0 < 2
    1 < 3

The first line is the vertex count; each following line is one cover (or any
relation, the closure is taken).  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class CycleDetected(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class Poset:
    """Immutable strict partial order on ``range(n)``."""

    __slots__ = ("n", "down", "up", "_covers")

    def __init__(self, n: int, down: Sequence[int], *, check: bool = True):
        if len(down) != n:
            raise ValueError("need one down-mask per vertex")
        down = tuple(down)
        up = [0] * n
        for v, mask in enumerate(down):
            for u in _bits(mask):
                up[u] |= 1 << v
        if check:
            full = (1 << n) - 1
            for v in range(n):
                if down[v] & ~full:
                    raise ValueError("relation mentions a vertex out of range")
                if down[v] >> v & 1:
                    raise ValueError("relation is not irreflexive")
                for u in _bits(down[v]):
                    if down[u] & ~down[v]:
                        raise ValueError("relation is not transitive")
                    if down[u] >> v & 1:
                        raise ValueError("relation is not antisymmetric")
        self.n = n
        self.down = down
        self.up = tuple(up)
        self._covers = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_matrix(cls, lt: Sequence[Sequence[bool]]) -> Poset:
        n = len(lt)
        down = [sum(1 << u for u in range(n) if lt[u][v]) for v in range(n)]
        return cls(n, down)

    @classmethod
    def antichain(cls, n: int) -> Poset:
        return cls(n, [0] * n, check=False)

    @classmethod
    def chain(cls, n: int) -> Poset:
        return cls(n, [(1 << v) - 1 for v in range(n)], check=False)

    @classmethod
    def chain_sum(cls, parts: Iterable[int]) -> Poset:
        """Disjoint union of chains, vertices numbered chain by chain, bottom first."""
        down = []
        start = 0
        for a in parts:
            for j in range(a):
                down.append(((1 << j) - 1) << start)
            start += a
        return cls(start, down, check=False)

    # -- relation queries ---------------------------------------------------

    @property
    def lt(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(bool(self.up[u] >> v & 1) for v in range(self.n)) for u in range(self.n))

    def less(self, u: int, v: int) -> bool:
        return bool(self.up[u] >> v & 1)

    def comparable(self, u: int, v: int) -> bool:
        return bool((self.up[u] | self.down[u]) >> v & 1)

    def comp_mask(self, v: int) -> int:
        return self.up[v] | self.down[v]

    def upper_covers(self, v: int) -> int:
        """Mask of the vertices covering v."""
        out = 0
        for w in _bits(self.up[v]):
            if not (self.up[v] & self.down[w]):
                out |= 1 << w
        return out

    def lower_covers(self, v: int) -> int:
        out = 0
        for u in _bits(self.down[v]):
            if not (self.up[u] & self.down[v]):
                out |= 1 << u
        return out

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(u, v)`` with v covering u, sorted."""
        if self._covers is None:
            self._covers = tuple((u, v) for u in range(self.n) for v in _bits(self.upper_covers(u)))
        return list(self._covers)

    def minimal(self) -> list[int]:
        return [v for v in range(self.n) if not self.down[v]]

    def maximal(self) -> list[int]:
        return [v for v in range(self.n) if not self.up[v]]

    def relation_count(self) -> int:
        return sum(_popcount(m) for m in self.down)

    # -- derived posets -----------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Poset:
        """The isomorphic poset where vertex v is renamed ``perm[v]``."""
        n = self.n
        down = [0] * n
        for v in range(n):
            m = 0
            for u in _bits(self.down[v]):
                m |= 1 << perm[u]
            down[perm[v]] = m
        return Poset(n, down, check=False)

    def induced(self, vertices: Sequence[int]) -> Poset:
        """Subposet on ``vertices``; the i-th listed vertex becomes vertex i."""
        pos = {v: i for i, v in enumerate(vertices)}
        down = []
        for v in vertices:
            m = 0
            for u in _bits(self.down[v]):
                if u in pos:
                    m |= 1 << pos[u]
            down.append(m)
        return Poset(len(vertices), down, check=False)

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.comp_mask(v)
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(list(_bits(comp)))
        return out

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.down == other.down

    def __hash__(self) -> int:
        return hash((self.n, self.down))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={self.covers()})"


def build(n: int, covers: Iterable[tuple[int, int]]) -> Poset:
    """Poset generated by the given relations (transitive closure).

    Raises :class:`CycleDetected` if the pairs contain a directed cycle.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    up = [0] * n
    for u, v in covers:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"pair ({u}, {v}) out of range for n={n}")
        if u == v:
            raise CycleDetected(f"self loop at {u}")
        up[u] |= 1 << v
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    for i in range(n):
        if up[i] >> i & 1:
            raise CycleDetected(f"vertex {i} lies on a cycle")
    down = [0] * n
    for u in range(n):
        for v in _bits(up[u]):
            down[v] |= 1 << u
    return Poset(n, down, check=False)


def parse_poset(text: str) -> Poset:
    """Read the text format described in the module docstring."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty poset description")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    pairs = []
    for line in lines[1:]:
        if "<" not in line:
            raise ValueError(f"expected 'u < v', got {line!r}")
        a, b = line.split("<", 1)
        pairs.append((int(a), int(b)))
    return build(n, pairs)


def format_poset(p: Poset) -> str:
    out = [str(p.n)]
    out.extend(f"{u} < {v}" for u, v in p.covers())
    return "\n".join(out) + "\n"


# -- gradedness ---------------------------------------------------------------


class GradingKind(enum.Enum):
    NOT_GRADED = "not_graded"
    WEAK = "weak"
    STRONG = "strong"


@dataclass(frozen=True)
class RankedPoset:
    """A poset with a rank function, covers raising the rank by exactly one.

    ``strong`` records that every minimal vertex has rank 0 and every maximal
    vertex the top rank.
    """

    poset: Poset
    rank: tuple[int, ...]
    strong: bool

    @property
    def height(self) -> int:
        return len(set(self.rank))

    @property
    def top(self) -> int:
        return max(self.rank, default=-1)

    def level(self, i: int) -> int:
        """Mask of the vertices of rank i."""
        return sum(1 << v for v, r in enumerate(self.rank) if r == i)

    def levels(self) -> list[int]:
        return [self.level(i) for i in range(self.top + 1)]


class Grading(NamedTuple):
    kind: GradingKind
    ranked: RankedPoset | None


def _depths(p: Poset) -> list[int]:
    """Length of the longest chain below each vertex (minimal vertices get 0)."""
    depth = [-1] * p.n
    remaining = set(range(p.n))
    while remaining:
        for v in sorted(remaining):
            below = list(_bits(p.down[v]))
            if all(depth[u] >= 0 for u in below):
                depth[v] = 1 + max((depth[u] for u in below), default=-1)
                remaining.discard(v)
    return depth


def strong_rank(p: Poset) -> tuple[int, ...] | None:
    """The rank function of a strongly graded poset, or None if p is not one."""
    depth = _depths(p)
    for u, v in p.covers():
        if depth[v] != depth[u] + 1:
            return None
    tops = {depth[v] for v in p.maximal()}
    if len(tops) > 1:
        return None
    return tuple(depth)


def weak_rank(p: Poset) -> tuple[int, ...] | None:
    """A rank function normalized to minimum 0 on every component, or None."""
    rank: list[int | None] = [None] * p.n
    for comp in p.components():
        start = comp[0]
        rank[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in _bits(p.upper_covers(v)):
                if rank[w] is None:
                    rank[w] = rank[v] + 1
                    stack.append(w)
                elif rank[w] != rank[v] + 1:
                    return None
            for u in _bits(p.lower_covers(v)):
                if rank[u] is None:
                    rank[u] = rank[v] - 1
                    stack.append(u)
                elif rank[u] != rank[v] - 1:
                    return None
        low = min(rank[v] for v in comp)
        for v in comp:
            rank[v] -= low
    return tuple(rank)  # type: ignore[arg-type]


def grading(p: Poset) -> Grading:
    """Classify p as not graded, weakly graded or strongly graded."""
    r = strong_rank(p)
    if r is not None:
        return Grading(GradingKind.STRONG, RankedPoset(p, r, True))
    r = weak_rank(p)
    if r is not None:
        return Grading(GradingKind.WEAK, RankedPoset(p, r, False))
    return Grading(GradingKind.NOT_GRADED, None)


def ranked(p: Poset) -> RankedPoset:
    """Ranked view of a strongly graded poset; raises ValueError otherwise."""
    r = strong_rank(p)
    if r is None:
        raise ValueError("poset is not strongly graded")
    return RankedPoset(p, r, True)


# -- chain-sum patterns -------------------------------------------------------------


@dataclass(frozen=True)
class ChainSumPattern:
    """Incomparable chains with ``parts[i]`` elements each.

    With ``offsets``, chain i must start ``offsets[i]`` ranks above a common base
    and climb one rank per element.
    """

    parts: tuple[int, ...]
    offsets: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(a < 1 for a in self.parts):
            raise ValueError("chain lengths must be positive")
        if self.offsets is not None:
            object.__setattr__(self, "offsets", tuple(self.offsets))
            if len(self.offsets) != len(self.parts):
                raise ValueError("need one offset per chain")
            if self.parts and min(self.offsets) != 0:
                raise ValueError("offsets must be normalized to minimum 0")

    def __str__(self) -> str:
        if self.offsets is None:
            return "(" + "+".join(map(str, self.parts)) + ")"
        return "(" + "+".join(f"{a}[{b}]" for a, b in zip(self.parts, self.offsets)) + ")"


def _chains(p: Poset, length: int) -> list[tuple[int, int]]:
    """All chains with ``length`` elements as (mask, comparability mask) pairs."""
    out = []

    def grow(last: int, mask: int, comp: int, left: int):
        if left == 0:
            out.append((mask, comp))
            return
        for w in _bits(p.up[last]):
            grow(w, mask | 1 << w, comp | p.comp_mask(w), left - 1)

    for v in range(p.n):
        grow(v, 1 << v, p.comp_mask(v), length - 1)
    return out


def _disjoint_incomparable(candidates: list[list[tuple[int, int]]]) -> bool:
    def search(i: int, used: int, used_comp: int) -> bool:
        if i == len(candidates):
            return True
        for mask, comp in candidates[i]:
            if mask & used or mask & used_comp or comp & used:
                continue
            if search(i + 1, used | mask, used_comp | comp):
                return True
        return False

    return search(0, 0, 0)


def contains(p: Poset, pattern: ChainSumPattern | Sequence[int]) -> bool:
    """Whether p has pairwise incomparable, disjoint chains of the given sizes.

    Exhaustive backtracking; offsets on the pattern are ignored.
    """
    parts = pattern.parts if isinstance(pattern, ChainSumPattern) else tuple(pattern)
    by_len = {a: _chains(p, a) for a in set(parts)}
    # longest chains first prunes earlier
    order = sorted(parts, reverse=True)
    return _disjoint_incomparable([by_len[a] for a in order])


def _rank_chains(rp: RankedPoset, start: int, length: int) -> list[tuple[int, int]]:
    """Cover chains with ``length`` elements whose bottom has rank ``start``."""
    p = rp.poset
    out = []

    def grow(last: int, mask: int, comp: int, left: int):
        if left == 0:
            out.append((mask, comp))
            return
        for w in _bits(p.upper_covers(last)):
            grow(w, mask | 1 << w, comp | p.comp_mask(w), left - 1)

    for v in range(p.n):
        if rp.rank[v] == start:
            grow(v, 1 << v, p.comp_mask(v), length - 1)
    return out


def grade_contains(rp: RankedPoset, pattern: ChainSumPattern) -> bool:
    """Whether the offset pattern occurs at some common rank shift."""
    if pattern.offsets is None:
        raise ValueError("grade containment needs a pattern with offsets")
    if not pattern.parts:
        return True
    top = rp.top
    for base in range(-max(pattern.offsets), top + 1):
        cands = []
        for a, b in zip(pattern.parts, pattern.offsets):
            start = base + b
            if start < 0 or start + a - 1 > top:
                cands = None
                break
            cands.append(_rank_chains(rp, start, a))
        if cands is None:
            continue
        if _disjoint_incomparable(cands):
            return True
    return False


def locality_offsets(x: int, y: int) -> list[ChainSumPattern]:
    """Offset patterns x[bx] + y[by] with min(bx, by) = 0, bx < y and by < x.

    A graded poset avoids (x + y) iff it grade-avoids all of them.
    """
    out = []
    for bx in range(y):
        for by in range(x):
            if min(bx, by) == 0:
                out.append(ChainSumPattern((x, y), (bx, by)))
    return out


# -- seeing vertices and the locality criteria ------------------------------------------


class Seeing(NamedTuple):
    up_seeing: bool
    down_seeing: bool

    @property
    def all_seeing(self) -> bool:
        return self.up_seeing and self.down_seeing


def seeing(rp: RankedPoset, v: int) -> Seeing:
    """Whether v is covered by the whole next rank / covers the whole previous one."""
    p = rp.poset
    r = rp.rank[v]
    return Seeing(p.upper_covers(v) == rp.level(r + 1), p.lower_covers(v) == rp.level(r - 1))


def _require_strong(rp: RankedPoset):
    if not rp.strong:
        raise ValueError("locality criteria apply to strongly graded posets")


def _upsets_nested(rp: RankedPoset) -> bool:
    p = rp.poset
    for lvl in rp.levels():
        ups = sorted({p.upper_covers(v) for v in _bits(lvl)}, key=_popcount)
        for a, b in zip(ups, ups[1:]):
            if a & ~b:
                return False
    return True


def _every_level_all_seeing(rp: RankedPoset, see: list[Seeing]) -> bool:
    return all(any(see[v].all_seeing for v in _bits(lvl)) for lvl in rp.levels())


def avoids_22_local(rp: RankedPoset) -> bool:
    """(2+2)-avoidance via nested up-sets plus an all-seeing vertex on every level."""
    _require_strong(rp)
    see = [seeing(rp, v) for v in range(rp.poset.n)]
    return _upsets_nested(rp) and _every_level_all_seeing(rp, see)


def avoids_31_local(rp: RankedPoset) -> bool:
    """(3+1)-avoidance: no blind vertex, and ranks two apart fully comparable."""
    _require_strong(rp)
    p = rp.poset
    for v in range(p.n):
        s = seeing(rp, v)
        if not (s.up_seeing or s.down_seeing):
            return False
    levels = rp.levels()
    for i in range(len(levels) - 2):
        hi = levels[i + 2]
        for v in _bits(levels[i]):
            if hi & ~p.up[v]:
                return False
    return True


def avoids_both_local(rp: RankedPoset) -> bool:
    """Semiorder test: nested up-sets, no blind vertex, all-seeing vertex per level."""
    _require_strong(rp)
    see = [seeing(rp, v) for v in range(rp.poset.n)]
    if not all(s.up_seeing or s.down_seeing for s in see):
        return False
    return _upsets_nested(rp) and _every_level_all_seeing(rp, see)


# -- isomorphism machinery ------------------------------------------------------------------


def _colors(p: Poset) -> list[int]:
    """Isomorphism-invariant vertex colors, refined twice through the covers."""
    depth = _depths(p)
    height = _depths(Poset(p.n, p.up, check=False))
    inv = [
        (depth[v], height[v], _popcount(p.down[v]), _popcount(p.up[v]))
        for v in range(p.n)
    ]
    for _ in range(2):
        inv = [
            (
                inv[v],
                tuple(sorted(inv[w] for w in _bits(p.upper_covers(v)))),
                tuple(sorted(inv[u] for u in _bits(p.lower_covers(v)))),
            )
            for v in range(p.n)
        ]
    ranks = {key: i for i, key in enumerate(sorted(set(inv)))}
    return [ranks[k] for k in inv]


def canonical_form(p: Poset) -> bytes:
    """A byte string equal for two posets exactly when they are isomorphic.

    Minimizes the relation encoding over vertex orders that sort by an
    invariant coloring, trying one representative per class of twins.
    Practical up to about nine vertices.
    """
    n = p.n
    if n == 0:
        return b"\x00"
    color = _colors(p)
    slots = sorted(color)
    best: list[int] | None = None
    order: list[int] = []
    rows: list[int] = []

    def row_code(v: int) -> int:
        # two bits per earlier vertex: earlier < v, v < earlier
        code = 0
        for u in order:
            code = code << 2 | (p.up[u] >> v & 1) << 1 | (p.up[v] >> u & 1)
        return code

    def dfs(k: int, placed: int):
        nonlocal best
        if k == n:
            if best is None or rows < best:
                best = list(rows)
            return
        want = slots[k]
        tried = set()
        for v in range(n):
            if placed >> v & 1 or color[v] != want:
                continue
            key = (p.down[v], p.up[v])
            if key in tried:
                continue
            tried.add(key)
            rows.append(row_code(v))
            if best is None or rows <= best[: k + 1]:
                order.append(v)
                dfs(k + 1, placed | 1 << v)
                order.pop()
            rows.pop()

    dfs(0, 0)
    assert best is not None
    out = bytearray([n])
    out.extend(bytes(slots))
    for k, code in enumerate(best):
        out.extend(code.to_bytes((2 * k + 7) // 8 or 1, "big"))
    return bytes(out)


def automorphism_group(p: Poset) -> list[tuple[int, ...]]:
    """All relation-preserving permutations, as image tuples."""
    n = p.n
    color = _colors(p)
    img = [-1] * n
    used = 0
    out: list[tuple[int, ...]] = []

    def ok(v: int, w: int) -> bool:
        for u in range(v):
            iu = img[u]
            if (p.up[u] >> v & 1) != (p.up[iu] >> w & 1):
                return False
            if (p.up[v] >> u & 1) != (p.up[w] >> iu & 1):
                return False
        return True

    def dfs(v: int):
        nonlocal used
        if v == n:
            out.append(tuple(img))
            return
        for w in range(n):
            if used >> w & 1 or color[w] != color[v]:
                continue
            if not ok(v, w):
                continue
            img[v] = w
            used |= 1 << w
            dfs(v + 1)
            used &= ~(1 << w)
            img[v] = -1

    dfs(0)
    return out


def automorphisms(p: Poset) -> int:
    """Order of the automorphism group."""
    return len(automorphism_group(p))


def is_isomorphic(p: Poset, q: Poset) -> bool:
    return p.n == q.n and canonical_form(p) == canonical_form(q)


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(n))
