"""Formula-based enumeration of graded poset families.

Every series returned here is exact through ``x^N`` and counts the empty poset
once at ``x^0``.  Labeled families come back as EGFs; use
:meth:`PowerSeries.egf_counts` to read off the counts.

The transfer-matrix routines never form square roots of monomials.  A graded
poset with level sizes ``c_1, ..., c_k`` is weighted by the row vector
``x^i / i!`` for the bottom level, one matrix step ``psi(i, j) x^j / j!`` per
edge-level and an all-ones column at the top.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .series import BivariateSeries, PowerSeries, named_series

__all__ = [
    "stirling2",
    "psi_w",
    "psi_s",
    "psi_22",
    "bivariate_psi",
    "all_graded_egf",
    "weakly_graded_egf",
    "graded_semiorder_ogf",
    "faceoff_ogf",
    "graded_semiorder_assembled_ogf",
    "graded_semiorder_height_ogf",
    "graded_semiorder_seed_egf",
    "interval_graded_matrix_entry",
    "graded_interval_egf",
    "graded_31_egf",
    "literature_gfs",
    "LITERATURE",
]


# -- edge-level counts ------------------------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, S(0, 0) = 1."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def psi_w(m: int, n: int) -> int:
    """Bipartite graphs between m bottom and n top vertices."""
    return 2 ** (m * n)


@lru_cache(maxsize=None)
def psi_s(m: int, n: int) -> int:
    """Bipartite graphs on m + n vertices with no isolated vertex.

    Double inclusion-exclusion over the sets of vertices forced isolated.
    """
    total = 0
    for j in range(m + 1):
        for k in range(n + 1):
            sign = -1 if (m - j + n - k) % 2 else 1
            total += sign * math.comb(m, j) * math.comb(n, k) * 2 ** (j * k)
    return total


@lru_cache(maxsize=None)
def psi_22(m: int, n: int) -> int:
    """(2+2)-avoiding edge-levels with m top, n bottom vertices and no all-seeing vertex."""
    return sum(math.factorial(j) ** 2 * stirling2(n, j) * stirling2(m, j) for j in range(min(m, n) + 1))


def bivariate_psi(kind: str, order: int) -> BivariateSeries:
    """Bivariate EGF of an edge-level count; ``kind`` is ``w``, ``s`` or ``two_two``."""
    table = {"w": psi_w, "s": psi_s, "two_two": psi_22}
    try:
        f = table[kind]
    except KeyError:
        raise ValueError(f"unknown psi kind {kind!r}") from None
    return BivariateSeries.from_function(f, order)


# -- transfer matrices --------------------------------------------------------


def _row_times(row: list[PowerSeries], matrix: list[list[PowerSeries]]) -> list[PowerSeries]:
    R = len(matrix)
    order = row[0].order
    out = []
    for j in range(R):
        acc = PowerSeries.zero(order)
        for i in range(R):
            if row[i].valuation() is None:
                continue
            e = matrix[i][j]
            if e.valuation() is None:
                continue
            acc = acc + row[i] * e
        out.append(acc)
    return out


def _is_zero(v: list[PowerSeries]) -> bool:
    return all(s.valuation() is None for s in v)


def _level_transfer(weight, order: int, height: int | None, dim: int | None) -> PowerSeries:
    """Shared engine for graded and weakly graded posets.

    ``weight(i, j)`` counts the admissible edge-levels between a level of size
    i and the next level of size j.  Level sizes run over 1..dim.
    """
    R = order if dim is None else dim
    if R < 1:
        raise ValueError("matrix dimension must be positive")
    N = order
    # level of size i weighs x^i / i!; index i-1 holds size i
    level = [PowerSeries.monomial(i, N, Fraction(1, math.factorial(i))) for i in range(1, R + 1)]
    step = [[level[j] * weight(i, j + 1) for j in range(R)] for i in range(1, R + 1)]

    def top(row: list[PowerSeries]) -> PowerSeries:
        acc = PowerSeries.zero(N)
        for s in row:
            acc = acc + s
        return acc

    row = level
    if height is not None:
        if height < 0:
            raise ValueError("height must be nonnegative")
        if height == 0:
            return PowerSeries.one(N)
        for _ in range(height - 1):
            row = _row_times(row, step)
        return top(row)

    total = PowerSeries.one(N)
    # each step multiplies by at least x, so N steps exhaust the precision
    for _ in range(N + 1):
        if _is_zero(row):
            break
        total = total + top(row)
        row = _row_times(row, step)
    else:
        assert _is_zero(row), "transfer sum did not terminate within the truncation order"
    return total


def all_graded_egf(order: int, height: int | None = None, dim: int | None = None) -> PowerSeries:
    """EGF of labeled (strongly) graded posets.

    With ``height`` set, only posets with that many ranks are counted and the
    constant term is 0 (except ``height=0``, the empty poset).  ``dim`` caps
    the level size, defaulting to ``order`` which loses nothing through x^order.
    """
    return _level_transfer(psi_s, order, height, dim)


def weakly_graded_egf(order: int, height: int | None = None, dim: int | None = None) -> PowerSeries:
    """The same transfer sum with every bipartite edge-level allowed.

    What this counts is a poset together with a rank function whose values
    fill ``0..height-1`` without gaps.  A connected weakly graded poset has one
    such rank function; a disconnected one may have several.
    """
    return _level_transfer(psi_w, order, height, dim)


# -- graded semiorders ---------------------------------------------------------


def faceoff_ogf(order: int) -> PowerSeries:
    """Unlabeled faceoffs, (1 - x)^2 / (1 - 2x)."""
    x = PowerSeries.x(order)
    return (1 - x) ** 2 / (1 - 2 * x)


def faceoff_count(top: int, bottom: int) -> int:
    """Faceoffs with the given side sizes, via the Young diagram bijection."""
    if top == 0 and bottom == 0:
        return 1
    if top == 0 or bottom == 0:
        return 0
    return math.comb(top - 1 + bottom - 1, bottom - 1)


def graded_semiorder_ogf(order: int) -> PowerSeries:
    """Unlabeled graded semiorders, (1 - 3x + 2x^2 - x^3) / ((1 - x)(1 - 3x + x^2))."""
    x = PowerSeries.x(order)
    num = 1 - 3 * x + 2 * x**2 - x**3
    den = (1 - x) * (1 - 3 * x + x**2)
    return num / den


def graded_semiorder_height_ogf(height: int, order: int) -> PowerSeries:
    """Unlabeled graded semiorders with ``height`` levels: z^k T^(k-1), z = x/(1-x)."""
    if height == 0:
        return PowerSeries.one(order)
    z = named_series("geom", order)
    return z**height * faceoff_ogf(order) ** (height - 1)


def graded_semiorder_assembled_ogf(order: int) -> PowerSeries:
    """Sum of the per-height products, in the resummed form 1 + z / (1 - z T)."""
    z = named_series("geom", order)
    t = faceoff_ogf(order)
    return 1 + z / (1 - z * t)


def graded_semiorder_seed_egf(order: int) -> PowerSeries:
    """Seed EGF 1 + x + x^2 / (1 - x - x^2) of graded semiorders."""
    x = PowerSeries.x(order)
    return 1 + x + x**2 / (1 - x - x**2)


# -- graded interval orders ------------------------------------------------------


def interval_graded_matrix_entry(m: int, n: int, order: int) -> PowerSeries:
    """Entry A(m, n) of the graded interval order transfer matrix.

    m counts the non-down-seeing vertices already on the current level, n the
    non-down-seeing vertices placed on the next one, and the hidden index l the
    down-seeing but not up-seeing vertices added to the current level.
    """
    N = order
    coeffs = [Fraction(0)] * (N + 1)
    if n > N:
        return PowerSeries(coeffs, N)
    for l in range(N - n + 1):
        inner = sum(math.comb(m, mp) * psi_22(n, l + mp) for mp in range(m + 1))
        if inner:
            coeffs[l + n] += Fraction(inner, math.factorial(l) * math.factorial(n))
    return PowerSeries(coeffs, N)


def _interval_matrix(order: int, dim: int) -> list[list[PowerSeries]]:
    e1 = named_series("exp_minus_one", order)
    return [[e1 * interval_graded_matrix_entry(m, n, order) for n in range(dim)] for m in range(dim)]


def graded_interval_egf(order: int, height: int | None = None, dim: int | None = None) -> PowerSeries:
    """EGF of labeled graded interval orders ((2+2)-avoiding graded posets).

    Row 0 of powers of B = (e^x - 1) A is walked.  The height-k term is
    [B^k]_{0,0}; the resolvent [(I - B)^{-1}]_{0,0} sums them and contributes
    the empty poset through its k = 0 term.  Every entry of B has positive
    valuation so the Neumann sum stops after ``order`` steps.
    """
    R = order + 1 if dim is None else dim
    if R < 1:
        raise ValueError("matrix dimension must be positive")
    B = _interval_matrix(order, R)
    row = [PowerSeries.one(order)] + [PowerSeries.zero(order)] * (R - 1)
    if height is not None:
        if height < 0:
            raise ValueError("height must be nonnegative")
        for _ in range(height):
            row = _row_times(row, B)
        return row[0]
    total = PowerSeries.zero(order)
    for _ in range(order + 2):
        if _is_zero(row):
            break
        total = total + row[0]
        row = _row_times(row, B)
    else:
        assert _is_zero(row), "Neumann sum did not terminate within the truncation order"
    return total


# -- (3+1)-avoiding graded posets ---------------------------------------------------


def graded_31_egf(order: int) -> PowerSeries:
    """Closed form for labeled (3+1)-avoiding graded posets in terms of Psi_w(x, x)."""
    N = order
    e = named_series("exp", N)
    e2 = e * e
    pw = bivariate_psi("w", N).diagonal()
    num = 2 * e + (e - 2) * pw
    den = 2 * e2 + e + (e2 - 2 * e - 1) * pw
    assert den[0] == 1
    return e - 1 + num / den


# -- known interval order and semiorder generating functions -------------------------


def _sum_of_products(factor, order: int) -> PowerSeries:
    """sum_{n>=0} prod_{k=1..n} factor(k), each factor of positive valuation."""
    total = PowerSeries.one(order)
    prod = PowerSeries.one(order)
    for k in range(1, order + 2):
        f = factor(k)
        assert f.valuation() is None or f.valuation() >= 1
        prod = prod * f
        v = prod.valuation()
        if v is None:
            break
        total = total + prod
    else:
        assert prod.valuation() is None
    return total


def _zagier(order: int) -> PowerSeries:
    e_neg = named_series("one_minus_exp_neg", order)
    # 1 - e^{-kx} is (1 - e^{-x}) evaluated at kx
    return _sum_of_products(lambda k: PowerSeries((c * k**i for i, c in enumerate(e_neg)), order), order)


def _bousquet_melou(order: int) -> PowerSeries:
    x = PowerSeries.x(order)
    return _sum_of_products(lambda k: 1 - (1 - x) ** k, order)


def _interval_seed(order: int) -> PowerSeries:
    x = PowerSeries.x(order)
    inv = (1 + x).invert()
    return _sum_of_products(lambda k: 1 - inv**k, order)


def _wine_freund(order: int) -> PowerSeries:
    x = PowerSeries.x(order + 1)
    return ((1 - (1 - 4 * x).sqrt()) / 2).shift_divide(1)


def _stanley(order: int) -> PowerSeries:
    N = order + 1
    e_neg = 1 - named_series("one_minus_exp_neg", N)
    num = 1 - (4 * e_neg - 3).sqrt()
    den = 2 * (1 - e_neg)
    return num.shift_divide(1) / den.shift_divide(1)


LITERATURE = {
    "wine_freund": _wine_freund,
    "stanley_semi": _stanley,
    "zagier": _zagier,
    "bousquet_melou": _bousquet_melou,
    "interval_seed": _interval_seed,
}


def literature_gfs(name: str, order: int) -> PowerSeries:
    """Published interval order and semiorder generating functions.

    ``wine_freund`` and ``bousquet_melou`` are OGFs of unlabeled semiorders and
    interval orders, ``stanley_semi`` and ``zagier`` the matching EGFs, and
    ``interval_seed`` the seed EGF of interval orders.
    """
    try:
        f = LITERATURE[name]
    except KeyError:
        raise ValueError(f"unknown generating function {name!r}") from None
    return f(order)
