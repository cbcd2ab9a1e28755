"""Exact truncated power series over the rationals.

A :class:`PowerSeries` holds the coefficients ``c_0 .. c_N`` of a series known
modulo ``x^(N+1)``.  Whether the coefficients are read as an ordinary or an
exponential generating function is up to the caller; :meth:`PowerSeries.egf_counts`
and :meth:`PowerSeries.from_egf_counts` convert between the two readings.

:class:`BivariateSeries` is the two-variable analogue used for edge-level
generating functions.  Its coefficients are stored in exponential
normalization: ``coeffs[m][n]`` multiplies ``x^m y^n / (m! n!)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class SeriesError(ValueError):
    """Base class for invalid power series operations."""


class ZeroConstantTerm(SeriesError):
    pass


class NonzeroInnerConstant(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    pass


class NonzeroLowOrderTerm(SeriesError):
    pass


class NonIntegralCoefficient(SeriesError):
    """A counting series produced a non-integer count."""


def _frac(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class PowerSeries:
    """A power series truncated after ``x^order``.

    Arithmetic between series of different orders truncates to the smaller one.
    Integers and fractions act as constant series.
    """

    __slots__ = ("_c",)
    __hash__ = None  # equality is up to the smaller truncation order

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        c = [_frac(a) for a in coeffs]
        if order is None:
            if not c:
                raise ValueError("need at least one coefficient or an explicit order")
            order = len(c) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(c) > order + 1:
            del c[order + 1:]
        else:
            c.extend([Fraction(0)] * (order + 1 - len(c)))
        self._c = tuple(c)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls((1,), order)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> PowerSeries:
        return cls((c,), order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: Scalar = 1) -> PowerSeries:
        if k > order:
            return cls.zero(order)
        return cls([0] * k + [coeff], order)

    @classmethod
    def x(cls, order: int) -> PowerSeries:
        return cls.monomial(1, order)

    @classmethod
    def from_function(cls, f: Callable[[int], Scalar], order: int) -> PowerSeries:
        return cls((f(k) for k in range(order + 1)), order)

    @classmethod
    def from_egf_counts(cls, counts: Sequence[int], order: int | None = None) -> PowerSeries:
        """The EGF ``sum counts[n] x^n / n!``."""
        if order is None:
            order = len(counts) - 1
        return cls((Fraction(a, math.factorial(n)) for n, a in enumerate(counts)), order)

    # -- accessors --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError(k)
        return self._c[k]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all are zero."""
        for k, a in enumerate(self._c):
            if a:
                return k
        return None

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return PowerSeries(self._c[: order + 1], order)

    def ogf_counts(self) -> list[int]:
        """Coefficients as integers; raises if any is not integral."""
        out = []
        for n, a in enumerate(self._c):
            if a.denominator != 1:
                raise NonIntegralCoefficient(f"coefficient of x^{n} is {a}")
            out.append(a.numerator)
        return out

    def egf_counts(self) -> list[int]:
        """``n! * c_n`` for every n; raises if any product is not integral."""
        out = []
        for n, a in enumerate(self._c):
            v = a * math.factorial(n)
            if v.denominator != 1:
                raise NonIntegralCoefficient(f"n! * coefficient of x^{n} is {v}")
            out.append(v.numerator)
        return out

    # -- ring structure ---------------------------------------------------

    def _coerce(self, other) -> PowerSeries | None:
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order)
        return None

    def __add__(self, other) -> PowerSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return PowerSeries((self._c[k] + o._c[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries((-a for a in self._c), self.order)

    def __sub__(self, other) -> PowerSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> PowerSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return PowerSeries((a * c for a in self._c), self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._c, other._c
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> PowerSeries:
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return PowerSeries((a / c for a in self._c), self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other) -> PowerSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.invert()

    def __pow__(self, k: int) -> PowerSeries:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.invert() ** (-k)
        result = PowerSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other) if not isinstance(other, PowerSeries) else other
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return self._c[: n + 1] == o._c[: n + 1]

    def __repr__(self) -> str:
        terms = ", ".join(str(a) for a in self._c)
        return f"PowerSeries([{terms}], order={self.order})"

    # -- analytic operations ------------------------------------------------

    def invert(self) -> PowerSeries:
        """Multiplicative inverse; the constant term must be nonzero."""
        a = self._c
        if not a[0]:
            raise ZeroConstantTerm("cannot invert a series with zero constant term")
        inv0 = 1 / a[0]
        b = [inv0]
        for k in range(1, len(a)):
            s = sum((a[i] * b[k - i] for i in range(1, k + 1) if a[i]), Fraction(0))
            b.append(-s * inv0)
        return PowerSeries(b, self.order)

    def compose(self, inner: PowerSeries) -> PowerSeries:
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        if inner._c[0]:
            raise NonzeroInnerConstant("inner series must have zero constant term")
        n = min(self.order, inner.order)
        result = PowerSeries.constant(self._c[n], n)
        g = inner.truncate(n)
        for k in range(n - 1, -1, -1):
            result = result * g + self._c[k]
        return result

    def sqrt(self) -> PowerSeries:
        """Square root with constant term 1."""
        a = self._c
        if a[0] != 1:
            raise BadConstantTerm("square root needs constant term 1")
        s = [Fraction(1)]
        for k in range(1, len(a)):
            acc = sum((s[i] * s[k - i] for i in range(1, k)), Fraction(0))
            s.append((a[k] - acc) / 2)
        return PowerSeries(s, self.order)

    def shift_divide(self, k: int) -> PowerSeries:
        """Divide by ``x^k``.  The result is known to order ``self.order - k``."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k > self.order:
            raise ValueError(f"cannot divide a series of order {self.order} by x^{k}")
        if any(self._c[:k]):
            raise NonzeroLowOrderTerm(f"coefficients below x^{k} are not all zero")
        return PowerSeries(self._c[k:], self.order - k)

    def shift_multiply(self, k: int) -> PowerSeries:
        """Multiply by ``x^k`` keeping the truncation order."""
        return PowerSeries([0] * k + list(self._c), self.order)

    def derivative(self) -> PowerSeries:
        """Formal derivative; loses one order of precision."""
        if self.order == 0:
            return PowerSeries.zero(0)
        return PowerSeries((k * self._c[k] for k in range(1, len(self._c))), self.order - 1)

    def borel(self) -> PowerSeries:
        """Divide the k-th coefficient by k! (ordinary to exponential reading)."""
        return PowerSeries((a / math.factorial(k) for k, a in enumerate(self._c)), self.order)

    def laplace(self) -> PowerSeries:
        """Multiply the k-th coefficient by k! (exponential to ordinary reading)."""
        return PowerSeries((a * math.factorial(k) for k, a in enumerate(self._c)), self.order)

    def subs_power(self, k: int) -> PowerSeries:
        """``self(x^k)`` at the same truncation order."""
        if k < 1:
            raise ValueError("power must be positive")
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self._c):
            if i * k > self.order:
                break
            out[i * k] = a
        return PowerSeries(out, self.order)


NAMED_SERIES = ("exp", "exp_minus_one", "one_minus_exp_neg", "geom", "neg_log_one_minus", "log_one_plus")


def named_series(name: str, order: int) -> PowerSeries:
    """Truncated expansions of the substitution series.

    ``exp`` is e^x, ``exp_minus_one`` is e^x - 1, ``one_minus_exp_neg`` is
    1 - e^-x and ``geom`` is x/(1-x).  ``neg_log_one_minus`` (-log(1-x)) and
    ``log_one_plus`` (log(1+x)) are the compositional inverses of the last
    two and of ``exp_minus_one``.
    """
    if name == "exp":
        return PowerSeries.from_function(lambda k: Fraction(1, math.factorial(k)), order)
    if name == "exp_minus_one":
        return PowerSeries.from_function(lambda k: Fraction(1, math.factorial(k)) if k else 0, order)
    if name == "one_minus_exp_neg":
        return PowerSeries.from_function(
            lambda k: Fraction((-1) ** (k + 1), math.factorial(k)) if k else 0, order
        )
    if name == "geom":
        return PowerSeries.from_function(lambda k: 1 if k else 0, order)
    if name == "neg_log_one_minus":
        return PowerSeries.from_function(lambda k: Fraction(1, k) if k else 0, order)
    if name == "log_one_plus":
        return PowerSeries.from_function(lambda k: Fraction((-1) ** (k + 1), k) if k else 0, order)
    raise ValueError(f"unknown series {name!r}; expected one of {NAMED_SERIES}")


def exp_of(a: PowerSeries) -> PowerSeries:
    """e^a for a series with zero constant term."""
    return named_series("exp", a.order).compose(a)


class BivariateSeries:
    """Series in x and y in exponential normalization, truncated at x^N and y^N.

    ``coeffs[m][n]`` is the coefficient of ``x^m y^n / (m! n!)``, so a
    bivariate EGF of a counting problem stores the counts themselves.
    """

    __slots__ = ("_c", "_n")
    __hash__ = None

    def __init__(self, coeffs: Sequence[Sequence[Scalar]], order: int):
        self._n = order
        rows = []
        for m in range(order + 1):
            src = coeffs[m] if m < len(coeffs) else ()
            row = [_frac(src[n]) if n < len(src) else Fraction(0) for n in range(order + 1)]
            rows.append(tuple(row))
        self._c = tuple(rows)

    @classmethod
    def from_function(cls, f: Callable[[int, int], Scalar], order: int) -> BivariateSeries:
        return cls([[f(m, n) for n in range(order + 1)] for m in range(order + 1)], order)

    @classmethod
    def exp_linear(cls, a: Scalar, b: Scalar, order: int) -> BivariateSeries:
        """e^(a x + b y), whose normalized coefficients are a^m b^n."""
        a, b = _frac(a), _frac(b)
        return cls.from_function(lambda m, n: a**m * b**n, order)

    @classmethod
    def one(cls, order: int) -> BivariateSeries:
        return cls.from_function(lambda m, n: 1 if m == n == 0 else 0, order)

    @property
    def order(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._c

    def __getitem__(self, mn: tuple[int, int]) -> Fraction:
        m, n = mn
        return self._c[m][n]

    def _check(self, other) -> BivariateSeries:
        if not isinstance(other, BivariateSeries):
            raise TypeError("expected a BivariateSeries")
        return other

    def __add__(self, other) -> BivariateSeries:
        o = self._check(other)
        n = min(self._n, o._n)
        return BivariateSeries.from_function(lambda i, j: self._c[i][j] + o._c[i][j], n)

    def __neg__(self) -> BivariateSeries:
        return BivariateSeries.from_function(lambda i, j: -self._c[i][j], self._n)

    def __sub__(self, other) -> BivariateSeries:
        return self + (-self._check(other))

    def __mul__(self, other) -> BivariateSeries:
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return BivariateSeries.from_function(lambda i, j: self._c[i][j] * c, self._n)
        o = self._check(other)
        N = min(self._n, o._n)
        a, b = self._c, o._c
        out = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]
        for m in range(N + 1):
            for n in range(N + 1):
                s = Fraction(0)
                for i in range(m + 1):
                    ci = math.comb(m, i)
                    for j in range(n + 1):
                        x = a[i][j]
                        if x:
                            y = b[m - i][n - j]
                            if y:
                                s += ci * math.comb(n, j) * x * y
                out[m][n] = s
        return BivariateSeries(out, N)

    __rmul__ = __mul__

    def invert(self) -> BivariateSeries:
        """Multiplicative inverse by solving the binomial convolution order by order."""
        a = self._c
        if not a[0][0]:
            raise ZeroConstantTerm("cannot invert a bivariate series with zero constant term")
        N = self._n
        inv0 = 1 / a[0][0]
        b = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]
        for m in range(N + 1):
            for n in range(N + 1):
                if m == n == 0:
                    b[0][0] = inv0
                    continue
                s = Fraction(0)
                for i in range(m + 1):
                    ci = math.comb(m, i)
                    for j in range(n + 1):
                        if i == 0 and j == 0:
                            continue
                        x = a[i][j]
                        if x:
                            s += ci * math.comb(n, j) * x * b[m - i][n - j]
                b[m][n] = -s * inv0
        return BivariateSeries(b, N)

    def diagonal(self) -> PowerSeries:
        """The univariate series f(x, x)."""
        N = self._n
        out = []
        for d in range(N + 1):
            out.append(
                sum(
                    (self._c[m][d - m] / (math.factorial(m) * math.factorial(d - m)) for m in range(d + 1)),
                    Fraction(0),
                )
            )
        return PowerSeries(out, N)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        n = min(self._n, other._n)
        return all(self._c[i][: n + 1] == other._c[i][: n + 1] for i in range(n + 1))

    def __repr__(self) -> str:
        return f"BivariateSeries(order={self._n}, coeffs={[list(map(str, r)) for r in self._c]})"
