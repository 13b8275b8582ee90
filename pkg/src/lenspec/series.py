"""Exact truncated bivariate power series over the rationals.

Home of the generating function E(x, t) whose x^v t^n coefficient, times v!,
counts n-bond even multigraphs on v labeled vertices, and of the formal
log/exp needed to pass from all multigraphs to connected ones.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def binomial_ext(a: int, b: int) -> int:
    """Binomial coefficient with the conventions C(a, 0) = 1 for *any* a
    (including negative a) and C(a, b) = 0 whenever b > a and b != 0.

    Deliberately not the generalized negative-upper-index binomial:
    here C(-1, 0) = 1 but C(-1, 2) = 0.
    """
    if b < 0:
        raise ValueError(f"lower index must be nonnegative, got {b}")
    if b == 0:
        return 1
    if b > a:
        return 0
    return math.comb(a, b)


@lru_cache(maxsize=None)
def e_coeff(n: int, v: int) -> Fraction:
    """Coefficient of t^n x^v in E(x, t), by the explicit double sum.

    The sum runs over the number s of positive-sign vertices and the number
    mu of mixed-sign bonds; binomial_ext supplies the edge-placement counts.
    """
    if n < 0 or v < 0:
        raise ValueError("orders must be nonnegative")
    total = 0
    for s in range(v + 1):
        choose_s = math.comb(v, s)
        mixed_pairs = s * (v - s)
        same_pairs = math.comb(s, 2) + math.comb(v - s, 2)
        for mu in range(n + 1):
            term = (
                choose_s
                * binomial_ext(mu + mixed_pairs - 1, mu)
                * binomial_ext(n - mu + same_pairs - 1, n - mu)
            )
            total += -term if (mu & 1) else term
    return Fraction(total, (1 << v) * math.factorial(v))


class BivariateSeries:
    """Dense truncated series sum_{n <= n_max, v <= v_max} c[n][v] t^n x^v
    with exact Fraction coefficients.

    Instances are immutable after construction (coefficients stored as
    nested tuples), so they are safe to share across threads.
    """

    __slots__ = ("n_max", "v_max", "coeffs")

    def __init__(self, n_max: int, v_max: int, coeffs=None):
        if n_max < 0 or v_max < 0:
            raise ValueError("truncation orders must be nonnegative")
        object.__setattr__(self, "n_max", n_max)
        object.__setattr__(self, "v_max", v_max)
        if coeffs is None:
            grid = tuple(
                tuple(Fraction(0) for _ in range(v_max + 1)) for _ in range(n_max + 1)
            )
        else:
            if len(coeffs) != n_max + 1 or any(len(r) != v_max + 1 for r in coeffs):
                raise ValueError("coefficient grid shape mismatch")
            grid = tuple(tuple(Fraction(c) for c in row) for row in coeffs)
        object.__setattr__(self, "coeffs", grid)

    def __setattr__(self, name, value):
        raise AttributeError("BivariateSeries is immutable")

    @classmethod
    def constant(cls, value, n_max: int, v_max: int) -> "BivariateSeries":
        grid = [[Fraction(0)] * (v_max + 1) for _ in range(n_max + 1)]
        grid[0][0] = Fraction(value)
        return cls(n_max, v_max, grid)

    def coeff(self, n: int, v: int) -> Fraction:
        return self.coeffs[n][v]

    def is_zero(self) -> bool:
        return all(not c for row in self.coeffs for c in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return (
            self.n_max == other.n_max
            and self.v_max == other.v_max
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n_max, self.v_max, self.coeffs))

    def _binop(self, other, op):
        n_max = min(self.n_max, other.n_max)
        v_max = min(self.v_max, other.v_max)
        grid = [
            [op(self.coeffs[n][v], other.coeffs[n][v]) for v in range(v_max + 1)]
            for n in range(n_max + 1)
        ]
        return BivariateSeries(n_max, v_max, grid)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def scale(self, factor) -> "BivariateSeries":
        factor = Fraction(factor)
        grid = [[c * factor for c in row] for row in self.coeffs]
        return BivariateSeries(self.n_max, self.v_max, grid)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        n_max = min(self.n_max, other.n_max)
        v_max = min(self.v_max, other.v_max)
        grid = [[Fraction(0)] * (v_max + 1) for _ in range(n_max + 1)]
        for n1 in range(min(self.n_max, n_max) + 1):
            row1 = self.coeffs[n1]
            for v1 in range(min(self.v_max, v_max) + 1):
                c1 = row1[v1]
                if not c1:
                    continue
                for n2 in range(min(other.n_max, n_max - n1) + 1):
                    row2 = other.coeffs[n2]
                    out = grid[n1 + n2]
                    for v2 in range(min(other.v_max, v_max - v1) + 1):
                        c2 = row2[v2]
                        if c2:
                            out[v1 + v2] += c1 * c2
        return BivariateSeries(n_max, v_max, grid)

    __rmul__ = __mul__

    def __repr__(self):
        return f"BivariateSeries(n_max={self.n_max}, v_max={self.v_max})"


def _gen_binomial(e: int, k: int) -> int:
    # True generalized binomial C(e, k) for integer e; internal to the
    # univariate expansions below, distinct from binomial_ext on purpose.
    if k < 0:
        return 0
    if e >= 0:
        return math.comb(e, k)
    return (-1) ** k * math.comb(k - e - 1, k)


def _binom_power(sign: int, e: int, n_max: int) -> list[int]:
    """Coefficients of (1 + sign*t)**e up to t^n_max, for any integer e."""
    return [_gen_binomial(e, k) * (sign**k) for k in range(n_max + 1)]


def _convolve(a: list[int], b: list[int], n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for i, ai in enumerate(a[: n_max + 1]):
        if ai:
            for j in range(min(len(b) - 1, n_max - i) + 1):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def build_E(n_max: int, v_max: int) -> BivariateSeries:
    """Expand E(x, t) directly: each x^v slice is a finite sum over s of
    products of (1 - t) and (1 + t) integer powers, expanded to order n_max.

    Independent of e_coeff; the two routes cross-check each other.
    """
    grid = [[Fraction(0)] * (v_max + 1) for _ in range(n_max + 1)]
    for v in range(v_max + 1):
        tpoly = [0] * (n_max + 1)
        pairs = v * (v - 1) // 2
        for s in range(v + 1):
            mixed = s * (v - s)
            # (1-t)^(mixed - pairs) * (1+t)^(-mixed)
            fac = _binom_power(-1, mixed - pairs, n_max)
            fac = _convolve(fac, _binom_power(1, -mixed, n_max), n_max)
            choose_s = math.comb(v, s)
            for k in range(n_max + 1):
                tpoly[k] += choose_s * fac[k]
        scale = Fraction(1, (1 << v) * math.factorial(v))
        for n in range(n_max + 1):
            grid[n][v] = tpoly[n] * scale
    return BivariateSeries(n_max, v_max, grid)


def _nilpotency_bound(u: BivariateSeries) -> int:
    """Smallest k guaranteeing u^(k+1) vanishes within the truncation window
    for a series u with zero constant term."""
    pure_t = any(u.coeffs[n][0] for n in range(u.n_max + 1))
    pure_x = any(u.coeffs[0][v] for v in range(u.v_max + 1))
    if not pure_t:
        return u.v_max  # every monomial carries x, so u^k has x-degree >= k
    if not pure_x:
        return u.n_max
    return u.n_max + u.v_max


def series_log(series: BivariateSeries) -> BivariateSeries:
    """Formal logarithm of a series with constant term 1, truncated to the
    same orders, via log(1 + u) = sum (-1)^(k+1) u^k / k."""
    if series.coeff(0, 0) != 1:
        raise ValueError("formal log requires constant term exactly 1")
    one = BivariateSeries.constant(1, series.n_max, series.v_max)
    u = series - one
    result = BivariateSeries(series.n_max, series.v_max)
    power = one
    for k in range(1, _nilpotency_bound(u) + 1):
        power = power * u
        if power.is_zero():
            break
        result = result + power.scale(Fraction((-1) ** (k + 1), k))
    return result


def series_exp(series: BivariateSeries) -> BivariateSeries:
    """Formal exponential of a series with zero constant term."""
    if series.coeff(0, 0) != 0:
        raise ValueError("formal exp requires constant term exactly 0")
    result = BivariateSeries.constant(1, series.n_max, series.v_max)
    power = BivariateSeries.constant(1, series.n_max, series.v_max)
    for k in range(1, _nilpotency_bound(series) + 1):
        power = power * series
        if power.is_zero():
            break
        result = result + power.scale(Fraction(1, math.factorial(k)))
    return result
