"""Counts of connected even multigraphs and of degeneracy classes.

N_{c,v}(n, v) -- connected even multigraphs with n bonds on v labeled
vertices, i.e. degeneracy classes of n-bond periodic orbits visiting all v
vertices -- is computed by two independent routes (coefficient extraction
from ln E and a direct recursion), and the class count on the complete
graph K_V follows by the binomial sum over vertex subsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import BivariateSeries, build_E, e_coeff, series_log


class ConsistencyError(RuntimeError):
    """An integer-valued quantity came out non-integral, or two exact routes
    that must agree did not. Always indicates an arithmetic bug."""


def _as_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConsistencyError(f"{what} is not an integer: {x}")
    return x.numerator


def log_of_E(n_max: int, v_max: int) -> BivariateSeries:
    """ln E(x, t): the generating series of connected even multigraphs."""
    return series_log(build_E(n_max, v_max))


def ncv_from_log(n: int, v: int, log_series: BivariateSeries | None = None) -> int:
    """N_{c,v}(n, v) as v! times the t^n x^v coefficient of ln E.

    Pass a precomputed ``log_series`` (covering n, v) when sweeping a grid;
    otherwise a fresh series truncated at exactly (n, v) is built.
    """
    if n < 0 or v < 1:
        raise ValueError("need n >= 0 and v >= 1")
    if log_series is None or log_series.n_max < n or log_series.v_max < v:
        log_series = log_of_E(n, v)
    value = math.factorial(v) * log_series.coeff(n, v)
    count = _as_integer(value, f"N_c,v({n},{v})")
    if count < 0:
        raise ConsistencyError(f"negative multigraph count N_c,v({n},{v}) = {count}")
    return count


@lru_cache(maxsize=None)
def _ncv_rec(n: int, v: int) -> Fraction:
    # L_v(t) = v! E_v(t) - sum_{k=1}^{v-1} (v-1)!/(k-1)! L_k(t) E_{v-k}(t),
    # read off coefficient-wise; base case v = 1 is the empty inner sum.
    total = math.factorial(v) * e_coeff(n, v)
    fac = math.factorial(v - 1)
    for k in range(1, v):
        weight = Fraction(fac, math.factorial(k - 1))
        for m in range(n + 1):
            e = e_coeff(n - m, v - k)
            if e:
                inner = _ncv_rec(m, k)
                if inner:
                    total -= weight * inner * e
    return total


def ncv_recursive(n: int, v: int) -> int:
    """N_{c,v}(n, v) by the memoized convolution recursion over (m, k)."""
    if n < 0 or v < 1:
        raise ValueError("need n >= 0 and v >= 1")
    return _as_integer(_ncv_rec(n, v), f"N_c,v({n},{v})")


def count_classes(
    n: int,
    V: int,
    route: str = "recursive",
    log_series: BivariateSeries | None = None,
) -> int:
    """Number of degeneracy classes of n-bond periodic orbits on K_V.

    n = 1 yields 0 (no loops, so no 1-bond orbit); n = 0 is rejected, the
    empty class not being a periodic orbit.
    """
    if n < 1:
        raise ValueError("no 0-bond periodic orbits: need n >= 1")
    if V < 2:
        raise ValueError("need V >= 2")
    if n == 1:
        return 0
    if route == "recursive":
        ncv = ncv_recursive
    elif route == "log":
        if log_series is None or log_series.n_max < n or log_series.v_max < min(V, n):
            log_series = log_of_E(n, min(V, n))
        ncv = lambda nn, vv: ncv_from_log(nn, vv, log_series)
    else:
        raise ValueError(f"unknown route {route!r}")
    # A connected even multigraph on v >= 2 vertices has every valency >= 2,
    # hence n >= v; vertices beyond n contribute nothing.
    total = 0
    for v in range(2, min(V, n) + 1):
        c = ncv(n, v)
        if c:
            total += math.comb(V, v) * c
    return total


@dataclass(frozen=True)
class ClassCountTable:
    """Exact integer grids of N_{c,v}(n, v) and N_c(n, V).

    The nc grid is the raw binomial transform of ncv, so the defining
    identity nc[n][V] = sum_v C(V, v) ncv[n][v] holds at every cell,
    including the degenerate rows n = 0, 1 (which carry no orbits).
    """

    n_max: int
    v_max: int
    ncv: tuple[tuple[int, ...], ...]  # [n][v], column 0 unused (zero)
    nc: tuple[tuple[int, ...], ...]  # [n][V] for V <= v_max

    @classmethod
    def build(cls, n_max: int, v_max: int, route: str = "recursive") -> "ClassCountTable":
        if n_max < 0 or v_max < 1:
            raise ValueError("need n_max >= 0 and v_max >= 1")
        if route == "log":
            log_series = log_of_E(n_max, v_max)
            ncv_fn = lambda n, v: ncv_from_log(n, v, log_series)
        else:
            ncv_fn = ncv_recursive
        ncv = tuple(
            tuple(0 if v == 0 else ncv_fn(n, v) for v in range(v_max + 1))
            for n in range(n_max + 1)
        )
        nc = tuple(
            tuple(
                sum(math.comb(V, v) * ncv[n][v] for v in range(1, V + 1))
                for V in range(v_max + 1)
            )
            for n in range(n_max + 1)
        )
        return cls(n_max, v_max, ncv, nc)

    def check_binomial_identity(self) -> bool:
        """Verify nc[n][V] = sum_v C(V, v) ncv[n][v] at every cell."""
        for n in range(self.n_max + 1):
            for V in range(self.v_max + 1):
                expect = sum(
                    math.comb(V, v) * self.ncv[n][v] for v in range(1, V + 1)
                )
                if self.nc[n][V] != expect:
                    return False
        return True
