"""Large-n asymptotics: class-count growth, the approximate mean degeneracy,
and the location of the degeneracy peak in V.

Everything is evaluated from exact big integers and only converted to
high-precision reals (>= 50 significant digits via mpmath) at the final
division, so intermediate overflow or rounding cannot occur.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .classcount import count_classes

_DPS = 60  # decimal digits carried; leaves headroom over the 50 required


def _to_mpf(x: Fraction) -> mpmath.mpf:
    with mpmath.workdps(_DPS):
        return mpmath.mpf(x.numerator) / mpmath.mpf(x.denominator)


def asymptotic_pair_count(n: int, V: int) -> mpmath.mpf:
    """Asymptotic value of N_c(n, V) + N_c(n+1, V) for even n.

    With B = V(V-1)/2 bonds and m = n/2 the pair grows like
    2^(B-V+1) m^(B-1) / (B-1)!.
    """
    if n < 2 or n % 2:
        raise ValueError("the class-count pairing starts at even n >= 2")
    if V < 3:
        raise ValueError("need V >= 3")
    B = V * (V - 1) // 2
    m = n // 2
    return _to_mpf(Fraction(2 ** (B - V + 1) * m ** (B - 1), math.factorial(B - 1)))


@dataclass(frozen=True)
class AsymptoticPoint:
    """Exact vs asymptotic class-count pair at one (n, V), with their ratio."""

    n: int
    V: int
    exact_pair: int
    asymptotic_pair: mpmath.mpf
    ratio: mpmath.mpf


def asymptotic_ratio_point(n: int, V: int) -> AsymptoticPoint:
    """Ratio (N_c(n,V) + N_c(n+1,V)) / asymptotic pair, for even n."""
    asymp = asymptotic_pair_count(n, V)
    exact = count_classes(n, V) + count_classes(n + 1, V)
    with mpmath.workdps(_DPS):
        ratio = mpmath.mpf(exact) / asymp
    return AsymptoticPoint(n=n, V=V, exact_pair=exact,
                           asymptotic_pair=asymp, ratio=ratio)


def approx_mean_degeneracy(n: int, V: int) -> mpmath.mpf:
    """Approximate mean degeneracy V (V^2-V-1)! 2^(V-1) (V-1)^n / n^(V(V-1)/2).

    Valid for n large relative to V; callers are responsible for the regime
    (at tiny V, e.g. V = 2, the formula degenerates to a vanishing value).
    """
    if n < 1 or V < 2:
        raise ValueError("need n >= 1 and V >= 2")
    numerator = V * math.factorial(V * V - V - 1) * 2 ** (V - 1) * (V - 1) ** n
    return _to_mpf(Fraction(numerator, n ** (V * (V - 1) // 2)))


def v_max_estimate(n: int, log_base: float = 10.0) -> float:
    """Vertex count maximizing the mean degeneracy at period n:
    sqrt(n / log(n)).

    The derivation leaves the logarithm base free; base 10 reproduces the
    reference maxima (about 3.9 at n = 20 and 4.5 at n = 30).
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if log_base <= 1:
        raise ValueError("log base must exceed 1")
    return math.sqrt(n / math.log(n, log_base))
