"""The degenerate length spectrum.

Assigns bond lengths (rationally independent by construction in the
sqrt-primes scheme), maps every degeneracy-class code to its metric length
l = sum_b q_b L_b, and emits the sorted spectrum with degeneracies.

Distinctness of spectrum lines is certified at the code level: distinct
codes give distinct lengths under rational independence. The floating
representation (>= 50 significant digits) is presentation only and is never
used to decide equality.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

import mpmath

from .oracle import (
    DEFAULT_N_CAP,
    DEFAULT_V_CAP,
    ClassCode,
    enumerate_orbits,
    group_by_class,
)
from .walks import GraphSpec

_DPS = 60
LENGTH_DIGITS = 50

SCHEMES = ("sqrt-primes", "uniform-random")


def _first_primes(count: int) -> list[int]:
    primes: list[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p for p in primes if p * p <= candidate):
            primes.append(candidate)
        candidate += 1
    return primes


@dataclass(frozen=True)
class BondLengthAssignment:
    """Positive bond lengths on unordered vertex pairs.

    sqrt-primes lengths are rationally independent by theorem; the
    uniform-random scheme is independent with probability 1 and is
    reproducible from its seed.
    """

    lengths: dict
    scheme: str
    seed: int | None = None


def default_lengths(
    V: int, scheme: str = "sqrt-primes", seed: int | None = None
) -> BondLengthAssignment:
    """Assign lengths to all bonds of K_V in the fixed lexicographic pair
    order (0,1), (0,2), ..., (V-2,V-1)."""
    if V < 2:
        raise ValueError("need V >= 2")
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; pick one of {SCHEMES}")
    pairs = [(i, j) for i in range(V) for j in range(i + 1, V)]
    with mpmath.workdps(_DPS):
        if scheme == "sqrt-primes":
            primes = _first_primes(len(pairs))
            lengths = {pair: mpmath.sqrt(p) for pair, p in zip(pairs, primes)}
        else:
            rng = random.Random(seed)
            lengths = {pair: mpmath.mpf(rng.uniform(1.0, 2.0)) for pair in pairs}
    return BondLengthAssignment(lengths=lengths, scheme=scheme, seed=seed)


def length_of(code: ClassCode, assignment: BondLengthAssignment) -> mpmath.mpf:
    """Metric length sum_b q_b L_b of a class code, at >= 50 digits."""
    with mpmath.workdps(_DPS):
        total = mpmath.mpf(0)
        for i, j, q in code.bonds:
            try:
                bond_length = assignment.lengths[(i, j)]
            except KeyError:
                raise ValueError(f"no length assigned to bond ({i}, {j})") from None
            total += q * bond_length
    return total


@dataclass(frozen=True)
class SpectrumEntry:
    """One line of the length spectrum: a class, its length and degeneracy."""

    period: int
    code: ClassCode
    length: mpmath.mpf
    degeneracy: int


def build_spectrum(
    g: GraphSpec,
    n_max: int,
    assignment: BondLengthAssignment,
    n_cap: int = DEFAULT_N_CAP,
    v_cap: int = DEFAULT_V_CAP,
) -> list[SpectrumEntry]:
    """Degenerate length spectrum up to period n_max, sorted by length
    ascending with code order as the (unreachable in exact arithmetic, but
    deterministic) tie-break."""
    entries: list[SpectrumEntry] = []
    for n in range(2, n_max + 1):
        orbits = enumerate_orbits(g, n, n_cap=n_cap, v_cap=v_cap)
        for code, degeneracy in group_by_class(orbits).items():
            entries.append(
                SpectrumEntry(
                    period=n,
                    code=code,
                    length=length_of(code, assignment),
                    degeneracy=degeneracy,
                )
            )
    entries.sort(key=lambda e: (e.length, e.code.bonds))
    return entries


def format_length(x: mpmath.mpf, digits: int = LENGTH_DIGITS) -> str:
    with mpmath.workdps(_DPS):
        return mpmath.nstr(x, digits)


def spectrum_json_lines(entries: list[SpectrumEntry]) -> str:
    """One JSON object per line: period, code, length (decimal string at 50
    significant digits), degeneracy -- keys always in this order."""
    lines = []
    for e in entries:
        obj = {
            "period": e.period,
            "code": [[i, j, q] for i, j, q in e.code.bonds],
            "length": format_length(e.length),
            "degeneracy": e.degeneracy,
        }
        lines.append(json.dumps(obj, separators=(",", ":")))
    return "\n".join(lines) + ("\n" if lines else "")


def spectrum_csv(entries: list[SpectrumEntry]) -> str:
    """Plot-ready CSV: period, length, degeneracy."""
    lines = ["period,length,degeneracy"]
    for e in entries:
        lines.append(f"{e.period},{format_length(e.length)},{e.degeneracy}")
    return "\n".join(lines) + "\n"
