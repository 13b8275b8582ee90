"""Closed-walk and periodic-orbit counts, and the mean class degeneracy.

Closed n-walks are counted as Tr C^n with exact integer matrix powers; on
the complete graph the eigenvalues V-1, -1, ..., -1 give a closed form.
Reducing walks by cyclic rotation yields the periodic-orbit count, and the
mean degeneracy is the exact ratio of orbits to degeneracy classes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .classcount import ConsistencyError, count_classes


class UndefinedDegeneracyError(ValueError):
    """Mean degeneracy requested where no degeneracy class exists."""


@dataclass(frozen=True)
class GraphSpec:
    """Simple undirected graph: vertex count plus 0/1 adjacency matrix
    (symmetric, zero diagonal -- no self-loops, no multi-bonds)."""

    V: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.V < 1:
            raise ValueError("need at least one vertex")
        adj = tuple(tuple(int(x) for x in row) for row in self.adjacency)
        if len(adj) != self.V or any(len(row) != self.V for row in adj):
            raise ValueError("adjacency must be V x V")
        for i in range(self.V):
            if adj[i][i] != 0:
                raise ValueError("self-loops are not allowed")
            for j in range(self.V):
                if adj[i][j] not in (0, 1):
                    raise ValueError("adjacency entries must be 0 or 1")
                if adj[i][j] != adj[j][i]:
                    raise ValueError("adjacency must be symmetric")
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def complete(cls, V: int) -> "GraphSpec":
        return cls(V, tuple(
            tuple(0 if i == j else 1 for j in range(V)) for i in range(V)
        ))

    @classmethod
    def from_edges(cls, V: int, edges) -> "GraphSpec":
        adj = [[0] * V for _ in range(V)]
        for i, j in edges:
            if i == j:
                raise ValueError("self-loops are not allowed")
            adj[i][j] = adj[j][i] = 1
        return cls(V, tuple(tuple(row) for row in adj))

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.V)
            for j in range(i + 1, self.V)
            if self.adjacency[i][j]
        ]


def _mat_mul(a, b, V):
    return [
        [sum(a[i][k] * b[k][j] for k in range(V)) for j in range(V)]
        for i in range(V)
    ]


def closed_walks(g: GraphSpec, n: int) -> int:
    """Number of closed n-step walks: trace of the n-th adjacency power."""
    if n < 1:
        raise ValueError("need n >= 1")
    result = None
    base = [list(row) for row in g.adjacency]
    e = n
    while e:
        if e & 1:
            result = base if result is None else _mat_mul(result, base, g.V)
        e >>= 1
        if e:
            base = _mat_mul(base, base, g.V)
    return sum(result[i][i] for i in range(g.V))


def closed_walks_complete(n: int, V: int) -> int:
    """Closed n-walks on K_V via the spectrum V-1, -1, ..., -1."""
    if n < 1:
        raise ValueError("need n >= 1")
    if V < 2:
        raise ValueError("need V >= 2")
    return (V - 1) ** n + (V - 1) * (-1) ** n


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _divisors(n: int) -> list[int]:
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def _totient(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def cyclic_orbit_count(n: int, V: int) -> int:
    """Periodic orbits of period n on K_V: cyclic-rotation classes of closed
    n-walks.

    For prime n this is N(n, V)/n. For composite n the totient-weighted
    divisor average is used, which counts repetition orbits correctly; this
    extends the prime-only formula and is flagged as an extension in
    reporting layers (see is_extension)."""
    if n < 2:
        raise ValueError("need n >= 2")
    if _is_prime(n):
        q, r = divmod(closed_walks_complete(n, V), n)
        if r:
            raise ConsistencyError(f"N({n},{V}) not divisible by prime {n}")
        return q
    # N(1, V) = 0 (zero diagonal), so the d = n term vanishes on its own.
    total = sum(_totient(d) * closed_walks_complete(n // d, V) for d in _divisors(n))
    q, r = divmod(total, n)
    if r:
        raise ConsistencyError(f"orbit average for n={n}, V={V} not integral")
    return q


def naive_orbit_count(n: int, V: int) -> Fraction:
    """N(n, V)/n without repetition handling; exact only for prime n."""
    if n < 2:
        raise ValueError("need n >= 2")
    return Fraction(closed_walks_complete(n, V), n)


def is_extension(n: int) -> bool:
    """True when the orbit count at n goes beyond the prime-n closed form."""
    return not _is_prime(n)


def mean_degeneracy(n: int, V: int, naive: bool = False) -> Fraction:
    """Mean class degeneracy D(n, V) = orbits / classes, exact."""
    classes = count_classes(n, V)
    if classes == 0:
        raise UndefinedDegeneracyError(
            f"no degeneracy classes for n={n}, V={V}; mean degeneracy undefined"
        )
    orbits = naive_orbit_count(n, V) if naive else Fraction(cyclic_orbit_count(n, V))
    return orbits / classes


@dataclass(frozen=True)
class OrbitCounts:
    """All counts for one (n, V) cell, with the exact mean degeneracy."""

    n: int
    V: int
    walks: int
    orbits: int
    classes: int
    mean_degeneracy: Fraction
    extension: bool  # orbit count used the composite-n extension


def orbit_counts(n: int, V: int) -> OrbitCounts:
    classes = count_classes(n, V)
    orbits = cyclic_orbit_count(n, V)
    if classes == 0:
        raise UndefinedDegeneracyError(
            f"no degeneracy classes for n={n}, V={V}; mean degeneracy undefined"
        )
    return OrbitCounts(
        n=n,
        V=V,
        walks=closed_walks_complete(n, V),
        orbits=orbits,
        classes=classes,
        mean_degeneracy=Fraction(orbits, classes),
        extension=is_extension(n),
    )
