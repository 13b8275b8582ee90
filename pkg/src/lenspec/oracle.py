"""Brute-force ground truth for the counting formulas.

Enumerates closed n-walks on small graphs, canonicalizes them under cyclic
rotation, groups them into degeneracy classes by bond-multiplicity code,
and independently enumerates connected even multigraphs. Every counting
formula in the package is validated against these enumerations on small
instances.

Orbits are directed: a walk and its reversal are distinct unless they
canonicalize to the same sequence. Vertices are 0-based integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .walks import GraphSpec

DEFAULT_N_CAP = 12
DEFAULT_V_CAP = 6

# Walks are bit-packed 4 bits per vertex into uint64 during enumeration.
_HARD_N_LIMIT = 16
_HARD_V_LIMIT = 16


class SizeError(ValueError):
    """Requested instance exceeds the enumeration caps."""


def canonical_cyclic(seq) -> tuple[int, ...]:
    """Lexicographically smallest rotation: the canonical orbit form."""
    seq = tuple(seq)
    if not seq:
        raise ValueError("empty sequence has no canonical rotation")
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def _check_caps(g: GraphSpec, n: int, n_cap: int, v_cap: int) -> None:
    if n > n_cap or g.V > v_cap:
        raise SizeError(
            f"instance (n={n}, V={g.V}) exceeds caps (n_cap={n_cap}, v_cap={v_cap})"
        )
    if n > _HARD_N_LIMIT or g.V > _HARD_V_LIMIT:
        raise SizeError(
            f"bit-packed enumeration supports n <= {_HARD_N_LIMIT}, V <= {_HARD_V_LIMIT}"
        )


def _canonical_codes(g: GraphSpec, n: int) -> np.ndarray:
    """All distinct canonical closed n-walks, as packed uint64 codes.

    Vertex i of the walk sits at bits 4*(n-1-i), so unsigned comparison of
    codes matches lexicographic comparison of vertex sequences. For each
    start s only walks with all vertices >= s are grown (the canonical form
    starts at the walk's minimal vertex), which keeps the per-start batches
    disjoint.
    """
    adj = np.asarray(g.adjacency, dtype=bool)
    nbits = 4 * n
    wrap_mask = np.uint64((1 << nbits) - 1) if nbits < 64 else np.uint64(2**64 - 1)
    four = np.uint64(4)
    top = np.uint64(nbits - 4)
    batches = []
    for s in range(g.V):
        cur = np.array([s], dtype=np.int64)
        codes = np.array([s << (4 * (n - 1))], dtype=np.uint64)
        for step in range(1, n):
            place = 4 * (n - 1 - step)
            next_codes, next_cur = [], []
            for w in range(s, g.V):
                hit = adj[cur, w]
                if hit.any():
                    next_codes.append(codes[hit] | np.uint64(w << place))
                    next_cur.append(np.full(int(hit.sum()), w, dtype=np.int64))
            if not next_codes:
                codes = codes[:0]
                cur = cur[:0]
                break
            codes = np.concatenate(next_codes)
            cur = np.concatenate(next_cur)
        if codes.size:
            closed = adj[cur, s]
            codes = codes[closed]
        if not codes.size:
            continue
        best = codes.copy()
        rot = codes
        for _ in range(n - 1):
            rot = ((rot << four) & wrap_mask) | (rot >> top)
            np.minimum(best, rot, out=best)
        batches.append(np.unique(best))
    if not batches:
        return np.empty(0, dtype=np.uint64)
    return np.concatenate(batches)


def _decode(code: int, n: int) -> tuple[int, ...]:
    return tuple((code >> (4 * (n - 1 - i))) & 0xF for i in range(n))


def enumerate_orbits(
    g: GraphSpec,
    n: int,
    n_cap: int = DEFAULT_N_CAP,
    v_cap: int = DEFAULT_V_CAP,
) -> set[tuple[int, ...]]:
    """All distinct periodic orbits of period n, in canonical form."""
    if n < 2:
        raise ValueError("periodic orbits need n >= 2")
    _check_caps(g, n, n_cap, v_cap)
    codes = _canonical_codes(g, n)
    return {_decode(int(c), n) for c in codes}


def count_orbits(
    g: GraphSpec,
    n: int,
    n_cap: int = DEFAULT_N_CAP,
    v_cap: int = DEFAULT_V_CAP,
) -> int:
    """Number of distinct periodic orbits of period n (no decoding)."""
    if n < 2:
        raise ValueError("periodic orbits need n >= 2")
    _check_caps(g, n, n_cap, v_cap)
    return int(_canonical_codes(g, n).size)


@dataclass(frozen=True, order=True)
class ClassCode:
    """Bond-multiplicity code of a degeneracy class: sorted (i, j, q) triples
    with i < j and q >= 1. Total order makes listings deterministic."""

    bonds: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for i, j, q in self.bonds:
            if not (i < j and q >= 1):
                raise ValueError("bond entries must be (i, j, q) with i < j, q >= 1")
        if tuple(sorted(self.bonds)) != self.bonds:
            raise ValueError("bond entries must be sorted")

    @classmethod
    def from_multiplicities(cls, mult: dict[tuple[int, int], int]) -> "ClassCode":
        return cls(tuple(sorted((i, j, q) for (i, j), q in mult.items())))

    @property
    def n(self) -> int:
        """Total bond count (the period of the orbits in this class)."""
        return sum(q for _, _, q in self.bonds)

    def multiplicities(self) -> dict[tuple[int, int], int]:
        return {(i, j): q for i, j, q in self.bonds}


def class_code_of(orbit) -> ClassCode:
    """Bond-multiplicity code of an orbit (direction is forgotten)."""
    orbit = tuple(orbit)
    mult: Counter = Counter()
    for k, a in enumerate(orbit):
        b = orbit[(k + 1) % len(orbit)]
        mult[(a, b) if a < b else (b, a)] += 1
    return ClassCode.from_multiplicities(mult)


def group_by_class(orbits) -> dict[ClassCode, int]:
    """Partition orbits into degeneracy classes; values are degeneracies."""
    return dict(Counter(class_code_of(o) for o in orbits))


def _is_connected(bonds, q, active_vertices) -> bool:
    if not active_vertices:
        return False
    start = next(iter(active_vertices))
    seen = {start}
    frontier = [start]
    neighbor = {u: [] for u in active_vertices}
    for (a, b), qi in zip(bonds, q):
        if qi:
            neighbor[a].append(b)
            neighbor[b].append(a)
    while frontier:
        u = frontier.pop()
        for w in neighbor[u]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen == set(active_vertices)


def enumerate_even_connected(
    n: int,
    v: int,
    host: GraphSpec,
    n_cap: int = DEFAULT_N_CAP,
    v_cap: int = DEFAULT_V_CAP,
) -> set[ClassCode]:
    """All n-bond connected even multigraphs drawable on the host's bonds
    that use exactly v of the host's vertices, as class codes.

    Search is a bounded composition of n over the host bonds, pruning a
    branch as soon as some vertex's valency is finalized at an odd value.
    """
    if n < 1 or v < 1:
        raise ValueError("need n >= 1 and v >= 1")
    if n > n_cap or v > v_cap or host.V > v_cap:
        raise SizeError(
            f"instance (n={n}, v={v}, host V={host.V}) exceeds caps "
            f"(n_cap={n_cap}, v_cap={v_cap})"
        )
    bonds = host.edges()
    B = len(bonds)
    # index of the last bond touching each vertex: valency is final there
    last_touch = {}
    for idx, (a, b) in enumerate(bonds):
        last_touch[a] = idx
        last_touch[b] = idx
    results: set[ClassCode] = set()
    q = [0] * B
    valency = [0] * host.V

    def recurse(idx: int, remaining: int) -> None:
        if idx == B:
            if remaining:
                return
            used = [u for u in range(host.V) if valency[u] > 0]
            if len(used) != v:
                return
            if not _is_connected(bonds, q, used):
                return
            results.add(ClassCode(tuple(
                (a, b, qi) for (a, b), qi in zip(bonds, q) if qi
            )))
            return
        a, b = bonds[idx]
        for qi in range(remaining + 1):
            q[idx] = qi
            valency[a] += qi
            valency[b] += qi
            ok = True
            for u in (a, b):
                if last_touch[u] == idx and valency[u] % 2:
                    ok = False
                    break
            if ok:
                recurse(idx + 1, remaining - qi)
            valency[a] -= qi
            valency[b] -= qi
        q[idx] = 0

    recurse(0, n)
    return results
