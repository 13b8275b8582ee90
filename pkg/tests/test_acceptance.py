"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
report. Criterion 7's argmax clause is a documented expected failure: the
exact, oracle-validated mean degeneracy peaks at V = 6 (n = 20) and V = 7
(n = 30), not at the estimate-derived 4 / {4, 5}; see the test body.
"""

import time
from fractions import Fraction

import pytest

from lenspec.asymptotics import asymptotic_ratio_point, v_max_estimate
from lenspec.classcount import count_classes, log_of_E, ncv_from_log, ncv_recursive
from lenspec.oracle import (
    class_code_of,
    count_orbits,
    enumerate_even_connected,
    enumerate_orbits,
    group_by_class,
)
from lenspec.spectrum import build_spectrum, default_lengths, spectrum_json_lines
from lenspec.walks import (
    GraphSpec,
    closed_walks,
    closed_walks_complete,
    cyclic_orbit_count,
    mean_degeneracy,
)


def report(criterion: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" -- {detail}" if detail else ""
    print(f"ACCEPTANCE {criterion}: {status}{suffix}")
    assert ok, f"criterion {criterion} failed: {detail}"


def test_criterion_1_reference_class_count():
    start = time.monotonic()
    value = count_classes(4, 4)
    elapsed = time.monotonic() - start
    report("1", value == 21 and elapsed < 1.0,
           f"N_c(4,4) = {value} in {elapsed:.3f}s")


def test_criterion_2_component_values_and_typo_resolution():
    components = {v: ncv_recursive(4, v) for v in (1, 2, 3, 4)}
    oracle_resolved = len(enumerate_even_connected(4, 4, GraphSpec.complete(4)))
    total = sum(__import__("math").comb(4, v) * c for v, c in components.items())
    ok = (
        components[1] == 0
        and components[2] == 1
        and components[3] == 3
        and components[4] == oracle_resolved == 3
        and total == 21
    )
    report("2", ok,
           f"N_c,v(4,v) = {components}, oracle resolves v=4 to {oracle_resolved} "
           "(the circulating value 4 is inconsistent with the total 21)")


def test_criterion_3_three_route_equivalence():
    start = time.monotonic()
    log_series = log_of_E(40, 8)
    series_vs_recursion = all(
        ncv_from_log(n, v, log_series) == ncv_recursive(n, v)
        for v in range(1, 9)
        for n in range(41)
    )
    oracle_ok = True
    for V in range(2, 6):
        g = GraphSpec.complete(V)
        for n in range(2, 11):
            oracle_count = len(group_by_class(enumerate_orbits(g, n)))
            if not (
                oracle_count
                == count_classes(n, V)
                == count_classes(n, V, route="log", log_series=log_series)
            ):
                oracle_ok = False
    elapsed = time.monotonic() - start
    report("3", series_vs_recursion and oracle_ok and elapsed < 120.0,
           f"log/recursion agree to (40,8), oracle agrees to (10,5), {elapsed:.1f}s")


def test_criterion_4_walk_count_equivalence():
    trace_ok = all(
        closed_walks(GraphSpec.complete(V), n) == closed_walks_complete(n, V)
        for V in range(2, 9)
        for n in range(1, 21)
    )
    prime_ok = all(
        count_orbits(GraphSpec.complete(V), p, n_cap=13) * p
        == closed_walks_complete(p, V)
        for V in range(2, 6)
        for p in (2, 3, 5, 7, 11, 13)
    )
    report("4", trace_ok and prime_ok,
           "trace == closed form to (20,8); oracle orbits x n == walks for prime n <= 13")


def test_criterion_5_small_case_degeneracies():
    ok = True
    for V in range(3, 7):
        g = GraphSpec.complete(V)
        for n, expected in ((2, 1), (3, 2)):
            formula = mean_degeneracy(n, V)
            orbits = enumerate_orbits(g, n)
            oracle = Fraction(len(orbits), len(group_by_class(orbits)))
            if not (formula == oracle == expected):
                ok = False
    report("5", ok, "D(2,V) = 1 and D(3,V) = 2 for 3 <= V <= 6, formula and oracle")


def test_criterion_6_asymptotic_ratio_reproduction():
    start = time.monotonic()
    v3 = [abs(float(asymptotic_ratio_point(n, 3).ratio) - 1) for n in (100, 200, 400)]
    v4_200 = abs(float(asymptotic_ratio_point(200, 4).ratio) - 1)
    v4_400 = abs(float(asymptotic_ratio_point(400, 4).ratio) - 1)
    elapsed = time.monotonic() - start
    ok = (
        v3[0] > v3[1] > v3[2]
        and v3[2] < 0.05
        and v4_400 < v4_200
        and elapsed < 300.0
    )
    report("6", ok,
           f"V=3 deviations {[round(x, 4) for x in v3]}, "
           f"V=4: {v4_200:.4f} -> {v4_400:.4f}, {elapsed:.1f}s")


@pytest.mark.xfail(
    strict=True,
    reason="exact mean degeneracy, validated against two independent oracles, "
    "peaks at V=6 (n=20) and V=7 (n=30); the stated expectation 4 / {4,5} "
    "follows the sqrt(n/log10 n) estimate, which underestimates the peak",
)
def test_criterion_7a_degeneracy_peak_location():
    argmax = {}
    for n in (20, 30):
        values = {V: mean_degeneracy(n, V) for V in range(2, 13)}
        argmax[n] = max(values, key=values.get)
    ok = argmax[20] == 4 and argmax[30] in (4, 5)
    report("7a", ok, f"exact argmax over V: {argmax}")


def test_criterion_7b_peak_estimate_windows():
    e20 = v_max_estimate(20, 10)
    e30 = v_max_estimate(30, 10)
    report("7b", 3.8 < e20 < 4.0 and 4.4 < e30 < 4.6,
           f"estimate(20) = {e20:.3f}, estimate(30) = {e30:.3f}")


def test_criterion_8_limit_toward_two():
    deviations = {n: abs(mean_degeneracy(n, 40) - 2) for n in (4, 5, 6)}
    report("8", all(d < Fraction(1, 10) for d in deviations.values()),
           f"|D(n,40) - 2| = {({n: float(d) for n, d in deviations.items()})}")


def test_criterion_9_euler_characterization():
    ok = True
    for V in range(2, 6):
        host = GraphSpec.complete(V)
        for n in range(2, 11):
            orbit_codes = {class_code_of(o) for o in enumerate_orbits(host, n)}
            multigraph_codes = set()
            for v in range(1, V + 1):
                multigraph_codes |= enumerate_even_connected(n, v, host)
            if orbit_codes != multigraph_codes:
                ok = False
    report("9", ok, "orbit codes == connected even multigraph codes for n<=10, V<=5")


def test_criterion_10_spectrum_integrity():
    g = GraphSpec.complete(4)
    assignment = default_lengths(4)
    entries = build_spectrum(g, 8, assignment)
    per_period: dict = {}
    degeneracy_sums: dict = {}
    for e in entries:
        per_period[e.period] = per_period.get(e.period, 0) + 1
        degeneracy_sums[e.period] = degeneracy_sums.get(e.period, 0) + e.degeneracy
    counts_ok = all(per_period.get(n, 0) == count_classes(n, 4) for n in range(2, 9))
    sums_ok = all(
        degeneracy_sums.get(n, 0) == cyclic_orbit_count(n, 4) for n in range(2, 9)
    )
    rerun = spectrum_json_lines(build_spectrum(g, 8, default_lengths(4)))
    stable = spectrum_json_lines(entries).encode() == rerun.encode()
    report("10", counts_ok and sums_ok and stable,
           "entries per period, degeneracy sums, and byte stability on K_4, n <= 8")
