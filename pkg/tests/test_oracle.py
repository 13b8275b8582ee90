import pytest
from hypothesis import given, strategies as st

from lenspec.classcount import count_classes
from lenspec.oracle import (
    ClassCode,
    SizeError,
    canonical_cyclic,
    class_code_of,
    count_orbits,
    enumerate_even_connected,
    enumerate_orbits,
    group_by_class,
)
from lenspec.walks import GraphSpec, closed_walks_complete

K2 = GraphSpec.complete(2)
K3 = GraphSpec.complete(3)
K4 = GraphSpec.complete(4)
K5 = GraphSpec.complete(5)


class TestCanonicalCyclic:
    def test_rotates_to_smallest_leading_vertex(self):
        assert canonical_cyclic([2, 4, 1]) == (1, 2, 4)

    def test_period_two_word_already_minimal(self):
        assert canonical_cyclic([1, 2, 1, 2]) == (1, 2, 1, 2)

    def test_tie_broken_past_first_position(self):
        assert canonical_cyclic([5, 4, 1, 2, 4, 1]) == (1, 2, 4, 1, 5, 4)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            canonical_cyclic([])

    @given(st.lists(st.integers(0, 9), min_size=1, max_size=12), st.integers(0, 11))
    def test_rotation_invariant_and_idempotent(self, seq, k):
        k = k % len(seq)
        rotated = seq[k:] + seq[:k]
        canon = canonical_cyclic(seq)
        assert canonical_cyclic(rotated) == canon
        assert canonical_cyclic(canon) == canon

    @given(st.lists(st.integers(0, 9), min_size=1, max_size=10))
    def test_result_is_a_rotation_and_minimal(self, seq):
        canon = canonical_cyclic(seq)
        rotations = {tuple(seq[i:] + seq[:i]) for i in range(len(seq))}
        assert canon in rotations
        assert canon == min(rotations)


class TestEnumerateOrbits:
    def test_single_bond_bounce(self):
        assert enumerate_orbits(K2, 4) == {(0, 1, 0, 1)}

    def test_triangle_orientations(self):
        assert enumerate_orbits(K3, 3) == {(0, 1, 2), (0, 2, 1)}

    def test_prime_period_counts(self):
        for V in range(2, 6):
            g = GraphSpec.complete(V)
            for p in (2, 3, 5, 7, 11):
                assert count_orbits(g, p) * p == closed_walks_complete(p, V), (p, V)

    def test_count_matches_enumeration(self):
        assert count_orbits(K4, 6) == len(enumerate_orbits(K4, 6))

    def test_all_orbits_canonical_and_valid(self):
        for orbit in enumerate_orbits(K4, 5):
            assert canonical_cyclic(orbit) == orbit
            for i, a in enumerate(orbit):
                b = orbit[(i + 1) % len(orbit)]
                assert K4.adjacency[a][b] == 1

    def test_caps_enforced(self):
        with pytest.raises(SizeError):
            enumerate_orbits(K4, 13)
        with pytest.raises(SizeError):
            enumerate_orbits(GraphSpec.complete(7), 4)
        assert count_orbits(K4, 13, n_cap=13) > 0  # caps are configurable

    def test_non_complete_host(self):
        path = GraphSpec.from_edges(3, [(0, 1), (1, 2)])
        assert enumerate_orbits(path, 4) == {(0, 1, 0, 1), (0, 1, 2, 1), (1, 2, 1, 2)}


class TestClassCode:
    def test_bounce_code(self):
        assert class_code_of([1, 2, 1, 2]) == ClassCode(((1, 2, 4),))

    def test_six_bond_code_with_doubled_bond(self):
        code = class_code_of([1, 2, 4, 1, 5, 4])
        assert code.multiplicities() == {
            (1, 2): 1, (2, 4): 1, (4, 5): 1, (1, 5): 1, (1, 4): 2,
        }
        assert code.n == 6

    def test_reversal_gives_same_code(self):
        orbit = (0, 1, 2, 0, 3, 2)
        assert class_code_of(orbit) == class_code_of(orbit[::-1])

    def test_validates_entries(self):
        with pytest.raises(ValueError):
            ClassCode(((2, 1, 1),))
        with pytest.raises(ValueError):
            ClassCode(((0, 1, 0),))


class TestGroupByClass:
    def test_k4_four_bonds_has_21_classes(self):
        groups = group_by_class(enumerate_orbits(K4, 4))
        assert len(groups) == 21
        assert sum(groups.values()) == count_orbits(K4, 4)

    def test_k3_triangle_class(self):
        groups = group_by_class(enumerate_orbits(K3, 3))
        assert groups == {ClassCode(((0, 1, 1), (0, 2, 1), (1, 2, 1))): 2}

    def test_six_bond_class_on_k5_has_degeneracy_six(self):
        # the class with one doubled bond and a 4-cycle around it
        groups = group_by_class(enumerate_orbits(K5, 6))
        code = ClassCode.from_multiplicities(
            {(0, 1): 1, (1, 3): 1, (3, 4): 1, (0, 4): 1, (0, 3): 2}
        )
        assert groups[code] == 6

    def test_reversal_closure(self):
        orbits = enumerate_orbits(K4, 6)
        groups = group_by_class(orbits)
        for orbit in orbits:
            reversed_orbit = canonical_cyclic(orbit[::-1])
            assert reversed_orbit in orbits
            assert class_code_of(reversed_orbit) == class_code_of(orbit)
        # degeneracy is even unless some orbit is its own reversal
        for code, degeneracy in groups.items():
            members = [o for o in orbits if class_code_of(o) == code]
            self_reverse = [o for o in members if canonical_cyclic(o[::-1]) == o]
            if not self_reverse:
                assert degeneracy % 2 == 0


class TestEnumerateEvenConnected:
    def test_three_labeled_four_cycles(self):
        assert len(enumerate_even_connected(4, 4, K4)) == 3

    def test_single_bundle(self):
        assert enumerate_even_connected(4, 2, K2) == {ClassCode(((0, 1, 4),))}

    def test_odd_bundle_impossible(self):
        assert enumerate_even_connected(5, 2, K2) == set()

    def test_exact_vertex_usage(self):
        # on K_4, codes using exactly 2 of the 4 vertices: one bundle per bond
        assert len(enumerate_even_connected(4, 2, K4)) == 6

    def test_caps_enforced(self):
        with pytest.raises(SizeError):
            enumerate_even_connected(13, 4, K4)


class TestEulerCorrespondence:
    @pytest.mark.parametrize("V", [2, 3, 4])
    def test_orbit_codes_equal_multigraph_codes(self, V):
        host = GraphSpec.complete(V)
        for n in range(2, 9):
            from_orbits = set(group_by_class(enumerate_orbits(host, n)))
            from_multigraphs = set()
            for v in range(1, V + 1):
                from_multigraphs |= enumerate_even_connected(n, v, host)
            assert from_orbits == from_multigraphs, (n, V)

    def test_class_counts_match_formula(self):
        for V in range(2, 5):
            host = GraphSpec.complete(V)
            for n in range(2, 9):
                groups = group_by_class(enumerate_orbits(host, n))
                assert len(groups) == count_classes(n, V), (n, V)
