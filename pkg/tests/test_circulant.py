import itertools

import pytest

from elpoly import (
    CirculantCosts,
    CirculantGraph,
    EdgeLengthVector,
    InstanceParams,
    InvalidEdgeError,
    UnsupportedModulusError,
    component_count,
    cycle_edge_vector,
    edge_length,
    is_hamiltonian_lengthset,
    path_edge_vector,
    stripe_partition,
)
from helpers import bfs_component_count


class TestEdgeLength:
    def test_adjacent(self):
        assert edge_length(1, 2, 8) == 1

    def test_wraparound(self):
        assert edge_length(8, 1, 8) == 1

    def test_diameter(self):
        assert edge_length(1, 5, 8) == 4

    def test_loop_rejected(self):
        with pytest.raises(InvalidEdgeError):
            edge_length(3, 3, 8)

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidEdgeError):
            edge_length(0, 1, 8)

    @pytest.mark.parametrize("n", range(3, 17))
    def test_symmetry_and_range(self, n):
        d = n // 2
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                length = edge_length(i, j, n)
                assert length == edge_length(j, i, n)
                assert 1 <= length <= d


class TestInstanceParams:
    def test_power_of_two(self):
        p = InstanceParams.for_n(16)
        assert (p.n, p.d, p.k) == (16, 8, 4)

    def test_odd(self):
        p = InstanceParams.for_n(9)
        assert (p.n, p.d, p.k) == (9, 4, None)

    def test_too_small(self):
        with pytest.raises(ValueError):
            InstanceParams.for_n(2)

    def test_inconsistent_rejected(self):
        with pytest.raises(ValueError):
            InstanceParams(n=8, d=3, k=3)
        with pytest.raises(ValueError):
            InstanceParams(n=8, d=4, k=None)


class TestCosts:
    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            CirculantCosts((1.5, 2))

    def test_parse_exact(self):
        c = CirculantCosts.parse(["3", "5/2", 1])
        assert c.costs[1].numerator == 5 and c.costs[1].denominator == 2

    def test_bool_rejected(self):
        with pytest.raises(TypeError):
            CirculantCosts((True, 2))


class TestEdgeLengthVector:
    def test_path_sum(self):
        v = EdgeLengthVector((1, 2, 0, 4), "path")
        assert v.n == 8

    def test_cycle_sum(self):
        v = EdgeLengthVector((2, 6, 0, 0), "cycle")
        assert v.n == 8

    def test_diameter_cap(self):
        with pytest.raises(ValueError):
            EdgeLengthVector((0, 3), "path")  # n=4 has only 2 diameter edges

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            EdgeLengthVector((-1, 8), "path")

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            EdgeLengthVector((3, 3, 1), "path")  # n=8 needs d=4 entries


class TestStripePartition:
    def test_n16(self):
        p = stripe_partition(InstanceParams.for_n(16))
        assert [sorted(c) for c in p.classes] == [[8], [4], [2, 6], [1, 3, 5, 7]]

    def test_n8(self):
        p = stripe_partition(InstanceParams.for_n(8))
        assert [sorted(c) for c in p.classes] == [[4], [2], [1, 3]]

    def test_n4(self):
        p = stripe_partition(InstanceParams.for_n(4))
        assert [sorted(c) for c in p.classes] == [[2], [1]]

    def test_rejects_other_n(self):
        with pytest.raises(UnsupportedModulusError):
            stripe_partition(InstanceParams.for_n(12))

    def test_partitions_all_lengths(self):
        k = 2
        while 2**k <= 1024:
            n = 2**k
            p = stripe_partition(InstanceParams.for_n(n))
            union = sorted(j for cls in p.classes for j in cls)
            assert union == list(range(1, n // 2 + 1))
            assert sum(len(c) for c in p.classes) == n // 2
            k += 1

    def test_class_sizes(self):
        for k in range(4, 9):
            p = stripe_partition(InstanceParams.for_n(2**k))
            sizes = [len(c) for c in p.classes]
            assert sizes[0] == sizes[1] == 1
            assert sizes[-1] == 2**k // 4
            assert sizes[2 : k - 1] == [2 ** (i - 2) for i in range(3, k)]


class TestComponents:
    def test_two_lengths(self):
        assert component_count(CirculantGraph(12, frozenset({6, 3}))) == 3

    def test_single_length(self):
        assert component_count(CirculantGraph(12, frozenset({6}))) == 6

    def test_unit_length(self):
        assert component_count(CirculantGraph(9, frozenset({1}))) == 1

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            component_count(CirculantGraph(9, frozenset()))

    def test_hamiltonian(self):
        assert is_hamiltonian_lengthset(CirculantGraph(8, frozenset({3})))
        assert not is_hamiltonian_lengthset(CirculantGraph(8, frozenset({2, 4})))
        assert not is_hamiltonian_lengthset(CirculantGraph(12, frozenset({6, 3})))

    @pytest.mark.parametrize("n", range(3, 17))
    def test_gcd_matches_bfs(self, n):
        lengths = list(range(1, n // 2 + 1))
        for size in range(1, len(lengths) + 1):
            for subset in itertools.combinations(lengths, size):
                g = CirculantGraph(n, frozenset(subset))
                assert component_count(g) == bfs_component_count(n, subset)


class TestEdgeVectors:
    def test_path_vector(self):
        v = path_edge_vector((1, 2, 3, 4), 4)
        assert v.t == (3, 0) and v.kind == "path"

    def test_cycle_vector(self):
        v = cycle_edge_vector((1, 3, 4, 2), 4)
        assert v.t == (2, 2) and v.kind == "cycle"

    def test_rejects_partial_visit(self):
        with pytest.raises(ValueError):
            path_edge_vector((1, 2, 2, 4), 4)
