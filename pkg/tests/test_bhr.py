import pytest

from elpoly import (
    InstanceParams,
    ResourceLimitError,
    check_bhr,
    count_realizable_multisets,
    encoding_to_vector,
    enumerate_encodings,
    path_multisets,
    realizable_path,
)
from helpers import path_vectors_descending

P4 = InstanceParams.for_n(4)
P8 = InstanceParams.for_n(8)


class TestCheckBhr:
    def test_three_long_edges_infeasible(self):
        verdict = check_bhr((0, 3), P4)
        assert not verdict.feasible and verdict.violated_divisor == 2

    def test_mixed_feasible(self):
        verdict = check_bhr((2, 1), P4)
        assert verdict.feasible and verdict.violated_divisor is None

    def test_even_lengths_saturated(self):
        verdict = check_bhr((0, 10, 0, 0, 0, 1), InstanceParams.for_n(12))
        assert not verdict.feasible and verdict.violated_divisor == 2

    def test_smallest_divisor_reported(self):
        # (0,0,0,0,0,11) violates q=2, q=3, and q=6; the smallest is reported
        verdict = check_bhr((0, 0, 0, 0, 0, 11), InstanceParams.for_n(12))
        assert not verdict.feasible and verdict.violated_divisor == 2

    def test_sum_mismatch_rejected(self):
        with pytest.raises(ValueError):
            check_bhr((2, 10, 0, 0, 0, 0), InstanceParams.for_n(12))

    def test_arity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            check_bhr((1, 1, 1), P4)

    def test_json_shape(self):
        assert check_bhr((0, 3), P4).to_json() == {
            "feasible": False,
            "violated_divisor": 2,
            "realizable": None,
        }


class TestRealizablePath:
    def test_examples(self):
        assert realizable_path((1, 2), P4)
        assert not realizable_path((0, 3), P4)
        assert realizable_path((1, 2, 0, 4), P8)

    def test_bound(self):
        with pytest.raises(ResourceLimitError):
            realizable_path((0,) * 6 + (12,), InstanceParams.for_n(13))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_agrees_with_exhaustive_enumeration(self, n):
        import itertools

        params = InstanceParams.for_n(n)
        realized = set(path_vectors_descending(n))
        d = params.d
        for t in itertools.product(range(n), repeat=d):
            if sum(t) != n - 1:
                continue
            if n % 2 == 0 and t[-1] > n // 2:
                continue
            assert realizable_path(t, params) == (t in realized), t


class TestMultisetCounts:
    def test_n4(self):
        assert count_realizable_multisets(P4) == 3

    def test_n3(self):
        assert count_realizable_multisets(InstanceParams.for_n(3)) == 1

    def test_n5_regression(self):
        # frozen from the exhaustive oracle: every composition of 4 works
        params = InstanceParams.for_n(5)
        assert path_multisets(params) == [(0, 4), (1, 3), (2, 2), (3, 1), (4, 0)]
        assert count_realizable_multisets(params) == 5

    def test_bound(self):
        with pytest.raises(ResourceLimitError):
            count_realizable_multisets(InstanceParams.for_n(11))

    @pytest.mark.parametrize("n", range(3, 11))
    def test_double_entry_bookkeeping(self, n, path_vectors):
        # the library enumerator and the descending-order oracle must agree
        assert path_multisets(InstanceParams.for_n(n)) == path_vectors.get(n)


class TestNecessity:
    @pytest.mark.parametrize("n", range(3, 10))
    def test_realized_vectors_pass_divisor_checks(self, n, path_vectors):
        params = InstanceParams.for_n(n)
        for t in path_vectors.get(n):
            assert check_bhr(t, params).feasible, t

    def test_blg_vectors_realizable_at_n8(self):
        for enc in enumerate_encodings(P8):
            t = encoding_to_vector(enc, P8)
            assert check_bhr(t, P8).feasible
            assert realizable_path(t, P8)
