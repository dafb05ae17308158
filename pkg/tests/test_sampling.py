"""Samplers: exact uniformity at small sizes, determinism, conditioning."""

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taquin.dynamics import is_pieri
from taquin.rng import RngSpec
from taquin.sampling import (
    random_coupling,
    random_subdiagram,
    sample_permutation,
    sample_uniform_pieri,
    sample_uniform_pieri_with_stats,
    sample_uniform_syt,
)
from taquin.tableaux import YoungDiagram, enumerate_syt, validate

# 0.999 quantiles of chi-square, keyed by degrees of freedom
CHI_SQUARE_CRITICAL_999 = {1: 10.8276, 4: 18.4668, 5: 20.5150}


def chi_square(counts: Counter, cells: int, draws: int) -> float:
    expected = draws / cells
    return sum((counts.get(c, 0) - expected) ** 2 / expected for c in range(cells))


class TestUniformTableaux:
    def test_rejects_empty_shape(self):
        with pytest.raises(ValueError):
            sample_uniform_syt(YoungDiagram(()), RngSpec(0, 0))

    def test_deterministic_in_the_spec(self):
        shape = YoungDiagram((3, 2, 1))
        a = sample_uniform_syt(shape, RngSpec(17, 4))
        b = sample_uniform_syt(shape, RngSpec(17, 4))
        assert a == b

    @given(st.integers(min_value=0, max_value=2**60))
    @settings(max_examples=50, deadline=None)
    def test_output_is_standard(self, seed):
        stream = RngSpec(seed, 0).stream()
        shape = random_subdiagram(4, stream)
        t = sample_uniform_syt(shape, stream)
        assert t.shape == shape
        validate(t)

    def test_uniform_on_two_by_two(self):
        # 2 tableaux, 10^4 draws, chi-square on 2 cells has df 1
        draws = 10_000
        universe = {t: i for i, t in enumerate(enumerate_syt(YoungDiagram((2, 2))))}
        assert len(universe) == 2
        counts = Counter(
            universe[sample_uniform_syt(YoungDiagram((2, 2)), RngSpec(5, i))]
            for i in range(draws)
        )
        assert chi_square(counts, 2, draws) < CHI_SQUARE_CRITICAL_999[1]

    def test_uniform_on_three_two(self):
        draws = 10_000
        universe = {t: i for i, t in enumerate(enumerate_syt(YoungDiagram((3, 2))))}
        assert len(universe) == 5
        counts = Counter(
            universe[sample_uniform_syt(YoungDiagram((3, 2)), RngSpec(6, i))]
            for i in range(draws)
        )
        assert chi_square(counts, 5, draws) < CHI_SQUARE_CRITICAL_999[4]


class TestPieriSampler:
    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            sample_uniform_pieri(YoungDiagram((2, 2)), 5, RngSpec(0, 0))
        with pytest.raises(ValueError):
            sample_uniform_pieri(YoungDiagram((2, 2)), 0, RngSpec(0, 0))

    def test_condition_holds(self):
        for i in range(40):
            t = sample_uniform_pieri(YoungDiagram((4, 4, 4, 4)), 3, RngSpec(9, i))
            assert is_pieri(t, 3)

    def test_two_by_two_k2_is_forced(self):
        # only the row-filled tableau of (2,2) has its top two entries at
        # strictly increasing u, so conditioning leaves a single point
        forced = tuple(
            sample_uniform_pieri(YoungDiagram((2, 2)), 2, RngSpec(11, i)).rows
            for i in range(50)
        )
        assert set(forced) == {((1, 2), (3, 4))}

    def test_attempt_count_is_positive_and_deterministic(self):
        _, a1 = sample_uniform_pieri_with_stats(YoungDiagram((3, 3, 3)), 2, RngSpec(2, 8))
        _, a2 = sample_uniform_pieri_with_stats(YoungDiagram((3, 3, 3)), 2, RngSpec(2, 8))
        assert a1 == a2 >= 1


class TestPermutations:
    def test_validity_and_determinism(self):
        p = sample_permutation(8, RngSpec(3, 1))
        assert sorted(p) == list(range(1, 9))
        assert p == sample_permutation(8, RngSpec(3, 1))

    def test_uniform_on_s3(self):
        draws = 12_000
        counts = Counter()
        index = {}
        for i in range(draws):
            p = sample_permutation(3, RngSpec(4, i))
            counts[index.setdefault(p, len(index))] += 1
        assert len(index) == 6
        assert chi_square(counts, 6, draws) < CHI_SQUARE_CRITICAL_999[5]


class TestRandomStructures:
    def test_subdiagram_fits_and_covers(self):
        seen = set()
        for i in range(400):
            d = random_subdiagram(2, RngSpec(7, i).stream())
            assert 1 <= d.size <= 4
            assert d.num_cols <= 2 and len(d.rows) <= 2
            seen.add(d.rows)
        # every nonempty subdiagram of the 2x2 box shows up
        assert seen == {(1,), (2,), (1, 1), (2, 1), (2, 2)}

    def test_coupling_structure(self):
        for i in range(30):
            stream = RngSpec(8, i).stream()
            c = random_coupling(3, 1 + stream.below(3), stream)
            assert c.water.size >= 1
            validate(c.water)
            validate(c.single)
            assert is_pieri(c.multi, c.k)
            assert c.single.size == c.water.size + 1
            assert c.multi.size == c.water.size + c.k
