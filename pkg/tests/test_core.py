import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import mofs
from mofs.core import (
    ColumnRegularityViolation,
    DimensionMismatch,
    OverlappingSupports,
    RegularityViolation,
    RowRegularityViolation,
    SymbolOutOfRange,
    UncoveredCell,
)

from conftest import EXAMPLE_GRID, EXAMPLE_I1, EXAMPLE_I2, EXAMPLE_I3


def random_square(m, lam, seed):
    import random

    return mofs.random_fsquare(mofs.Params(m, lam), random.Random(seed))


params_strategy = st.tuples(
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=1, max_value=3),
)


class TestParams:
    def test_side_length(self):
        assert mofs.Params(3, 2).n == 6

    @pytest.mark.parametrize("m,lam", [(0, 1), (1, 0), (-2, 3)])
    def test_rejects_nonpositive(self, m, lam):
        with pytest.raises(mofs.MofsError):
            mofs.Params(m, lam)


class TestMakeFSquare:
    def test_worked_example_is_valid(self, example_square):
        assert example_square.params == mofs.Params(3, 2)

    def test_order_two_latin_square(self):
        mofs.make_fsquare(mofs.Params(2, 1), [[1, 2], [2, 1]])

    def test_constant_columns_rejected(self):
        with pytest.raises(ColumnRegularityViolation) as exc:
            mofs.make_fsquare(
                mofs.Params(3, 1), [[1, 2, 3], [1, 2, 3], [1, 2, 3]]
            )
        assert exc.value.col == 0

    def test_bad_row_counts_rejected(self):
        with pytest.raises(RowRegularityViolation):
            mofs.make_fsquare(mofs.Params(2, 1), [[1, 1], [2, 2]])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mofs.make_fsquare(mofs.Params(2, 1), [[1, 2, 1], [2, 1, 2]])

    def test_symbol_out_of_range(self):
        with pytest.raises(SymbolOutOfRange):
            mofs.make_fsquare(mofs.Params(2, 1), [[1, 3], [3, 1]])

    def test_grid_is_immutable(self, example_square):
        with pytest.raises(ValueError):
            example_square.grid[0, 0] = 2


class TestIndicator:
    def test_worked_example_indicators(self, example_square):
        for a, expected in [(1, EXAMPLE_I1), (2, EXAMPLE_I2), (3, EXAMPLE_I3)]:
            got = mofs.indicator(example_square, a).to_array()
            assert (got == np.array(expected)).all()

    def test_indicators_sum_to_ones(self, example_square):
        total = sum(i.to_array() for i in mofs.indicators(example_square))
        assert (total == 1).all()

    def test_weighted_sum_recovers_grid(self, example_square):
        acc = sum(
            a * mofs.indicator(example_square, a).to_array() for a in (1, 2, 3)
        )
        assert (acc == example_square.grid).all()

    def test_row_and_column_sums_are_lam(self, example_square):
        ind = mofs.indicator(example_square, 2)
        assert ind.row_sums() == [2] * 6
        assert ind.col_sums() == [2] * 6

    def test_symbol_out_of_range(self, example_square):
        with pytest.raises(SymbolOutOfRange):
            mofs.indicator(example_square, 4)


class TestReconstruct:
    def test_worked_example_round_trip(self, example_square):
        rebuilt = mofs.reconstruct(mofs.indicators(example_square))
        assert rebuilt == example_square

    def test_single_symbol(self):
        p = mofs.Params(1, 3)
        square = mofs.make_fsquare(p, np.ones((3, 3), dtype=int))
        assert mofs.reconstruct(mofs.indicators(square)) == square

    def test_overlapping_supports(self, example_square):
        i1 = mofs.indicator(example_square, 1)
        with pytest.raises(OverlappingSupports):
            mofs.reconstruct([i1, i1, mofs.indicator(example_square, 3)])

    def test_uncovered_cell(self, example_square):
        i1 = mofs.indicator(example_square, 1)
        i2 = mofs.indicator(example_square, 2)
        empty = mofs.IndicatorSquare(example_square.params, (0,) * 6)
        with pytest.raises(UncoveredCell):
            mofs.reconstruct([i1, i2, empty])

    def test_irregular_result_rejected(self):
        # Disjoint covering masks that do not form an F-square.
        p = mofs.Params(2, 1)
        a = mofs.IndicatorSquare(p, (0b11, 0b00))
        b = mofs.IndicatorSquare(p, (0b00, 0b11))
        with pytest.raises(RegularityViolation):
            mofs.reconstruct([a, b])

    @given(params_strategy, st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_property(self, ml, seed):
        m, lam = ml
        s = random_square(m, lam, seed)
        assert mofs.reconstruct(mofs.indicators(s)) == s


class TestInner:
    def test_example_values(self, example_square):
        i1 = mofs.indicator(example_square, 1)
        i2 = mofs.indicator(example_square, 2)
        j = mofs.all_ones(example_square.params)
        assert mofs.inner(i1, j) == 12  # m * lam^2
        assert mofs.inner(i1, i1) == 12
        assert mofs.inner(i1, i2) == 0

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mofs.inner(np.ones((2, 2)), np.ones((3, 3)))

    def test_matches_array_path(self, example_square):
        i1 = mofs.indicator(example_square, 1)
        i3 = mofs.indicator(example_square, 3)
        assert mofs.inner(i1, i3) == mofs.inner(i1.to_array(), i3.to_array())

    @given(
        st.integers(min_value=0, max_value=10**6),
        st.integers(min_value=0, max_value=3),
        st.integers(min_value=0, max_value=3),
    )
    @settings(max_examples=40, deadline=None)
    def test_symmetric_and_bilinear(self, seed, c1, c2):
        rng = np.random.default_rng(seed)
        a = rng.integers(0, 5, size=(4, 4))
        b = rng.integers(0, 5, size=(4, 4))
        c = rng.integers(0, 5, size=(4, 4))
        assert mofs.inner(a, b) == mofs.inner(b, a)
        assert mofs.inner(a, c1 * b + c2 * c) == c1 * mofs.inner(
            a, b
        ) + c2 * mofs.inner(a, c)

    @given(params_strategy, st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=60, deadline=None)
    def test_indicator_norm_identity(self, ml, seed):
        m, lam = ml
        s = random_square(m, lam, seed)
        j = mofs.all_ones(s.params)
        for a in range(1, m + 1):
            ind = mofs.indicator(s, a)
            assert mofs.inner(ind, ind) == m * lam * lam
            assert mofs.inner(ind, j) == m * lam * lam
