import random

import numpy as np
import pytest

import mofs
from mofs.search import (
    InfeasibleSizeGuard,
    SearchConfig,
    count_binary_matrices,
    estimate_count,
)

from conftest import naive_fsquares


def grids(stream):
    return [tuple(map(tuple, s.grid.tolist())) for s in stream]


class TestCountBinaryMatrices:
    @pytest.mark.parametrize(
        "n,k,expected",
        [
            (2, 1, 2),
            (3, 1, 6),  # permutation matrices
            (4, 2, 90),
            (6, 3, 297200),
            (8, 4, 116963796250),
        ],
    )
    def test_known_values(self, n, k, expected):
        assert count_binary_matrices(n, k) == expected


class TestEnumerate:
    @pytest.mark.parametrize(
        "m,lam,expected", [(2, 1, 2), (3, 1, 12), (2, 2, 90)]
    )
    def test_counts(self, m, lam, expected):
        p = mofs.Params(m, lam)
        assert mofs.count_fsquares(p) == expected

    @pytest.mark.parametrize("m,lam", [(2, 1), (3, 1), (2, 2)])
    def test_matches_naive_filter_oracle(self, m, lam):
        p = mofs.Params(m, lam)
        ours = grids(mofs.enumerate_fsquares(p))
        oracle = [tuple(map(tuple, g.tolist())) for g in naive_fsquares(p)]
        assert sorted(ours) == sorted(oracle)
        assert len(set(ours)) == len(ours)  # no duplicates

    def test_lexicographic_order(self):
        p = mofs.Params(2, 2)
        out = grids(mofs.enumerate_fsquares(p))
        flat = [sum(g, ()) for g in out]
        assert flat == sorted(flat)

    def test_prefix_partition_soundness(self):
        p = mofs.Params(2, 2)
        whole = grids(mofs.enumerate_fsquares(p))
        parts = []
        for sym in (1, 2):
            parts += grids(
                mofs.enumerate_fsquares(p, SearchConfig(prefix=(sym,)))
            )
        assert sorted(parts) == sorted(whole)

    def test_max_results_cap(self):
        p = mofs.Params(2, 2)
        capped = list(mofs.enumerate_fsquares(p, SearchConfig(max_results=7)))
        assert len(capped) == 7

    def test_infeasible_guard(self):
        with pytest.raises(InfeasibleSizeGuard) as exc:
            next(mofs.enumerate_fsquares(mofs.Params(2, 4)))
        assert exc.value.estimate == 116963796250

    def test_guard_override_by_config(self):
        p = mofs.Params(2, 3)
        gen = mofs.enumerate_fsquares(p, SearchConfig(force=True))
        assert next(gen) is not None

    def test_guard_env_override(self, monkeypatch):
        monkeypatch.setenv("MOFS_MAX_ENUM", "10")
        with pytest.raises(InfeasibleSizeGuard):
            next(mofs.enumerate_fsquares(mofs.Params(2, 2)))
        monkeypatch.setenv("MOFS_MAX_ENUM", "1000")
        assert len(list(mofs.enumerate_fsquares(mofs.Params(2, 2)))) == 90


class TestEstimateCount:
    def test_exact_for_two_symbols(self):
        assert estimate_count(mofs.Params(2, 3)) == 297200

    def test_overestimates_generic(self):
        assert estimate_count(mofs.Params(3, 1)) >= 12


class TestExtensions:
    def test_complete_set_has_none(self, federer4):
        assert list(mofs.extensions(federer4)) == []

    def test_f21_singleton_has_none(self):
        s = mofs.make_fsquare(mofs.Params(2, 1), [[1, 2], [2, 1]])
        assert list(mofs.extensions(mofs.verify_mofs([s]))) == []

    def test_matches_filter_oracle(self):
        p = mofs.Params(2, 2)
        rng = random.Random(42)
        s = mofs.random_fsquare(p, rng)
        mset = mofs.verify_mofs([s])
        ours = grids(mofs.extensions(mset))
        oracle = [
            tuple(map(tuple, g.tolist()))
            for g in naive_fsquares(p)
            if mofs.orthogonal(s, mofs.make_fsquare(p, g))
        ]
        assert sorted(ours) == sorted(oracle)

    def test_every_extension_is_orthogonal_to_all(self):
        p = mofs.Params(2, 2)
        first = next(mofs.enumerate_fsquares(p))
        second = next(mofs.extensions(mofs.verify_mofs([first])))
        mset = mofs.verify_mofs([first, second])
        for ext in mofs.extensions(mset):
            for member in mset.squares:
                assert mofs.orthogonal(member, ext)

    def test_generic_m_extensions(self):
        # The two order-3 MOLS admit no third (bound is 2).
        mols = mofs.construct_prime_power(3, 1)
        assert list(mofs.extensions(mols)) == []
        singleton = mofs.verify_mofs([mols.squares[0]])
        exts = grids(mofs.extensions(singleton))
        oracle = [
            tuple(map(tuple, g.tolist()))
            for g in naive_fsquares(mofs.Params(3, 1))
            if mofs.orthogonal(
                mols.squares[0], mofs.make_fsquare(mofs.Params(3, 1), g)
            )
        ]
        assert sorted(exts) == sorted(oracle)


class TestGrowMaximal:
    def test_already_maximal_unchanged(self, federer4):
        grown = mofs.grow_maximal(federer4, SearchConfig(seed=0))
        assert grown.squares == federer4.squares

    def test_deterministic(self):
        p = mofs.Params(2, 2)
        a = mofs.grow_maximal(p, SearchConfig(seed=123))
        b = mofs.grow_maximal(p, SearchConfig(seed=123))
        assert a.squares == b.squares

    def test_result_is_maximal(self):
        p = mofs.Params(2, 2)
        grown = mofs.grow_maximal(p, SearchConfig(seed=5))
        assert mofs.exhaustive_maximality(grown)

    def test_respects_bound(self):
        p = mofs.Params(2, 2)
        grown = mofs.grow_maximal(p, SearchConfig(seed=9))
        assert grown.t <= mofs.upper_bound(p).value


class TestExhaustiveMaximality:
    def test_complete_set_true(self, federer4):
        assert mofs.exhaustive_maximality(federer4)

    def test_f63_singleton_false(self):
        p = mofs.Params(2, 3)
        rng = random.Random(0)
        mset = mofs.verify_mofs([mofs.random_fsquare(p, rng)])
        assert not mofs.exhaustive_maximality(mset)

    def test_guard_applies(self):
        p = mofs.Params(2, 4)
        s = mofs.random_fsquare(p, random.Random(1))
        with pytest.raises(InfeasibleSizeGuard):
            mofs.exhaustive_maximality(mofs.verify_mofs([s]))


class TestRandomFSquare:
    def test_always_valid(self):
        rng = random.Random(3)
        for m, lam in [(2, 1), (2, 3), (3, 2), (4, 1), (4, 3)]:
            p = mofs.Params(m, lam)
            for _ in range(5):
                s = mofs.random_fsquare(p, rng)
                mofs.make_fsquare(p, s.grid)  # revalidate from scratch
