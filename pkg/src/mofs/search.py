"""Enumeration, extension search, greedy growth, and the exhaustive
maximality oracle.

Squares are generated in lexicographic grid order by row-by-row
backtracking over the valid row patterns, with per-column symbol
capacities.  For two symbols the rows are bitmasks and extension search
prunes on running popcount inner products against every member.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .core import FSquare, MofsError, Params, indicator
from .verify import MofsSet, verify_mofs

DEFAULT_MAX_ENUM = 10_000_000


class InfeasibleSizeGuard(MofsError):
    def __init__(self, estimate, ceiling):
        super().__init__(
            f"estimated {estimate} squares exceeds the ceiling {ceiling};"
            f" raise MOFS_MAX_ENUM or force to override"
        )
        self.estimate = estimate
        self.ceiling = ceiling


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the search operations.

    Identical seed and config give identical outcomes.  ``prefix``
    restricts the first row to start with the given symbols, which
    partitions the search space for parallel runs.  ``parallelism`` is a
    hint only; execution is single-process.
    """

    seed: int | None = None
    max_results: int | None = None
    prefix: tuple = ()
    parallelism: int = 1
    max_enum: int | None = None
    force: bool = False


def _ceiling(config: SearchConfig) -> int:
    if config.max_enum is not None:
        return config.max_enum
    return int(os.environ.get("MOFS_MAX_ENUM", DEFAULT_MAX_ENUM))


@lru_cache(maxsize=None)
def count_binary_matrices(n: int, k: int) -> int:
    """Exact number of n x n 0/1 matrices with all row and column sums k,
    by dynamic programming over column-capacity multiplicities."""

    @lru_cache(maxsize=None)
    def rec(rows_left: int, state: tuple) -> int:
        if rows_left == 0:
            return 1 if sum(c * cnt for c, cnt in enumerate(state)) == 0 else 0
        total = 0

        def place(c: int, left: int, ways: int, taken: tuple):
            # Choose how many of this row's ones land in each capacity
            # class of the *original* state (a column takes at most one).
            nonlocal total
            if left == 0 or c == 0:
                if left:
                    return
                st = list(state)
                for cls, take in taken:
                    st[cls] -= take
                    st[cls - 1] += take
                total += ways * rec(rows_left - 1, tuple(st))
                return
            for take in range(min(state[c], left) + 1):
                place(
                    c - 1,
                    left - take,
                    ways * comb(state[c], take),
                    taken + ((c, take),) if take else taken,
                )

        place(k, k, 1, ())
        return total

    state = [0] * (k + 1)
    state[k] = n
    return rec(n, tuple(state))


def estimate_count(params: Params) -> int:
    """Estimated number of F-squares of the type: exact for m = 2,
    a row-pattern overestimate otherwise."""
    m, lam, n = params.m, params.lam, params.n
    if m == 1:
        return 1
    if m == 2:
        return count_binary_matrices(n, lam)
    patterns = factorial(n) // factorial(lam) ** m
    return patterns**n


def _row_patterns(m: int, lam: int):
    """All rows with each symbol exactly lam times, in lexicographic order."""
    n = m * lam
    out = []
    counts = [lam] * m

    def rec(pos: int, row: list):
        if pos == n:
            out.append(tuple(row))
            return
        for a in range(1, m + 1):
            if counts[a - 1]:
                counts[a - 1] -= 1
                row.append(a)
                rec(pos + 1, row)
                row.pop()
                counts[a - 1] += 1

    rec(0, [])
    return out


def _guard(params: Params, config: SearchConfig) -> None:
    if config.force or config.max_results is not None:
        return
    ceiling = _ceiling(config)
    estimate = estimate_count(params)
    if estimate > ceiling:
        raise InfeasibleSizeGuard(estimate, ceiling)


def _engine_m2(params, members, first_order, config):
    """Backtracking enumerator for m = 2, rows as symbol-1 bitmasks.

    ``members`` restricts the stream to squares orthogonal to every
    member, pruning on the running inner product of symbol-1 indicators
    (which for two valid F-squares determines all four pair counts).
    """
    lam, n = params.lam, params.n
    target = lam * lam
    patterns = _row_patterns(2, lam)
    masks = [sum(1 << j for j, v in enumerate(p) if v == 1) for p in patterns]
    order = first_order if first_order is not None else range(len(patterns))
    row0 = [
        i
        for i in order
        if patterns[i][: len(config.prefix)] == tuple(config.prefix)
    ]
    member_rows = None
    if members is not None:
        member_rows = [
            [indicator(s, 1).row_masks[i] for s in members] for i in range(n)
        ]
        t = len(members)
    cnt1 = [0] * n
    rows = []
    inners = [0] * (len(members) if members is not None else 0)

    def rec(i: int):
        if i == n:
            grid = [
                [1 if masks_row >> j & 1 else 2 for j in range(n)]
                for masks_row in rows
            ]
            yield FSquare(params, grid, _trusted=True)
            return
        rem = n - i
        forbid = 0  # columns with symbol 1 exhausted
        need = 0  # columns forced to symbol 1 for all remaining rows
        for j in range(n):
            c = cnt1[j]
            if c == lam:
                forbid |= 1 << j
            elif lam - c == rem:
                need |= 1 << j
        cap = (rem - 1) * lam
        for idx in row0 if i == 0 else range(len(patterns)):
            mask = masks[idx]
            if mask & forbid or need & ~mask:
                continue
            if members is not None:
                mrows = member_rows[i]
                ok = True
                for k in range(t):
                    v = inners[k] + (mask & mrows[k]).bit_count()
                    if v > target or v + cap < target:
                        ok = False
                        break
                if not ok:
                    continue
                for k in range(t):
                    inners[k] += (mask & mrows[k]).bit_count()
            for j in range(n):
                if mask >> j & 1:
                    cnt1[j] += 1
            rows.append(mask)
            yield from rec(i + 1)
            rows.pop()
            for j in range(n):
                if mask >> j & 1:
                    cnt1[j] -= 1
            if members is not None:
                for k in range(t):
                    inners[k] -= (mask & mrows[k]).bit_count()

    yield from rec(0)


def _engine_generic(params, members, first_order, config):
    """Backtracking enumerator for any m, rows as symbol tuples."""
    m, lam, n = params.m, params.lam, params.n
    target = lam * lam
    patterns = _row_patterns(m, lam)
    # Per pattern, per symbol: bitmask of columns holding that symbol.
    pmasks = [
        [sum(1 << j for j, v in enumerate(p) if v == a + 1) for a in range(m)]
        for p in patterns
    ]
    order = first_order if first_order is not None else range(len(patterns))
    row0 = [
        i
        for i in order
        if patterns[i][: len(config.prefix)] == tuple(config.prefix)
    ]
    mrow_masks = None
    if members is not None:
        t = len(members)
        mrow_masks = [
            [
                [indicator(s, b + 1).row_masks[i] for b in range(m)]
                for s in members
            ]
            for i in range(n)
        ]
        counts = [[[0] * m for _ in range(m)] for _ in range(t)]
    cnt = [[0] * n for _ in range(m)]  # per symbol, per column
    rows = []

    def rec(i: int):
        if i == n:
            yield FSquare(params, [list(r) for r in rows], _trusted=True)
            return
        rem = n - i
        forbid = [0] * m
        for a in range(m):
            ca = cnt[a]
            fa = 0
            for j in range(n):
                if ca[j] == lam:
                    fa |= 1 << j
            forbid[a] = fa
        cap = (rem - 1) * lam
        for idx in row0 if i == 0 else range(len(patterns)):
            pm = pmasks[idx]
            if any(pm[a] & forbid[a] for a in range(m)):
                continue
            if members is not None:
                gains = []
                ok = True
                for k in range(t):
                    mk = mrow_masks[i][k]
                    ck = counts[k]
                    gk = []
                    for a in range(m):
                        row_g = []
                        for b in range(m):
                            g = (pm[a] & mk[b]).bit_count()
                            v = ck[a][b] + g
                            if v > target or v + cap < target:
                                ok = False
                                break
                            row_g.append(g)
                        if not ok:
                            break
                        gk.append(row_g)
                    if not ok:
                        break
                    gains.append(gk)
                if not ok:
                    continue
                for k in range(t):
                    ck = counts[k]
                    gk = gains[k]
                    for a in range(m):
                        for b in range(m):
                            ck[a][b] += gk[a][b]
            pat = patterns[idx]
            for j in range(n):
                cnt[pat[j] - 1][j] += 1
            rows.append(pat)
            yield from rec(i + 1)
            rows.pop()
            for j in range(n):
                cnt[pat[j] - 1][j] -= 1
            if members is not None:
                for k in range(t):
                    ck = counts[k]
                    gk = gains[k]
                    for a in range(m):
                        for b in range(m):
                            ck[a][b] -= gk[a][b]

    yield from rec(0)


def _stream(params, members, first_order, config):
    if params.m == 2:
        gen = _engine_m2(params, members, first_order, config)
    else:
        gen = _engine_generic(params, members, first_order, config)
    if config.max_results is None:
        yield from gen
    else:
        for count, sq in enumerate(gen):
            if count >= config.max_results:
                return
            yield sq


def enumerate_fsquares(params: Params, config: SearchConfig = SearchConfig()):
    """Every F-square of the type exactly once, in lexicographic grid order."""
    _guard(params, config)
    yield from _stream(params, None, None, config)


def extensions(mset: MofsSet, config: SearchConfig = SearchConfig()):
    """Every F-square orthogonal to all members of the set, with early
    pruning of partial grids on running pair counts."""
    _guard(mset.params, config)
    yield from _stream(mset.params, list(mset.squares), None, config)


def count_fsquares(params: Params, config: SearchConfig = SearchConfig()) -> int:
    """Number of F-squares of the type, by full enumeration."""
    return sum(1 for _ in enumerate_fsquares(params, config))


def exhaustive_maximality(
    mset: MofsSet, config: SearchConfig = SearchConfig()
) -> bool:
    """Ground truth: true iff no F-square extends the set."""
    return next(extensions(mset, config), None) is None


def grow_maximal(seed_set, config: SearchConfig = SearchConfig()) -> MofsSet:
    """Greedy growth to a maximal set.

    ``seed_set`` is a MofsSet, or a Params to start from nothing.  Each
    step adds the first extension found, with the first-row pattern order
    permuted by the seed; the loop ends when no extension exists, so the
    result is maximal by construction (and re-verified).
    """
    if isinstance(seed_set, Params):
        params, squares = seed_set, []
    else:
        params, squares = seed_set.params, list(seed_set.squares)
    _guard(params, config)
    rng = random.Random(config.seed)
    n_patterns = len(_row_patterns(params.m, params.lam))
    while True:
        first_order = list(range(n_patterns))
        rng.shuffle(first_order)
        nxt = next(_stream(params, squares, first_order, config), None)
        if nxt is None:
            break
        squares.append(nxt)
    return verify_mofs(squares)


def random_fsquare(params: Params, rng: random.Random) -> FSquare:
    """A pseudorandom valid F-square: the cyclic square with rows, columns,
    and symbols shuffled."""
    m, lam, n = params.m, params.lam, params.n
    rows = list(range(n))
    cols = list(range(n))
    syms = list(range(1, m + 1))
    rng.shuffle(rows)
    rng.shuffle(cols)
    rng.shuffle(syms)
    grid = [
        [syms[((rows[i] + cols[j]) % n) // lam] for j in range(n)]
        for i in range(n)
    ]
    return FSquare(params, grid, _trusted=True)
