"""Orthogonality testing, MOFS-set validation, and completeness structure."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    FSquare,
    MofsError,
    Params,
    indicator,
    indicators,
    inner,
)


class ParamMismatch(MofsError):
    pass


class UndefinedForMOne(MofsError):
    pass


class NotOrthogonal(MofsError):
    """Squares k and l (1-based) fail orthogonality at symbol pair (a, b)."""

    def __init__(self, k, l, a, b, count, expected):
        super().__init__(
            f"squares {k} and {l}: symbol pair ({a},{b}) occurs {count} times,"
            f" expected {expected}"
        )
        self.k = k
        self.l = l
        self.a = a
        self.b = b
        self.count = count
        self.expected = expected


@dataclass(frozen=True)
class MofsSet:
    """A pairwise-orthogonal tuple of frequency squares with shared parameters.

    Construct through :func:`verify_mofs`, which validates the pairwise
    orthogonality before handing the value out.
    """

    params: Params
    squares: tuple

    @property
    def t(self) -> int:
        return len(self.squares)


@dataclass(frozen=True)
class UpperBound:
    """Floor of (m*lam - 1)^2 / (m - 1), with an exact-division flag."""

    value: int
    exact: bool


@dataclass(frozen=True)
class CompletenessReport:
    t: int
    bound: UpperBound
    is_complete: bool
    t_matrix: np.ndarray
    structure_matches: bool


def superposition_counts(s: FSquare, s2: FSquare) -> np.ndarray:
    """m x m matrix whose (j, j') entry counts cells where s=j and s2=j'."""
    if s.params != s2.params:
        raise ParamMismatch(f"{s.params} vs {s2.params}")
    m = s.params.m
    counts = np.zeros((m, m), dtype=np.int64)
    np.add.at(counts, (s.grid - 1, s2.grid - 1), 1)
    return counts


def orthogonal(s: FSquare, s2: FSquare, *, reduced: bool = False) -> bool:
    """True iff every ordered symbol pair appears exactly lam^2 times
    in the superposition of ``s`` on ``s2``.

    With ``reduced=True`` only the (m-1)^2 symbol pairs over 2..m are
    checked; row and column regularity forces the remaining counts.
    """
    if s.params != s2.params:
        raise ParamMismatch(f"{s.params} vs {s2.params}")
    m, lam = s.params.m, s.params.lam
    target = lam * lam
    lo = 2 if reduced and m >= 2 else 1
    for a in range(lo, m + 1):
        ia = indicator(s, a)
        for b in range(lo, m + 1):
            if inner(ia, indicator(s2, b)) != target:
                return False
    return True


def verify_mofs(squares, *, reduced: bool = False) -> MofsSet:
    """Validate a list of FSquares as a MOFS set, or raise on the first
    failing pair (1-based indices in the error)."""
    squares = tuple(squares)
    if not squares:
        raise MofsError("a MOFS set needs at least one square")
    params = squares[0].params
    for s in squares[1:]:
        if s.params != params:
            raise ParamMismatch(f"{s.params} vs {params}")
    m, lam = params.m, params.lam
    target = lam * lam
    lo = 2 if reduced and m >= 2 else 1
    inds = [
        {a: indicator(s, a) for a in range(lo, m + 1)} for s in squares
    ]
    t = len(squares)
    for k in range(t):
        for l in range(k + 1, t):
            for a in range(lo, m + 1):
                for b in range(lo, m + 1):
                    c = inner(inds[k][a], inds[l][b])
                    if c != target:
                        raise NotOrthogonal(k + 1, l + 1, a, b, c, target)
    mset = MofsSet(params, squares)
    if m >= 2:
        bound = upper_bound(params)
        if t > bound.value:
            raise MofsError(
                f"impossible: {t} pairwise-orthogonal squares exceeds the"
                f" bound {bound.value}"
            )
    return mset


def upper_bound(params: Params) -> UpperBound:
    """Maximum possible size of a MOFS set of this type."""
    if params.m < 2:
        raise UndefinedForMOne("the bound's denominator m - 1 vanishes for m = 1")
    num = (params.n - 1) ** 2
    den = params.m - 1
    return UpperBound(num // den, num % den == 0)


def _relabel_top_left(s: FSquare) -> np.ndarray:
    """Grid of ``s`` with symbol 1 swapped with the top-left symbol."""
    c = int(s.grid[0, 0])
    if c == 1:
        return s.grid
    grid = s.grid.copy()
    grid[s.grid == 1] = c
    grid[s.grid == c] = 1
    return grid


def completeness_structure(mset: MofsSet) -> CompletenessReport:
    """Structural test for complete sets.

    After relabeling each square so its top-left symbol is 1, forms
    T = sum_k sum_{a>1} I_a(S_k) and checks the equality-case pattern:
    corner 0, first row/column lam*(m*lam - 1), interior lam*(m*lam - 2).
    A valid complete set must match; an incomplete set need not.
    """
    params = mset.params
    if params.m < 2:
        raise UndefinedForMOne("completeness is undefined for m = 1")
    m, lam, n = params.m, params.lam, params.n
    t = mset.t
    ones_count = np.zeros((n, n), dtype=np.int64)
    for s in mset.squares:
        ones_count += _relabel_top_left(s) == 1
    t_matrix = t - ones_count  # sum over a > 1 of I_a = J - I_1, per square
    border = lam * (n - 1)
    interior = lam * (n - 2)
    matches = (
        t_matrix[0, 0] == 0
        and (t_matrix[0, 1:] == border).all()
        and (t_matrix[1:, 0] == border).all()
        and (t_matrix[1:, 1:] == interior).all()
    )
    bound = upper_bound(params)
    return CompletenessReport(
        t=t,
        bound=bound,
        is_complete=bound.exact and t == bound.value,
        t_matrix=t_matrix,
        structure_matches=bool(matches),
    )
