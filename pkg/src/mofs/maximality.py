"""Parity-based maximality certificates for MOFS sets.

The certificate rests on the mod-2 sum of one indicator square per
member.  When that parity matrix has, up to row/column permutation, a
complementary 0/J block structure (a non-constant full relation) and the
repetition number is odd, the set admits no further orthogonal square.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FSquare, MofsError, Params, SymbolOutOfRange
from .verify import MofsSet


class LengthMismatch(MofsError):
    pass


@dataclass(frozen=True)
class ParityMatrix:
    """(sum_k I_{a_k}(S_k)) mod 2 for recorded per-square symbol choices."""

    params: Params
    t: int
    symbol_choice: tuple
    bits: np.ndarray

    def row_sums(self):
        return self.bits.sum(axis=1)

    def col_sums(self):
        return self.bits.sum(axis=0)


@dataclass(frozen=True)
class FullRelationCertificate:
    """Witness of the complementary block structure.

    ``row_partition`` holds the rows of the top block (size x) and
    ``col_partition`` the columns of the left block (size y); permuting
    rows and columns accordingly exposes the 0/J pattern.  Canonical
    orientation: x <= n - x, and y <= n - y on ties.
    """

    x: int
    y: int
    row_partition: frozenset
    col_partition: frozenset
    symbol_choice: tuple


@dataclass(frozen=True)
class ParityReport:
    """The five congruences a genuine certificate must satisfy."""

    lemma6_i: bool  # x = y = t*lam (mod 2)
    lemma6_ii: bool  # m*lam even
    lemma7_t_odd: bool  # t odd
    prop9: bool  # t = m(x+y) - (m+1) (mod 8)
    cor10: bool  # t = m - 1 (mod 4)

    @property
    def all_hold(self) -> bool:
        return (
            self.lemma6_i
            and self.lemma6_ii
            and self.lemma7_t_odd
            and self.prop9
            and self.cor10
        )


@dataclass(frozen=True)
class MaximalityVerdict:
    """CertifiedMaximal when ``certificate`` is set, NoCertificate otherwise.

    A certificate proves maximality; its absence proves nothing (the
    parity criterion is sufficient, not necessary).
    """

    certificate: FullRelationCertificate | None

    @property
    def certified(self) -> bool:
        return self.certificate is not None


def parity_matrix(mset: MofsSet, symbol_choice) -> ParityMatrix:
    """Mod-2 sum of I_{a_k}(S_k) over the set, one chosen symbol per square."""
    choice = tuple(symbol_choice)
    if len(choice) != mset.t:
        raise LengthMismatch(f"expected {mset.t} symbols, got {len(choice)}")
    params = mset.params
    n = params.n
    acc = np.zeros((n, n), dtype=np.int64)
    for s, a in zip(mset.squares, choice):
        if not 1 <= a <= params.m:
            raise SymbolOutOfRange(f"symbol {a} not in 1..{params.m}")
        acc += s.grid == a
    return ParityMatrix(params, mset.t, choice, (acc & 1).astype(np.int64))


def detect_full_relation(pm: ParityMatrix) -> FullRelationCertificate | None:
    """Find the block structure of a non-constant full relation, if any.

    The matrix has the permuted 0/J block form exactly when every row
    equals either the first row or its complement and the matrix is not
    constant; x counts the rows of the top pattern (zeros on the left
    block) and y the zero-columns of that pattern.
    """
    bits = pm.bits
    n = bits.shape[0]
    first = bits[0]
    comp = 1 - first
    top_rows = []
    for i in range(n):
        row = bits[i]
        if (row == first).all():
            top_rows.append(i)
        elif not (row == comp).all():
            return None
    if not bits.any() or bits.all():
        return None  # constant matrix: excluded by definition
    x1 = len(top_rows)
    zero_cols = [j for j in range(n) if first[j] == 0]
    y1 = len(zero_cols)
    rows1 = frozenset(top_rows)
    cols1 = frozenset(zero_cols)
    all_rows = frozenset(range(n))
    all_cols = frozenset(range(n))
    # Two orientations: the first-row pattern on top, or its complement.
    if (x1, y1) <= (n - x1, n - y1):
        x, y, rows, cols = x1, y1, rows1, cols1
    else:
        x, y, rows, cols = n - x1, n - y1, all_rows - rows1, all_cols - cols1
    return FullRelationCertificate(x, y, rows, cols, pm.symbol_choice)


def parity_report(
    cert: FullRelationCertificate, params: Params, t: int
) -> ParityReport:
    """Evaluate the five congruences for a certificate of a size-t set."""
    m, lam = params.m, params.lam
    x, y = cert.x, cert.y
    return ParityReport(
        lemma6_i=x % 2 == y % 2 == (t * lam) % 2,
        lemma6_ii=(m * lam) % 2 == 0,
        lemma7_t_odd=t % 2 == 1,
        prop9=(t - (m * (x + y) - (m + 1))) % 8 == 0,
        cor10=(t - (m - 1)) % 4 == 0,
    )


def maximality_verdict(mset: MofsSet, extra_choices=()) -> MaximalityVerdict:
    """Certify maximality via a full relation, or report no certificate.

    Only applicable for odd lam.  The m uniform symbol choices are tried
    in order (plus any user-supplied per-square choices); the first
    certificate found wins, which keeps the outcome deterministic.
    """
    params = mset.params
    if params.lam % 2 == 0:
        return MaximalityVerdict(None)
    choices = [(a,) * mset.t for a in range(1, params.m + 1)]
    choices.extend(tuple(c) for c in extra_choices)
    for choice in choices:
        cert = detect_full_relation(parity_matrix(mset, choice))
        if cert is not None:
            return MaximalityVerdict(cert)
    return MaximalityVerdict(None)
