import numpy as np
import pytest

import mofs

# The worked F(6;2) example used throughout the golden-vector tests.
EXAMPLE_GRID = [
    [1, 2, 3, 1, 2, 3],
    [3, 1, 2, 3, 2, 1],
    [2, 3, 1, 2, 1, 3],
    [1, 1, 2, 3, 3, 2],
    [3, 3, 1, 2, 1, 2],
    [2, 2, 3, 1, 3, 1],
]

EXAMPLE_I1 = [
    [1, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 1, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 1],
]

EXAMPLE_I2 = [
    [0, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 1, 0],
    [1, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 1],
    [0, 0, 0, 1, 0, 1],
    [1, 1, 0, 0, 0, 0],
]

EXAMPLE_I3 = [
    [0, 0, 1, 0, 0, 1],
    [1, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 1, 0],
    [1, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 0],
]

# Three cyclic order-3 Latin squares whose symbol-1 indicators sum to the
# all-ones matrix (the constant-relation counterexample).
CYCLIC_TRIPLE = [
    [[1, 2, 3], [3, 1, 2], [2, 3, 1]],
    [[2, 3, 1], [1, 2, 3], [3, 1, 2]],
    [[3, 1, 2], [2, 3, 1], [1, 2, 3]],
]


@pytest.fixture
def example_square():
    return mofs.make_fsquare(mofs.Params(3, 2), EXAMPLE_GRID)


@pytest.fixture
def cyclic_triple_set():
    # Not pairwise orthogonal (the three are cyclic shifts of each other);
    # the parity machinery only needs F-squares, so build the set directly.
    p = mofs.Params(3, 1)
    return mofs.MofsSet(p, tuple(mofs.make_fsquare(p, g) for g in CYCLIC_TRIPLE))


@pytest.fixture(scope="session")
def federer4():
    return mofs.construct_federer(mofs.hadamard(4))


def naive_fsquares(params):
    """Filter oracle: every n x n grid over 1..m, kept iff regular.

    Deliberately independent of the library's enumeration; only usable
    for tiny types.
    """
    from itertools import product

    m, lam, n = params.m, params.lam, params.n
    out = []
    for cells in product(range(1, m + 1), repeat=n * n):
        grid = np.array(cells, dtype=np.int64).reshape(n, n)
        ok = True
        for a in range(1, m + 1):
            mask = grid == a
            if (mask.sum(axis=0) != lam).any() or (mask.sum(axis=1) != lam).any():
                ok = False
                break
        if ok:
            out.append(grid)
    return out


def naive_superposition(g1, g2, m):
    """Direct cell count of ordered symbol pairs."""
    counts = np.zeros((m, m), dtype=np.int64)
    n = len(g1)
    for i in range(n):
        for j in range(n):
            counts[g1[i][j] - 1, g2[i][j] - 1] += 1
    return counts


def brute_force_full_relation(bits):
    """Exhaustive search for the complementary 0/J block form.

    Permuting rows and columns into the block shape is the same as
    choosing the set of left columns C and top rows R; R is forced by C,
    so trying every C covers every permutation.  Returns a set of valid
    (x, y) pairs under the canonical orientation, empty if none.
    """
    bits = np.asarray(bits)
    n = bits.shape[0]
    found = set()
    for cmask in range(1 << n):
        cols = [j for j in range(n) if cmask >> j & 1]
        other = [j for j in range(n) if not (cmask >> j & 1)]
        top = []
        bottom = []
        ok = True
        for i in range(n):
            row = bits[i]
            if all(row[j] == 0 for j in cols) and all(row[j] == 1 for j in other):
                top.append(i)
            elif all(row[j] == 1 for j in cols) and all(row[j] == 0 for j in other):
                bottom.append(i)
            else:
                ok = False
                break
        if not ok or len(top) + len(bottom) != n:
            continue
        x, y = len(top), len(cols)
        if x in (0, n) and y in (0, n):
            continue
        if (x, y) > (n - x, n - y):
            x, y = n - x, n - y
        found.add((x, y))
    return found
