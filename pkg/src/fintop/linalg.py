"""Exact integer linear algebra: fraction-free rank and rational kernels."""

from __future__ import annotations

from fractions import Fraction
from collections.abc import Sequence


def exact_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, Bareiss elimination.

    Fraction-free: every intermediate entry is an integer minor, every
    division is exact.

    >>> exact_rank([[1, 0], [0, 1]])
    2
    >>> exact_rank([[2, 1, 1, 0], [1, 1, 0, 0], [1, 0, 1, 0], [0, 0, 0, 2]])
    3
    >>> exact_rank([[0, 0], [0, 0]])
    0
    """
    m = [list(map(int, row)) for row in matrix]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        piv = next((i for i in range(rank, n_rows) if m[i][col]), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, n_rows):
            mi = m[i]
            mr = m[rank]
            f = mi[col]
            for j in range(col, n_cols):
                mi[j] = (mi[j] * p - f * mr[j]) // prev
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def kernel_basis(matrix: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Basis of the right kernel of an integer matrix, as primitive integer
    vectors (denominators cleared, content removed, first entry positive).

    The basis comes from the reduced echelon form over the rationals: one
    vector per free column.

    >>> kernel_basis([[1, 1, 1]])
    [(1, -1, 0), (1, 0, -1)]
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -m[row_idx][fc]
        basis.append(_primitive(vec))
    return basis


def _primitive(vec: list[Fraction]) -> tuple[int, ...]:
    from math import gcd, lcm

    denom = lcm(*(v.denominator for v in vec)) if vec else 1
    ints = [int(v * denom) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)
