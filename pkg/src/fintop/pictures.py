"""Picture counting and the induced bilinear pairing on topologies.

A picture between two topologies of the same degree is a bijection of
ground sets that sends strict comparabilities to increasing positions, pulls
strict comparabilities of the target back to increasing positions, and
matches equivalence classes exactly. Counting pictures gives a symmetric
Hopf pairing.

Class matching forces class sizes to agree, and both order clauses only
constrain which class maps to which, so the search backtracks class by
class and multiplies the free within-class arrangements at the end.
"""

from __future__ import annotations

from math import factorial

from .lincomb import LinComb
from .qpoly import QPoly
from .topology import Topology, closure_topology, enumerate_topologies


def _class_view(t: Topology):
    cls = t.classes
    k = len(cls)
    strict = [[False] * k for _ in range(k)]
    for x in range(k):
        for y in range(k):
            if x != y and t.strictly_below(cls[x][0], cls[y][0]):
                strict[x][y] = True
    mins = [c[0] for c in cls]
    maxs = [c[-1] for c in cls]
    sizes = [len(c) for c in cls]
    return sizes, strict, mins, maxs


def pictures_count(a: Topology, b: Topology) -> int:
    """Number of pictures from a to b; zero when the degrees differ.

    >>> from .topology import closure_topology
    >>> merged = closure_topology(2, [(1, 2), (2, 1)])
    >>> pictures_count(merged, merged)
    2
    """
    if a.n != b.n:
        return 0
    if a.n == 0:
        return 1
    asz, alt, amin, amax = _class_view(a)
    bsz, blt, bmin, bmax = _class_view(b)
    if sorted(asz) != sorted(bsz):
        return 0
    k = len(asz)
    used = [False] * k
    assign = [0] * k
    total = 0

    def rec(x: int, arrangements: int) -> None:
        nonlocal total
        if x == k:
            total += arrangements
            return
        for y in range(k):
            if used[y] or asz[x] != bsz[y]:
                continue
            ok = True
            for x2 in range(x):
                y2 = assign[x2]
                # strict comparability in a forces the image blocks apart
                if alt[x2][x] and not bmax[y2] < bmin[y]:
                    ok = False
                    break
                if alt[x][x2] and not bmax[y] < bmin[y2]:
                    ok = False
                    break
                # strict comparability in b forces the source blocks apart
                if blt[y2][y] and not amax[x2] < amin[x]:
                    ok = False
                    break
                if blt[y][y2] and not amax[x] < amin[x2]:
                    ok = False
                    break
            if ok:
                used[y] = True
                assign[x] = y
                rec(x + 1, arrangements * factorial(asz[x]))
                used[y] = False

    rec(0, 1)
    return total


_PAIRING_CACHE: dict[tuple[str, str], int] = {}


def pairing_labels(a: Topology, b: Topology) -> int:
    """pictures_count with a cross-call cache (the Gram data gets reused)."""
    key = (a.key, b.key)
    hit = _PAIRING_CACHE.get(key)
    if hit is None:
        hit = pictures_count(a, b)
        _PAIRING_CACHE[key] = hit
    return hit


def pairing(x: LinComb, y: LinComb) -> QPoly:
    """Bilinear extension of picture counting to q-polynomial values."""
    acc = QPoly.zero()
    for la, ca in x.items():
        for lb, cb in y.items():
            m = pairing_labels(la, lb)
            if m:
                acc = acc + ca * cb * QPoly.integer(m)
    return acc


def gram_matrix(n: int) -> tuple[tuple[Topology, ...], list[list[int]]]:
    """Pairing Gram matrix on the degree-n basis, enumeration order."""
    topos = enumerate_topologies(n)
    rows = [[pairing_labels(a, b) for b in topos] for a in topos]
    return topos, rows


def kernel_element_dimension_two() -> LinComb:
    """The classical degenerate direction in degree two: discrete minus the
    two chains."""
    disc = closure_topology(2, [])
    c12 = closure_topology(2, [(1, 2)])
    c21 = closure_topology(2, [(2, 1)])
    return LinComb.from_terms([(disc, 1), (c12, -1), (c21, -1)])
