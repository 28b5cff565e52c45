"""The packed-word algebra, its shifted-shuffle variant and the permutation quotient.

The product of two packed words sums every packed word whose prefix packs to
the first factor and whose suffix packs to the second; the coproduct cuts
the alphabet at every level. Restricting the product to terms with disjoint
prefix/suffix alphabets gives the shifted shuffle, a second Hopf structure
on the same coproduct. Killing non-bijective words projects onto the
permutation algebra.

Also here: the partial order on packed words of a fixed length used by the
Stanley-style decomposition, its mirrored variant, and the triangular
morphisms they generate.
"""

from __future__ import annotations

import itertools

from .errors import CapExceeded, SizeMismatch
from .lincomb import LinComb, bilinear_extend, linear_extend, tensor_of
from .words import (
    Word,
    ascent_set,
    is_permutation,
    j_involution,
    max_letter,
    pack,
    packed_words,
    restrict_word,
    standardize,
)


def _product_terms(f: Word, g: Word, disjoint: bool) -> list[Word]:
    n, m = len(f), len(g)
    out = []
    for w in packed_words(n + m):
        if pack(w[:n]) != f or pack(w[n:]) != g:
            continue
        if disjoint and set(w[:n]) & set(w[n:]):
            continue
        out.append(w)
    return out


def wqsym_product(f: Word, g: Word) -> LinComb:
    """Sum over packed words of length |f|+|g| packing to f and g on the cut.

    >>> sorted(wqsym_product((1,), (1,)).support())
    [(1, 1), (1, 2), (2, 1)]
    """
    return LinComb.from_terms((w, 1) for w in _product_terms(f, g, False))


def shuffle_product(f: Word, g: Word) -> LinComb:
    """The product terms whose prefix and suffix letter sets are disjoint."""
    return LinComb.from_terms((w, 1) for w in _product_terms(f, g, True))


def wqsym_coproduct(f: Word) -> LinComb:
    """Cut the alphabet: sum over k of (letters <= k) (x) (packed letters > k)."""
    mx = max_letter(f)
    return LinComb.from_terms(
        (
            (
                restrict_word(f, range(1, k + 1)),
                pack(restrict_word(f, range(k + 1, mx + 1))),
            ),
            1,
        )
        for k in range(mx + 1)
    )


def wqsym_product_lin(x: LinComb, y: LinComb) -> LinComb:
    return bilinear_extend(wqsym_product, x, y)


def shuffle_product_lin(x: LinComb, y: LinComb) -> LinComb:
    return bilinear_extend(shuffle_product, x, y)


def wqsym_coproduct_lin(x: LinComb) -> LinComb:
    return linear_extend(wqsym_coproduct, x)


def tensor_wqsym_product(x: LinComb, y: LinComb) -> LinComb:
    """Componentwise word product on tensor-square elements."""
    return bilinear_extend(
        lambda p, q: tensor_of(wqsym_product(p[0], q[0]), wqsym_product(p[1], q[1])),
        x,
        y,
    )


def fqsym_product(s: Word, t: Word) -> LinComb:
    """Shifted-shuffle product of two permutations.

    One term per choice of the value set carried by the first block: the
    first factor's pattern is written on those values in order, the second
    factor's pattern on the complement. Independent of the packed-word
    product; projecting the packed-word product of two permutations onto
    permutations gives the same sum.

    >>> len(fqsym_product((1, 3, 2), (2, 1)))
    10
    """
    if not (is_permutation(s) and is_permutation(t)):
        raise SizeMismatch("shifted shuffle needs permutations")
    n, m = len(s), len(t)
    out: list[Word] = []
    for values in itertools.combinations(range(1, n + m + 1), n):
        rest = [v for v in range(1, n + m + 1) if v not in values]
        out.append(
            tuple(values[v - 1] for v in s) + tuple(rest[v - 1] for v in t)
        )
    return LinComb.from_terms((w, 1) for w in out)


def varpi(x: LinComb) -> LinComb:
    """Projection onto permutations: non-bijective words go to zero."""
    return LinComb({w: c for w, c in x._terms.items() if is_permutation(w)})


def word_leq(g: Word, f: Word) -> bool:
    """The packed-word order: g is below f when g respects every weak
    comparison of f, collapses equalities of f, and reverses every strict
    descent of f read left to right.

    >>> word_leq((1, 1, 1), (1, 2, 3)), word_leq((1, 2, 1), (1, 3, 2))
    (True, True)
    """
    if len(g) != len(f):
        raise SizeMismatch("words must have equal length")
    n = len(f)
    for i in range(n):
        for j in range(n):
            if f[i] == f[j] and g[i] != g[j]:
                return False
            if f[i] <= f[j] and not g[i] <= g[j]:
                return False
            if f[i] > f[j] and i < j and not g[i] > g[j]:
                return False
    return True


def word_leq_prime(g: Word, f: Word) -> bool:
    """Mirror variant: strict ascents of f must stay strict in g."""
    if len(g) != len(f):
        raise SizeMismatch("words must have equal length")
    n = len(f)
    for i in range(n):
        for j in range(n):
            if f[i] == f[j] and g[i] != g[j]:
                return False
            if f[i] <= f[j] and not g[i] <= g[j]:
                return False
            if f[i] < f[j] and i < j and not g[i] < g[j]:
                return False
    return True


def phi_100(f: Word) -> LinComb:
    """Sum of all packed words below f in the word order.

    >>> sorted(phi_100((3, 1, 2)).support())
    [(2, 1, 1), (3, 1, 2)]
    """
    return LinComb.from_terms((g, 1) for g in packed_words(len(f)) if word_leq(g, f))


def phi_010(f: Word) -> LinComb:
    """The mirrored morphism, conjugate of phi_100 by the alphabet reversal;
    equals the sum over the mirrored order."""
    inner = phi_100(j_involution(f))
    return inner.map_labels(j_involution)


def phi(variant: str, f: Word) -> LinComb:
    if variant == "100":
        return phi_100(f)
    if variant == "010":
        return phi_010(f)
    raise SizeMismatch(f"unknown variant {variant!r}, expected '100' or '010'")


def phi_100_lin(x: LinComb) -> LinComb:
    return linear_extend(phi_100, x)


def phi_010_lin(x: LinComb) -> LinComb:
    return linear_extend(phi_010, x)


def order_iso_check(n: int, cap: int = 8) -> dict:
    """Check that the word order is comparability with equal standardization
    plus containment of merge points, over every pair of length n.

    Returns a report dict with the pair count and the first mismatch if any.
    """
    if n > cap:
        raise CapExceeded(f"length {n} exceeds cap {cap}")
    words = packed_words(n)
    checked = 0
    for g in words:
        for f in words:
            checked += 1
            direct = word_leq(g, f)
            criterion = standardize(g) == standardize(f) and ascent_set(
                g
            ) <= ascent_set(f)
            if direct != criterion:
                return {
                    "n": n,
                    "pairs": checked,
                    "ok": False,
                    "mismatch": (g, f, direct, criterion),
                }
    return {"n": n, "pairs": checked, "ok": True, "mismatch": None}
