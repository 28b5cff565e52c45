"""Partitions of a topology, their statistics, and the induced morphisms.

A generalized partition of a topology is a surjective monotone word on its
preorder. Three statistics count the degenerate coincidences: tied pairs
below an ascent, tied pairs below a descent, and split triples inside a
class interval. A partition is strict when the last two vanish, and the
weighted sum over all partitions is a Hopf morphism into the packed-word
algebra with exact q-polynomial coefficients.

Linear extensions (ordered set partitions refining the class poset) give a
second morphism into the shifted-shuffle structure, and the word order
decomposes strict partitions into disjoint down-sets indexed by them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lincomb import LinComb, linear_extend
from .qpoly import QPoly
from .topology import Topology
from .words import Word, max_letter, packed_words, word_to_blocks
from .wqsym import word_leq


@dataclass(frozen=True)
class PartitionStats:
    """The three coincidence counts; strict means l2 == l3 == 0."""

    l1: int
    l2: int
    l3: int


def is_generalized_partition(t: Topology, f: Word) -> bool:
    """Monotone along the preorder (surjectivity comes from packedness)."""
    n = t.n
    if len(f) != n:
        return False
    return all(
        f[i] <= f[j]
        for i in range(n)
        for j in range(n)
        if (t.rows[i] >> j) & 1
    )


def partition_stats(t: Topology, f: Word) -> PartitionStats:
    """Count the literal statistics of a generalized partition."""
    n = t.n
    l1 = l2 = 0
    for i in range(n):
        for j in range(n):
            if i != j and t.strictly_below(i + 1, j + 1) and f[i] == f[j]:
                if i < j:
                    l1 += 1
                else:
                    l2 += 1
    l3 = 0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if (
                    f[i] == f[j] == f[k]
                    and t.similar(i + 1, k + 1)
                    and not t.similar(i + 1, j + 1)
                    and not t.similar(j + 1, k + 1)
                ):
                    l3 += 1
    return PartitionStats(l1, l2, l3)


def is_strict_partition(t: Topology, f: Word) -> bool:
    """Strictness by its defining clauses, independent of the statistics:
    strict descents force strict values, and a tied triple spanning a class
    must lie inside it."""
    n = t.n
    for i in range(n):
        for j in range(n):
            if i > j and t.strictly_below(i + 1, j + 1) and not f[i] < f[j]:
                return False
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if f[i] == f[j] == f[k] and t.similar(i + 1, k + 1):
                    if not (t.similar(i + 1, j + 1) and t.similar(j + 1, k + 1)):
                        return False
    return True


def generalized_partitions(t: Topology) -> tuple[tuple[Word, PartitionStats], ...]:
    """All generalized partitions with their statistics, words in lex order."""
    return tuple(
        (f, partition_stats(t, f))
        for f in packed_words(t.n)
        if is_generalized_partition(t, f)
    )


def strict_partitions(t: Topology) -> tuple[Word, ...]:
    """The generalized partitions with vanishing l2 and l3."""
    return tuple(
        f for f, st in generalized_partitions(t) if st.l2 == 0 and st.l3 == 0
    )


def gamma_q(t: Topology) -> LinComb:
    """Weighted sum q1^l1 q2^l2 q3^l3 f over generalized partitions of t.

    >>> from .topology import closure_topology
    >>> from .serialize import render_lincomb
    >>> render_lincomb(gamma_q(closure_topology(2, [(1, 2)])))
    'q1 * 1,1 + 1 * 1,2'
    """
    return LinComb.from_terms(
        (f, QPoly.monomial(st.l1, st.l2, st.l3))
        for f, st in generalized_partitions(t)
    )


def gamma_q_lin(x: LinComb) -> LinComb:
    return linear_extend(gamma_q, x)


def gamma_q_swapped_lin(x: LinComb) -> LinComb:
    """gamma_q with the roles of q1 and q2 transposed in every coefficient."""
    return LinComb({l: c.swap_q1_q2() for l, c in gamma_q_lin(x)._terms.items()})


def linear_extensions(t: Topology) -> tuple[Word, ...]:
    """Words constant exactly on classes and increasing along the class poset.

    Generated as topological sorts of the class poset, not by filtering
    partitions.

    >>> from .topology import closure_topology
    >>> linear_extensions(closure_topology(2, []))
    ((1, 2), (2, 1))
    """
    cls = t.classes
    bar = t.collapse()
    k = bar.n
    orders: list[tuple[int, ...]] = []
    remaining = set(range(1, k + 1))

    def rec(prefix: tuple[int, ...]):
        if not remaining:
            orders.append(prefix)
            return
        for c in sorted(remaining):
            if all(not bar.strictly_below(d, c) for d in remaining if d != c):
                remaining.discard(c)
                rec(prefix + (c,))
                remaining.add(c)

    rec(())
    words = []
    for order in orders:
        rank = {c: pos for pos, c in enumerate(order, 1)}
        f = [0] * t.n
        for ci, block in enumerate(cls, 1):
            for x in block:
                f[x - 1] = rank[ci]
        words.append(tuple(f))
    return tuple(sorted(words))


def L_morphism(t: Topology) -> LinComb:
    """Plain sum of the linear extensions of t."""
    return LinComb.from_terms((f, 1) for f in linear_extensions(t))


def L_morphism_lin(x: LinComb) -> LinComb:
    return linear_extend(L_morphism, x)


def stanley_decomposition(t: Topology) -> dict[Word, tuple[Word, ...]]:
    """For each linear extension f, the down-set of f in the word order.

    The down-sets are pairwise disjoint and their union is the set of strict
    partitions of t.
    """
    words = packed_words(t.n)
    return {
        f: tuple(g for g in words if word_leq(g, f)) for f in linear_extensions(t)
    }


def linear_extension_blocks(t: Topology) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Linear extensions as ordered set partitions instead of words."""
    return tuple(word_to_blocks(f) for f in linear_extensions(t))
