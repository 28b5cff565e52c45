"""Ribbon basis of the topology Hopf algebra.

The topologies on a fixed ground set are partially ordered by refinement
(more open sets = higher). The ribbon basis R is defined degreewise by
requiring every standard basis element to be the sum of the ribbons below
it; conversion both ways is a triangular solve over that poset. The three
direct expansion rules (both products and the coproduct in the R basis) are
implemented as stated sums and cross-checked against conjugation by the
basis change.
"""

from __future__ import annotations

from functools import lru_cache

from .lincomb import LinComb
from .qpoly import QPoly
from .topology import Topology, enumerate_topologies, refinement_leq


@lru_cache(maxsize=None)
def _poset_data(n: int):
    """Per-degree refinement data: triangular processing order (coarsest
    relation last) and adjacency lists both ways."""
    topos = enumerate_topologies(n)
    order = sorted(topos, key=lambda t: sum(r.bit_count() for r in t.rows))
    rank = {t: i for i, t in enumerate(order)}
    above: dict[Topology, list[Topology]] = {t: [] for t in topos}
    below: dict[Topology, list[Topology]] = {t: [] for t in topos}
    for s in topos:
        for t in topos:
            if refinement_leq(s, t):
                below[t].append(s)
                if s != t:
                    above[s].append(t)
    return order, rank, above, below


def to_ribbon(x: LinComb) -> LinComb:
    """Rewrite a topology LinComb in ribbon coordinates (zeta transform)."""
    acc: dict[Topology, QPoly] = {}
    for t, c in x.items():
        _, _, _, below = _poset_data(t.n)
        for s in below[t]:
            acc[s] = acc.get(s, QPoly.zero()) + c
    return LinComb(acc)


def from_ribbon(x: LinComb) -> LinComb:
    """Rewrite ribbon coordinates in the standard basis (Moebius transform).

    The solve only visits the down-closure of the support: the standard
    coefficient at S is a Moebius sum over elements above S.
    """
    out: dict[Topology, QPoly] = {}
    for n, component in x.by_degree().items():
        _, rank, above, below = _poset_data(n)
        relevant: set[Topology] = set()
        for t in component.support():
            relevant.update(below[t])
        coeffs: dict[Topology, QPoly] = {}
        for t in sorted(relevant, key=lambda t: rank[t]):
            c = component.coeff(t)
            for s in above[t]:
                if s in coeffs:
                    c = c - coeffs[s]
            coeffs[t] = c
        for t, c in coeffs.items():
            if not c.is_zero():
                out[t] = c
    return LinComb(out)


@lru_cache(maxsize=None)
def ribbon_expansion(t: Topology) -> LinComb:
    """The single ribbon R_t written in the standard basis."""
    return from_ribbon(LinComb.term(t))


@lru_cache(maxsize=None)
def _split_index(n: int, k: int):
    """For every topology on n points: its restrictions to the first k and
    last n-k points, and whether the first block sits entirely strictly
    below the second. Both direct product rules filter on this."""
    first = tuple(range(1, k + 1))
    second = tuple(range(k + 1, n + 1))
    high = (((1 << (n - k)) - 1) << k) if n > k else 0
    table = []
    for t in enumerate_topologies(n):
        below_all = all((t.rows[i] & high) == high for i in range(k)) and all(
            (t.rows[i] & ((1 << k) - 1)) == 0 for i in range(k, n)
        )
        table.append((t, t.restrict(first), t.restrict(second), below_all))
    return table


def ribbon_product_dot(a: Topology, b: Topology) -> LinComb:
    """R_a . R_b: sum of ribbons over topologies restricting to a on the
    first block and to b on the second."""
    return LinComb.from_terms(
        (t, 1)
        for t, fst, snd, _ in _split_index(a.n + b.n, a.n)
        if fst == a and snd == b
    )


def ribbon_product_down(a: Topology, b: Topology) -> LinComb:
    """R_a down R_b: the dot sum restricted to topologies putting the whole
    first block strictly below the second."""
    k, n = a.n, a.n + b.n
    high = (((1 << (n - k)) - 1) << k) if n > k else 0
    out = []
    for t, fst, snd, _ in _split_index(n, k):
        if fst == a and snd == b and all((t.rows[i] & high) == high for i in range(k)):
            out.append((t, 1))
    return LinComb.from_terms(out)


def ribbon_coproduct(t: Topology) -> LinComb:
    """Coproduct in the ribbon basis: one term per open set whose complement
    lies entirely strictly below it."""
    full = (1 << t.n) - 1
    out = []
    for m in t.open_masks:
        comp = full & ~m
        if all(
            t.strictly_below(i + 1, j + 1)
            for i in range(t.n)
            if (comp >> i) & 1
            for j in range(t.n)
            if (m >> j) & 1
        ):
            out.append(((t.restrict_mask(comp), t.restrict_mask(m)), 1))
    return LinComb.from_terms(out)
