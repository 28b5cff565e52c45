"""The two products, the coproduct and derived structure on topologies.

The free module over all finite topologies carries two associative products
sharing the empty topology as unit: the disjoint-union product (dot) and the
ordinal-sum product (down) which puts the whole first factor below the
second. The coproduct splits along open sets. Dot and the coproduct form a
graded connected Hopf algebra; down and the coproduct satisfy the
infinitesimal compatibility instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyInput
from .lincomb import LinComb, bilinear_extend, linear_extend
from .qpoly import QPoly
from .topology import EMPTY, Topology


def product_dot(a: Topology, b: Topology) -> Topology:
    """Disjoint union, the second factor shifted up by deg(a)."""
    shift = a.n
    rows = list(a.rows) + [r << shift for r in b.rows]
    return Topology(a.n + b.n, tuple(rows))


def product_down(a: Topology, b: Topology) -> Topology:
    """Disjoint union plus every element of a below every element of b."""
    shift = a.n
    upper = ((1 << b.n) - 1) << shift
    rows = [r | upper for r in a.rows] + [r << shift for r in b.rows]
    return Topology(a.n + b.n, tuple(rows))


def dot(x: LinComb, y: LinComb) -> LinComb:
    return bilinear_extend(lambda a, b: LinComb.term(product_dot(a, b)), x, y)


def down(x: LinComb, y: LinComb) -> LinComb:
    return bilinear_extend(lambda a, b: LinComb.term(product_down(a, b)), x, y)


def tensor_dot(x: LinComb, y: LinComb) -> LinComb:
    """Componentwise dot product of two tensor-square elements."""
    return bilinear_extend(
        lambda p, q: LinComb.term((product_dot(p[0], q[0]), product_dot(p[1], q[1]))),
        x,
        y,
    )


def tensor_down(x: LinComb, y: LinComb) -> LinComb:
    """Componentwise down product of two tensor-square elements."""
    return bilinear_extend(
        lambda p, q: LinComb.term((product_down(p[0], q[0]), product_down(p[1], q[1]))),
        x,
        y,
    )


def coproduct(t: Topology) -> LinComb:
    """One term per open set O: (restriction to the complement) (x) (restriction to O).

    Distinct open sets with equal restrictions merge with integer multiplicity.
    """
    full = (1 << t.n) - 1
    return LinComb.from_terms(
        ((t.restrict_mask(full & ~m), t.restrict_mask(m)), 1) for m in t.open_masks
    )


def coproduct_lin(x: LinComb) -> LinComb:
    return linear_extend(coproduct, x)


def reduced_coproduct(t: Topology) -> LinComb:
    """Coproduct without the two unit-sided terms."""
    full = (1 << t.n) - 1
    return LinComb.from_terms(
        ((t.restrict_mask(full & ~m), t.restrict_mask(m)), 1)
        for m in t.open_masks
        if m != 0 and m != full
    )


def counit(x: LinComb) -> QPoly:
    """Coefficient of the empty topology."""
    return x.coeff(EMPTY)


@dataclass(frozen=True)
class FactorizationResult:
    """Maximal factorization of a topology into indecomposables for one product."""

    factors: tuple[Topology, ...]
    kind: str


def _splits_dot(t: Topology, m: int) -> bool:
    # no relation across {1..m} vs the rest, either direction
    low = (1 << m) - 1
    high = ((1 << t.n) - 1) & ~low
    return all((t.rows[i] & high) == 0 for i in range(m)) and all(
        (t.rows[i] & low) == 0 for i in range(m, t.n)
    )


def _splits_down(t: Topology, m: int) -> bool:
    # everything in {1..m} strictly below everything above, nothing back down
    low = (1 << m) - 1
    high = ((1 << t.n) - 1) & ~low
    return all((t.rows[i] & high) == high for i in range(m)) and all(
        (t.rows[i] & low) == 0 for i in range(m, t.n)
    )


def decompose(t: Topology, kind: str = "dot") -> FactorizationResult:
    """Unique maximal factorization into indecomposables for the given product.

    Splits greedily at the smallest admissible cut; raises EmptyInput on the
    unit.
    """
    if t.n == 0:
        raise EmptyInput("the empty topology has no factorization")
    splitter = {"dot": _splits_dot, "down": _splits_down}[kind]
    factors = []
    rest = t
    while rest.n:
        m = next((m for m in range(1, rest.n) if splitter(rest, m)), rest.n)
        factors.append(rest.restrict(range(1, m + 1)))
        rest = rest.restrict(range(m + 1, rest.n + 1))
    return FactorizationResult(tuple(factors), kind)


def is_indecomposable(t: Topology, kind: str = "dot") -> bool:
    if t.n == 0:
        raise EmptyInput("the empty topology is neither")
    splitter = {"dot": _splits_dot, "down": _splits_down}[kind]
    return not any(splitter(t, m) for m in range(1, t.n))


def indecomposability_class(t: Topology) -> str:
    """One of 'bi', 'dot-only', 'down-only'.

    A nonempty topology is never decomposable for both products at once, so
    these three cases are exhaustive.
    """
    d = is_indecomposable(t, "dot")
    w = is_indecomposable(t, "down")
    if d and w:
        return "bi"
    if d:
        return "dot-only"
    if w:
        return "down-only"
    raise AssertionError(f"{t.key} decomposes for both products")


def theta_q(t: Topology) -> LinComb:
    """Collapse to the class poset, weighted by q1 to the class defect.

    Always lands on a T0 label; a morphism for both products and the
    coproduct as an exact polynomial identity in q1.
    """
    return LinComb.term(t.collapse(), QPoly.monomial(t.class_defect(), 0, 0))


def theta_q_lin(x: LinComb) -> LinComb:
    return linear_extend(theta_q, x)


def t0_projection(x: LinComb) -> LinComb:
    """Keep the T0 labels, kill the rest (the q1 = 0 specialization)."""
    return LinComb({l: c for l, c in x._terms.items() if l.is_t0()})


_ANTIPODE_CACHE: dict[Topology, LinComb] = {}


def antipode_label(t: Topology) -> LinComb:
    """Antipode of a basis topology for the dot Hopf structure.

    Graded connected recursion: S(t) = -t - sum S(t') . t'' over the reduced
    coproduct terms.
    """
    hit = _ANTIPODE_CACHE.get(t)
    if hit is not None:
        return hit
    if t.n == 0:
        result = LinComb.term(EMPTY)
    else:
        acc = LinComb.term(t, -1)
        for (left, right), c in reduced_coproduct(t).items():
            acc = acc - dot(antipode_label(left), LinComb.term(right)).scale(c)
        result = acc
    _ANTIPODE_CACHE[t] = result
    return result


def antipode(x: LinComb) -> LinComb:
    return linear_extend(antipode_label, x)
