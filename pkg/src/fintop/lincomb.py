"""Free modules over the q-polynomial scalars.

A LinComb is a finitely supported map from basis labels to QPoly. Labels are
packed words (tuples of ints), topologies, or pairs of either (tensor
squares); pairs make coproduct values ordinary LinCombs, so one bilinear
extension routine serves products, coproducts and pairings alike.
"""

from __future__ import annotations

from fractions import Fraction
from collections.abc import Callable

from .qpoly import QPoly
from .topology import Topology

Label = object


def is_tensor_label(label) -> bool:
    """Tensor labels are tuples of labels; words are tuples of ints."""
    return (
        isinstance(label, tuple)
        and bool(label)
        and not any(isinstance(x, int) for x in label)
    )


def label_sort_key(label):
    """Total order on labels: words by (length, letters), topologies by key,
    tensor factors lexicographically by component key."""
    if isinstance(label, Topology):
        return ("T", label.n, label.key)
    if isinstance(label, tuple):
        if is_tensor_label(label):
            return ("P",) + tuple(label_sort_key(x) for x in label)
        return ("w", len(label), label)
    raise TypeError(f"not a basis label: {label!r}")


def label_degree(label) -> int:
    """Homogeneous degree of a label: word length, topology size, or the sum
    over tensor components."""
    if isinstance(label, Topology):
        return label.n
    if isinstance(label, tuple):
        if is_tensor_label(label):
            return sum(label_degree(x) for x in label)
        return len(label)
    raise TypeError(f"not a basis label: {label!r}")


def _coeff(c) -> QPoly:
    if isinstance(c, QPoly):
        return c
    if isinstance(c, int):
        return QPoly.integer(c)
    raise TypeError(f"not a scalar: {c!r}")


class LinComb:
    """Finitely supported label -> QPoly map; zero coefficients never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        self._terms = {l: c for l, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def term(cls, label, coeff=1) -> "LinComb":
        return cls({label: _coeff(coeff)})

    @classmethod
    def from_terms(cls, pairs) -> "LinComb":
        acc: dict = {}
        for label, coeff in pairs:
            c = _coeff(coeff)
            acc[label] = acc.get(label, QPoly.zero()) + c
        return cls(acc)

    def items(self):
        """Term iteration in label-sorted order."""
        return sorted(self._terms.items(), key=lambda t: label_sort_key(t[0]))

    def coeff(self, label) -> QPoly:
        return self._terms.get(label, QPoly.zero())

    def support(self):
        return sorted(self._terms, key=label_sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self._terms)
        for l, c in other._terms.items():
            out[l] = out.get(l, QPoly.zero()) + c
        return LinComb(out)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        return LinComb({l: -c for l, c in self._terms.items()})

    def scale(self, scalar) -> "LinComb":
        s = _coeff(scalar)
        return LinComb({l: c * s for l, c in self._terms.items()})

    def __rmul__(self, scalar) -> "LinComb":
        return self.scale(scalar)

    def by_degree(self) -> dict[int, "LinComb"]:
        """Partition the support by label degree."""
        out: dict[int, dict] = {}
        for l, c in self._terms.items():
            out.setdefault(label_degree(l), {})[l] = c
        return {d: LinComb(t) for d, t in sorted(out.items())}

    def map_labels(self, fn: Callable) -> "LinComb":
        """Relabel the basis along fn (labels may collide; coefficients add)."""
        return LinComb.from_terms((fn(l), c) for l, c in self._terms.items())

    def evaluate_coeffs(self, point) -> dict:
        """Specialize every coefficient at a rational point; drops zeros."""
        out = {}
        for l, c in self._terms.items():
            v = c.evaluate(point)
            if v != 0:
                out[l] = v
        return out

    def __repr__(self) -> str:
        from .serialize import render_lincomb

        return f"LinComb({render_lincomb(self)})"


def linear_extend(op: Callable, x: LinComb) -> LinComb:
    """Extend a label-level map label -> LinComb linearly."""
    acc = LinComb.zero()
    for l, c in x._terms.items():
        acc = acc + op(l).scale(c)
    return acc


def bilinear_extend(op: Callable, x: LinComb, y: LinComb) -> LinComb:
    """Extend a label-level map (label, label) -> LinComb bilinearly."""
    acc = LinComb.zero()
    for la, ca in x._terms.items():
        for lb, cb in y._terms.items():
            acc = acc + op(la, lb).scale(ca * cb)
    return acc


def tensor_of(x: LinComb, y: LinComb) -> LinComb:
    """The tensor square element x (x) y, labels become pairs."""
    out: dict = {}
    for la, ca in x._terms.items():
        for lb, cb in y._terms.items():
            key = (la, lb)
            out[key] = out.get(key, QPoly.zero()) + ca * cb
    return LinComb(out)


def tensor_map(x: LinComb, left: Callable, right: Callable) -> LinComb:
    """Apply label -> LinComb maps to both sides of a tensor LinComb."""
    acc = LinComb.zero()
    for (la, lb), c in x._terms.items():
        acc = acc + tensor_of(left(la), right(lb)).scale(c)
    return acc


def tensor_contract(x: LinComb, op: Callable) -> LinComb:
    """Collapse a tensor LinComb with a (label, label) -> LinComb pairing."""
    acc = LinComb.zero()
    for (la, lb), c in x._terms.items():
        acc = acc + op(la, lb).scale(c)
    return acc


def tensor_flip(x: LinComb) -> LinComb:
    """Swap the two tensor factors."""
    return LinComb({(b, a): c for (a, b), c in x._terms.items()})
