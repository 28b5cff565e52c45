"""Finite topologies on {1, ..., n}, stored as preorders.

A topology on a finite set is equivalent to a preorder: the open sets are
exactly the up-ideals of the relation. The relation is stored row-wise as
bitmasks (``rows[i]`` holds bit j iff i+1 is below j+1), which keeps
validation, restriction and products at O(n) bit operations per row.

Canonical key and text format: ``n:`` followed by the n*n row-major relation
bits, e.g. the chain 1<2 is ``2:1101`` and the merged pair is ``2:1111``.
Keys sort enumeration order and index every cache.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from collections.abc import Iterable, Sequence

from .errors import CapExceeded, NotReflexive, NotTransitive, SizeMismatch
from .words import Word

TOPOLOGY_CAP_DEFAULT = 6


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = (mask & -mask).bit_length() - 1
        out.append(b)
        mask &= mask - 1
    return out


@dataclass(frozen=True)
class Topology:
    """A preorder on {1, ..., n}; immutable and hashable.

    The raw constructor trusts its input; use make_topology / closure_topology
    / from_text to build validated values.
    """

    n: int
    rows: tuple[int, ...]

    # -- basic relation queries (1-based) ------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool((self.rows[i - 1] >> (j - 1)) & 1)

    def strictly_below(self, i: int, j: int) -> bool:
        return self.leq(i, j) and not self.leq(j, i)

    def similar(self, i: int, j: int) -> bool:
        return self.leq(i, j) and self.leq(j, i)

    @property
    def degree(self) -> int:
        return self.n

    # -- canonical key --------------------------------------------------------

    @cached_property
    def key(self) -> str:
        bits = "".join(
            "1" if (self.rows[i] >> j) & 1 else "0"
            for i in range(self.n)
            for j in range(self.n)
        )
        return f"{self.n}:{bits}"

    def to_text(self) -> str:
        return self.key

    @classmethod
    def from_text(cls, text: str) -> "Topology":
        head, _, bits = text.strip().partition(":")
        n = int(head)
        if len(bits) != n * n or set(bits) - {"0", "1"}:
            raise SizeMismatch(f"malformed topology text {text!r}")
        pairs = [
            (i + 1, j + 1)
            for i in range(n)
            for j in range(n)
            if bits[i * n + j] == "1"
        ]
        return make_topology(n, pairs)

    def __repr__(self) -> str:
        return f"Topology({self.key!r})"

    # -- open sets ------------------------------------------------------------

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        """All up-ideal bitmasks, sorted by size then by their element tuples."""
        masks = [
            m
            for m in range(1 << self.n)
            if all((self.rows[i] & ~m) == 0 for i in _bits(m))
        ]
        masks.sort(key=lambda m: (bin(m).count("1"), _bits(m)))
        return tuple(masks)

    def open_sets(self) -> tuple[tuple[int, ...], ...]:
        """Open sets as sorted 1-based tuples; always contains () and full."""
        return tuple(tuple(b + 1 for b in _bits(m)) for m in self.open_masks)

    # -- equivalence classes and the T0 collapse -------------------------------

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes of mutual comparability, each sorted, ordered by minimum."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cls = [
                j
                for j in range(self.n)
                if (self.rows[i] >> j) & 1 and (self.rows[j] >> i) & 1
            ]
            for j in cls:
                seen[j] = True
            out.append(tuple(x + 1 for x in cls))
        out.sort(key=lambda c: c[0])
        return tuple(out)

    def is_t0(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    def class_defect(self) -> int:
        """Degree minus number of classes; zero exactly on T0 topologies."""
        return self.n - len(self.classes)

    def collapse(self) -> "Topology":
        """The induced partial order on classes, classes indexed by minimum."""
        cls = self.classes
        k = len(cls)
        rows = []
        for a in range(k):
            r = 0
            for b in range(k):
                if self.leq(cls[a][0], cls[b][0]):
                    r |= 1 << b
            rows.append(r)
        return Topology(k, tuple(rows))

    # -- structural operations --------------------------------------------------

    def complement(self) -> "Topology":
        """Open sets replaced by their complements; transposes the relation."""
        rows = [0] * self.n
        for i in range(self.n):
            for j in _bits(self.rows[i]):
                rows[j] |= 1 << i
        return Topology(self.n, tuple(rows))

    def restrict(self, elements: Iterable[int]) -> "Topology":
        """Induced topology on a subset, relabeled along the increasing bijection."""
        keep = sorted(set(elements))
        pos = {e: idx for idx, e in enumerate(keep)}
        rows = []
        for e in keep:
            r = 0
            for f in keep:
                if self.leq(e, f):
                    r |= 1 << pos[f]
            rows.append(r)
        return Topology(len(keep), tuple(rows))

    def restrict_mask(self, mask: int) -> "Topology":
        """Same as restrict, for a 0-based bitmask of elements."""
        return self.restrict(b + 1 for b in _bits(mask))

    def reverse_relabel(self) -> "Topology":
        """Conjugate by the decreasing bijection i -> n+1-i of the ground set."""
        n = self.n
        rows = [0] * n
        for i in range(n):
            for j in _bits(self.rows[i]):
                rows[n - 1 - i] |= 1 << (n - 1 - j)
        return Topology(n, tuple(rows))


EMPTY = Topology(0, ())
POINT = Topology(1, (1,))


def make_topology(n: int, relation) -> Topology:
    """Validate a relation and return the topology it defines.

    ``relation`` is either an iterable of 1-based pairs (i, j), or an n x n
    matrix of 0/1 entries; a list of n rows of n booleans is read as a
    matrix, anything else as pairs. Raises NotReflexive / NotTransitive with
    a witness.

    >>> make_topology(2, [(1, 1), (1, 2), (2, 2)]).key
    '2:1101'
    """
    rows = [0] * n
    rel = list(relation) if relation is not None else []
    is_matrix = (
        len(rel) == n
        and n > 0
        and all(
            isinstance(r, Sequence)
            and len(r) == n
            and all(isinstance(x, (bool, int)) and x in (0, 1) for x in r)
            for r in rel
        )
    )
    if is_matrix:
        for i in range(n):
            for j in range(n):
                if rel[i][j]:
                    rows[i] |= 1 << j
    else:
        for i, j in rel:
            rows[i - 1] |= 1 << (j - 1)
    for i in range(n):
        if not (rows[i] >> i) & 1:
            raise NotReflexive(i + 1)
    for i in range(n):
        for j in _bits(rows[i]):
            extra = rows[j] & ~rows[i]
            if extra:
                k = _bits(extra)[0]
                raise NotTransitive(i + 1, j + 1, k + 1)
    return Topology(n, tuple(rows))


def closure_topology(n: int, pairs: Iterable[tuple[int, int]]) -> Topology:
    """Reflexive-transitive closure of the given 1-based pairs."""
    rows = [1 << i for i in range(n)]
    for i, j in pairs:
        rows[i - 1] |= 1 << (j - 1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = rows[i]
            for j in _bits(acc):
                acc |= rows[j]
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    return Topology(n, tuple(rows))


def topology_of_word(word: Word) -> Topology:
    """The preorder i below j iff word[i] <= word[j].

    Its open sets are the preimages of upper letter intervals.

    >>> topology_of_word((1, 2)).key
    '2:1101'
    """
    n = len(word)
    rows = []
    for i in range(n):
        r = 0
        for j in range(n):
            if word[i] <= word[j]:
                r |= 1 << j
        rows.append(r)
    return Topology(n, tuple(rows))


def refinement_leq(a: Topology, b: Topology) -> bool:
    """Refinement order: every open set of a is open in b.

    Implemented by relation containment (the relation of b is contained in
    the relation of a), which is equivalent and O(n^2).

    >>> merged = closure_topology(2, [(1, 2), (2, 1)])
    >>> chain = closure_topology(2, [(1, 2)])
    >>> refinement_leq(merged, chain)
    True
    """
    if a.n != b.n:
        raise SizeMismatch(f"degrees differ: {a.n} vs {b.n}")
    return all((rb & ~ra) == 0 for ra, rb in zip(a.rows, b.rows))


# -- enumeration ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _posets(k: int) -> tuple[tuple[int, ...], ...]:
    """All labeled partial orders on {0, ..., k-1} as row-bitmask tuples.

    Built by extending each order on k-1 points with the new maximum-index
    element: choose a downward-closed set D of elements below it and an
    upward-closed set U above it, disjoint, with D x U already related.
    """
    if k == 0:
        return ((),)
    out = []
    new = k - 1
    newbit = 1 << new
    full = newbit - 1
    for rows in _posets(k - 1):
        cols = [0] * new
        for i, r in enumerate(rows):
            for j in _bits(r):
                cols[j] |= 1 << i
        down_closed = [
            d for d in range(full + 1) if all((cols[i] & ~d) == 0 for i in _bits(d))
        ]
        up_closed = [
            u
            for u in range(full + 1)
            if all((rows[i] & ~(1 << i) & ~u) == 0 for i in _bits(u))
        ]
        for d in down_closed:
            inter = full
            for i in _bits(d):
                inter &= rows[i]
            for u in up_closed:
                if u & d or u & ~inter:
                    continue
                newrows = list(rows)
                for i in _bits(d):
                    newrows[i] |= newbit
                newrows.append(newbit | u)
                out.append(tuple(newrows))
    return tuple(out)


def _set_partitions(n: int):
    """Set partitions of {0, ..., n-1}, blocks ordered by their minimum."""
    if n == 0:
        yield ()
        return
    assignment = [0] * n

    def rec(i: int, k: int):
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(k)]
            for idx in range(n):
                blocks[assignment[idx]].append(idx)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(k + 1):
            assignment[i] = b
            yield from rec(i + 1, max(k, b + 1))

    yield from rec(0, 0)


_TOPOLOGY_CACHE: dict[int, tuple[Topology, ...]] = {}


def enumerate_topologies(n: int, cap: int = TOPOLOGY_CAP_DEFAULT) -> tuple[Topology, ...]:
    """Every topology on {1, ..., n} exactly once, sorted by canonical key.

    Strategy: every preorder is the pullback of a partial order on its
    classes, so run over set partitions and labeled posets on the blocks.

    >>> [len(enumerate_topologies(n)) for n in range(5)]
    [1, 1, 4, 29, 355]
    """
    if n > cap:
        raise CapExceeded(f"topologies on {n} points exceed cap {cap}")
    if n in _TOPOLOGY_CACHE:
        return _TOPOLOGY_CACHE[n]
    out = []
    for blocks in _set_partitions(n):
        k = len(blocks)
        bmask = [0] * k
        for bi, block in enumerate(blocks):
            for x in block:
                bmask[bi] |= 1 << x
        for prows in _posets(k):
            rows = [0] * n
            for bi, block in enumerate(blocks):
                r = 0
                for j in _bits(prows[bi]):
                    r |= bmask[j]
                for x in block:
                    rows[x] = r
            out.append(Topology(n, tuple(rows)))
    out.sort(key=lambda t: t.key)
    result = tuple(out)
    _TOPOLOGY_CACHE[n] = result
    return result
