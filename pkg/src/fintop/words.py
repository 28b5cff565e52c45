"""Packed words and permutations.

A packed word is a finite word on positive integers whose letter set is an
initial segment {1, ..., m}. Words are plain tuples of ints throughout; the
empty tuple is the unit. Positions and letters are 1-based in every public
interface.

Text format (shared with the CLI and golden files): comma-separated letters,
e.g. ``3,3,1,2,3,1``; the empty word is the empty string.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

from .errors import CapExceeded, SizeMismatch

Word = tuple[int, ...]

WORD_CAP_DEFAULT = 8


def max_letter(word: Sequence[int]) -> int:
    """Largest letter of the word, 0 for the empty word."""
    return max(word) if word else 0


def is_packed(word: Sequence[int]) -> bool:
    """Check that the letter set is exactly {1, ..., max}.

    >>> is_packed((1, 1, 2)), is_packed((1, 3)), is_packed(())
    (True, False, True)
    """
    if not word:
        return True
    letters = set(word)
    return min(letters) >= 1 and letters == set(range(1, max(letters) + 1))


def pack(word: Sequence[int]) -> Word:
    """Relabel the letters by the unique increasing bijection onto {1, ..., m}.

    Idempotent on packed words.

    >>> pack((3, 5, 3))
    (1, 2, 1)
    >>> pack((1, 1, 2))
    (1, 1, 2)
    """
    ranks = {v: r for r, v in enumerate(sorted(set(word)), 1)}
    return tuple(ranks[v] for v in word)


def restrict_word(word: Sequence[int], letters: Iterable[int]) -> Word:
    """Subword keeping the letters that belong to the given set, order preserved.

    The result is generally not packed.

    >>> restrict_word((5, 1, 1, 4, 2, 3), {1, 2, 3})
    (1, 1, 2, 3)
    """
    keep = set(letters)
    return tuple(v for v in word if v in keep)


def standardize(word: Sequence[int]) -> Word:
    """The permutation refining the word's letter comparisons, ties left-to-right.

    >>> standardize((2, 1, 2))
    (2, 1, 3)
    >>> standardize((2, 2, 1))
    (2, 3, 1)
    """
    order = sorted(range(len(word)), key=lambda p: (word[p], p))
    sigma = [0] * len(word)
    for rank, p in enumerate(order, 1):
        sigma[p] = rank
    return tuple(sigma)


def is_permutation(word: Sequence[int]) -> bool:
    """True when the word is a bijection onto {1, ..., n}."""
    return is_packed(word) and len(set(word)) == len(word)


def j_involution(word: Sequence[int]) -> Word:
    """Relabel by the unique decreasing bijection from the letter set onto {1, ..., m}.

    Involutive on packed words.

    >>> j_involution((6, 5, 1, 3, 3, 4, 2, 1))
    (1, 2, 6, 4, 4, 3, 5, 6)
    """
    m = max_letter(word)
    return tuple(m + 1 - v for v in word)


def ascent_set(word: Sequence[int]) -> frozenset[int]:
    """Positions where the letter block can merge upward, 1-based.

    Position i qualifies when its letter is below the maximum, i is the last
    position carrying that letter, and every position carrying the next
    letter lies strictly to the right.

    >>> sorted(ascent_set((4, 1, 2, 1, 3, 3)))
    [3]
    >>> sorted(ascent_set((1, 2, 3)))
    [1, 2]
    """
    if not word:
        return frozenset()
    mx = max(word)
    last: dict[int, int] = {}
    first: dict[int, int] = {}
    for pos, v in enumerate(word, 1):
        last[v] = pos
        first.setdefault(v, pos)
    return frozenset(
        i
        for i, v in enumerate(word, 1)
        if v < mx and last[v] == i and first[v + 1] > i
    )


def packed_words(n: int, cap: int = WORD_CAP_DEFAULT) -> tuple[Word, ...]:
    """All packed words of length n, sorted lexicographically.

    Raises CapExceeded beyond the cap (the number of words is the Fubini
    number of n, which grows fast).

    >>> packed_words(2)
    ((1, 1), (1, 2), (2, 1))
    >>> len(packed_words(3)), len(packed_words(4))
    (13, 75)
    """
    if n > cap:
        raise CapExceeded(f"packed words of length {n} exceed cap {cap}")
    return _packed_words_cached(n)


_WORD_CACHE: dict[int, tuple[Word, ...]] = {}


def _packed_words_cached(n: int) -> tuple[Word, ...]:
    if n in _WORD_CACHE:
        return _WORD_CACHE[n]
    out: list[Word] = []
    if n == 0:
        out.append(())
    else:
        # Surjections onto {1..k} for each k; prune when the missing letters
        # cannot fit in the remaining positions.
        word = [0] * n

        def fill(pos: int, k: int, seen: int) -> None:
            if k - bin(seen).count("1") > n - pos:
                return
            if pos == n:
                out.append(tuple(word))
                return
            for v in range(1, k + 1):
                word[pos] = v
                fill(pos + 1, k, seen | (1 << v))

        for k in range(1, n + 1):
            fill(0, k, 0)
        out.sort()
    result = tuple(out)
    _WORD_CACHE[n] = result
    return result


def permutations(n: int) -> tuple[Word, ...]:
    """All permutations of {1, ..., n} in lexicographic order."""
    return tuple(itertools.permutations(range(1, n + 1)))


def std_fiber(sigma: Sequence[int]) -> tuple[Word, ...]:
    """All packed words whose standardization is the given permutation.

    Built directly: each subset I of ascent_set(sigma) yields one word, read
    along sigma inverse, with the letter incremented exactly at positions in
    I and at positions outside ascent_set(sigma). The fiber therefore has
    2**len(ascent_set(sigma)) elements.

    >>> sorted(std_fiber((1, 2, 3)))
    [(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3)]
    >>> std_fiber((3, 2, 1))
    ((3, 2, 1),)
    """
    n = len(sigma)
    if n == 0:
        return ((),)
    inv = [0] * (n + 1)
    for pos, v in enumerate(sigma, 1):
        inv[v] = pos
    merge_pts = sorted(ascent_set(sigma))
    fiber = []
    for choice in itertools.product((False, True), repeat=len(merge_pts)):
        incremented = {p for p, inc in zip(merge_pts, choice) if inc}
        f = [0] * (n + 1)
        f[inv[1]] = 1
        for v in range(1, n):
            pos = inv[v]
            step = 1 if (pos in incremented or pos not in merge_pts) else 0
            f[inv[v + 1]] = f[pos] + step
        fiber.append(tuple(f[1:]))
    return tuple(sorted(fiber))


def word_to_blocks(word: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """The ordered set partition (A_1, ..., A_k) with i in A_{word[i]}.

    >>> word_to_blocks((2, 1, 2))
    ((2,), (1, 3))
    """
    blocks: list[list[int]] = [[] for _ in range(max_letter(word))]
    for pos, v in enumerate(word, 1):
        blocks[v - 1].append(pos)
    return tuple(tuple(b) for b in blocks)


def blocks_to_word(blocks: Sequence[Iterable[int]]) -> Word:
    """Inverse of word_to_blocks; blocks must be disjoint, nonempty, covering.

    Raises SizeMismatch when the blocks are not an ordered set partition of
    {1, ..., n}.
    """
    positions: dict[int, int] = {}
    for idx, block in enumerate(blocks, 1):
        block = tuple(block)
        if not block:
            raise SizeMismatch("empty block in ordered set partition")
        for p in block:
            if p in positions:
                raise SizeMismatch(f"position {p} appears in two blocks")
            positions[p] = idx
    n = len(positions)
    if set(positions) != set(range(1, n + 1)):
        raise SizeMismatch("blocks do not cover an initial segment")
    return tuple(positions[p] for p in range(1, n + 1))


def word_to_text(word: Sequence[int]) -> str:
    """Render in the shared text format, e.g. ``3,3,1,2,3,1``; empty word -> ''."""
    return ",".join(str(v) for v in word)


def word_from_text(text: str) -> Word:
    """Parse the shared text format. The empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))
