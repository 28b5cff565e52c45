"""Integer-coefficient polynomials in the three formal parameters q1, q2, q3.

These are the scalars of every linear combination in the package, so that
morphism identities hold as exact polynomial identities rather than point
evaluations. Evaluation specializes to any rational point.

Text contract: terms sorted graded-lexicographically, ``q1^a*q2^b*q3^c``
factors with exponent-1 and exponent-0 elision, e.g. ``1 - q1 - q2`` and
``q1^2*q2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

Expo = tuple[int, int, int]

_ZERO_E: Expo = (0, 0, 0)


def _term_order(e: Expo):
    # graded-lex: total degree first, then q1 > q2 > q3
    return (sum(e), tuple(-x for x in e))


class QPoly:
    """Sparse polynomial in q1, q2, q3 with arbitrary-precision int coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Expo, int] | None = None):
        clean = {e: c for e, c in (terms or {}).items() if c}
        self._terms = dict(sorted(clean.items(), key=lambda t: _term_order(t[0])))

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def integer(cls, c: int) -> "QPoly":
        return cls({_ZERO_E: int(c)})

    @classmethod
    def monomial(cls, e1: int, e2: int, e3: int, coeff: int = 1) -> "QPoly":
        return cls({(e1, e2, e3): coeff})

    @classmethod
    def variable(cls, i: int) -> "QPoly":
        """The generator q_i, i in {1, 2, 3}."""
        e = [0, 0, 0]
        e[i - 1] = 1
        return cls({tuple(e): 1})

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def constant_value(self) -> int | None:
        """The integer value if the polynomial is constant, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and _ZERO_E in self._terms:
            return self._terms[_ZERO_E]
        return None

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.integer(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "QPoly":
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "QPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "QPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "QPoly":
        other = _coerce(other)
        out: dict[Expo, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def evaluate(self, point: tuple) -> Fraction:
        """Ring-morphism evaluation at a rational point (q1, q2, q3)."""
        p = tuple(Fraction(x) for x in point)
        total = Fraction(0)
        for (e1, e2, e3), c in self._terms.items():
            total += c * p[0] ** e1 * p[1] ** e2 * p[2] ** e3
        return total

    def swap_q1_q2(self) -> "QPoly":
        """Transpose the exponents of q1 and q2."""
        return QPoly({(e2, e1, e3): c for (e1, e2, e3), c in self._terms.items()})

    def to_text(self) -> str:
        """Render per the text contract.

        >>> (QPoly.integer(1) - QPoly.variable(1) - QPoly.variable(2)).to_text()
        '1 - q1 - q2'
        >>> QPoly.monomial(2, 1, 0).to_text()
        'q1^2*q2'
        """
        if not self._terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self._terms.items()):
            factors = []
            for name, exp in zip(("q1", "q2", "q3"), e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            mag = abs(c)
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            if idx == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"QPoly({self.to_text()})"


def _coerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.integer(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial scalar")


ZERO = QPoly.zero()
ONE = QPoly.integer(1)
Q1 = QPoly.variable(1)
Q2 = QPoly.variable(2)
Q3 = QPoly.variable(3)


def qpoly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def qpoly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def qpoly_neg(a: QPoly) -> QPoly:
    return -a


def qpoly_eval(a: QPoly, point: tuple) -> Fraction:
    return a.evaluate(point)


_MONO_RE = re.compile(r"^q([123])(?:\^(\d+))?$")


def parse_qpoly(text: str) -> QPoly:
    """Parse the text contract back into a polynomial.

    Accepts exactly what to_text produces: '0', integers, and signed sums of
    ``coeff*q1^a*q2^b*q3^c`` monomials.
    """
    text = text.strip()
    if text == "0":
        return QPoly.zero()
    # normalize to a list of (sign, body)
    parts: list[tuple[int, str]] = []
    rest = text
    sign = 1
    if rest.startswith("-"):
        sign = -1
        rest = rest[1:].strip()
    while True:
        next_plus = _find_sep(rest)
        if next_plus is None:
            parts.append((sign, rest.strip()))
            break
        idx, sep = next_plus
        parts.append((sign, rest[:idx].strip()))
        sign = 1 if sep == "+" else -1
        rest = rest[idx + 3 :]
    terms: dict[Expo, int] = {}
    for sgn, body in parts:
        coeff = 1
        expo = [0, 0, 0]
        for factor in body.split("*"):
            factor = factor.strip()
            m = _MONO_RE.match(factor)
            if m:
                expo[int(m.group(1)) - 1] += int(m.group(2) or 1)
            else:
                coeff *= int(factor)
        e = (expo[0], expo[1], expo[2])
        terms[e] = terms.get(e, 0) + sgn * coeff
    return QPoly(terms)


def _find_sep(s: str) -> tuple[int, str] | None:
    for i in range(len(s) - 2):
        if s[i : i + 3] in (" + ", " - "):
            return i, s[i + 1]
    return None


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and rational strings like '1/2' to Fraction."""
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational value: {x!r}")
