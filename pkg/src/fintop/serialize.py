"""Text, JSON and CSV renderings of the shared value types.

These are bit-exact output contracts used by the CLI and the golden checks:

- packed word: comma-separated letters, empty string for the unit;
- topology: canonical key ``n:bits``;
- polynomial: graded-lex term order with exponent elision;
- linear combination: ``coeff * label`` terms sorted by label key, joined
  with signs, multi-term coefficients parenthesized;
- JSON: ``{"terms": [{"basis": ..., "coeff": ...}]}``, tensors with
  ``basis_left`` / ``basis_right``;
- Gram matrices: CSV with canonical keys as row and column headers.
"""

from __future__ import annotations

import json

from .lincomb import LinComb, is_tensor_label
from .qpoly import QPoly, parse_qpoly
from .topology import Topology
from .words import word_from_text, word_to_text

TENSOR_SEP = " (x) "


def label_to_text(label) -> str:
    if isinstance(label, Topology):
        return label.key
    if isinstance(label, tuple):
        if is_tensor_label(label):
            return TENSOR_SEP.join(label_to_text(x) for x in label)
        return word_to_text(label)
    raise TypeError(f"not a basis label: {label!r}")


def _is_pair(label) -> bool:
    return is_tensor_label(label) and len(label) == 2


def _single_negative_constant(c: QPoly) -> int | None:
    v = c.constant_value()
    if v is not None and v < 0:
        return -v
    return None


def render_qpoly(c: QPoly) -> str:
    return c.to_text()


def render_lincomb(x: LinComb) -> str:
    """Deterministic text form, '0' when empty.

    >>> from .lincomb import LinComb
    >>> render_lincomb(LinComb.from_terms([((1, 2), 1), ((1, 1), -1)]))
    '-1 * 1,1 + 1 * 1,2'
    """
    if x.is_zero():
        return "0"
    pieces = []
    for idx, (label, coeff) in enumerate(x.items()):
        neg = _single_negative_constant(coeff)
        if neg is not None:
            body = f"{neg} * {label_to_text(label)}"
            sign = "-"
        else:
            text = coeff.to_text()
            if " + " in text or " - " in text:
                text = f"({text})"
            body = f"{text} * {label_to_text(label)}"
            sign = "+"
        if idx == 0:
            pieces.append(body if sign == "+" else "-" + body)
        else:
            pieces.append((" + " if sign == "+" else " - ") + body)
    return "".join(pieces)


def emit_json(x: LinComb) -> str:
    """Deterministic JSON with terms sorted by basis key."""
    terms = []
    for label, coeff in x.items():
        if _is_pair(label):
            terms.append(
                {
                    "basis_left": label_to_text(label[0]),
                    "basis_right": label_to_text(label[1]),
                    "coeff": coeff.to_text(),
                }
            )
        else:
            terms.append({"basis": label_to_text(label), "coeff": coeff.to_text()})
    return json.dumps({"terms": terms})


def parse_lincomb_json(text: str, kind: str = "word") -> LinComb:
    """Round-trip parser for emit_json output.

    ``kind`` selects the label parser: 'word' or 'topology'; tensor terms
    are recognized by their basis_left/basis_right fields, both sides parsed
    with the same kind.
    """
    parse_label = word_from_text if kind == "word" else Topology.from_text
    data = json.loads(text)
    pairs = []
    for term in data["terms"]:
        coeff = parse_qpoly(term["coeff"])
        if "basis_left" in term:
            label = (parse_label(term["basis_left"]), parse_label(term["basis_right"]))
        else:
            label = parse_label(term["basis"])
        pairs.append((label, coeff))
    return LinComb.from_terms(pairs)


def emit_csv_matrix(labels, rows) -> str:
    """Integer matrix as CSV with label headers on both axes."""
    head = "," + ",".join(label_to_text(l) for l in labels)
    lines = [head]
    for label, row in zip(labels, rows):
        lines.append(label_to_text(label) + "," + ",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
