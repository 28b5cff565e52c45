"""Worked examples frozen as regression data.

Every entry is desk-checked reference output for the public operations:
expansions of the morphisms on small bases, the printed pairing matrix, the
ribbon rewrites, count tables, and one five-point partition example worked
in full. Topologies are written as (n, generating pairs) and built by
reflexive-transitive closure; coefficients are polynomial text.
"""

from __future__ import annotations

from .lincomb import LinComb
from .qpoly import parse_qpoly
from .topology import Topology, closure_topology
from .words import word_from_text

Spec = tuple[int, tuple[tuple[int, int], ...]]


def build(spec: Spec) -> Topology:
    n, pairs = spec
    return closure_topology(n, pairs)


def word_lincomb(items) -> LinComb:
    return LinComb.from_terms(
        (word_from_text(w), parse_qpoly(c)) for w, c in items
    )


def topo_lincomb(items) -> LinComb:
    return LinComb.from_terms((build(spec), c) for spec, c in items)


# -- small topologies ----------------------------------------------------------

PT: Spec = (1, ())
DISC2: Spec = (2, ())
CH12: Spec = (2, ((1, 2),))
CH21: Spec = (2, ((2, 1),))
MERGED2: Spec = (2, ((1, 2), (2, 1)))

DISC3: Spec = (3, ())
MERGED3: Spec = (3, ((1, 2), (2, 1), (1, 3), (3, 1)))
M12_P3: Spec = (3, ((1, 2), (2, 1)))
M13_P2: Spec = (3, ((1, 3), (3, 1)))
M23_P1: Spec = (3, ((2, 3), (3, 2)))
M12_LT_3: Spec = (3, ((1, 2), (2, 1), (1, 3)))
M13_LT_2: Spec = (3, ((1, 3), (3, 1), (1, 2)))
M23_LT_1: Spec = (3, ((2, 3), (3, 2), (2, 1)))
LT_3_M12: Spec = (3, ((1, 2), (2, 1), (3, 1)))
LT_2_M13: Spec = (3, ((1, 3), (3, 1), (2, 1)))
LT_1_M23: Spec = (3, ((2, 3), (3, 2), (1, 2)))
CHAIN123: Spec = (3, ((1, 2), (2, 3)))
CHAIN132: Spec = (3, ((1, 3), (3, 2)))
CHAIN213: Spec = (3, ((2, 1), (1, 3)))
CHAIN231: Spec = (3, ((3, 1), (1, 2)))
CHAIN312: Spec = (3, ((2, 3), (3, 1)))
CHAIN321: Spec = (3, ((3, 2), (2, 1)))
BUSH1: Spec = (3, ((1, 2), (1, 3)))
BUSH2: Spec = (3, ((2, 1), (2, 3)))
BUSH3: Spec = (3, ((3, 1), (3, 2)))
COBUSH1: Spec = (3, ((2, 1), (3, 1)))
COBUSH2: Spec = (3, ((1, 2), (3, 2)))
COBUSH3: Spec = (3, ((1, 3), (2, 3)))
CH12_P3: Spec = (3, ((1, 2),))
CH13_P2: Spec = (3, ((1, 3),))
CH21_P3: Spec = (3, ((2, 1),))
CH23_P1: Spec = (3, ((2, 3),))
CH31_P2: Spec = (3, ((3, 1),))
CH32_P1: Spec = (3, ((3, 2),))

# -- count tables ----------------------------------------------------------------

TOPOLOGY_COUNTS = {0: 1, 1: 1, 2: 4, 3: 29, 4: 355, 5: 6942, 6: 209527}
INDEC_COUNTS = {1: 1, 2: 3, 3: 22, 4: 292, 5: 6120, 6: 193594}
BI_INDEC_COUNTS = {1: 1, 2: 2, 3: 15, 4: 229, 5: 5298, 6: 177661}
FUBINI = {0: 1, 1: 1, 2: 3, 3: 13, 4: 75, 5: 541, 6: 4683, 7: 47293}
T0_COUNTS = {0: 1, 1: 1, 2: 3, 3: 19, 4: 219, 5: 4231}
GRAM_RANK = {0: 1, 1: 1, 2: 3, 3: 16, 4: 111}
GRAM_KERNEL = {0: 0, 1: 0, 2: 1, 3: 13, 4: 244}

# -- standardization, alphabet reversal, merge points ------------------------------

STD_GOLDENS = [
    ("1,1", "1,2"),
    ("1,2,2", "1,2,3"),
    ("2,1,2", "2,1,3"),
    ("2,2,1", "2,3,1"),
    ("1,1,2", "1,2,3"),
    ("1,2,1", "1,3,2"),
    ("2,1,1", "3,1,2"),
    ("1,1,1", "1,2,3"),
]
J_GOLDEN = ("6,5,1,3,3,4,2,1", "1,2,6,4,4,3,5,6")
ASCENT_GOLDEN = ("4,1,2,1,3,3", (3,))

PACKED_WORDS_3 = [
    "1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1",
    "1,2,2", "2,1,2", "2,2,1", "1,1,2", "1,2,1", "2,1,1", "1,1,1",
]

# -- word algebra goldens -----------------------------------------------------------

# the upstream worked example also lists 11214 and 11224, but neither is a
# packed word (letter 3 missing), so they cannot index basis terms; the
# correct expansion has 13 terms
WQSYM_PRODUCT_GOLDEN = (
    "1,1,2",
    "1,2",
    [
        "1,1,2,1,2", "1,1,2,1,3", "1,1,2,2,3",
        "1,1,2,3,4", "1,1,3,1,2", "1,1,3,2,3", "1,1,3,2,4", "1,1,4,2,3",
        "2,2,3,1,2", "2,2,3,1,3", "2,2,3,1,4", "2,2,4,1,3", "3,3,4,1,2",
    ],
)
WQSYM_UNIT_GOLDEN = ("1", "1", ["1,2", "2,1", "1,1"])
# the upstream print shows the alphabet-1 cut as (1) x (4312), one letter
# short of the degree; the word carries two 1s, so that side must be (11)
WQSYM_COPRODUCT_GOLDEN = (
    "5,1,1,4,2,3",
    [
        ("", "5,1,1,4,2,3"),
        ("1,1", "4,3,1,2"),
        ("1,1,2", "3,2,1"),
        ("1,1,2,3", "2,1"),
        ("1,1,4,2,3", "1"),
        ("5,1,1,4,2,3", ""),
    ],
)
FQSYM_PRODUCT_GOLDEN = (
    "1,3,2",
    "2,1",
    [
        "1,3,2,5,4", "1,4,2,5,3", "1,5,2,4,3", "1,4,3,5,2", "1,5,3,4,2",
        "1,5,4,3,2", "2,4,3,5,1", "2,5,3,4,1", "2,5,4,3,1", "3,5,4,2,1",
    ],
)
FQSYM_COPRODUCT_GOLDEN = (
    "5,1,4,2,3",
    [
        ("", "5,1,4,2,3"),
        ("1", "4,3,1,2"),
        ("1,2", "3,2,1"),
        ("1,2,3", "2,1"),
        ("1,4,2,3", "1"),
        ("5,1,4,2,3", ""),
    ],
)
SHUFFLE_GOLDEN = (
    "1,1,2",
    "1,2",
    ["1,1,2,3,4", "1,1,3,2,4", "1,1,4,2,3", "2,2,3,1,4", "2,2,4,1,3", "3,3,4,1,2"],
)

# -- topology goldens ----------------------------------------------------------------

T_OF_WORD_GOLDEN = (
    "3,3,1,2,3,1",
    (6, ((3, 6), (6, 3), (1, 2), (2, 1), (1, 5), (5, 1), (2, 5), (5, 2),
         (3, 4), (4, 1), (4, 2), (4, 5))),
)
DOT_EXAMPLE = (BUSH1, CH21, (5, ((1, 2), (1, 3), (5, 4))))
DOWN_EXAMPLE = (
    BUSH1,
    CH21,
    (5, ((1, 2), (1, 3), (5, 4),
         (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5))),
)

BAR_GOLDENS = [
    (M12_P3, DISC2), (M12_LT_3, CH12), (LT_3_M12, CH21), (MERGED2, PT),
    (M13_P2, DISC2), (M13_LT_2, CH12), (LT_2_M13, CH21), (MERGED3, PT),
    (M23_P1, DISC2), (M23_LT_1, CH21), (LT_1_M23, CH12),
]
THETA_GOLDENS = [
    (M12_P3, DISC2, 1), (M12_LT_3, CH12, 1), (LT_3_M12, CH21, 1), (MERGED2, PT, 1),
    (M13_P2, DISC2, 1), (M13_LT_2, CH12, 1), (LT_2_M13, CH21, 1), (MERGED3, PT, 2),
    (M23_P1, DISC2, 1), (M23_LT_1, CH21, 1), (LT_1_M23, CH12, 1),
]

GRAM2_PAPER_ORDER = [DISC2, CH12, CH21, MERGED2]
GRAM2_MATRIX = [
    [2, 1, 1, 0],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [0, 0, 0, 2],
]

# -- ribbon rewrites (one representative index assignment each) -----------------------

RIBBON_GOLDENS: list[tuple[Spec, list[tuple[Spec, int]]]] = [
    (MERGED2, [(MERGED2, 1)]),
    (CH12, [(CH12, 1), (MERGED2, -1)]),
    (DISC2, [(DISC2, 1), (CH12, -1), (CH21, -1), (MERGED2, 1)]),
    (MERGED3, [(MERGED3, 1)]),
    (M12_LT_3, [(M12_LT_3, 1), (MERGED3, -1)]),
    (LT_1_M23, [(LT_1_M23, 1), (MERGED3, -1)]),
    (M23_P1, [(M23_P1, 1), (LT_1_M23, -1), (M23_LT_1, -1), (MERGED3, 1)]),
    (CHAIN123, [(CHAIN123, 1), (LT_1_M23, -1), (M12_LT_3, -1), (MERGED3, 1)]),
    (BUSH1, [(BUSH1, 1), (CHAIN123, -1), (CHAIN132, -1), (LT_1_M23, 1)]),
    (COBUSH1, [(COBUSH1, 1), (CHAIN321, -1), (CHAIN312, -1), (M23_LT_1, 1)]),
    (CH12_P3, [
        (CH12_P3, 1), (BUSH1, -1), (COBUSH2, -1), (CHAIN132, 1),
        (M12_P3, -1), (M12_LT_3, 1), (LT_3_M12, 1), (MERGED3, -1),
    ]),
]

# -- partition morphism goldens --------------------------------------------------------

GAMMA_GOLDENS: list[tuple[Spec, list[tuple[str, str]]]] = [
    (PT, [("1", "1")]),
    (DISC2, [("1,2", "1"), ("2,1", "1"), ("1,1", "1")]),
    (CH12, [("1,2", "1"), ("1,1", "q1")]),
    (CH21, [("2,1", "1"), ("1,1", "q2")]),
    (MERGED2, [("1,1", "1")]),
    (BUSH1, [("1,2,3", "1"), ("1,3,2", "1"), ("1,2,2", "1"),
             ("1,1,2", "q1"), ("1,2,1", "q1"), ("1,1,1", "q1^2")]),
    (BUSH2, [("2,1,3", "1"), ("3,1,2", "1"), ("2,1,2", "1"),
             ("1,1,2", "q2"), ("2,1,1", "q1"), ("1,1,1", "q1*q2")]),
    (BUSH3, [("2,3,1", "1"), ("3,2,1", "1"), ("2,2,1", "1"),
             ("1,2,1", "q2"), ("2,1,1", "q2"), ("1,1,1", "q2^2")]),
    (M12_LT_3, [("1,1,2", "1"), ("1,1,1", "q1^2")]),
    (M13_LT_2, [("1,2,1", "1"), ("1,1,1", "q1*q2*q3")]),
    (M23_LT_1, [("2,1,1", "1"), ("1,1,1", "q2^2")]),
    (LT_1_M23, [("1,2,2", "1"), ("1,1,1", "q1^2")]),
    (LT_2_M13, [("2,1,2", "1"), ("1,1,1", "q1*q2*q3")]),
    (LT_3_M12, [("2,2,1", "1"), ("1,1,1", "q2^2")]),
]

GAMMA_EXTRA_GOLDENS: list[tuple[Spec, list[tuple[str, str]]]] = [
    (CHAIN123, [("1,2,3", "1"), ("1,1,2", "q1"), ("1,2,2", "q1"), ("1,1,1", "q1^3")]),
    (CHAIN213, [("2,1,3", "1"), ("1,1,2", "q2"), ("2,1,2", "q1"), ("1,1,1", "q1^2*q2")]),
    (CHAIN312, [("3,1,2", "1"), ("2,1,1", "q1"), ("2,1,2", "q2"), ("1,1,1", "q1*q2^2")]),
    ((3, ((2, 3),)), [("1,2,3", "1"), ("2,1,3", "1"), ("3,1,2", "1"), ("1,1,2", "1"),
                      ("2,1,1", "q1"), ("1,2,2", "q1"), ("2,1,2", "1"), ("1,1,1", "q1")]),
]

GAMMA_SP_GOLDENS: list[tuple[Spec, list[str]]] = [
    (PT, ["1"]),
    (DISC2, ["1,2", "2,1", "1,1"]),
    (CH12, ["1,2", "1,1"]),
    (CH21, ["2,1"]),
    (BUSH1, ["1,2,3", "1,3,2", "1,2,2", "1,1,2", "1,2,1", "1,1,1"]),
    (BUSH2, ["2,1,3", "3,1,2", "2,1,2", "2,1,1"]),
    (BUSH3, ["2,3,1", "3,2,1", "2,2,1"]),
]

L_GOLDENS: list[tuple[Spec, list[str]]] = [
    (PT, ["1"]),
    (DISC2, ["1,2", "2,1"]),
    (CH12, ["1,2"]),
    (CH21, ["2,1"]),
    (MERGED2, ["1,1"]),
    (MERGED3, ["1,1,1"]),
    (M12_LT_3, ["1,1,2"]),
    (M13_LT_2, ["1,2,1"]),
    (M23_LT_1, ["2,1,1"]),
    (LT_3_M12, ["2,2,1"]),
    (LT_2_M13, ["2,1,2"]),
    (LT_1_M23, ["1,2,2"]),
    (BUSH1, ["1,2,3", "1,3,2"]),
    (BUSH2, ["2,1,3", "3,1,2"]),
    (BUSH3, ["2,3,1", "3,2,1"]),
    (CHAIN123, ["1,2,3"]),
    (CHAIN213, ["2,1,3"]),
    (CHAIN231, ["2,3,1"]),
    (CHAIN132, ["1,3,2"]),
    (CHAIN312, ["3,1,2"]),
    (CHAIN321, ["3,2,1"]),
    (COBUSH1, ["3,1,2", "3,2,1"]),
    (COBUSH2, ["1,3,2", "2,3,1"]),
    (COBUSH3, ["1,2,3", "2,1,3"]),
]

PHI_GOLDENS: list[tuple[str, list[str]]] = [
    ("1,2,3", ["1,2,3", "1,2,2", "1,1,2", "1,1,1"]),
    ("1,3,2", ["1,3,2", "1,2,1"]),
    ("2,1,3", ["2,1,3", "2,1,2"]),
    ("2,3,1", ["2,3,1", "2,2,1"]),
    ("3,1,2", ["3,1,2", "2,1,1"]),
    ("3,2,1", ["3,2,1"]),
    ("1,1,2", ["1,1,2", "1,1,1"]),
    ("1,2,1", ["1,2,1"]),
    ("2,1,1", ["2,1,1"]),
    ("1,2,2", ["1,2,2", "1,1,1"]),
    ("2,1,2", ["2,1,2"]),
    ("2,2,1", ["2,2,1"]),
    ("1,1,1", ["1,1,1"]),
]

# -- order structure -------------------------------------------------------------------

HASSE_COVERS_2 = {("1,1", "1,2")}
HASSE_COMPONENTS_2 = 2
HASSE_COVERS_3 = {
    ("1,2,2", "1,2,3"), ("1,1,2", "1,2,3"), ("1,1,1", "1,2,2"), ("1,1,1", "1,1,2"),
    ("1,2,1", "1,3,2"), ("2,1,2", "2,1,3"), ("2,2,1", "2,3,1"), ("2,1,1", "3,1,2"),
}
HASSE_COMPONENTS_3 = 6

# -- the five-point worked partition example --------------------------------------------

P_EXAMPLE_TOPOLOGY: Spec = (
    5,
    ((2, 4), (4, 2), (2, 1), (4, 1), (2, 5), (4, 5)),
)
P_EXAMPLE_GENERALIZED = [
    "1,1,1,1,1", "1,1,1,1,2", "1,1,2,1,1", "1,1,2,1,2", "1,1,2,1,3", "1,1,3,1,2",
    "2,1,1,1,1", "2,1,1,1,2", "2,1,1,1,3", "2,1,2,1,1", "2,1,2,1,2", "2,1,2,1,3",
    "2,1,3,1,1", "2,1,3,1,2", "2,1,3,1,3", "2,1,3,1,4", "2,1,4,1,3", "2,2,1,2,2",
    "2,2,1,2,3", "3,1,1,1,2", "3,1,2,1,1", "3,1,2,1,2", "3,1,2,1,3", "3,1,2,1,4",
    "3,1,3,1,2", "3,1,4,1,2", "3,2,1,2,2", "3,2,1,2,3", "3,2,1,2,4", "4,1,2,1,3",
    "4,1,3,1,2", "4,2,1,2,3",
]
P_EXAMPLE_STRICT = [
    "2,1,2,1,1", "2,1,2,1,2", "2,1,2,1,3", "2,1,3,1,1", "2,1,3,1,2", "2,1,3,1,3",
    "2,1,3,1,4", "2,1,4,1,3", "3,1,2,1,1", "3,1,2,1,2", "3,1,2,1,3", "3,1,2,1,4",
    "3,1,3,1,2", "3,1,4,1,2", "3,2,1,2,2", "3,2,1,2,3", "3,2,1,2,4", "4,1,2,1,3",
    "4,1,3,1,2", "4,2,1,2,3",
]

LINEXT_EXAMPLE = (
    (6, ((2, 4), (4, 2), (1, 5), (5, 1), (1, 6), (6, 1), (5, 6), (6, 5),
         (2, 1), (2, 5), (2, 6), (4, 1), (4, 5), (4, 6), (2, 3), (4, 3))),
    ["3,1,2,1,3,3", "2,1,3,1,2,2"],
)

# -- the degree-3 morphism obstruction ----------------------------------------------------

OBSTRUCTION_KERNEL_ELEMENT: list[tuple[Spec, int]] = [
    (BUSH1, 1), (CHAIN123, -1), (CHAIN132, -1),
]
OBSTRUCTION_IMAGE: list[tuple[str, str]] = [
    ("1,2,2", "1 - q1 - q2"),
    ("1,1,1", "q1^2 - q1^3 - q1^2*q2"),
]
OBSTRUCTION_VANISHING_POINTS = [(1, 0, 0), (0, 1, 0)]
OBSTRUCTION_NONVANISHING_POINTS = [(1, 1, 1), (0, 0, 1), ("1/2", "1/2", 0)]
