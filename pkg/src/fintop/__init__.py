"""Exact arithmetic for the Hopf algebra of finite topologies.

Finite topologies on {1, ..., n} (equivalently preorders) form a graded
algebra under two products, with a coproduct over open sets, a refinement
ribbon basis, a picture pairing, and morphisms into the packed-word and
permutation algebras via generalized partitions and linear extensions.
Everything is computed over integer polynomials in three formal parameters,
so identities are checked exactly.
"""

from .errors import (
    CapExceeded,
    EmptyInput,
    FintopError,
    NotReflexive,
    NotTransitive,
    SizeMismatch,
)
from .hopf import (
    FactorizationResult,
    antipode,
    antipode_label,
    coproduct,
    counit,
    decompose,
    dot,
    down,
    indecomposability_class,
    product_dot,
    product_down,
    t0_projection,
    theta_q,
)
from .lincomb import LinComb, bilinear_extend, linear_extend, tensor_of
from .linalg import exact_rank, kernel_basis
from .pictures import gram_matrix, pairing, pictures_count
from .qpoly import Q1, Q2, Q3, QPoly, parse_qpoly
from .ribbon import (
    from_ribbon,
    ribbon_coproduct,
    ribbon_expansion,
    ribbon_product_dot,
    ribbon_product_down,
    to_ribbon,
)
from .serialize import emit_csv_matrix, emit_json, parse_lincomb_json, render_lincomb
from .topology import (
    EMPTY,
    POINT,
    Topology,
    closure_topology,
    enumerate_topologies,
    make_topology,
    refinement_leq,
    topology_of_word,
)
from .tpartitions import (
    L_morphism,
    PartitionStats,
    gamma_q,
    generalized_partitions,
    linear_extensions,
    stanley_decomposition,
    strict_partitions,
)
from .words import (
    ascent_set,
    is_packed,
    is_permutation,
    j_involution,
    pack,
    packed_words,
    restrict_word,
    standardize,
    std_fiber,
    word_from_text,
    word_to_text,
)
from .wqsym import (
    fqsym_product,
    order_iso_check,
    phi,
    phi_010,
    phi_100,
    shuffle_product,
    varpi,
    word_leq,
    word_leq_prime,
    wqsym_coproduct,
    wqsym_product,
)

__version__ = "0.1.0"
