"""Exact computation in the even quasi-split special unitary group of a
quadratic extension: root-subgroup matrices, commutator coefficient tables,
Steinberg-style word algebra, and constructive elementary decomposition over
finite products of local rings."""

from .algebra import (
    AlgebraElement,
    AlgebraSpec,
    NonUnitError,
    ParseError,
    QuadElement,
    RingMap,
    conj,
    delta_conj,
    format_element,
    format_quad,
    format_spec,
    invert,
    is_unit,
    parse_element,
    parse_quad,
    parse_spec,
    reduce_mod,
    trace,
)
from .commutators import (
    CommutatorExpansion,
    WeylTwist,
    expand_bruteforce,
    expand_closed,
    n11_preimage,
    verify_compatibility_identities,
    weyl_twist,
)
from .decompose import (
    CongruenceElement,
    LeviPair,
    congruence_level,
    decompose,
    filtration_commutator_check,
    levi_factor,
)
from .group import (
    FormMatrix,
    GroupElement,
    character,
    format_matrix,
    gram_matrix,
    is_member,
    parse_matrix,
    root_element,
    split_check,
    split_torus_element,
    torus_element,
    weyl_element,
)
from .roots import (
    ChainTerm,
    Root,
    chain,
    format_root,
    parse_root,
    reflect,
    roots,
    simple_roots,
    weyl_path,
)
from .words import (
    RewriteError,
    SteinbergWord,
    Symbol,
    apply_r1,
    apply_r2_at,
    evaluate,
    express_as_commutator,
    format_word,
    join_words,
    map_coords,
    parse_word,
    split_word,
)

__version__ = "0.1.0"
