"""
Artin groups of types A_{n-1} and D_n: Garside normal forms, the word problem, a catalog of
homomorphisms with verification, the fold D_n -> A_{n-1} and its kernel, lifting of
endomorphisms of the central quotient, and the transvection action on integer homology.

>>> d5 = CoxType.D(5)
>>> equal(parse_word(d5, "t4 t3 t4"), parse_word(d5, "t3 t4 t3"))
True
>>> normalize(parse_word(CoxType.A(2), "s1 s2 s1")).render()
'D^1 | '
"""
from __future__ import annotations

from .coxeter import CoxElement, CoxType, Family, diagram_automorphism, longest_element
from .garside import (
    NormalForm,
    center_membership,
    delta_word,
    delta_y_word,
    equal,
    equal_mod_center,
    explicit_delta_word,
    garside_element,
    is_normal,
    normalize,
)
from .homology import check_commuting_square, theta_star, transvection_rep
from .homs import (
    HomSpec,
    apply,
    compose,
    dump_hom,
    load_hom,
    make_alpha,
    make_bar_chi,
    make_bar_gamma,
    make_beta,
    make_chi,
    make_cyclic,
    make_gamma,
    make_identity,
    make_inner,
    make_iota,
    make_pi,
    make_zeta,
    pinch_test,
    same_hom,
    verify_hom,
)
from .kernel import (
    Lift,
    LiftError,
    LiftInput,
    in_kernel_pi,
    kernel_generators,
    lift_endomorphism,
    lift_with_corrections,
)
from .words import ArtinWord, WordParseError, format_word, parse_word

__all__ = [
    "ArtinWord",
    "CoxElement",
    "CoxType",
    "Family",
    "HomSpec",
    "Lift",
    "LiftError",
    "LiftInput",
    "NormalForm",
    "WordParseError",
    "apply",
    "center_membership",
    "check_commuting_square",
    "compose",
    "delta_word",
    "delta_y_word",
    "diagram_automorphism",
    "dump_hom",
    "equal",
    "equal_mod_center",
    "explicit_delta_word",
    "format_word",
    "garside_element",
    "in_kernel_pi",
    "is_normal",
    "kernel_generators",
    "lift_endomorphism",
    "lift_with_corrections",
    "load_hom",
    "longest_element",
    "make_alpha",
    "make_bar_chi",
    "make_bar_gamma",
    "make_beta",
    "make_chi",
    "make_cyclic",
    "make_gamma",
    "make_identity",
    "make_inner",
    "make_iota",
    "make_pi",
    "make_zeta",
    "normalize",
    "parse_word",
    "pinch_test",
    "same_hom",
    "theta_star",
    "transvection_rep",
    "verify_hom",
]
