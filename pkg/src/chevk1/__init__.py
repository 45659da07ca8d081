"""Exact computations in simply-laced Chevalley groups realized in minuscule
representations: root systems, weight diagrams, elementary words, the
Chevalley–Matsumoto decomposition, unimodular vector reduction for D_l and
E6, and relative elementary subgroups of E7."""

from .congruence import (
    MembershipCertificate, RelativeContext, general_z_membership, identity_suite,
    specialize_certificate, universal_context, verify_h_delta_product,
    verify_z_factorization, z_membership_word,
)
from .decomposition import (
    DecompositionError, NonInvertibleCorner, ParabolicSplit, chevalley_matsumoto,
)
from .group import (
    GroupElement, H, Letter, W, X, apply_word, commutator, gen_h, gen_w, gen_x,
    realize, representation, z_gen,
)
from .reduction import (
    InternalPostconditionFailure, minimize_word, reduce_dl, reduce_e6,
    surjective_stability_witness,
)
from .rings import (
    ZZ, Ideal, NotAUnit, NotUnimodular, RelationNotPreserved, TwoNotInvertible,
    UnsupportedRing, asr_transform, evaluate_hom, maximal_ideals_containing,
    parse_ring, unimodular_certificate,
)
from .roots import (
    NoSuchElement, NotClosed, UnsupportedType, find_weyl_conjugator,
    named_subsystem, root_system, subsystem,
)
from .weights import NotMinuscule, WeightDiagram, diagram

__version__ = "0.1.0"
