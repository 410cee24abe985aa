"""Exact-arithmetic toolkit for integer-valued polynomials on Z-orders.

The central question: given an order A (a ring that is a finitely generated
torsion-free Z-module) presented by integer structure constants, is the ring
of polynomials f in Q[X] with f(A) contained in A a Prufer domain?  The
answer comes with a certificate that can be re-verified independently of the
decision procedure.

Everything is exact: scalars are ``fractions.Fraction``, lattices are integer
matrices in Hermite normal form, and polynomial factorization is done from
scratch over Q.  No floating point enters any verdict.
"""

from fractions import Fraction

from .errors import (
    BudgetExceededError,
    DiscFactorizationError,
    DimensionMismatchError,
    FactorDegreeError,
    IndeterminateError,
    IndexDivisibleError,
    MalformedCertificateError,
    MalformedInputError,
    NoIdentityError,
    NonAssociativeError,
    NotApplicableError,
    PruferError,
    SearchExhaustedError,
    UnitLineError,
    ZeroPolynomialError,
)
from .lattice import IntegerLattice, hnf_reduce, lattice_intersect, lattice_member
from .poly import RationalPolynomial
from .factor import poly_factor
from .orders import (
    AlgebraElement,
    ZOrder,
    equation_order,
    is_commutative,
    is_reduced,
    jacobson_radical_basis,
    load_order,
    minimal_polynomial,
    order_to_dict,
    product_order,
)
from .splitting import Decomposition, component_order, decompose, find_primitive_element, idempotents_in_order
from .closure import (
    EmbeddedOrder,
    discriminant,
    is_integral,
    is_integrally_closed_order,
    maximal_order,
    p_radical,
    ring_of_multipliers,
)
from .ivp import (
    PointwiseClosure,
    RamificationProfile,
    int_member_finite,
    int_member_order,
    nilpotent_witness,
    pointwise_integrally_closed,
    pruefer_transform,
    ramification_profile,
    transform_sequence,
)
from .decision import PrueferCertificate, decide_pruefer, verify_certificate
from .quaternions import (
    HURWITZ_UNIT,
    ClosureReport,
    Quaternion,
    closure_check,
    four_square_lemma_check,
    four_square_violations,
    hurwitz_member,
    norm_in_D_check,
    quaternion_integral,
)

__all__ = [
    "Fraction",
    "PruferError",
    "DimensionMismatchError",
    "ZeroPolynomialError",
    "FactorDegreeError",
    "NonAssociativeError",
    "NoIdentityError",
    "UnitLineError",
    "MalformedInputError",
    "MalformedCertificateError",
    "SearchExhaustedError",
    "BudgetExceededError",
    "IndexDivisibleError",
    "DiscFactorizationError",
    "IndeterminateError",
    "NotApplicableError",
    "IntegerLattice",
    "hnf_reduce",
    "lattice_member",
    "lattice_intersect",
    "RationalPolynomial",
    "poly_factor",
    "ZOrder",
    "AlgebraElement",
    "equation_order",
    "load_order",
    "order_to_dict",
    "product_order",
    "minimal_polynomial",
    "is_commutative",
    "is_reduced",
    "jacobson_radical_basis",
    "Decomposition",
    "find_primitive_element",
    "decompose",
    "idempotents_in_order",
    "component_order",
    "EmbeddedOrder",
    "discriminant",
    "is_integral",
    "p_radical",
    "ring_of_multipliers",
    "maximal_order",
    "is_integrally_closed_order",
    "PointwiseClosure",
    "RamificationProfile",
    "int_member_finite",
    "int_member_order",
    "pointwise_integrally_closed",
    "ramification_profile",
    "pruefer_transform",
    "transform_sequence",
    "nilpotent_witness",
    "PrueferCertificate",
    "decide_pruefer",
    "verify_certificate",
    "Quaternion",
    "HURWITZ_UNIT",
    "ClosureReport",
    "hurwitz_member",
    "quaternion_integral",
    "closure_check",
    "four_square_lemma_check",
    "four_square_violations",
    "norm_in_D_check",
]
