"""Exact symbolic computation for quantum SL(2) at a cube root of unity.

The package builds the coordinate algebra of quantum SL(2) at q = w
(w = exp(2*pi*i/3)), its 27-dimensional finite quotient, the Borel and
Cartan quotients, and machine-verifies their bases, Hopf structure,
Galois-theoretic data (cleaving maps, cocycles, bicrossproduct), integrals
and corepresentations, all over the exact field Q(w).
"""

from .cyclo import CycloScalar, OMEGA, ONE, ZERO, qpow, rational
from .ncpoly import AlphabetError, NCPoly, TensorPoly, Word, tensor, tensor_mul
from .qcalc import IntPoly, qbinom, qbinom_at_omega, qfact, qint
from .rewrite import (
    Ambiguity,
    IncompatibleRuleError,
    InclusionAmbiguityError,
    MonomialOrder,
    ReductionSystem,
    Rule,
)
from .algebras import (
    HopfAxiomError,
    HopfPresentation,
    PRESENTATIONS,
    build_borel_minus,
    build_borel_plus,
    build_cartan,
    build_slq2,
    frobenius_embed,
    get_presentation,
    verify_coproduct_closed_form,
)

__version__ = "0.1.0"
