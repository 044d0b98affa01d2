"""Invariants of (1,1)-knots in lens spaces: n-cyclic polynomials of
strongly-cyclic branched coverings, the Alexander polynomial, and the
homology of the coverings, all in exact integer arithmetic."""

from .intlinalg import HomologyGroup, IntMatrix, circulant, group_from_presentation, smith_normal_form
from .invariants import (INFINITE, AlexanderResult, GroupRingElement, VerificationError,
                         alexander_polynomial, cover_homology, cover_homology_order,
                         cover_torsion_order, evaluate_abelianized, fox_derivative,
                         reduced_torsion, verify_knot, verify_main_theorem)
from .knot import (CyclicPresentation, ExteriorHomology, KnotError, Monodromy, OneOneKnot,
                   associated_polynomial, gamma_polynomial, lift_presentation,
                   strongly_cyclic_monodromy, validate)
from .polyring import (CyclicPoly, LaurentPoly, NotDivisible, RationalFunction,
                       canonical_unit_form, compose_monomial, cyclotomic,
                       equal_up_to_cyclic_units, exact_divide, geometric_poly,
                       reduce_mod_cyclic, resultant)
from .words import (ALPHA, GAMMA, Generator, Word, exponent_sum, parse_relator,
                    substitute_alpha, syllable_profile)

__version__ = "0.1.0"
