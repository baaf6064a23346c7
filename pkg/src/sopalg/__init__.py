"""Ideal calculus over graded quotient rings, with instance checks of
uniform annihilators of systems of parameters."""

from .fields import GF, QQ, PrimeField, RationalField
from .groebner import (FreeModuleVector, GroebnerBasis, member, normal_form, reduced_gb,
                       syzygy_basis)
from .ideal import (Ideal, colon, contains, equal, ideal_power, ideal_product, ideal_sum,
                    intersect, krull_dimension, saturate)
from .orders import GREVLEX, LEX, Cmp, MonomialOrder, monomial_cmp
from .parser import parse_poly
from .polynomial import Monomial, Polynomial, PolyRing, poly_arith
from .sop import (SOP, RingPresentation, define_ring, is_sop, key_lemma_sides, lambda_set,
                  limit_closure, make_sop, parametric_intersection, power_colon,
                  quotient_annihilator, sample_sops, sampled_annihilator)

__version__ = "0.1.0"
