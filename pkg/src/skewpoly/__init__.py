"""Exact arithmetic, bounds, irreducibility and factorization for skew
polynomials over finite fields and rational function fields."""

from .algebra import (AlgElem, StructAlgebra, alg_build, alg_lift, alg_mul,
                      alg_project, corner, find_zero_divisor,
                      solve_von_neumann)
from .bound import (CentralForm, bound, bound_v1, bound_v2, central_lift,
                    centralize, decentralize, is_twosided,
                    oracle_min_central)
from .cpoly import ComPoly, cpoly_factor, cpoly_is_irreducible
from .errors import (FieldError, InternalInvariantError, ParseError,
                     RingMismatchError, SkewError, TrialsExhaustedError,
                     UnsupportedFieldError)
from .factor import (Factorization, factorize, factorize_irred,
                     is_irreducible, num_factors, split_by_central,
                     verify_factorization)
from .ffield import (GF, SubfieldMap, expand_in_k_basis, ff_arith,
                     frobenius_pow, invariant_subfield, make_field)
from .literals import (format_cpoly, format_ring, format_skew_poly,
                       parse_poly, parse_ring, parse_zpoly)
from .quotfield import QuotField, QuotFieldGeneric, QuotFieldTable, kf_make
from .ratfun import RatFun, RatFunField, RatSigma, rf_arith, rf_sigma_pow
from .skew import (FiniteSkewRing, RatSkewRing, SkewPoly, rat_skew_ring,
                   sp_add, sp_annihilator, sp_ldivrem, sp_leea, sp_llcm,
                   sp_monic, sp_mul, sp_rgcd, sp_scale_left, sp_strip_x)

__version__ = "0.1.0"
