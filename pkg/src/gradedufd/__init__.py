"""Exact-arithmetic toolkit for positively graded factorial algebras:
gradings and grading cones, graded dimensions, signature sequences,
cyclic-cover and affine-modification constructors, Jacobian tangent
spaces, and brute-force irreducibility oracles.
"""

from .fields import Field, FieldError, field_from_name
from .poly import Context, Polynomial, format_poly, poly_arith
from .parsing import ParseError, parse_poly
from .grading import (ActionClass, Homogeneity, PresentedAlgebra,
                      PurePowerRewriteSystem, classify_action,
                      graded_piece_basis, hilbert_dim, homogeneity,
                      is_unit, normal_form, veronese_dim, weighted_degree)
from .bk import (BkData, CanonicalGrading, bk_algebra, canonical_grading,
                 min_generators, same_class, validate_bk)
from .constructions import (BnData, JacobianReport, ModificationSpec,
                            SamuelSpec, affine_modification, bn_algebra,
                            jacobian_tangent_dim, prime_chain_ideal,
                            samuel_extend)
from .cone import (GradingCone, HomogeneitySystem, contains_weight,
                   homogeneity_system, primitive_normalize,
                   solve_grading_cone)
from .signature import (Membership, SignatureSequence,
                        check_proposition_intersect,
                        compute_signature_sequence, pairwise_independence,
                        subalgebra_membership)
from .oracle import (IrreducibilityVerdict, dimension_bruteforce,
                     irreducible_bruteforce)
from .presentation import (derive_rewrite_system, parse_presentation,
                           print_presentation)

__version__ = "0.1.0"
