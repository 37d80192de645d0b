"""Exact computer algebra for pseudo-linear maps theta = d/dx + T.

The package solves the minimal-relation problem for iterates of a
pseudo-linear map over Q(x) and instantiates it for four D-finite
operations: creative telescoping of bivariate rational functions via
Hermite reduction, differential resolvents of algebraic functions, least
common left multiples, and symmetric products.  It ships executable
degree-bound predictors for each instance and a property-test harness for
the determinantal-denominator laws that drive the bounds.

The hot integer-polynomial kernels have a compiled (Cython) core with a
pure-Python fallback; ``pseudolin._kernel.BACKEND`` names the active one.
"""

from pseudolin._kernel import BACKEND
from pseudolin.bipoly import (BiPoly, YPoly, bipoly_derivative, bipoly_gcd,
                              resultant_y, squarefree_y)
from pseudolin.exprparse import (ParseError, SemanticError, format_operator,
                                 parse)
from pseudolin.linalg import (PolyMatrix, RatMatrix, companion,
                              det_denominator, det_fraction_free,
                              det_rational, invert, kronecker, rank,
                              solve_rational)
from pseudolin.ore import (GEN_DX, GEN_EULER, OrePoly, TruncSeries,
                           from_euler, full_primitive, infinity_not_irregular,
                           normalize_primitive, ore_apply, ore_mul,
                           right_divide, series_apply, series_mul,
                           series_solution, shift_operator, to_euler)
from pseudolin.poly import NEG_INF, BigRational, Poly, poly_divides, poly_gcd, poly_lcm
from pseudolin.ratfun import RatFun, common_denominator
from pseudolin.relations import (BoundReport, PseudoLinearMap, Realisation,
                                 Relation, bound_direct, bound_realisation,
                                 is_strictly_proper, krylov_denominator_check,
                                 krylov_matrix, solve_min_relation,
                                 theta_apply, theta_iterates,
                                 trivial_realisation, verify_relation)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BigRational", "BiPoly", "BoundReport", "GEN_DX", "GEN_EULER",
    "NEG_INF", "OrePoly", "ParseError", "Poly", "PolyMatrix",
    "PseudoLinearMap", "RatFun", "RatMatrix", "Realisation", "Relation",
    "SemanticError", "TruncSeries", "YPoly", "bipoly_derivative",
    "bipoly_gcd", "bound_direct", "bound_realisation", "common_denominator",
    "companion", "det_denominator", "det_fraction_free", "det_rational",
    "format_operator", "from_euler", "full_primitive",
    "infinity_not_irregular", "invert", "is_strictly_proper", "kronecker",
    "krylov_denominator_check", "krylov_matrix", "normalize_primitive",
    "ore_apply", "ore_mul", "parse", "poly_divides", "poly_gcd", "poly_lcm",
    "rank", "resultant_y", "right_divide", "series_apply", "series_mul",
    "series_solution", "shift_operator", "solve_min_relation",
    "solve_rational", "squarefree_y", "theta_apply", "theta_iterates",
    "to_euler", "trivial_realisation", "verify_relation",
]
