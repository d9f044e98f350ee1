"""Exact arithmetic core: rationals, linear algebra, linear programming, Sturm sequences."""

from .linalg import (Matrix, det, det_int, matmul, matvec, null_basis, orth_complement,
                     quotient_map, rank, rank_int, rref, solve, transpose)
from .lp import LPResult, LPStatus, linprog, lp_min_coeff, simplex_standard
from .poly import QPoly, count_roots, interpolate, poly_gcd, refine, sturm_isolate, sturm_sequence
from .rational import Rat, Vec, rat, rat_str, vec, vec_str

__all__ = [
    "Matrix", "det", "det_int", "matmul", "matvec", "null_basis", "orth_complement",
    "quotient_map", "rank", "rank_int", "rref", "solve", "transpose",
    "LPResult", "LPStatus", "linprog", "lp_min_coeff", "simplex_standard",
    "QPoly", "count_roots", "interpolate", "poly_gcd", "refine", "sturm_isolate",
    "sturm_sequence", "Rat", "Vec", "rat", "rat_str", "vec", "vec_str",
]
