"""Weighted q-Euler numbers, their q-zeta and L-functions, and fermionic p-adic q-measures."""

from .characters import (DirichletCharacter, enumerate_characters, parse_character,
                         quadratic_character, trivial_character)
from .dirichlet import (dirichlet_euler_closed, dirichlet_euler_number, dirichlet_euler_series,
                        distribution_check)
from .euler import (classical_euler_poly, euler_ab_poly, euler_number, euler_poly_closed,
                    euler_poly_series, euler_poly_umbral)
from .harness import SuiteConfig, run_suite
from .measure import BallAddress, MeasureQuery, integrate_over_X, measure_on_ball, q_of
from .numkit import qbracket
from .padic import PAdicInt, padic_norm, padic_ord
from .records import TruncationReport, VerificationRecord
from .zeta import (continuation_poly, curve_sample, l_function, partial_zeta, zeta_hurwitz_weighted,
                   zeta_weighted)

__version__ = "0.1.0"

__all__ = [
    "BallAddress",
    "DirichletCharacter",
    "MeasureQuery",
    "PAdicInt",
    "SuiteConfig",
    "TruncationReport",
    "VerificationRecord",
    "classical_euler_poly",
    "continuation_poly",
    "curve_sample",
    "dirichlet_euler_closed",
    "dirichlet_euler_number",
    "dirichlet_euler_series",
    "distribution_check",
    "enumerate_characters",
    "euler_ab_poly",
    "euler_number",
    "euler_poly_closed",
    "euler_poly_series",
    "euler_poly_umbral",
    "integrate_over_X",
    "l_function",
    "measure_on_ball",
    "padic_norm",
    "padic_ord",
    "parse_character",
    "partial_zeta",
    "q_of",
    "qbracket",
    "quadratic_character",
    "run_suite",
    "trivial_character",
    "zeta_hurwitz_weighted",
    "zeta_weighted",
]
