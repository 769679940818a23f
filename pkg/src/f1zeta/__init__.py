"""Absolute zeta functions and absolute Euler products of torsion-free Noetherian F1-schemes."""

from .arith import divisors, kappa, kappa_table, moebius
from .euler import EulerTrace, Verdict, convergence_radius, euler_trace, kappa_of_scheme, scalar_euler_product
from .poly import IntPolynomial, expand_shifted_power, linear_moebius_transform
from .scheme import (
    SchemePoints,
    affine_space,
    count_points_F1n,
    counting_function,
    euler_characteristic,
    projective_line,
    torus,
)
from .toric import Cone, Fan, counting_function_cone, counting_function_fan, dimension_census, parse_fan
from .zeta import ZetaMultiset, absolute_zeta, evaluate, invert, soule_limit_trace, tensor, zeta_from_counting

__all__ = [
    "divisors",
    "kappa",
    "kappa_table",
    "moebius",
    "EulerTrace",
    "Verdict",
    "convergence_radius",
    "euler_trace",
    "kappa_of_scheme",
    "scalar_euler_product",
    "IntPolynomial",
    "expand_shifted_power",
    "linear_moebius_transform",
    "SchemePoints",
    "affine_space",
    "count_points_F1n",
    "counting_function",
    "euler_characteristic",
    "projective_line",
    "torus",
    "Cone",
    "Fan",
    "counting_function_cone",
    "counting_function_fan",
    "dimension_census",
    "parse_fan",
    "ZetaMultiset",
    "absolute_zeta",
    "evaluate",
    "invert",
    "soule_limit_trace",
    "tensor",
    "zeta_from_counting",
]

__version__ = "0.1.0"
