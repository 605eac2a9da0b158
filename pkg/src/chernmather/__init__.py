"""Exact lambda-ring calculus of Chern-Mather classes on theta divisors of abelian varieties."""

from .combinatorics import IntPolynomial, binomial, eulerian_defining_check, eulerian_polynomial, middle_binomial
from .genus5 import ExclusionReport, divisibility_obstruction, genus5_hyperelliptic_report
from .jacobian import (
    CriterionVerdict,
    CurveCase,
    Verdict,
    criterion_check,
    dim_omega,
    jacobian_reference_classes,
)
from .pontryagin import BiThetaClass, ThetaClass, adams, pontryagin_mul, theta_basis, truncate_to
from .prym import (
    ChiTag,
    ChiVerdict,
    EPrime,
    SCycle,
    euler_characteristic,
    matches_jacobian_dimension,
    prym_chern_mather_t0,
    prym_chern_mather_t_pos,
)
from .series import (
    LagrangianChernData,
    ThetaSeries,
    alt_class,
    alt_via_newton,
    c2_gap,
    e_coefficient,
    e_lambda,
    one_plus_x_pow,
    series_exp,
    series_log,
    series_mul,
)

__version__ = "0.1.0"
