"""Special functions: gamma, 2F1, Legendre P/Q of conical and real degree, Bessel."""

from legsum.specfun.gamma import gamma_ln, gamma_ratio, gamma_ratio_abs_sq
from legsum.specfun.hypergeom import hyp2f1
from legsum.specfun.legendre import (
    ETA_CROSSOVER,
    conical_with_derivatives,
    du_legendre_p_conical,
    dz_legendre_p_conical,
    legendre_p_conical,
    legendre_p_real_degree,
    legendre_q_conical,
    legendre_q_real_degree,
    p_general,
    q_general,
    q_over_p_real_degree,
    select_path,
)
from legsum.specfun.bessel import bessel, bessel_derivative

__all__ = [
    "ETA_CROSSOVER",
    "bessel",
    "bessel_derivative",
    "conical_with_derivatives",
    "du_legendre_p_conical",
    "dz_legendre_p_conical",
    "gamma_ln",
    "gamma_ratio",
    "gamma_ratio_abs_sq",
    "hyp2f1",
    "legendre_p_conical",
    "legendre_p_real_degree",
    "legendre_q_conical",
    "legendre_q_real_degree",
    "p_general",
    "q_general",
    "q_over_p_real_degree",
    "select_path",
]
