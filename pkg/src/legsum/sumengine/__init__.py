"""Summation over the zeros of P^mu_{iz-1/2}(u) in the degree."""

from legsum.sumengine.engine import (
    AdmissibilityReport,
    SumVerdict,
    admissibility_check,
    lhs_sum,
    rhs_eval,
    t_factor,
    t_factor_wronskian,
    verify_sum,
)
from legsum.sumengine.special import (
    AbelPlanaResult,
    BesselSumVerdict,
    ClosedForm,
    SimplePole,
    abel_plana,
    bessel_zeros,
    example1_closed_form,
    half_integer_phase,
    rayleigh_check,
    sum_bessel_zeros,
    verify_sum_half_integer,
)
from legsum.sumengine.testfunctions import (
    CATALOG,
    BesselProduct,
    Decay,
    ExpDecay,
    OddRational,
    Parity,
    Pole,
    RationalCos,
    SeriesOfP,
    TestFunction,
)

__all__ = [
    "AbelPlanaResult", "AdmissibilityReport", "BesselProduct", "BesselSumVerdict", "CATALOG",
    "ClosedForm", "Decay", "ExpDecay", "OddRational", "Parity", "Pole", "RationalCos",
    "SeriesOfP", "SimplePole", "SumVerdict", "TestFunction", "abel_plana", "admissibility_check",
    "bessel_zeros", "example1_closed_form", "half_integer_phase", "lhs_sum", "rayleigh_check",
    "rhs_eval", "sum_bessel_zeros", "t_factor", "t_factor_wronskian", "verify_sum",
    "verify_sum_half_integer",
]
