"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so the CLI can report
it without parsing messages.
"""


class LegsumError(Exception):
    code = "error"


class ParameterError(LegsumError, ValueError):
    code = "domain_error"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class GammaPoleError(LegsumError, ValueError):
    code = "pole_at_nonpositive_integer"


class HypergeometricParameterError(LegsumError, ValueError):
    code = "c_nonpositive_integer"


class NoConvergenceError(LegsumError, ArithmeticError):
    code = "no_convergence"


class BracketFailure(LegsumError):
    code = "bracket_failure"


class UnsupportedOrder(ParameterError):
    code = "unsupported_order"

    def __init__(self, message):
        super().__init__(message)


class CertificationFailure(LegsumError):
    code = "certification_failure"


class ZeroNotCertified(LegsumError):
    code = "zero_not_certified"


class TailBoundUnavailable(LegsumError):
    code = "tail_bound_unavailable"


class MissingPoleData(LegsumError):
    code = "missing_pole_data"


class ReflectionConditionViolated(LegsumError):
    code = "reflection_condition_violated"


class DecayUndetected(LegsumError):
    code = "decay_undetected"


class NonFiniteIntegrand(LegsumError, ArithmeticError):
    code = "nonfinite_integrand"


class PoleOrderMismatch(LegsumError):
    code = "pole_order_mismatch"


class ValidityViolation(ParameterError):
    code = "validity_violation"

    def __init__(self, message):
        super().__init__(message)


class GrowthViolation(LegsumError):
    code = "growth_violation"


class ImaginaryXm(ParameterError):
    code = "imaginary_xm"

    def __init__(self, message):
        super().__init__(message)
