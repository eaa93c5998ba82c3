"""Small value types shared by all modules."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from legsum.errors import ParameterError


class Flag(str, enum.Enum):
    CONVERGED = "converged"
    SLOW_CONVERGENCE = "slow_convergence"
    NEAR_POLE = "near_pole"
    OVERFLOW_RISK = "overflow_risk"
    NEAR_BOUNDARY = "near_boundary_divergence"


class SeriesPath(str, enum.Enum):
    """Which representation produced a Legendre-function value."""

    DIRECT_HYPERGEOMETRIC = "direct_hypergeometric"
    Q_BASED_VIA_REFLECTION = "q_based_via_reflection"
    ASYMPTOTIC = "asymptotic"
    # Pfaff-transformed series in tanh^2(eta/2); fills the large-eta,
    # small-degree corner that neither of the other two reaches.
    PFAFF = "pfaff"


@dataclass(frozen=True)
class EvalResult:
    """A value with an absolute error estimate.

    ``flags`` holds every condition raised during the evaluation; an empty
    set is normalised to ``{Flag.CONVERGED}``.
    """

    value: complex | float
    abs_err: float = 0.0
    flags: frozenset = field(default_factory=lambda: frozenset({Flag.CONVERGED}))
    path: SeriesPath | None = None

    def __post_init__(self):
        if not self.flags:
            object.__setattr__(self, "flags", frozenset({Flag.CONVERGED}))
        if self.converged and not math.isfinite(self.abs_err):
            raise ValueError("converged result must carry a finite error estimate")

    @property
    def converged(self) -> bool:
        return Flag.CONVERGED in self.flags

    def __float__(self):
        return float(self.value.real if isinstance(self.value, complex) else self.value)

    def __complex__(self):
        return complex(self.value)


def merge_flags(*results) -> frozenset:
    out = set()
    for r in results:
        out |= set(r.flags)
    if len(out) > 1:
        out.discard(Flag.CONVERGED)
    return frozenset(out)


@dataclass(frozen=True)
class ConicalPoint:
    """Order ``mu`` and argument ``u = cosh(eta) > 1``."""

    mu: float
    u: float
    eta: float

    def __post_init__(self):
        if not (self.u > 1.0) or not (self.eta > 0.0):
            raise ParameterError(f"argument must satisfy u > 1, got u={self.u!r}")
        if not math.isfinite(self.mu):
            raise ParameterError("order must be finite")

    @classmethod
    def from_eta(cls, mu: float, eta: float) -> "ConicalPoint":
        eta = float(eta)
        if not eta > 0.0:
            raise ParameterError(f"eta must be positive, got {eta!r}")
        return cls(float(mu), math.cosh(eta), eta)

    @classmethod
    def from_u(cls, mu: float, u: float) -> "ConicalPoint":
        u = float(u)
        if not u > 1.0:
            raise ParameterError(f"argument must satisfy u > 1, got u={u!r}")
        return cls(float(mu), u, math.acosh(u))

    @property
    def sinh_eta(self) -> float:
        return math.sinh(self.eta)
