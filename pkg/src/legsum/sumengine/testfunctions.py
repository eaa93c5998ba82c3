"""Catalog of summands h(z) for the zero-sum formula.

Each family knows its analytic continuation exactly, so the engine never
continues numerically.  Besides h itself a family provides the combinations
that overflow when formed naively from h:

* ``ch(z)``   = cos[pi(mu + iz)] h(z) on the real axis (zero-sum weight);
* ``sh(x)``   = sinh(pi x) h(x) (first integral);
* ``pair(x)`` = cos[pi(mu + x)] (h(ix) + h(-ix)) (imaginary-axis integral).
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from legsum.errors import ParameterError
from legsum.specfun.legendre import p_general
from legsum.types import ConicalPoint


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"
    NONE = "none"


@dataclass(frozen=True)
class Pole:
    """A pole of h with the residue of h there (``residue=None`` when unknown)."""

    location: complex
    order: int = 1
    residue: complex | None = None


@dataclass(frozen=True)
class Decay:
    """Envelope of a real-axis quantity: exp(-rate x) or x^(-power)."""

    rate: float | None = None
    power: float | None = None
    period: float | None = None  # oscillation period, caps quadrature panels


def _cos_mu_iz(mu: float, z: complex) -> complex:
    return cmath.cos(math.pi * (mu + 1j * z))


def _cos_over_sinh(mu: float, z: float) -> complex:
    # cos[pi(mu + iz)] / sinh(pi z) = cos(pi mu) coth(pi z) - i sin(pi mu)
    return math.cos(math.pi * mu) / math.tanh(math.pi * z) - 1j * math.sin(math.pi * mu)


def _cos_over_cosh(mu: float, z: float) -> complex:
    return math.cos(math.pi * mu) - 1j * math.sin(math.pi * mu) * math.tanh(math.pi * z)


class TestFunction:
    """Base class; subclasses set the metadata and implement ``h``."""

    __test__ = False  # not a pytest class

    catalog_id: str = ""
    parity: Parity = Parity.NONE
    #: |h(x+iy)| < eps(x) e^{c eta |y|}; requires c < 2
    c_growth: float = 0.0
    decays_on_axis: bool = True
    #: pair(x) vanishes identically (h odd)
    axis_vanishes: bool = False
    #: h has poles at i n, n = 1, 2, ... (a 1/sinh(pi z) factor) or at
    #: i(n + 1/2), n = 0, 1, ... (a 1/cosh(pi z) factor)
    sinh_poles: bool = False
    cosh_poles: bool = False
    branch_point: float | None = None

    def params(self) -> dict:
        return {}

    def poles(self) -> list[Pole]:
        return []

    def imag_pole_heights(self) -> list[float]:
        """Finite list of y >= 0 with a pole of h at iy (besides sinh poles)."""
        return []

    def h(self, z: complex) -> complex:
        raise NotImplementedError

    def ch(self, z: float, mu: float) -> complex:
        return _cos_mu_iz(mu, z) * self.h(z)

    def sh(self, x: float) -> complex:
        return math.sinh(math.pi * x) * self.h(x)

    def pair(self, x: float, mu: float) -> complex:
        if self.axis_vanishes:
            return 0j
        return math.cos(math.pi * (mu + x)) * (self.h(1j * x) + self.h(-1j * x))

    def main_decay(self) -> Decay:
        raise NotImplementedError

    def term_decay(self, eta: float) -> Decay:
        """Envelope of the zero-sum terms in z."""
        raise NotImplementedError

    def axis_growth(self) -> float:
        """Exponential growth rate of |pair(x)| (compared with the 2 eta decay of Q/P)."""
        return self.c_growth

    def main_integral(self, mu: float, tol: float):
        """Optional closed form for the integral of sh over (0, inf); None if absent."""
        return None

    def describe(self) -> dict:
        return {
            "catalog_id": self.catalog_id,
            "params": self.params(),
            "poles": [(p.location, p.order, p.residue) for p in self.poles()],
        }


# --- exp_decay ------------------------------------------------------------


@dataclass
class ExpDecay(TestFunction):
    """h(z) = e^{-beta z} cos(gamma z) / prod_j (z - p_j), beta > pi.

    Poles must lie off the imaginary axis in Re z > 0; a pole on the real
    axis turns the first integral into a principal value.
    """

    beta: float = 4.0
    gamma: float = 0.0
    pole_list: tuple[complex, ...] = ()
    eta_ref: float = 1.0

    catalog_id = "exp_decay"

    def __post_init__(self):
        if not self.beta > math.pi:
            raise ParameterError("exp_decay needs beta > pi for convergence of the first integral")
        for p in self.pole_list:
            if not complex(p).real > 0:
                raise ParameterError("exp_decay poles must lie in Re z > 0")
        self.c_growth = abs(self.gamma) / self.eta_ref

    def params(self):
        return {"beta": self.beta, "gamma": self.gamma, "poles": list(self.pole_list)}

    def _den(self, z, skip=None):
        d = 1.0 + 0j
        for j, p in enumerate(self.pole_list):
            if j != skip:
                d *= z - p
        return d

    def poles(self):
        out = []
        for j, p in enumerate(self.pole_list):
            p = complex(p)
            res = cmath.exp(-self.beta * p) * cmath.cos(self.gamma * p) / self._den(p, skip=j)
            out.append(Pole(p, 1, res))
        return out

    def h(self, z):
        z = complex(z)
        return cmath.exp(-self.beta * z) * cmath.cos(self.gamma * z) / self._den(z)

    def ch(self, z, mu):
        # cos[pi(mu+iz)] e^{-beta z} split into the two exponentials
        a = cmath.exp(1j * math.pi * mu) * math.exp(-(math.pi + self.beta) * z)
        b = cmath.exp(-1j * math.pi * mu) * math.exp((math.pi - self.beta) * z)
        return 0.5 * (a + b) * math.cos(self.gamma * z) / self._den(z)

    def sh(self, x):
        e = 0.5 * (math.exp((math.pi - self.beta) * x) - math.exp(-(math.pi + self.beta) * x))
        return e * math.cos(self.gamma * x) / self._den(x)

    def main_decay(self):
        return Decay(rate=self.beta - math.pi, period=2 * math.pi / self.gamma if self.gamma else None)

    def term_decay(self, eta):
        return Decay(rate=self.beta - math.pi)

    def axis_growth(self):
        return abs(self.gamma)


# --- user_series_of_P -----------------------------------------------------


@dataclass
class SeriesOfP(TestFunction):
    """h(z) = e^{-beta z} cos(gamma z) P^mu_{iz-1/2}(u) with gamma < eta.

    h vanishes at every zero, so the zero-sum is identically 0 and the
    formula becomes a relation between integrals of Legendre functions.
    """

    pt: ConicalPoint = None
    beta: float = 4.0
    gamma: float = 0.0

    catalog_id = "user_series_of_P"

    def __post_init__(self):
        if self.pt is None:
            raise ParameterError("user_series_of_P needs the conical point of the zeros")
        if not self.beta > math.pi:
            raise ParameterError("beta must exceed pi")
        if not abs(self.gamma) < self.pt.eta:
            raise ParameterError("gamma must be below eta for the growth condition")
        self.c_growth = (abs(self.gamma) + self.pt.eta) / self.pt.eta

    def params(self):
        return {"beta": self.beta, "gamma": self.gamma, "mu": self.pt.mu, "eta": self.pt.eta}

    def _p(self, z):
        return p_general(self.pt.mu, self.pt.eta, 1j * complex(z)).f

    def h(self, z):
        z = complex(z)
        return cmath.exp(-self.beta * z) * cmath.cos(self.gamma * z) * self._p(z)

    def ch(self, z, mu):
        a = cmath.exp(1j * math.pi * mu) * math.exp(-(math.pi + self.beta) * z)
        b = cmath.exp(-1j * math.pi * mu) * math.exp((math.pi - self.beta) * z)
        return 0.5 * (a + b) * math.cos(self.gamma * z) * self._p(z).real

    def sh(self, x):
        e = 0.5 * (math.exp((math.pi - self.beta) * x) - math.exp(-(math.pi + self.beta) * x))
        return e * math.cos(self.gamma * x) * self._p(x).real

    def pair(self, x, mu):
        px = p_general(self.pt.mu, self.pt.eta, complex(x)).f.real
        return math.cos(math.pi * (mu + x)) * 2.0 * math.cos(self.beta * x) * math.cosh(self.gamma * x) * px

    def main_decay(self):
        return Decay(rate=self.beta - math.pi, period=2 * math.pi / (abs(self.gamma) + self.pt.eta))

    def term_decay(self, eta):
        return Decay(rate=self.beta - math.pi)

    def axis_growth(self):
        return abs(self.gamma) + self.pt.eta


# --- rational_cos ----------------------------------------------------------


@dataclass
class RationalCos(TestFunction):
    """h(z) = z^{2n} cos(alpha z) / [(z^2 + c^2)^{m+1} sinh(pi z)].

    H = sinh(pi z) h is even, so h is odd and the reflection condition holds;
    the poles at +/- ic have order m + 1, the ones at i k (k >= 1) and, for
    n = 0, at the origin come from the 1/sinh factor.
    """

    alpha: float = 1.0
    c: float = 1.0
    m: int = 0
    n: int = 0
    eta_ref: float = 1.0

    catalog_id = "rational_cos"
    parity = Parity.ODD
    axis_vanishes = True
    sinh_poles = True

    def __post_init__(self):
        if not self.c > 0:
            raise ParameterError("c must be positive")
        if not 0 <= self.n <= self.m + 1:
            raise ParameterError("need 0 <= n <= m + 1")
        self.c_growth = abs(self.alpha) / self.eta_ref

    def params(self):
        return {"alpha": self.alpha, "c": self.c, "m": self.m, "n": self.n}

    def imag_pole_heights(self):
        return [self.c]

    def poles(self):
        return [Pole(1j * self.c, self.m + 1, None)]

    def H(self, z):
        z = complex(z)
        return z ** (2 * self.n) * cmath.cos(self.alpha * z) / (z * z + self.c**2) ** (self.m + 1)

    def h(self, z):
        return self.H(z) / cmath.sinh(math.pi * complex(z))

    def ch(self, z, mu):
        return _cos_over_sinh(mu, z) * self.H(z).real

    def sh(self, x):
        return self.H(x).real

    def main_decay(self):
        period = 2 * math.pi / abs(self.alpha) if self.alpha else None
        return Decay(power=2 * (self.m + 1 - self.n), period=period)

    def term_decay(self, eta):
        return Decay(power=2 * (self.m + 1 - self.n))

    def main_integral(self, mu, tol):
        # Fourier integral; QUADPACK's QAWF handles the oscillation
        from scipy.integrate import quad

        if self.alpha == 0 or 2 * (self.m + 1 - self.n) < 2:
            return None
        g = lambda x: x ** (2 * self.n) / (x * x + self.c**2) ** (self.m + 1)
        val, err = quad(g, 0.0, np.inf, weight="cos", wvar=abs(self.alpha), epsabs=tol, limlst=200)
        return val, err


# --- bessel_product --------------------------------------------------------


def _jv_scaled(nu: float, a: float, z: complex) -> complex:
    """z^{-nu} J_nu(a z), entire and even in z."""
    z = complex(z)
    if abs(z) < 1e-8:
        return (0.5 * a) ** nu / special.gamma(nu + 1.0) * (1 - (0.5 * a * z) ** 2 / (nu + 1))
    return complex(special.jv(nu, a * z)) * z ** (-nu)


@dataclass
class BesselProduct(TestFunction):
    """h(z) = H(z)/sinh(pi z), H = z^{2n-nu} J_nu(a z) J_alpha(b w)/w^alpha, w = sqrt(z^2+c^2).

    H is even and entire; admissible when a + b < 2 eta and 2n < alpha + nu.
    """

    a: float = 1.0
    b: float = 1.0
    c: float = 1.0
    nu: float = 1.0
    alpha: float = 1.0
    n: int = 0
    eta_ref: float = 1.0

    catalog_id = "bessel_product"
    parity = Parity.ODD
    axis_vanishes = True
    sinh_poles = True

    def __post_init__(self):
        if min(self.a, self.b, self.c) <= 0:
            raise ParameterError("a, b, c must be positive")
        self.c_growth = (self.a + self.b) / self.eta_ref

    def params(self):
        return {"a": self.a, "b": self.b, "c": self.c, "nu": self.nu, "alpha": self.alpha, "n": self.n}

    def H(self, z):
        z = complex(z)
        w = cmath.sqrt(z * z + self.c**2)
        return z ** (2 * self.n) * _jv_scaled(self.nu, self.a, z) * _jv_scaled(self.alpha, self.b, w)

    def h(self, z):
        return self.H(z) / cmath.sinh(math.pi * complex(z))

    def ch(self, z, mu):
        return _cos_over_sinh(mu, z) * self.H(z).real

    def sh(self, x):
        return self.H(x).real

    def main_decay(self):
        return Decay(power=self.nu + self.alpha + 1 - 2 * self.n, period=2 * math.pi / (self.a + self.b))

    def term_decay(self, eta):
        return Decay(power=self.nu + self.alpha + 1 - 2 * self.n)


# --- generic H / sinh, H / cosh wrappers for the half-integer forms --------


@dataclass
class OddRational(TestFunction):
    """h(z) = H(z)/cosh(pi z), H = z / (z^2 + c^2)^{m+1}.

    H is odd, hence so is h, which gives the reflection condition on the
    imaginary axis.  Poles: +/- ic of order m + 1 and the cosh zeros i(k + 1/2);
    for integer orders mu = -l the latter cancel against cos[pi(mu - iz)].
    """

    c: float = 1.0
    m: int = 2
    eta_ref: float = 1.0

    catalog_id = "odd_rational"
    parity = Parity.ODD
    axis_vanishes = True
    cosh_poles = True

    def __post_init__(self):
        if not self.c > 0:
            raise ParameterError("c must be positive")
        if self.m < 1:
            raise ParameterError("m >= 1 is needed for a convergent sum")

    def params(self):
        return {"c": self.c, "m": self.m}

    def imag_pole_heights(self):
        return [self.c]

    def poles(self):
        return [Pole(1j * self.c, self.m + 1, None)]

    def H(self, z):
        z = complex(z)
        return z / (z * z + self.c**2) ** (self.m + 1)

    def h(self, z):
        return self.H(z) / cmath.cosh(math.pi * complex(z))

    def ch(self, z, mu):
        return _cos_over_cosh(mu, z) * self.H(z).real

    def sh(self, x):
        return math.tanh(math.pi * x) * self.H(x).real

    def main_decay(self):
        return Decay(power=2 * self.m + 1)

    def term_decay(self, eta):
        return Decay(power=2 * self.m + 1)


CATALOG = {
    "exp_decay": ExpDecay,
    "user_series_of_P": SeriesOfP,
    "rational_cos": RationalCos,
    "bessel_product": BesselProduct,
    "odd_rational": OddRational,
}
