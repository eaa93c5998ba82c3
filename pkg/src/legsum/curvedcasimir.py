"""Boundary-induced vacuum polarization inside a Dirichlet sphere in hyperbolic space.

Background: ds^2 = dt^2 - a^2 [dr^2 + sinh^2 r dOmega^2], scalar field of
mass M and curvature coupling xi, sphere at r = r0.  Radial modes at order
l are P^{-l-1/2}_{iz-1/2}(cosh r)/sqrt(sinh r); applying the zero-sum
identity to the mode sum leaves the boundary-free part plus an integral
over the real degree x >= x_M, which is what this module evaluates.

All physical outputs are in inverse squared units of the lengths supplied
(a for the curved case, R0 for flat space).  With a = 1 (resp. R0 = 1) they
are the dimensionless combinations a^2 <phi^2> (resp. R0^2 <phi^2>).

For mu = -l - 1/2 the phase e^{i(l+1/2)pi} of the Q function cancels the
prefactor of the integrand exactly; ``reduced_q`` evaluates the cancelled
product from its terminating hypergeometric form, and ``phase_check``
confirms the cancellation against the generic complex evaluation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass

from scipy import special as sp

from legsum.accel import richardson
from legsum.errors import ImaginaryXm, ParameterError, ValidityViolation
from legsum.quad import Integrand, integrate, integrate_sqrt_lower
from legsum.specfun.legendre import conical_with_derivatives, p_general, q_general
from legsum.types import ConicalPoint, EvalResult, Flag
from legsum.zerofind import find_zeros

NEAR_BOUNDARY_RATIO = 0.95
_IMAG_TOL = 1e-10


@dataclass(frozen=True)
class CasimirResult(EvalResult):
    """EvalResult whose abs_err includes ``tail_bound``, the bound on the omitted l-terms."""

    tail_bound: float = 0.0
    l_used: int = 0


@dataclass(frozen=True)
class CasimirConfig:
    a: float = 1.0
    M: float = 0.0
    xi: float = 0.0
    r0: float = 1.0
    l_max: int = 80
    tol: float = 1e-10

    def __post_init__(self):
        if not (self.a > 0 and self.r0 > 0):
            raise ParameterError("a and r0 must be positive")
        if self.M < 0:
            raise ParameterError("M must be non-negative")
        if self.l_max < 0:
            raise ParameterError("l_max must be non-negative")
        if self.M**2 * self.a**2 + 1 - 6 * self.xi < 0:
            raise ImaginaryXm(f"x_M^2 = M^2 a^2 + 1 - 6 xi < 0 for xi={self.xi}, M={self.M}, a={self.a}")

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class FieldPoint:
    r: float
    theta: float = 0.0
    phi: float = 0.0
    t: float = 0.0


def x_m(cfg: CasimirConfig) -> float:
    v = cfg.M**2 * cfg.a**2 + 1 - 6 * cfg.xi
    if v < 0:
        raise ImaginaryXm("x_M is imaginary")
    return math.sqrt(v)


def eigenfrequency(z: float, cfg: CasimirConfig) -> float:
    """omega(z) = sqrt((z^2 + 1 - 6 xi)/a^2 + M^2) = sqrt(z^2 + x_M^2)/a."""
    if z < 0:
        raise ParameterError("z must be non-negative")
    return math.sqrt(z * z + x_m(cfg) ** 2) / cfg.a


def cos_gamma(p1: FieldPoint, p2: FieldPoint) -> float:
    c = (math.cos(p1.theta) * math.cos(p2.theta)
         + math.sin(p1.theta) * math.sin(p2.theta) * math.cos(p1.phi - p2.phi))
    return max(-1.0, min(1.0, c))


# --- radial factors ---------------------------------------------------------


def reduced_q(l: int, x: float, eta: float) -> float:
    """e^{i(l+1/2)pi} prod_{j=-l}^{l} (x + j) Q^{-l-1/2}_{x-1/2}(cosh eta), a real number.

    The product cancels the gamma poles of Q at x = l, l-1, ...; what is left
    is sqrt(pi) prod_{j=1}^{l}(x+j) (2 sinh eta)^{-l-1/2} e^{-(x-l) eta}
    F(-l, x-l; x+1; e^{-2 eta}), with a terminating series.
    """
    w = math.exp(-2 * eta)
    s, t = 0.0, 1.0
    for n in range(l + 1):
        s += t
        t *= (n - l) * (x - l + n) / ((x + 1 + n) * (n + 1)) * w
    pref = math.sqrt(math.pi) * math.prod(x + j for j in range(1, l + 1))
    return pref * (2 * math.sinh(eta)) ** (-l - 0.5) * math.exp(-(x - l) * eta) * s


def phase_check(l: int, x: float, eta: float) -> float:
    """Relative imaginary part of the product in ``reduced_q`` from the generic Q."""
    q = q_general(-l - 0.5, eta, complex(x)).f
    v = cmath.exp(1j * (l + 0.5) * math.pi) * math.prod(x + j for j in range(-l, l + 1)) * q
    rel_imag = abs(v.imag) / abs(v)
    rel_diff = abs(v.real - reduced_q(l, x, eta)) / abs(v)
    if rel_imag > _IMAG_TOL or rel_diff > 1e-9:
        raise ArithmeticError(f"phase cancellation failed at l={l}, x={x}: imag {rel_imag:.2e}, "
                              f"diff {rel_diff:.2e}")
    return rel_imag


def _p(l: int, x: float, eta: float) -> float:
    """P^{-l-1/2}_{x-1/2}(cosh eta) at real degree parameter x."""
    return p_general(-l - 0.5, eta, complex(x)).f.real


def _flags(flags: set) -> frozenset:
    if Flag.SLOW_CONVERGENCE in flags or Flag.NEAR_BOUNDARY in flags:
        return frozenset(flags)
    return frozenset(flags | {Flag.CONVERGED})


def _l_sum(term, l_max: int, tol: float, envelope=None):
    """sum_{l=0}^{l_max} term(l) with a geometric tail bound.

    ``envelope(l)`` bounds |term(l)| independently of angular factors (which
    may vanish for some l); it defaults to |term(l)|.
    """
    total, err = 0.0, 0.0
    prev_env = None
    tail = math.inf
    for l in range(l_max + 1):
        t, e = term(l)
        total += t
        err += e
        env = abs(t) if envelope is None else envelope(l)
        if prev_env is not None and l >= 2 and env <= tol / 10:
            q = env / prev_env if prev_env > 0 else 0.0
            if q < 1:
                tail = env * q / (1 - q)
                return total, err, tail, l, True
        prev_env = env
    if prev_env is not None and l >= 1:
        q = env / prev_env if prev_env > 0 else 0.0
        tail = env * q / (1 - q) if q < 1 else math.inf
    return total, err, tail, l_max, False


# --- <phi^2> ---------------------------------------------------------------


def phi2_center(cfg: CasimirConfig) -> EvalResult:
    """-(1/(2 pi^2 a^2)) int_{x_M}^inf x^2 (x^2 - x_M^2)^{-1/2}/(e^{2 x r0} - 1) dx."""
    xm = x_m(cfg)
    r0 = cfg.r0

    def g(x):
        return x * x / math.expm1(2 * x * r0) if x > 0 else 0.0

    r = integrate_sqrt_lower(Integrand(g, decay_rate=1.8 * r0), xm, cfg.tol / 4)
    pref = -1.0 / (2 * math.pi**2 * cfg.a**2)
    return CasimirResult(pref * r.value, abs(pref) * r.abs_err, r.flags)


# P^mu_{x-1/2}(cosh eta) grows like e^{x eta}; keep x eta well inside double range
_X_ETA_MAX = 650.0


def _radial_integral(cfg: CasimirConfig, l: int, r1: float, r2: float, time_factor,
                     rate: float, period: float | None, tol: float) -> EvalResult:
    """int_{x_M}^inf x Qred/P(u0) P(r1) P(r2) T(sqrt(x^2 - x_M^2)) / sqrt(x^2 - x_M^2) dx.

    When the decay is too slow to reach ``tol`` before P overflows, the
    range is cut at the overflow threshold and the exponential tail bound
    beyond it is added to abs_err with an overflow_risk flag.
    """
    r0 = cfg.r0
    xm2 = x_m(cfg) ** 2

    def g(x):
        if x == 0.0:
            return 0.0
        p0 = _p(l, x, r0)
        return x * reduced_q(l, x, r0) / p0 * _p(l, x, r1) * _p(l, x, r2) \
            * time_factor(math.sqrt(max(x * x - xm2, 0.0)))

    panel = 0.5 * period if period else None
    f = Integrand(g, decay_rate=0.8 * rate, max_panel=panel)
    x_cap = _X_ETA_MAX / r0
    if x_cap <= math.sqrt(xm2) + 1:
        raise ParameterError("r0 too large for double-precision Legendre evaluation")
    # the envelope needs x_M + X with env/rate <= tol; compare with the cap first
    probe = abs(g(x_cap)) * x_cap / math.sqrt(max(x_cap**2 - xm2, 1e-300))
    if probe / (0.8 * rate) <= tol:
        return integrate_sqrt_lower(f, math.sqrt(xm2), tol)
    body = integrate_sqrt_lower(f, math.sqrt(xm2), tol, upper=x_cap)
    tail = 2 * probe / (0.8 * rate)
    return EvalResult(body.value, body.abs_err + tail, frozenset({Flag.OVERFLOW_RISK}))


def phi2_boundary(cfg: CasimirConfig, r: float) -> EvalResult:
    """Boundary-induced part of <phi^2> at radius r (0 <= r < r0)."""
    if not 0 <= r < cfg.r0:
        raise ParameterError("need 0 <= r < r0")
    if r == 0:
        return phi2_center(cfg)
    flags = set()
    if r / cfg.r0 > NEAR_BOUNDARY_RATIO:
        flags.add(Flag.NEAR_BOUNDARY)
    rate = 2 * (cfg.r0 - r)
    pref = -1.0 / (4 * math.pi**2 * cfg.a**2 * math.sinh(r))
    xm = x_m(cfg)
    probe = xm + 0.37
    # the near-boundary series is flagged as unreliable; no point resolving it to tol
    tol_l = (max(cfg.tol, 1e-6) if Flag.NEAR_BOUNDARY in flags else cfg.tol) / 20

    def term(l):
        phase_check(l, probe, cfg.r0)
        v = _radial_integral(cfg, l, r, r, lambda k: 1.0, rate, None, tol_l)
        flags.update(v.flags - {Flag.CONVERGED})
        return pref * (2 * l + 1) * v.value, abs(pref) * (2 * l + 1) * v.abs_err

    total, err, tail, l_used, ok = _l_sum(term, cfg.l_max, cfg.tol)
    if not ok:
        flags.add(Flag.SLOW_CONVERGENCE)
    return CasimirResult(total, err + tail, _flags(flags), tail_bound=tail, l_used=l_used)


def wightman_boundary(cfg: CasimirConfig, p1: FieldPoint, p2: FieldPoint,
                      euclidean: bool = False) -> EvalResult:
    """Boundary-induced part of the positive-frequency Wightman function.

    With ``euclidean=True`` the time separation t1 - t2 is read as an
    imaginary-time separation tau, and cosh(k dt/a) becomes cos(k tau/a).
    """
    for p in (p1, p2):
        if not 0 <= p.r < cfg.r0:
            raise ParameterError("field points must satisfy 0 <= r < r0")
    dt = p1.t - p2.t
    if euclidean:
        rate = 2 * cfg.r0 - p1.r - p2.r
        time_factor = lambda k: math.cos(k * dt / cfg.a)
        period = 2 * math.pi * cfg.a / abs(dt) if dt else None
    else:
        rate = 2 * cfg.r0 - p1.r - p2.r - abs(dt) / cfg.a
        if rate <= 0:
            raise ValidityViolation("need r + r' + |dt|/a < 2 r0")
        time_factor = lambda k: math.cosh(k * dt / cfg.a)
        period = None
    if p1.r == 0 or p2.r == 0:
        return _wightman_with_center(cfg, p1, p2, time_factor, rate, period)
    flags = set()
    if max(p1.r, p2.r) / cfg.r0 > NEAR_BOUNDARY_RATIO:
        flags.add(Flag.NEAR_BOUNDARY)
    cg = cos_gamma(p1, p2)
    pref = -1.0 / (4 * math.pi**2 * cfg.a**2 * math.sqrt(math.sinh(p1.r) * math.sinh(p2.r)))
    probe = x_m(cfg) + 0.37
    envs = {}

    def term(l):
        phase_check(l, probe, cfg.r0)
        v = _radial_integral(cfg, l, p1.r, p2.r, time_factor, rate, period, cfg.tol / 20)
        base = pref * (2 * l + 1) * v.value
        envs[l] = abs(base)
        return base * sp.eval_legendre(l, cg), abs(pref) * (2 * l + 1) * v.abs_err

    total, err, tail, l_used, ok = _l_sum(term, cfg.l_max, cfg.tol, envelope=lambda l: envs[l])
    if not ok:
        flags.add(Flag.SLOW_CONVERGENCE)
    return CasimirResult(total, err + tail, _flags(flags), tail_bound=tail, l_used=l_used)


def _wightman_with_center(cfg, p1, p2, time_factor, rate, period) -> EvalResult:
    # only l = 0 survives when one point sits at the center, where
    # P^{-1/2}_{x-1/2}(cosh r)/sqrt(sinh r) -> sqrt(2/pi)
    other = p2 if p1.r == 0 else p1
    pref = -1.0 / (4 * math.pi**2 * cfg.a**2)
    if other.r == 0:
        def radial(x):
            return 2.0 / math.pi
    else:
        def radial(x):
            return math.sqrt(2 / math.pi) * _p(0, x, other.r) / math.sqrt(math.sinh(other.r))
    xm2 = x_m(cfg) ** 2

    def g(x):
        if x == 0.0:
            return 0.0
        return x * reduced_q(0, x, cfg.r0) / _p(0, x, cfg.r0) * radial(x) \
            * time_factor(math.sqrt(max(x * x - xm2, 0.0)))

    panel = 0.5 * period if period else None
    v = integrate_sqrt_lower(Integrand(g, decay_rate=0.8 * rate, max_panel=panel), math.sqrt(xm2),
                             cfg.tol / 4)
    return CasimirResult(pref * v.value, abs(pref) * v.abs_err, v.flags)


# --- flat-space limit -------------------------------------------------------


def phi2_minkowski_boundary(R0: float, R: float, M: float = 0.0, tol: float = 1e-10,
                            l_max: int = 80) -> EvalResult:
    """Boundary-induced <phi^2> inside a Dirichlet sphere of radius R0 in flat space."""
    if not (R0 > 0 and 0 <= R < R0):
        raise ParameterError("need R0 > 0 and 0 <= R < R0")
    if M < 0:
        raise ParameterError("M must be non-negative")
    flags = set()
    if R / R0 > NEAR_BOUNDARY_RATIO:
        flags.add(Flag.NEAR_BOUNDARY)

    if R == 0:
        def g0(y):
            return y * y / math.expm1(2 * y * R0) if y > 0 else 0.0

        r = integrate_sqrt_lower(Integrand(g0, decay_rate=1.8 * R0), M, tol / 4)
        pref = -1.0 / (2 * math.pi**2)
        return CasimirResult(pref * r.value, abs(pref) * r.abs_err, r.flags)

    def term(l):
        nu = l + 0.5

        def g(y):
            if y == 0.0:
                return 0.0
            # I(Ry)^2 K(R0 y)/I(R0 y) with the exponential scalings pulled out
            return (y * sp.ive(nu, R * y) ** 2 * sp.kve(nu, R0 * y) / sp.ive(nu, R0 * y)
                    * math.exp(-2 * y * (R0 - R)))

        v = integrate_sqrt_lower(Integrand(g, decay_rate=1.6 * (R0 - R)), M, tol / 20)
        pref = -(2 * l + 1) / (4 * math.pi**2 * R)
        return pref * v.value, abs(pref) * v.abs_err

    total, err, tail, l_used, ok = _l_sum(term, l_max, tol)
    if not ok:
        flags.add(Flag.SLOW_CONVERGENCE)
    return CasimirResult(total, err + tail, _flags(flags), tail_bound=tail, l_used=l_used)


def curvature_limit(R0: float, R: float, M: float = 0.0, xi: float = 0.0,
                    ratios=(20.0, 40.0, 80.0), tol: float = 1e-10) -> list[dict]:
    """Curved-space values at a = s R0 (r0 = R0/a, r = R/a) against the flat-space value."""
    flat = phi2_minkowski_boundary(R0, R, M, tol)
    rows = []
    for s in ratios:
        a = s * R0
        cfg = CasimirConfig(a=a, M=M, xi=xi, r0=R0 / a, tol=tol)
        v = phi2_boundary(cfg, R / a)
        rows.append({"a_over_R0": s, "curved": v.value, "curved_err": v.abs_err,
                     "flat": flat.value, "gap": abs(v.value - flat.value)})
    return rows


# --- independent mode-sum oracle -------------------------------------------


def _mode_sum_l(cfg: CasimirConfig, l: int, r1: float, r2: float, tau: float, rel: float):
    """sum_k C_k^2 P_k(r1) P_k(r2) e^{-omega_k tau}, normalisation from the norm integral identity."""
    pt = ConicalPoint.from_eta(-l - 0.5, cfg.r0)
    z_max = cfg.a * math.log(1.0 / rel) / tau
    k_max = max(8, int(z_max * cfg.r0 / math.pi + 0.5 * l + 4))
    zs = find_zeros(pt, k_max)
    total = 0.0
    last = 0.0
    for z in zs.values:
        _, dpdz, dpdu = conical_with_derivatives(pt, z)
        w = math.sqrt(z * z + x_m(cfg) ** 2) / cfg.a
        c2 = z / (cfg.a**3 * w * pt.sinh_eta**2 * dpdz * dpdu)
        pr = p_general(-l - 0.5, r1, 1j * z).f.real * p_general(-l - 0.5, r2, 1j * z).f.real
        last = c2 * pr * math.exp(-w * tau)
        total += last
    return total, abs(last) * 10


def _free_l(cfg: CasimirConfig, l: int, r1: float, r2: float, tau: float, rel: float, tol: float):
    """(1/(2 a^3)) int_0^inf z^2 prod_{j=1}^l (z^2 + j^2) P(r1) P(r2) e^{-omega tau}/omega dz."""
    xm2 = x_m(cfg) ** 2

    def g(z):
        w = math.sqrt(z * z + xm2) / cfg.a
        if w == 0.0:
            return 0.0
        poly = z * z * math.prod(z * z + j * j for j in range(1, l + 1))
        pr = p_general(-l - 0.5, r1, 1j * z).f.real * p_general(-l - 0.5, r2, 1j * z).f.real
        return poly * pr * math.exp(-w * tau) / w

    # the integrand rises like z^{2l+2} before the exponential sets in, so
    # integrate over the same finite range as the mode sum instead of
    # detecting the decay from the left
    z_max = cfg.a * math.log(1.0 / rel) / tau + 2 * l
    f = Integrand(g, max_panel=min(1.0, 0.5 * math.pi / max(r1, r2)))
    v = integrate(f, 0.0, z_max, tol)
    # matches C_k^2 sum normalisation: W0_l = (2l+1) P_l / (8 pi a^3 ...) vs (2l+1) P_l / (4 pi ...)
    return v.value / (2 * cfg.a**3), v.abs_err / (2 * cfg.a**3)


def mode_sum_oracle(cfg: CasimirConfig, p1: FieldPoint, p2: FieldPoint, tau: float,
                    l_max: int = 12, rel: float = 1e-14) -> EvalResult:
    """Boundary part from the raw mode sum minus the boundary-free integral, at imaginary time tau.

    Independent of the zero-sum identity: the mode normalisation comes from
    the norm integral identity and the free part from the continuum modes.
    """
    if tau <= 0:
        raise ParameterError("tau must be positive")
    cg = cos_gamma(p1, p2)
    s = math.sqrt(math.sinh(p1.r) * math.sinh(p2.r))
    total, err = 0.0, 0.0
    for l in range(l_max + 1):
        ms, me = _mode_sum_l(cfg, l, p1.r, p2.r, tau, rel)
        fr, fe = _free_l(cfg, l, p1.r, p2.r, tau, rel, 1e-13)
        pref = (2 * l + 1) * sp.eval_legendre(l, cg) / (4 * math.pi * s)
        total += pref * (ms - fr)
        err += abs(pref) * (me + fe)
    return EvalResult(total, err)


def static_mode_sum_oracle(cfg: CasimirConfig, p1: FieldPoint, p2: FieldPoint,
                           taus=(0.4, 0.2, 0.1), l_max: int = 12) -> EvalResult:
    """Oracle value at equal times: the imaginary-time boundary part is even in tau,
    so it is extrapolated to tau = 0 in powers of tau^2."""
    vals = []
    for tau in taus:
        q1 = FieldPoint(p1.r, p1.theta, p1.phi, 0.0)
        q2 = FieldPoint(p2.r, p2.theta, p2.phi, 0.0)
        vals.append(mode_sum_oracle(cfg, q1, q2, tau * cfg.a, l_max).value)
    ratio = taus[0] / taus[1]
    return richardson(vals, ratio, [2.0, 4.0, 6.0])
