"""Associated Legendre functions P and Q on the ray u = cosh(eta) > 1.

Degrees are passed as ``Z`` with nu = Z - 1/2, so the conical functions use
``Z = i z`` and the real-degree functions ``Z = x``.  Three series
representations are available and each returns the value together with its
derivatives in ``Z`` and in ``eta``:

* direct: 2F1 in -sinh^2(eta/2); converges for eta < 1.76 but its terms
  cancel like exp(2 |Im Z| sinh(eta/2)) on the conical line;
* Q-based: Q from a 2F1 in e^{-2 eta} or 1/(1 - e^{2 eta}), and P through
  the P/Q connection relation; accurate for large |Im Z| at any eta, but it
  divides by sin(pi Z) so it is useless near integer Z;
* Pfaff: 2F1 in tanh^2(eta/2); converges for every eta, used only for small
  |Z| at large eta.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

from scipy import special

from legsum.errors import (
    GammaPoleError,
    NoConvergenceError,
    ParameterError,
    UnsupportedOrder,
)
from legsum.specfun.gamma import cos_scaled, sin_scaled
from legsum.types import ConicalPoint, EvalResult, Flag, SeriesPath

_EPS = 2.220446049250313e-16
_MAX_TERMS = 100_000

# eta* from the design: below it the direct series is preferred
ETA_CROSSOVER = 1.2
# direct series accepted while 2 |Im Z| sinh(eta/2) stays below this
DIRECT_CANCELLATION_LIMIT = 6.0
# largest eta at which the direct series is still used as a fallback
ETA_DIRECT_MAX = 1.6
# Q-based path needs |sin(pi Z)| e^{-pi |Im Z|} at least this large
SIN_FLOOR = 0.25
# switch from the e^{-2eta} form of Q to the 1/(1-e^{2eta}) form
FORM2_MAX_ARG = 0.5


class _Val(NamedTuple):
    f: complex
    f_z: complex
    f_eta: complex
    err: float
    path: SeriesPath


def _check_order(mu: float) -> None:
    if mu > 0.5:
        raise UnsupportedOrder(f"order mu={mu} > 1/2 is not supported")


def _series(A, dA, B, dB, C, dC, w):
    """Sum 2F1(A, B; C; w) and its derivatives.

    A, B, C are affine in a parameter Z with slopes dA, dB, dC.  Returns
    (F, dF/dZ, dF/dw, err) where err bounds truncation plus rounding.
    """
    t = 1.0 + 0j
    dt = 0j
    F = 1.0 + 0j
    FZ = 0j
    Fw = 0j  # accumulates sum j t_j, divided by w at the end
    mag = 1.0
    dmag = 0.0
    aw = abs(w)
    if w == 0:
        return F, FZ, 0j, 0.0
    small = 0
    for j in range(_MAX_TERMS):
        a = A + j
        b = B + j
        c = C + j
        den = c * (j + 1)
        if den == 0:
            raise NoConvergenceError("hypergeometric denominator vanished")
        rho = a * b * w / den
        drho = w * (dA * b * c + dB * a * c - dC * a * b) / (c * den)
        dt = dt * rho + t * drho
        t = t * rho
        F += t
        FZ += dt
        Fw += (j + 1) * t
        at = abs(t)
        adt = abs(dt)
        mag += at
        dmag += adt
        ar = abs(rho)
        if ar < 1.0 and j > 3:
            r = max(ar, aw)
            if r < 1.0:
                q = r / (1.0 - r)
                tail = at * q
                ok = (tail <= _EPS * max(abs(F), _EPS * mag)
                      and adt * q <= _EPS * max(abs(FZ), _EPS * dmag)
                      and (j + 2) * tail <= _EPS * max(abs(Fw), _EPS * mag))
                small = small + 1 if ok else 0
                if small >= 2:
                    err = tail + 4 * _EPS * mag * math.sqrt(j + 1)
                    return F, FZ, Fw / w, err
    raise NoConvergenceError("Legendre series did not converge")


def _direct(mu: float, eta: float, Z: complex) -> _Val:
    # P^mu_nu(cosh eta) = coth(eta/2)^mu / Gamma(1-mu) * F(-nu, nu+1; 1-mu; -sinh^2(eta/2))
    sh = math.sinh(0.5 * eta)
    w = -sh * sh
    F, FZ, Fw, err = _series(0.5 - Z, -1.0, 0.5 + Z, 1.0, 1.0 - mu, 0.0, w)
    pref = math.tanh(0.5 * eta) ** (-mu) / math.gamma(1.0 - mu)
    f = pref * F
    f_eta = pref * (-mu / math.sinh(eta) * F + Fw * (-0.5 * math.sinh(eta)))
    return _Val(f, pref * FZ, f_eta, abs(pref) * err, SeriesPath.DIRECT_HYPERGEOMETRIC)


def _pfaff(mu: float, eta: float, Z: complex) -> _Val:
    th = math.tanh(0.5 * eta)
    t = th * th
    A = 0.5 - Z
    F, FZ, Fw, err = _series(A, -1.0, 0.5 - mu - Z, -1.0, 1.0 - mu, 0.0, t)
    lc = math.log(math.cosh(0.5 * eta))
    pref = th ** (-mu) / math.gamma(1.0 - mu) * cmath.exp(-2.0 * A * lc)
    f = pref * F
    f_z = pref * (2.0 * lc * F + FZ)
    f_eta = pref * ((-mu / math.sinh(eta) - A * th) * F + Fw * th * (1.0 - t))
    return _Val(f, f_z, f_eta, abs(pref) * err, SeriesPath.PFAFF)


def _gamma_pole(x: complex) -> bool:
    return abs(x.imag) < 1e-300 and x.real <= 0 and abs(x.real - round(x.real)) < 1e-14


def _q_hyp(mu: float, eta: float, Z: complex) -> _Val:
    """Q^mu_{Z-1/2}(cosh eta) from its e^{-2 eta} hypergeometric forms."""
    Z = complex(Z)
    g1 = 0.5 + Z + mu
    if _gamma_pole(g1):
        raise GammaPoleError(f"Q^mu_(Z-1/2) has a pole at Z={Z}, mu={mu}")
    if _gamma_pole(1.0 + Z):
        raise GammaPoleError(f"Q^mu_(Z-1/2) undefined at Z={Z}")
    lg = special.loggamma(g1) - special.loggamma(1.0 + Z)
    dlg = special.psi(g1) - special.psi(1.0 + Z)
    phase = cmath.exp(1j * mu * math.pi)
    w2 = -1.0 / math.expm1(2.0 * eta)
    if abs(w2) <= FORM2_MAX_ARG:
        F, FZ, Fw, err = _series(0.5 + mu, 0.0, 0.5 - mu, 0.0, 1.0 + Z, 1.0, w2)
        logpref = lg - Z * eta - 0.5 * math.log(2.0 * math.sinh(eta))
        pref = math.sqrt(math.pi) * phase * cmath.exp(logpref)
        f = pref * F
        f_z = pref * ((dlg - eta) * F + FZ)
        dw = 2.0 * math.exp(2.0 * eta) * w2 * w2
        f_eta = pref * ((-Z - 0.5 / math.tanh(eta)) * F + Fw * dw)
    else:
        w1 = math.exp(-2.0 * eta)
        F, FZ, Fw, err = _series(0.5 + mu, 0.0, 0.5 + Z + mu, 1.0, 1.0 + Z, 1.0, w1)
        logpref = lg + mu * math.log(-math.expm1(-2.0 * eta)) - (Z + 0.5) * eta
        pref = math.sqrt(math.pi) * phase * cmath.exp(logpref)
        f = pref * F
        f_z = pref * ((dlg - eta) * F + FZ)
        f_eta = pref * ((2.0 * mu * w1 / (-math.expm1(-2.0 * eta)) - (Z + 0.5)) * F
                        + Fw * (-2.0 * w1))
    # phase and magnitude of the prefactor carry a relative error ~ eps |log pref|
    err = abs(pref) * err + 4 * _EPS * (abs(logpref) + 1.0) * abs(f)
    return _Val(f, f_z, f_eta, err, SeriesPath.Q_BASED_VIA_REFLECTION)


def _p_via_q(mu: float, eta: float, Z: complex) -> _Val:
    # pi e^{i mu pi} sin(pi Z) P = cos[pi(Z-mu)] Q_{-Z-1/2} - cos[pi(Z+mu)] Q_{Z-1/2}
    Z = complex(Z)
    s = sin_scaled(math.pi * Z)
    cr1 = cos_scaled(math.pi * (Z - mu)) / s
    cr2 = cos_scaled(math.pi * (Z + mu)) / s
    # d/dZ [cos(pi(Z -/+ mu)) / sin(pi Z)] = -pi cos(pi mu) / sin^2(pi Z)
    dcr = -math.pi * math.cos(math.pi * mu) * math.exp(-2.0 * math.pi * abs(Z.imag)) / (s * s)
    qm = _q_hyp(mu, eta, -Z)
    qp = _q_hyp(mu, eta, Z)
    norm = 1.0 / (math.pi * cmath.exp(1j * mu * math.pi))
    a1 = cr1 * qm.f
    a2 = cr2 * qp.f
    f = norm * (a1 - a2)
    f_z = norm * (dcr * (qm.f - qp.f) - cr1 * qm.f_z - cr2 * qp.f_z)
    f_eta = norm * (cr1 * qm.f_eta - cr2 * qp.f_eta)
    err = (abs(cr1) * qm.err + abs(cr2) * qp.err + 8 * _EPS * (abs(a1) + abs(a2))) / math.pi
    return _Val(f, f_z, f_eta, err, SeriesPath.Q_BASED_VIA_REFLECTION)


def select_path(eta: float, Z: complex) -> SeriesPath:
    """Representation used for P^mu_{Z-1/2}(cosh eta)."""
    Z = complex(Z)
    measure = 2.0 * math.sinh(0.5 * eta) * abs(Z.imag)
    if eta <= ETA_CROSSOVER and measure <= DIRECT_CANCELLATION_LIMIT:
        return SeriesPath.DIRECT_HYPERGEOMETRIC
    if abs(Z.imag) < 1e-12 * max(1.0, abs(Z)):
        # real degree: direct terms share one sign, no cancellation
        return SeriesPath.DIRECT_HYPERGEOMETRIC if eta < ETA_DIRECT_MAX else SeriesPath.PFAFF
    if abs(sin_scaled(math.pi * Z)) >= SIN_FLOOR:
        return SeriesPath.Q_BASED_VIA_REFLECTION
    if eta < ETA_DIRECT_MAX:
        return SeriesPath.DIRECT_HYPERGEOMETRIC
    return SeriesPath.PFAFF


_DISPATCH = {
    SeriesPath.DIRECT_HYPERGEOMETRIC: _direct,
    SeriesPath.Q_BASED_VIA_REFLECTION: _p_via_q,
    SeriesPath.PFAFF: _pfaff,
}


def p_general(mu: float, eta: float, Z: complex, path: SeriesPath | None = None) -> _Val:
    """P^mu_{Z-1/2}(cosh eta) for complex Z, with Z and eta derivatives."""
    _check_order(mu)
    if path is None:
        path = select_path(eta, Z)
    if path is SeriesPath.DIRECT_HYPERGEOMETRIC and 2.0 * math.sinh(0.5 * eta) >= 2.0:
        raise NoConvergenceError("direct series diverges for eta >= 2 arcsinh(1)")
    return _DISPATCH[path](mu, eta, complex(Z))


def q_general(mu: float, eta: float, Z: complex) -> _Val:
    """Q^mu_{Z-1/2}(cosh eta) for complex Z, with Z and eta derivatives."""
    _check_order(mu)
    return _q_hyp(mu, eta, complex(Z))


# --- public real-valued interface -------------------------------------------

_IMAG_TOL = 1e-10


def _as_real(v: _Val, scale: float, what: str) -> tuple[float, float, float]:
    """Drop the imaginary parts, which vanish analytically on the real line."""
    ref = max(scale, abs(v.f), 1e-300)
    if abs(v.f.imag) > _IMAG_TOL * ref + 10 * v.err:
        raise NoConvergenceError(f"{what}: imaginary residue {abs(v.f.imag):.3g} too large")
    return v.f.real, v.f_z.real, v.f_eta.real


def _result(value, err, path, flags=()):
    fl = set(flags)
    if not math.isfinite(value):
        fl.add(Flag.OVERFLOW_RISK)
        return EvalResult(value, math.inf, frozenset(fl), path)
    return EvalResult(value, err, frozenset(fl), path)


def _conical_raw(pt: ConicalPoint, z: float, path=None) -> _Val:
    z = abs(float(z))  # even in z
    return p_general(pt.mu, pt.eta, 1j * z, path)


def legendre_p_conical(pt: ConicalPoint, z: float, path: SeriesPath | None = None) -> EvalResult:
    """Conical function P^mu_{iz-1/2}(u), real for real z and mu."""
    v = _conical_raw(pt, z, path)
    f, _, _ = _as_real(v, v.err / _EPS, "P conical")
    return _result(f, v.err, v.path)


def dz_legendre_p_conical(pt: ConicalPoint, z: float, path: SeriesPath | None = None) -> EvalResult:
    """Degree derivative d/dz P^mu_{iz-1/2}(u)."""
    sign = 1.0 if z >= 0 else -1.0
    v = _conical_raw(pt, z, path)
    # d/dz = i d/dZ
    dz = 1j * v.f_z
    if abs(dz.imag) > _IMAG_TOL * max(abs(dz), 1e-300) + 1e3 * v.err:
        raise NoConvergenceError("dP/dz: imaginary residue too large")
    err = v.err * max(1.0, abs(z)) * 4
    return _result(sign * dz.real, err, v.path)


def du_legendre_p_conical(pt: ConicalPoint, z: float, path: SeriesPath | None = None) -> EvalResult:
    """Argument derivative d/du P^mu_{iz-1/2}(u), via d/du = (1/sinh eta) d/deta."""
    v = _conical_raw(pt, z, path)
    d = v.f_eta / pt.sinh_eta
    if abs(d.imag) > _IMAG_TOL * max(abs(d), 1e-300) + 1e3 * v.err:
        raise NoConvergenceError("dP/du: imaginary residue too large")
    return _result(d.real, v.err * 4 / pt.sinh_eta * (1 + abs(z)), v.path)


def conical_with_derivatives(pt: ConicalPoint, z: float):
    """(P, dP/dz, dP/du) at real z in one evaluation."""
    sign = 1.0 if z >= 0 else -1.0
    v = _conical_raw(pt, z)
    return v.f.real, sign * (1j * v.f_z).real, v.f_eta.real / pt.sinh_eta


def legendre_p_real_degree(pt: ConicalPoint, x: float) -> EvalResult:
    """P^mu_{x-1/2}(u) for real degree parameter x >= 0."""
    x = float(x)
    if x < 0:
        raise ParameterError("x must be non-negative")
    v = p_general(pt.mu, pt.eta, complex(x))
    return _result(v.f.real, v.err, v.path)


def legendre_q_real_degree(pt: ConicalPoint, x: float) -> EvalResult:
    """Q^mu_{x-1/2}(u) (complex: carries the e^{i mu pi} phase)."""
    x = float(x)
    if x < 0:
        raise ParameterError("x must be non-negative")
    v = q_general(pt.mu, pt.eta, complex(x))
    return EvalResult(v.f, v.err, path=v.path)


def legendre_q_conical(pt: ConicalPoint, z: float, branch: int = 1) -> EvalResult:
    """Q^mu_{+/- iz - 1/2}(u); ``branch`` selects the sign of the degree."""
    if branch not in (1, -1):
        raise ParameterError("branch must be +1 or -1")
    v = q_general(pt.mu, pt.eta, branch * 1j * float(z))
    return EvalResult(v.f, v.err, path=v.path)


def q_over_p_real_degree(mu: float, eta: float, x: float) -> complex:
    """Q^mu_{x-1/2}/P^mu_{x-1/2} at cosh(eta); tends to 0 as x grows."""
    q = q_general(mu, eta, complex(x)).f
    p = p_general(mu, eta, complex(x)).f.real
    if math.isinf(p):
        return 0j
    return q / p
