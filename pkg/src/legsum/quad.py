"""One-dimensional quadrature on top of QUADPACK panels.

QUADPACK (``scipy.integrate.quad``) integrates individual panels.  This module
adds what the summation and physics code needs around it: period-capped
panels for oscillatory integrands, truncation of semi-infinite ranges from a
decay rate, symmetric excision for principal values and the substitution
that removes a 1/sqrt(x^2 - x_M^2) endpoint singularity.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy import integrate as _si

from legsum.errors import DecayUndetected, NonFiniteIntegrand, PoleOrderMismatch
from legsum.types import EvalResult, Flag, merge_flags

_LIMIT = 200


@dataclass(frozen=True)
class Singularity:
    kind: str  # "pv_pole" or "sqrt_endpoint"
    at: float


@dataclass(frozen=True)
class Integrand:
    """A scalar integrand with optional analytic metadata.

    ``decay_rate`` is a lower bound k with |f(x)| <~ e^{-k x}; ``decay_power``
    a bound p > 1 with |f(x)| <~ x^{-p}.  ``max_panel`` caps panel width,
    typically half an oscillation period.
    """

    eval: Callable[[float], complex]
    decay_rate: float | None = None
    decay_power: float | None = None
    singularity: Singularity | None = None
    max_panel: float | None = None

    def __call__(self, x):
        return self.eval(x)


def _wrap(f) -> Integrand:
    return f if isinstance(f, Integrand) else Integrand(f)


def _panel(g, a, b, tol, is_complex):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", _si.IntegrationWarning)
        val, err = _si.quad(g, a, b, epsabs=tol, epsrel=0.0, limit=_LIMIT, complex_func=is_complex)
    # complex_func reports the real and imaginary error estimates as one complex number
    return val, abs(err.real) + abs(err.imag) if is_complex else err


def _probe(g, a, b):
    xs = np.linspace(a, b, 7)[1:-1]
    vals = [g(float(x)) for x in xs]
    for v in vals:
        if not np.isfinite(v):
            raise NonFiniteIntegrand(f"integrand is not finite inside [{a}, {b}]")
    return any(isinstance(v, complex) or np.iscomplexobj(v) for v in vals)


def integrate(f, a: float, b: float, tol: float = 1e-10) -> EvalResult:
    """Adaptive integral of f over [a, b] with abs_err <= tol or a slow_convergence flag."""
    f = _wrap(f)
    if not a < b:
        if a == b:
            return EvalResult(0.0, 0.0)
        raise ValueError("need a < b")
    g = f.eval
    if f.singularity is not None and f.singularity.kind == "sqrt_endpoint":
        # x = x0 + s^2 (or x0 - s^2) absorbs an inverse square root at x0
        x0 = f.singularity.at
        if x0 == a:
            g0 = f.eval
            g = lambda s: 2.0 * s * g0(a + s * s)
            a, b = 0.0, math.sqrt(b - a)
        elif x0 == b:
            g0 = f.eval
            g = lambda s: 2.0 * s * g0(b - s * s)
            a, b = 0.0, math.sqrt(b - a)
        else:
            raise ValueError("sqrt_endpoint must sit at an endpoint")
    is_complex = _probe(g, a, b)
    n = 1
    if f.max_panel is not None:
        n = max(1, math.ceil((b - a) / f.max_panel))
    edges = np.linspace(a, b, n + 1)
    total = 0j if is_complex else 0.0
    err = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        v, e = _panel(g, float(lo), float(hi), tol / n, is_complex)
        total += v
        err += e
    if not np.isfinite(total):
        raise NonFiniteIntegrand("quadrature produced a non-finite value")
    flags = {Flag.CONVERGED} if err <= tol else {Flag.SLOW_CONVERGENCE}
    return EvalResult(total, err, frozenset(flags))


def _detect_decay(g, a):
    xs = [a + 2.0**j for j in range(0, 9)]
    ys = [abs(g(x)) for x in xs]
    for i in range(len(xs) - 3):
        y0, y1, y2 = ys[i], ys[i + 1], ys[i + 2]
        if y0 > 0 and y1 > 0 and y2 > 0 and y2 < y1 < y0:
            r1 = -math.log(y1 / y0) / (xs[i + 1] - xs[i])
            r2 = -math.log(y2 / y1) / (xs[i + 2] - xs[i + 1])
            if r2 >= 0.8 * r1 > 0:
                return 0.5 * min(r1, r2)
        if y1 == 0.0 and y2 == 0.0:
            return 1.0
    raise DecayUndetected("could not establish exponential decay of the integrand")


def _envelope(g, x, width, n=9):
    return max(abs(g(x + width * j / (n - 1))) for j in range(n))


def truncation_point(f: Integrand, a: float, tol: float) -> tuple[float, float]:
    """Upper cut X and the bound on the discarded tail."""
    g = f.eval
    if f.decay_rate is not None:
        k = f.decay_rate
        step = max(1.0 / k, 0.25)
        X = a + step
        for _ in range(4000):
            env = _envelope(g, X, step)
            bound = env / k
            if bound <= tol:
                return X, bound
            X += step
        raise DecayUndetected("tail bound not reached; decay_rate too optimistic")
    if f.decay_power is not None:
        p = f.decay_power
        if p <= 1:
            raise ValueError("decay_power must exceed 1")
        X = max(a, 0.0) + 1.0
        for _ in range(60):
            width = max(f.max_panel or 0.0, 0.5 * X)
            env = _envelope(g, X, width)
            bound = env * X / (p - 1.0)
            if bound <= tol:
                return X, bound
            X *= 1.5
        raise DecayUndetected("algebraic tail bound not reached")
    k = _detect_decay(g, a)
    return truncation_point(Integrand(g, decay_rate=k, max_panel=f.max_panel), a, tol)


def integrate_semiinfinite(f, a: float, tol: float = 1e-10) -> EvalResult:
    """Integral over [a, inf) for exponentially (or declared algebraically) decaying f."""
    f = _wrap(f)
    if f.decay_power is not None and f.decay_rate is None and f.max_panel is None:
        return _integrate_algebraic(f, a, tol)
    X, bound = truncation_point(f, a, tol / 2)
    body = integrate(Integrand(f.eval, max_panel=f.max_panel), a, X, tol / 2)
    return EvalResult(body.value, body.abs_err + bound, body.flags)


def _integrate_algebraic(f: Integrand, a: float, tol: float) -> EvalResult:
    """Non-oscillatory x^{-p} decay: [a, X0] directly, then x = X0/t maps the tail onto (0, 1]."""
    X0 = max(a, 0.0) + 1.0
    g = f.eval

    def mapped(t):
        x = X0 / t
        return g(x) * X0 / (t * t)

    head = integrate(g, a, X0, tol / 2)
    tail = integrate(mapped, 0.0, 1.0, tol / 2)
    return EvalResult(head.value + tail.value, head.abs_err + tail.abs_err,
                      merge_flags(head, tail))


def integrate_pv(f, c: float, a: float, b: float, tol: float = 1e-10) -> EvalResult:
    """Cauchy principal value across a simple pole at c, a < c < b (b may be inf)."""
    f = _wrap(f)
    if not a < c < b:
        raise ValueError("need a < c < b")
    g = f.eval
    half = min(c - a, (b - c) if math.isfinite(b) else c - a, 1.0)

    def pair(t):
        return g(c + t) + g(c - t)

    # the pair sum stays bounded for a simple pole and grows like 1/t^2 otherwise
    t1, t2 = 1e-3 * half, 1e-5 * half
    p1, p2 = abs(pair(t1)), abs(pair(t2))
    s1 = abs(g(c + t1))
    if p2 > 50.0 * p1 + 1e-6 * s1:
        raise PoleOrderMismatch(f"singularity at {c} is not a simple pole")

    def once(eps):
        parts = [integrate(Integrand(pair, max_panel=f.max_panel), 0.0, eps, tol / 8)]
        if c - eps > a:
            parts.append(integrate(Integrand(g, max_panel=f.max_panel), a, c - eps, tol / 8))
        if math.isfinite(b):
            parts.append(integrate(Integrand(g, max_panel=f.max_panel), c + eps, b, tol / 8))
        else:
            rest = Integrand(g, decay_rate=f.decay_rate, decay_power=f.decay_power,
                             max_panel=f.max_panel)
            parts.append(integrate_semiinfinite(rest, c + eps, tol / 8))
        return sum(p.value for p in parts), sum(p.abs_err for p in parts)

    v1, e1 = once(half)
    v2, e2 = once(0.5 * half)
    diff = abs(v1 - v2)
    flags = {Flag.CONVERGED} if diff <= 2 * tol else {Flag.SLOW_CONVERGENCE}
    return EvalResult(v2, e2 + diff, frozenset(flags))


def integrate_sqrt_lower(g, x_m: float, tol: float = 1e-10, upper: float = math.inf) -> EvalResult:
    """Integral of g(x)/sqrt(x^2 - x_m^2) over [x_m, upper).

    With x = sqrt(x_m^2 + t^2) the integrand becomes g(x)/x in t, regular at t = 0.
    """
    g = _wrap(g)
    if x_m < 0:
        raise ValueError("x_m must be non-negative")

    def h(t):
        x = math.sqrt(x_m * x_m + t * t)
        return g.eval(x) / x if x > 0 else g.eval(0.0) * 0.0

    if x_m == 0.0:
        def h(t):  # noqa: F811  (degenerate case: integrand g(x)/x)
            return g.eval(t) / t

    sub = Integrand(h, decay_rate=g.decay_rate, decay_power=g.decay_power, max_panel=g.max_panel)
    if math.isfinite(upper):
        return integrate(sub, 0.0, math.sqrt(upper * upper - x_m * x_m), tol)
    return integrate_semiinfinite(sub, 0.0, tol)
