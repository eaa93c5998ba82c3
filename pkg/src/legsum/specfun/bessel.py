"""Bessel-family values, backed by scipy.special (cephes/AMOS)."""

from __future__ import annotations

import numpy as np
from scipy import special

from legsum.errors import ParameterError
from legsum.types import EvalResult

_FUNCS = {
    "J": special.jv,
    "Y": special.yv,
    "I": special.iv,
    "K": special.kv,
    "H1": special.hankel1,
    "H2": special.hankel2,
}
_DERIVS = {
    "J": special.jvp,
    "Y": special.yvp,
    "I": special.ivp,
    "K": special.kvp,
    "H1": special.h1vp,
    "H2": special.h2vp,
}
_NEEDS_POSITIVE = {"Y", "K", "H1", "H2"}


def _check(kind, x):
    if kind not in _FUNCS:
        raise ParameterError(f"unknown Bessel kind {kind!r}")
    if np.iscomplexobj(x):
        return
    if kind in _NEEDS_POSITIVE and not x > 0:
        raise ParameterError(f"{kind} requires x > 0", code="domain_error")
    if not x >= 0:
        raise ParameterError(f"{kind} requires x >= 0", code="domain_error")


def bessel(kind: str, nu: float, x) -> EvalResult:
    """J, Y, I, K, H1 or H2 of order nu at x (complex x accepted, no checks)."""
    _check(kind, x)
    v = _FUNCS[kind](nu, x)
    if isinstance(v, np.ndarray):
        v = v.item()
    return EvalResult(v, 1e-14 * abs(v))


def bessel_derivative(kind: str, nu: float, x) -> EvalResult:
    _check(kind, x)
    v = _DERIVS[kind](nu, x)
    if isinstance(v, np.ndarray):
        v = v.item()
    return EvalResult(v, 1e-14 * abs(v))
