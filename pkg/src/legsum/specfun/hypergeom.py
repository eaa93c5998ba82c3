"""Gauss hypergeometric series inside the unit disk."""

from __future__ import annotations

import math

from legsum.errors import HypergeometricParameterError, NoConvergenceError
from legsum.types import EvalResult, Flag

_EPS = 2.220446049250313e-16
MAX_TERMS = 200_000


def _nonpositive_int(c: complex) -> bool:
    return c.imag == 0.0 and c.real <= 0.0 and c.real == math.floor(c.real)


def hyp2f1(a, b, c, w, *, max_terms: int = MAX_TERMS) -> EvalResult:
    """Partial-sum evaluation of 2F1(a, b; c; w) for |w| < 1.

    The error estimate combines a geometric bound on the truncated tail with
    a rounding bound proportional to the sum of term magnitudes, so it stays
    honest when the terms cancel.
    """
    a, b, c, w = complex(a), complex(b), complex(c), complex(w)
    if _nonpositive_int(c):
        raise HypergeometricParameterError(f"c={c.real:g} is a non-positive integer")
    if abs(w) >= 1.0:
        raise NoConvergenceError(f"|w|={abs(w):g} outside the unit disk")
    term = 1.0 + 0j
    total = 1.0 + 0j
    mag = 1.0
    if w == 0:
        return EvalResult(total, 0.0)
    aw = abs(w)
    for j in range(max_terms):
        num = (a + j) * (b + j)
        if num == 0:
            # terminating series: exact up to rounding
            return EvalResult(total, 4 * _EPS * (mag + abs(total)) * (j + 1))
        ratio = num / ((c + j) * (j + 1)) * w
        term *= ratio
        total += term
        mag += abs(term)
        at = abs(term)
        # beyond the peak, subsequent ratios are bounded by rho < 1
        rho = max(abs(ratio), aw)
        if j > 2 and abs(ratio) < 1.0 and rho < 1.0:
            tail = at * rho / (1.0 - rho)
            if tail <= _EPS * abs(total) or tail == 0.0:
                err = tail + 4 * _EPS * mag * math.sqrt(j + 1)
                return EvalResult(total, err)
    raise NoConvergenceError(f"2F1 series did not converge in {max_terms} terms")
