"""Richardson extrapolation and finite-difference derivatives."""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np

from legsum.types import EvalResult, Flag


def richardson(values: Sequence[complex], ratio: float, powers: Sequence[float]) -> EvalResult:
    """Extrapolate a sequence A(h_j), h_j = h_0 / ratio**j, to h -> 0.

    ``powers`` lists the exponents p_1 < p_2 < ... of the error expansion
    A(h) = A + c_1 h^p_1 + c_2 h^p_2 + ...  The error estimate is the change
    produced by the last elimination step.
    """
    table = [complex(v) for v in values]
    if len(table) < 2:
        raise ValueError("need at least two values")
    prev_best = table[-1]
    best = table[-1]
    for p in powers[: len(table) - 1]:
        f = ratio**p
        table = [(f * table[i + 1] - table[i]) / (f - 1.0) for i in range(len(table) - 1)]
        prev_best, best = best, table[-1]
    err = abs(best - prev_best)
    out = best.real if all(isinstance(v, (int, float, np.floating)) for v in values) else best
    return EvalResult(out, err)


def derivative(f: Callable[[float], complex], x: float, h: float = 1e-2, levels: int = 5) -> EvalResult:
    """Central difference f'(x) with Richardson extrapolation in h^2."""
    vals = []
    for j in range(levels):
        hj = h / 2**j
        vals.append((f(x + hj) - f(x - hj)) / (2 * hj))
    res = richardson(vals, 2.0, [2 * i for i in range(1, levels)])
    # the last steps are dominated by rounding; guard the estimate with it
    scale = max(abs(v) for v in vals)
    err = res.abs_err + 1e-15 * scale * 2**levels / h
    flags = frozenset({Flag.CONVERGED}) if err <= 1e-6 * max(scale, 1e-300) else frozenset({Flag.SLOW_CONVERGENCE})
    return EvalResult(res.value, err, flags)


def partial_sum_limit(partial: Callable[[int], complex], n0: int, levels: int = 6,
                      powers: Sequence[float] | None = None) -> EvalResult:
    """Limit of S(N) as N -> inf, from S(n0 2^j) assuming S(N) = S + sum c_i N^{-p_i}."""
    vals = [partial(n0 * 2**j) for j in range(levels)]
    if powers is None:
        powers = list(range(1, levels))
    return richardson(vals, 2.0, powers)
