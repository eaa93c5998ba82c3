"""Positive zeros z_k of z -> P^mu_{iz-1/2}(u0).

For mu <= 0 every zero in the degree is real and simple, and the k-th one
approaches (pi k - pi mu/2 - pi/4)/eta0.  Zeros are bracketed between
midpoints of consecutive estimates, checked by a sign census and refined
with Brent's method.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from scipy.optimize import brentq

from legsum.errors import BracketFailure, CertificationFailure, UnsupportedOrder
from legsum.quad import integrate
from legsum.specfun.legendre import (
    conical_with_derivatives,
    dz_legendre_p_conical,
    legendre_p_conical,
    p_general,
)
from legsum.types import ConicalPoint

# intervals below this index get a finer sign scan during the census
_FINE_CENSUS_K = 10
_FINE_SUBDIV = 8


class ZeroMethod(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    BRACKETED_REFINED = "bracketed_refined"


@dataclass(frozen=True)
class Zero:
    k: int
    z: float
    bracket: tuple[float, float]
    residual: float
    dz_p: float


@dataclass(frozen=True)
class ZeroSet:
    pt: ConicalPoint
    zeros: tuple[Zero, ...]
    method: ZeroMethod

    def __len__(self):
        return len(self.zeros)

    def __iter__(self):
        return iter(self.zeros)

    @property
    def values(self) -> list[float]:
        return [e.z for e in self.zeros]


def zero_estimate(pt: ConicalPoint, k: int) -> float:
    """Large-k estimate (pi k - pi mu/2 - pi/4)/eta0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return (math.pi * k - 0.5 * math.pi * pt.mu - 0.25 * math.pi) / pt.eta


def _closed_form(pt: ConicalPoint, k_max: int) -> ZeroSet:
    # mu = -1/2: sin(z eta) zeros pi k/eta, k >= 1.  mu = 1/2: cos(z eta) zeros
    # pi (k + 1/2)/eta, labelled from k = 0 so the label matches that form.
    first = 1 if pt.mu == -0.5 else 0
    shift = 0.0 if pt.mu == -0.5 else 0.5
    half = 0.45 * math.pi / pt.eta
    out = []
    for k in range(first, first + k_max):
        z = math.pi * (k + shift) / pt.eta
        out.append(Zero(k, z, (z - half, z + half), abs(legendre_p_conical(pt, z).value),
                        dz_legendre_p_conical(pt, z).value))
    return ZeroSet(pt, tuple(out), ZeroMethod.CLOSED_FORM)


def _p(pt: ConicalPoint, z: float) -> float:
    return legendre_p_conical(pt, z).value


def _sign_changes(pt, lo, hi, n, cache):
    """Sign changes of P on a uniform n-panel grid over [lo, hi]."""
    xs = [lo + (hi - lo) * j / n for j in range(n + 1)]
    vals = [cache.setdefault(x, _p(pt, x)) for x in xs]
    out = []
    for j in range(n):
        if vals[j] == 0.0:
            out.append((xs[j], xs[j]))
        elif vals[j] * vals[j + 1] < 0:
            out.append((xs[j], xs[j + 1]))
    return out


def _brackets_by_windows(pt, k_max, pad, cache):
    edges = [1e-9] + [zero_estimate(pt, k) + pad for k in range(1, k_max + 1)]
    brackets = []
    for k in range(1, k_max + 1):
        lo, hi = edges[k - 1], edges[k]
        n = _FINE_SUBDIV if k <= _FINE_CENSUS_K else 1
        ch = _sign_changes(pt, lo, hi, n, cache)
        if len(ch) != 1:
            return None
        brackets.append(ch[0])
    return brackets


def _brackets_by_scan(pt, k_max, cache):
    hi = zero_estimate(pt, k_max) + math.pi / pt.eta
    n = int(math.ceil(hi / (0.05 * math.pi / pt.eta)))
    ch = _sign_changes(pt, 1e-9, hi, n, cache)
    if len(ch) < k_max:
        raise BracketFailure(f"sign census found {len(ch)} zeros, expected {k_max}")
    return ch[:k_max]


def find_zeros(pt: ConicalPoint, k_max: int, tol: float = 1e-13) -> ZeroSet:
    """First ``k_max`` positive zeros of P^mu_{iz-1/2}(u0) in increasing order."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if tol < 1e-13:
        raise ValueError("tol must be >= 1e-13")
    if pt.mu in (-0.5, 0.5):
        return _closed_form(pt, k_max)
    if pt.mu > 0:
        raise UnsupportedOrder(f"zeros are only guaranteed real for mu <= 0 (got {pt.mu})")
    cache: dict[float, float] = {}
    brackets = _brackets_by_windows(pt, k_max, 0.5 * math.pi / pt.eta, cache)
    if brackets is None:
        # widen once: fine scan from the origin
        brackets = _brackets_by_scan(pt, k_max, cache)
    out = []
    for k, (lo, hi) in enumerate(brackets, start=1):
        if lo == hi:
            z = lo
        else:
            z = brentq(lambda x: _p(pt, x), lo, hi, xtol=tol, rtol=8.9e-16, maxiter=200)
        res = abs(_p(pt, z))
        d = dz_legendre_p_conical(pt, z).value
        if d == 0.0:
            raise BracketFailure(f"zero {k} at z={z} is not simple")
        out.append(Zero(k, z, (lo, hi), res, d))
    for a, b in zip(out, out[1:]):
        if not a.z < b.z:
            raise BracketFailure("zeros are not strictly increasing")
    return ZeroSet(pt, tuple(out), ZeroMethod.BRACKETED_REFINED)


@dataclass
class CertificationReport:
    entries: list[dict] = field(default_factory=list)
    ok: bool = True


def norm_integral(pt: ConicalPoint, z: float, tol: float = 1e-12) -> float:
    """Integral of P^mu_{iz-1/2}(v)^2 over v in [1, u0], done in t with v = cosh t."""

    def f(t):
        if t == 0.0:
            return 0.0
        return p_general(pt.mu, t, 1j * z).f.real ** 2 * math.sinh(t)

    return integrate(f, 0.0, pt.eta, tol).value


def norm_identity_rhs(pt: ConicalPoint, z: float) -> float:
    """(u0^2 - 1)/(2 z) dP/dz dP/du at a zero, where the P d^2P term drops out."""
    _, dpdz, dpdu = conical_with_derivatives(pt, z)
    return pt.sinh_eta**2 / (2.0 * z) * dpdz * dpdu


def certify(zs: ZeroSet, rtol: float = 1e-6) -> CertificationReport:
    rep = CertificationReport()
    for e in zs.zeros:
        lhs = norm_integral(zs.pt, e.z)
        rhs = norm_identity_rhs(zs.pt, e.z)
        rel = abs(lhs - rhs) / abs(lhs) if lhs != 0 else math.inf
        good = lhs > 0 and rel <= rtol and e.dz_p != 0.0
        rep.entries.append({"k": e.k, "z": e.z, "lhs": lhs, "rhs": rhs, "rel_diff": rel, "ok": good})
        rep.ok &= good
    if not rep.ok:
        bad = [x["k"] for x in rep.entries if not x["ok"]]
        raise CertificationFailure(f"norm identity failed at zeros {bad}")
    return rep
