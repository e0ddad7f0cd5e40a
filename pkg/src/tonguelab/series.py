"""Truncated power series at a fixed point and parabolic normal-form data.

A TruncatedSeries is a jet sum_{k<=N} c_k z^k; every operation truncates at
order N, so coefficients up to N are exact rational-arithmetic images of the
inputs (in floating point). The parabolic analysis composes a guiding map
with itself q times and reads off the leading term of f^q - Id, whose
coefficient drives the quadratic width asymptotics of the matching tongue.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import (IdentityToTruncation, MultiplicityNotOne, NonCoprime,
                     NonresonantLeadingTerm, NonvanishingConstantTerm,
                     NotRootOfUnity, OrderMismatch)

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 32
GUIDE_KINDS = ("standard", "blaschke")

_MULTIPLIER_TOL = 1e-10
_LEADING_TOL = 1e-10


class TruncatedSeries:
    """Complex jet c_0 + c_1 z + ... + c_N z^N; arithmetic truncates at N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(), order: int = DEFAULT_ORDER):
        if not isinstance(order, (int, np.integer)) or order < 0:
            raise ValueError(f"order must be a nonnegative integer, got {order!r}")
        arr = np.asarray(coeffs, dtype=complex).ravel()
        c = np.zeros(order + 1, dtype=complex)
        m = min(arr.size, order + 1)
        c[:m] = arr[:m]
        self.coeffs = c

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:4])
        tail = ", ..." if self.order >= 4 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    def __call__(self, z):
        """Horner evaluation of the jet at a point (or array)."""
        out = np.zeros_like(np.asarray(z, dtype=complex)) + self.coeffs[-1]
        for c in self.coeffs[-2::-1]:
            out = out * z + c
        return out


def _same_order(f: TruncatedSeries, g: TruncatedSeries) -> int:
    if f.order != g.order:
        raise OrderMismatch(f"orders differ: {f.order} vs {g.order}")
    return f.order


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    n = _same_order(f, g)
    return TruncatedSeries(np.convolve(f.coeffs, g.coeffs)[:n + 1], n)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """exp of a jet: e^{c_0} times the exponential of the nilpotent part.

    Uses the derivative recurrence h' = u' h, i.e.
    (k+1) h_{k+1} = sum_{j>=1} j u_j h_{k+1-j}, which needs no factorials
    and is exact at every truncation order.
    """
    n = f.order
    u = f.coeffs
    ju = np.arange(n + 1) * u
    h = np.zeros(n + 1, dtype=complex)
    h[0] = 1.0
    for k in range(n):
        h[k + 1] = np.dot(ju[1:k + 2], h[k::-1]) / (k + 1)
    return TruncatedSeries(cmath.exp(u[0]) * h, n)


def series_compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f(g(z)) truncated; g must literally fix 0 (c_0 == 0, not merely small)."""
    n = _same_order(f, g)
    if g.coeffs[0] != 0:
        raise NonvanishingConstantTerm(
            f"inner series has constant term {g.coeffs[0]!r}; composition "
            "is only defined at a fixed point of the origin")
    res = np.zeros(n + 1, dtype=complex)
    res[0] = f.coeffs[n]
    for k in range(n - 1, -1, -1):
        res = np.convolve(res, g.coeffs)[:n + 1]
        res[0] += f.coeffs[k]
    return TruncatedSeries(res, n)


def _compose_iterate(f: TruncatedSeries, q: int, binary: bool = False) -> TruncatedSeries:
    """f^{∘q}. Repeated composition by default; binary powering for cross-checks."""
    if q < 1:
        raise ValueError("q must be >= 1")
    if not binary:
        acc = f
        for _ in range(q - 1):
            acc = series_compose(acc, f)
        return acc
    acc = None
    base = f
    e = q
    while e:
        if e & 1:
            acc = base if acc is None else series_compose(acc, base)
        e >>= 1
        if e:
            base = series_compose(base, base)
    return acc


def _check_pq(p: int, q: int) -> None:
    if not isinstance(p, (int, np.integer)) or not isinstance(q, (int, np.integer)):
        raise NonCoprime(f"p and q must be integers, got p={p!r}, q={q!r}")
    if q < 1:
        raise NonCoprime(f"q must be >= 1, got {q}")
    if math.gcd(abs(int(p)), int(q)) != 1:
        raise NonCoprime(f"{p}/{q} is not in lowest terms")


def guide_series(kind: str, p: int, q: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Jet of the guiding map with multiplier e^{2 pi i p/q}.

      standard   z -> lambda * z * e^{pi z}
      blaschke   w -> lambda * w * (1 - w)
    """
    _check_pq(p, q)
    lam = cmath.exp(2j * math.pi * p / q)
    if kind == "standard":
        zez = series_mul(TruncatedSeries([0.0, 1.0], order),
                         series_exp(TruncatedSeries([0.0, math.pi], order)))
        return TruncatedSeries(lam * zez.coeffs, order)
    if kind == "blaschke":
        return TruncatedSeries([0.0, lam, -lam], order)
    raise ValueError(f"unknown guide kind {kind!r}; expected one of {GUIDE_KINDS}")


@dataclass(frozen=True)
class ParabolicData:
    """Leading data of f^q - Id at a parabolic fixed point with q-th root multiplier."""

    multiplier: complex
    p: int
    q: int
    nu: int
    C: complex
    leading_index: int


def parabolic_data(f: TruncatedSeries, q: int) -> ParabolicData:
    """Resonant leading term of f^{∘q}(z) - z for a jet fixing 0.

    Requires |c_1| = 1 and c_1^q = 1 (within 1e-10) and order >= 2q + 2 so
    the first resonant index q + 1 is safely inside the truncation. The
    leading index j is the first j >= 2 whose coefficient exceeds 1e-10
    relative to the largest tail coefficient; j - 1 must be divisible by q,
    giving f^q(z) = z + C z^{nu*q + 1} + ... with nu = (j - 1) / q.
    """
    if not isinstance(q, (int, np.integer)) or q < 1:
        raise ValueError(f"q must be a positive integer, got {q!r}")
    n = f.order
    if n < 2 * q + 2:
        raise OrderMismatch(
            f"order {n} too small for q={q}: need at least 2q+2 = {2 * q + 2}")
    if f.coeffs[0] != 0:
        raise NonvanishingConstantTerm(
            f"jet has constant term {f.coeffs[0]!r}; expected a fixed point at 0")
    c1 = complex(f.coeffs[1])
    if abs(abs(c1) - 1.0) > _MULTIPLIER_TOL or abs(c1 ** q - 1.0) > _MULTIPLIER_TOL:
        raise NotRootOfUnity(
            f"multiplier {c1!r} is not a primitive-or-trivial q-th root of "
            f"unity within {_MULTIPLIER_TOL:g} (q={q})")
    h = f
    seen = np.abs(f.coeffs)
    for _ in range(int(q) - 1):
        h = series_compose(h, f)
        seen = np.maximum(seen, np.abs(h.coeffs))
    d = h.coeffs.copy()
    d[1] -= 1.0
    # First-nonzero scan, the only numerical-zero judgment in this module:
    # coefficient j counts as nonzero when it clears 1e-10 on the scale of
    # the intermediate coefficients at indices <= j (their running max over
    # the composition chain), since that is what sets the roundoff floor
    # there. For a unit-scaled jet this is the absolute 1e-10 threshold.
    scale = np.maximum.accumulate(np.maximum(seen, 1.0))
    j = None
    for i in range(2, n + 1):
        if abs(d[i]) > _LEADING_TOL * scale[i]:
            j = i
            break
    if j is None:
        logger.debug("parabolic scan: all tail coefficients below %.3g (scaled)",
                     _LEADING_TOL)
        raise IdentityToTruncation(
            f"f^{q} - Id vanishes to truncation order {n}")
    logger.debug("parabolic scan: leading index %d, |coeff| %.6g, scale %.3g",
                 j, abs(d[j]), float(scale[j]))
    if (j - 1) % q != 0:
        raise NonresonantLeadingTerm(
            f"leading index {j} of f^{q} - Id is nonresonant: "
            f"j - 1 = {j - 1} is not a multiple of q = {q}")
    p = round(cmath.phase(c1) * q / (2.0 * math.pi)) % q
    return ParabolicData(multiplier=c1, p=int(p), q=int(q), nu=(j - 1) // int(q),
                         C=complex(d[j]), leading_index=j)


def width_coefficient(pd: ParabolicData) -> float:
    """Quadratic tongue-width coefficient 2|C| / (pi q) for a simple tangency."""
    if pd.nu != 1:
        raise MultiplicityNotOne(
            f"leading multiplicity nu={pd.nu} != 1: width is not quadratic")
    return 2.0 * abs(pd.C) / (math.pi * pd.q)
