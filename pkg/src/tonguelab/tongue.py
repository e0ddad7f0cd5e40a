"""Arnol'd tongue boundaries: extrema of G, classification, boundary solving.

Everything runs through G_{t,a} = F_{t,a}^q - Id - p. For a monotone lift
family, max_x G and min_x G are strictly increasing in t with slope >= 1,
and the tongue over p/q is exactly {(t, a) : max G >= 0 >= min G}; its
boundaries are the roots t_left (of max G) and t_right (of min G).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._optimize import periodic_argmax, periodic_argmin
from .errors import BracketFailure, DegenerateWitness, NonCoprime, ParameterOutOfRange
from .families import FamilySpec

_T_TOL = 1e-13            # bisection width in t
_X_TOL = 1e-12            # golden-section width in x before Newton polish
_CLASSIFY_TOL = 1e-10     # |extremum| band treated as "on the boundary"
_WITNESS_H = math.sqrt(math.sqrt(np.finfo(float).eps))  # eps^(1/4) for G''


class Region(Enum):
    """Position of (t, a) relative to the tongue over p/q."""

    Below = "Below"
    LeftBoundary = "LeftBoundary"
    Interior = "Interior"
    RightBoundary = "RightBoundary"
    Above = "Above"


@dataclass(frozen=True)
class ExtremumReport:
    t: float
    a: float
    min_G: float
    argmin: float
    max_G: float
    argmax: float


@dataclass(frozen=True)
class TongueSample:
    p: int
    q: int
    a: float
    t_left: float
    t_right: float
    x_left: float
    x_right: float
    width: float


def check_rational(p: int, q: int) -> None:
    if not isinstance(p, (int, np.integer)) or not isinstance(q, (int, np.integer)):
        raise NonCoprime(f"p and q must be integers, got p={p!r}, q={q!r}")
    if q < 1:
        raise NonCoprime(f"q must be >= 1, got {q}")
    if math.gcd(abs(int(p)), int(q)) != 1:
        raise NonCoprime(f"{p}/{q} is not in lowest terms")


def g_values(fam: FamilySpec, p: int, q: int, t: float, a: float, xs):
    """G(x) = F^q(x) - x - p, vectorized over x."""
    xs = np.asarray(xs, dtype=np.float64)
    y = xs.copy()
    for _ in range(q):
        y = y + t + fam.perturbation(a, y)
    return y - xs - p


def g_derivs(fam: FamilySpec, p: int, q: int, t: float, a: float, x: float,
             order: int = 2) -> tuple[float, ...]:
    """(G(x), G'(x)[, G''(x)]) by chain-rule recurrences along the orbit."""
    y = float(x)
    d = 1.0
    s = 0.0
    for _ in range(q):
        fp = fam.lift_deriv(a, y)
        if order >= 2:
            s = fam.lift_second_deriv(a, y) * d * d + fp * s
        d *= fp
        y = y + t + fam.perturbation(a, y)
    g = y - x - p
    if order >= 2:
        return g, d - 1.0, s
    return g, d - 1.0


def _newton_extremum(fam, p, q, t, a, x, cell, maximize):
    """Polish a critical point of G with Newton on G'; never leaves the cell."""
    best_x = x
    _, g1, g2 = g_derivs(fam, p, q, t, a, x)
    best = abs(g1)
    for _ in range(4):
        if abs(g2) < 1e-9 or not math.isfinite(g2):
            break
        # Only accept steps toward the right kind of critical point.
        if (maximize and g2 > 0.0) or (not maximize and g2 < 0.0):
            break
        step = g1 / g2
        if abs(step) > cell:
            break
        x = x - step
        _, g1, g2 = g_derivs(fam, p, q, t, a, x)
        if abs(g1) >= best:
            break
        best_x, best = x, abs(g1)
    return best_x


def _extremum(fam, p, q, t, a, grid, maximize):
    """(argext, value) of G over one period, grid + golden + Newton polish."""
    def f(x):
        return float(g_values(fam, p, q, t, a, x))

    def f_vec(xs):
        return g_values(fam, p, q, t, a, xs)

    search = periodic_argmax if maximize else periodic_argmin
    x0, v0 = search(f_vec, f, grid, _X_TOL)
    x1 = _newton_extremum(fam, p, q, t, a, x0, 2.0 / grid, maximize) % 1.0
    v1 = f(x1)
    if (v1 > v0) if maximize else (v1 < v0):
        return x1, v1
    return x0, v0


def g_extrema(fam: FamilySpec, p: int, q: int, t: float, a: float,
              grid: int | None = None) -> ExtremumReport:
    """Extrema of G over one period, certified by dense scan plus refinement."""
    check_rational(p, q)
    fam.check_a(a)
    if grid is None:
        grid = max(1024, 64 * q)
    argmax, vmax = _extremum(fam, p, q, t, a, grid, True)
    argmin, vmin = _extremum(fam, p, q, t, a, grid, False)
    return ExtremumReport(t=float(t), a=float(a), min_G=vmin, argmin=argmin,
                          max_G=vmax, argmax=argmax)


def classify(fam: FamilySpec, p: int, q: int, t: float, a: float,
             tol: float = _CLASSIFY_TOL, grid: int | None = None) -> Region:
    """Five-way position of (t, a) relative to the tongue over p/q."""
    rep = g_extrema(fam, p, q, t, a, grid)
    if rep.max_G < -tol:
        return Region.Below
    if rep.min_G > tol:
        return Region.Above
    # Inside the closed tongue. A fully degenerate sample (G identically
    # small, e.g. a = 0 at t = p/q) matches both boundary conditions; it is
    # reported as LeftBoundary, the side a width-zero tongue collapses onto.
    if abs(rep.max_G) <= tol:
        return Region.LeftBoundary
    if abs(rep.min_G) <= tol:
        return Region.RightBoundary
    return Region.Interior


def _bisect_root(f, lo, hi, what, a):
    """Root of a nondecreasing f on [lo, hi]; f(lo) <= 0 <= f(hi) required."""
    flo = f(lo)
    fhi = f(hi)
    if flo > 0.0 or fhi < 0.0:
        raise BracketFailure(
            f"{what}: no sign change on [{lo!r}, {hi!r}] "
            f"(f(lo)={flo!r}, f(hi)={fhi!r})", a=a)
    for _ in range(200):
        if hi - lo <= _T_TOL:
            break
        mid = 0.5 * (lo + hi)
        if f(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def boundary_at(fam: FamilySpec, p: int, q: int, a: float,
                grid: int | None = None) -> TongueSample:
    """Both boundary points of the p/q tongue at height a, to ~1e-13 in t.

    Solves max_x G = 0 (left) and min_x G = 0 (right) by bisection; both
    extrema are nondecreasing in t with slope >= 1, and the bracket
    [p/q - q*sup, p/q + q*sup] (sup = perturbation sup) always contains the
    roots. For q >= 2 this requires a comfortably inside the monotonicity
    interval (|a| < 0.95 of the bound); for q = 1 the extremum curves
    translate rigidly in t (G = t + perturbation), so the solver remains
    valid for any a, though outside the homeomorphism region the sample no
    longer describes a tongue of an invertible circle map.
    """
    check_rational(p, q)
    if q >= 2 and not abs(a) < 0.95 * max(abs(fam.a_min), fam.a_max):
        raise ParameterOutOfRange(
            f"a={a!r} outside 95% of the monotonicity bound "
            f"({fam.a_min!r}, {fam.a_max!r}) with q={q}")
    if grid is None:
        grid = max(1024, 64 * q)
    center = p / q
    if a == 0.0:
        # Rigid rotations: the tongue is the single line t = p/q.
        rep = g_extrema(fam, p, q, center, 0.0, grid)
        return TongueSample(p=int(p), q=int(q), a=0.0, t_left=center,
                            t_right=center, x_left=rep.argmax,
                            x_right=rep.argmin, width=0.0)
    half = q * fam.perturbation_sup(a) * (1.0 + 1e-6) + 1e-15
    t_left = _bisect_root(
        lambda t: _extremum(fam, p, q, t, a, grid, True)[1],
        center - half, center + half, f"left boundary of {p}/{q}", a)
    t_right = _bisect_root(
        lambda t: _extremum(fam, p, q, t, a, grid, False)[1],
        center - half, center + half, f"right boundary of {p}/{q}", a)
    if t_left > t_right:
        # Sub-tolerance crossover on a near-degenerate tongue; collapse it.
        t_left = t_right = 0.5 * (t_left + t_right)
    x_left, _ = _extremum(fam, p, q, t_left, a, grid, True)
    x_right, _ = _extremum(fam, p, q, t_right, a, grid, False)
    return TongueSample(p=int(p), q=int(q), a=float(a), t_left=t_left,
                        t_right=t_right, x_left=x_left, x_right=x_right,
                        width=max(t_right - t_left, 0.0))


def trace_boundary(fam: FamilySpec, p: int, q: int, a_values,
                   grid: int | None = None) -> list[TongueSample]:
    """boundary_at along an ascending ladder of a values."""
    a_values = [float(a) for a in a_values]
    if any(b <= a for a, b in zip(a_values, a_values[1:])):
        raise ValueError("a_values must be strictly ascending")
    out = []
    for a in a_values:
        try:
            out.append(boundary_at(fam, p, q, a, grid))
        except BracketFailure as exc:
            raise BracketFailure(str(exc), a=a) from None
    return out


def boundary_witness(fam: FamilySpec, p: int, q: int, sample: TongueSample,
                     side: str) -> tuple[float, float, float]:
    """(x0, G'(x0), G''(x0)) at the tangency witnessing one boundary point.

    On the left boundary G has an interior maximum touching 0 from below,
    so G'' <= 0 there; on the right boundary a minimum, G'' >= 0. G' comes
    from the analytic chain rule; G'' from a central difference of G with
    step eps^(1/4), which balances truncation against cancellation.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    check_rational(p, q)
    maximize = side == "left"
    t = sample.t_left if maximize else sample.t_right
    x0, _ = _extremum(fam, p, q, t, sample.a, max(1024, 64 * q), maximize)
    _, g1, _ = g_derivs(fam, p, q, t, sample.a, x0)
    h = _WITNESS_H
    gp = float(g_values(fam, p, q, t, sample.a, x0 + h))
    gm = float(g_values(fam, p, q, t, sample.a, x0 - h))
    g0 = float(g_values(fam, p, q, t, sample.a, x0))
    g2 = (gp - 2.0 * g0 + gm) / (h * h)
    if abs(g2) < 1e-6:
        raise DegenerateWitness(
            f"|G''(x0)| = {abs(g2):.3e} < 1e-6 at {side} boundary of {p}/{q}, "
            f"a={sample.a!r}: tangency too flat to certify")
    return x0, g1, g2
