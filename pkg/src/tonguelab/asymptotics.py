"""First-order tongue asymptotics: translate averages, slopes, contact fits.

At a = 0 the tongue over p/q degenerates to the line t = p/q; its boundaries
open with slopes -M_A (left) and -m_A (right), where M_A, m_A are the extrema
of the translate average A_q(phi)(x) = (1/q) sum_k phi(x + k p/q). The width
then grows like a^q with the coefficient supplied by the parabolic data of
the guiding map; fit_contact recovers exponent and coefficient from solved
TongueSample ladders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._optimize import periodic_argmax, periodic_argmin
from .errors import InsufficientData, UnderflowedWidths
from .families import FamilySpec
from .tongue import boundary_at, check_rational

_MEAN_GRID = 1 << 14
_SLOPE_GRID = 4096
_SLOPE_TOL = 1e-13
_WIDTH_FLOOR = 1e-14      # below this a width is treated as zero and dropped
_WIDTH_RELIABLE = 1e-11   # below this the 1e-13 boundary solves dominate the log
_DROP_RESIDUAL = 0.02


@dataclass(frozen=True)
class TranslateAverage:
    """A_q(phi) sampled on a uniform grid, with its one-sided Fourier coefficients."""

    p: int
    q: int
    xs: np.ndarray
    values: np.ndarray
    freqs: np.ndarray
    coeffs: np.ndarray


@dataclass(frozen=True)
class SlopeReport:
    p: int
    q: int
    M_A: float
    m_A: float
    mean_phi: float
    slope_minus: float
    slope_plus: float
    angle_geometric: float
    angle_paper: float


@dataclass(frozen=True)
class FirstOrderReport:
    p: int
    q: int
    M_A: float
    m_A: float
    a_values: tuple
    ratios_minus: tuple
    ratios_plus: tuple
    worst_final_ratio: float


@dataclass(frozen=True)
class ContactFit:
    exponent: float
    coefficient: float
    residual: float
    samples_used: int


def _translate_offsets(p: int, q: int) -> np.ndarray:
    return np.arange(q) * (p / q)


def average_translates(fam: FamilySpec, p: int, q: int,
                       grid: int = _SLOPE_GRID) -> TranslateAverage:
    """A_q(phi) on a uniform grid plus Fourier coefficients.

    Averaging over the translates by p/q annihilates every frequency not
    divisible by q and keeps multiples of q (and the mean) untouched, so the
    returned spectrum vanishes off q*Z up to roundoff.
    """
    check_rational(p, q)
    if not isinstance(grid, (int, np.integer)) or grid < max(16, 4 * q):
        raise ValueError(f"grid too small: {grid!r}")
    xs = np.arange(grid) / grid
    vals = np.mean(fam.phi(xs[None, :] + _translate_offsets(p, q)[:, None]), axis=0)
    coeffs = np.fft.rfft(vals) / grid
    freqs = np.arange(coeffs.size)
    return TranslateAverage(p=int(p), q=int(q), xs=xs, values=vals,
                            freqs=freqs, coeffs=coeffs)


def _mean_phi(fam: FamilySpec) -> float:
    # Trapezoid rule on a uniform periodic grid = plain mean; spectrally
    # accurate, exact to roundoff for trigonometric polynomials.
    xs = np.arange(_MEAN_GRID) / _MEAN_GRID
    return float(np.mean(fam.phi(xs)))


def slopes(fam: FamilySpec, p: int, q: int, grid: int = _SLOPE_GRID) -> SlopeReport:
    """Extrema of A_q(phi) and the derived boundary slopes and opening angles.

    angle_geometric is the angle between the direction vectors (1, -M_A) and
    (1, -m_A) of the two boundary curves in the (a, t) plane, via atan2.
    angle_paper evaluates arctan((M_A - m_A)(1 + m_A M_A) / (m_A M_A)^2),
    which is reported side by side; it is NaN when m_A*M_A vanishes (within
    1e-15), where the expression is undefined.
    """
    check_rational(p, q)
    offs = _translate_offsets(p, q)

    def f_vec(xs):
        return np.mean(fam.phi(np.asarray(xs)[None, :] + offs[:, None]), axis=0)

    def f(x):
        return float(np.mean(fam.phi(x + offs)))

    _, M_A = periodic_argmax(f_vec, f, grid, _SLOPE_TOL)
    _, m_A = periodic_argmin(f_vec, f, grid, _SLOPE_TOL)
    mean_phi = _mean_phi(fam)
    cross = m_A * M_A
    angle_geometric = math.atan2(abs(M_A - m_A), 1.0 + cross)
    if abs(cross) < 1e-15:
        angle_paper = math.nan
    else:
        angle_paper = math.atan((M_A - m_A) * (1.0 + cross) / (cross * cross))
    return SlopeReport(p=int(p), q=int(q), M_A=M_A, m_A=m_A, mean_phi=mean_phi,
                       slope_minus=-M_A, slope_plus=-m_A,
                       angle_geometric=angle_geometric, angle_paper=angle_paper)


def verify_first_order(fam: FamilySpec, p: int, q: int, a_values) -> FirstOrderReport:
    """Deviation ratios |gamma^-+(a) - p/q + (M_A or m_A) a| / |a| along a ladder.

    gamma^- is the left boundary for a >= 0 and the right one for a < 0
    (the two swap roles under a -> -a); first-order theory predicts the
    ratios tend to 0 as a -> 0. The report keeps the input order and flags
    the worst ratio at the smallest |a|.
    """
    a_values = [float(a) for a in a_values]
    if not a_values or any(a == 0.0 for a in a_values):
        raise ValueError("a_values must be nonzero")
    rep = slopes(fam, p, q)
    center = p / q
    r_minus, r_plus = [], []
    for a in a_values:
        s = boundary_at(fam, p, q, a)
        gamma_minus = s.t_left if a >= 0 else s.t_right
        gamma_plus = s.t_right if a >= 0 else s.t_left
        r_minus.append(abs(gamma_minus - center + rep.M_A * a) / abs(a))
        r_plus.append(abs(gamma_plus - center + rep.m_A * a) / abs(a))
    i = int(np.argmin(np.abs(a_values)))
    return FirstOrderReport(p=int(p), q=int(q), M_A=rep.M_A, m_A=rep.m_A,
                            a_values=tuple(a_values),
                            ratios_minus=tuple(r_minus), ratios_plus=tuple(r_plus),
                            worst_final_ratio=max(r_minus[i], r_plus[i]))


def irrational_slope(fam: FamilySpec) -> float:
    """Slope -integral(phi) of every irrational-height boundary curve at a=0."""
    return -_mean_phi(fam)


def fit_contact(samples, drop_residual: float = _DROP_RESIDUAL) -> ContactFit:
    """Power law width = coefficient * |a|^exponent from solved samples.

    Least squares on (log |a|, log width). Samples with width <= 1e-14 or
    a = 0 are ignored (degenerate tip); if any remaining width is below
    1e-11 the ladder has run into the 1e-13 boundary-solver tolerance and
    the fit would be contaminated, so UnderflowedWidths is raised. When the
    max log deviation exceeds `drop_residual`, the largest-|a| sample is
    outside the asymptotic regime and is dropped, at most twice, keeping at
    least 4 points.
    """
    usable = [s for s in samples if s.a != 0.0 and s.width > _WIDTH_FLOOR]
    if len(usable) < 4:
        raise InsufficientData(
            f"need >= 4 usable samples (width > {_WIDTH_FLOOR:g}), "
            f"got {len(usable)} of {len(list(samples)) if not hasattr(samples, '__len__') else len(samples)}")
    tiny = min(s.width for s in usable)
    if tiny < _WIDTH_RELIABLE:
        raise UnderflowedWidths(
            f"smallest width {tiny:.3e} is within 100x of the boundary "
            "solver tolerance; shrink the ladder from below")
    usable = sorted(usable, key=lambda s: abs(s.a))
    la = np.log([abs(s.a) for s in usable])
    lw = np.log([s.width for s in usable])
    drops = 0
    while True:
        slope, intercept = np.polyfit(la, lw, 1)
        residual = float(np.max(np.abs(slope * la + intercept - lw)))
        if residual <= drop_residual or drops >= 2 or la.size - 1 < 4:
            break
        la, lw = la[:-1], lw[:-1]
        drops += 1
    return ContactFit(exponent=float(slope), coefficient=float(math.exp(intercept)),
                      residual=residual, samples_used=int(la.size))
