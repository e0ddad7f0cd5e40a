"""Translation numbers: certified enclosures, estimates, staircases, profiles."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .families import FamilySpec, ParamPoint


@dataclass(frozen=True)
class Enclosure:
    """Certified interval around Trans(F): lo <= Trans(F) <= hi, width <= 2/iterations."""

    lo: float
    hi: float
    iterations: int


def _check_n(n) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ValueError(f"iteration count must be a positive integer, got {n!r}")
    return int(n)


def displacements(fam: FamilySpec, ts, aa, n: int, x0s=None) -> np.ndarray:
    """Batch of F_{t,a}^n(x0) - x0, one orbit per (t, a) pair."""
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    aa = np.ascontiguousarray(aa, dtype=np.float64)
    if ts.shape != aa.shape or ts.ndim != 1:
        raise ValueError("ts and aa must be 1-d arrays of equal length")
    if x0s is None:
        x0s = np.zeros_like(ts)
    else:
        x0s = np.ascontiguousarray(x0s, dtype=np.float64)
    n = _check_n(n)
    for a in aa:
        fam.check_a(a)
    if fam.kind == "blaschke":
        return _kernels.orbit_blaschke(ts, aa, x0s, n)
    _, ks, ca, sa = fam.kernel_args()
    return _kernels.orbit_trig(ks, ca, sa, ts, aa, x0s, n)


def trans_enclosure(fam: FamilySpec, p: ParamPoint, n: int = 10**5) -> Enclosure:
    """Interval certain to contain Trans(F_{t,a}), from one orbit of length n.

    For a lift of a circle homeomorphism, F^n(x) - x - n*Trans(F) lies in
    (-1, 1) for every x, so (F^n(0) - 1)/n and (F^n(0) + 1)/n bracket the
    translation number.
    """
    n = _check_n(n)
    fam.check_a(p.a)
    disp = displacements(fam, [p.t], [p.a], n)[0]
    return Enclosure(lo=(disp - 1.0) / n, hi=(disp + 1.0) / n, iterations=n)


def trans_estimate(fam: FamilySpec, p: ParamPoint, n: int = 10**6) -> float:
    """Point estimate F^n(0)/n of the translation number."""
    n = _check_n(n)
    fam.check_a(p.a)
    return displacements(fam, [p.t], [p.a], n)[0] / n


def staircase(fam: FamilySpec, a: float, t_lo: float, t_hi: float,
              steps: int = 1000, n: int = 10**5) -> list[tuple[float, float]]:
    """(t, estimate) pairs on an inclusive uniform t-grid at fixed a.

    The estimates are monotone in t up to the 2/n estimator resolution; at
    rational heights p/q the curve flattens across the corresponding tongue.
    """
    if not isinstance(steps, (int, np.integer)) or steps < 2:
        raise ValueError(f"steps must be an integer >= 2, got {steps!r}")
    if not t_lo < t_hi:
        raise ValueError(f"need t_lo < t_hi, got [{t_lo}, {t_hi}]")
    fam.check_a(a)
    ts = np.linspace(t_lo, t_hi, steps)
    disp = displacements(fam, ts, np.full(steps, float(a)), _check_n(n))
    return list(zip(ts.tolist(), (disp / n).tolist()))


def semiconjugacy_profile(fam: FamilySpec, p: ParamPoint, N: int = 2000,
                          grid: int = 256) -> list[tuple[float, float]]:
    """Birkhoff profile Phi_N(x) = (1/N) sum_{k<N} (F^k(x) - F^k(0)) on [0, 1].

    Sampled at grid+1 equally spaced points including both endpoints, so the
    lift relation Phi_N(x + 1) = Phi_N(x) + 1 is visible at the seam.
    Phi_N(0) = 0 by construction; for monotone lifts the profile is
    non-decreasing.
    """
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    if not isinstance(grid, (int, np.integer)) or grid < 2:
        raise ValueError(f"grid must be an integer >= 2, got {grid!r}")
    fam.check_a(p.a)
    xs = np.arange(grid + 1) / grid
    # Base points are reduced mod 1 and the integer part is restored at the
    # end, so Phi_N(x + 1) = Phi_N(x) + 1 holds bitwise (x = 1 reduces to the
    # x = 0 computation plus 1.0). The differences d_k(x) = F^k(x) - F^k(0)
    # are iterated directly, with the orbit of 0 kept reduced as well: the
    # perturbation is 1-periodic, so nothing here grows with N*t and
    # precision stays flat.
    wind = np.floor(xs)
    d = xs - wind
    z = 0.0
    total = np.zeros_like(xs)
    for _ in range(N):
        total += d
        d = d + fam.perturbation(p.a, z + d) - fam.perturbation(p.a, z)
        z += p.t + fam.perturbation(p.a, z)
        z -= np.floor(z)
    return list(zip(xs.tolist(), (total / N + wind).tolist()))
