"""Order-n coefficients of the lift family in a, and the degree-bound test.

Xi_n(t, x) = (1/n!) d^n/da^n F_{t,a}(x) at a = 0. A family is guided exactly
when every Xi_n is a trigonometric polynomial of degree <= n; degree_check
measures the Fourier spectrum of a sampled Xi_n and verdicts that bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import StepUnderflow
from .families import FamilySpec
from .series import TruncatedSeries, series_exp, series_mul

_GRID = 1 << 12
_DEGREE_TOL = 1e-6
_EPS = float(np.finfo(float).eps)

# Second-order central stencils for the n-th derivative: weights w_i at
# offsets o_i*h, derivative ~ sum w_i f(a + o_i h) / h^n, truncation
# O(h^2 f^(n+2)), which with h = eps^(1/(n+2)) balances against roundoff.
_STENCILS = {
    1: ((-1, 1), (-0.5, 0.5)),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0)),
    3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5)),
    4: ((-2, -1, 0, 1, 2), (1.0, -4.0, 6.0, -4.0, 1.0)),
    5: ((-3, -2, -1, 1, 2, 3), (-0.5, 2.0, -2.5, 2.5, -2.0, 0.5)),
    6: ((-3, -2, -1, 0, 1, 2, 3), (1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0)),
}


@dataclass(frozen=True)
class SpectrumReport:
    """Fourier spectrum of a sampled Xi_n and the degree-<= n verdict."""

    n: int
    t: float
    ks: np.ndarray          # signed frequencies -K_max..K_max
    coeffs: np.ndarray      # c_{n,k} matching ks
    degree_bound_satisfied: bool
    worst_violation: tuple  # (k, |c_k|) largest coefficient with |k| > n


def _check_n(n) -> int:
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= 6:
        raise ValueError(f"order n must be an integer in 1..6, got {n!r}")
    return int(n)


def xi_coefficient(fam: FamilySpec, t: float, n: int, grid: int = _GRID):
    """(xs, Xi_n(t, xs)) on a uniform grid over [0, 1).

    The built-in kinds enter a only through the x-periodic perturbation, so
    t never reaches the derivative; it is carried for the report. Standard
    and Fourier kinds are affine in a, so n = 1 returns phi exactly and
    n >= 2 returns zero without differencing. The others use the central
    stencil in a at 0, step h = eps^(1/(n+2)) scaled to the a-interval.
    """
    n = _check_n(n)
    if not isinstance(grid, (int, np.integer)) or grid < 16:
        raise ValueError(f"grid too small: {grid!r}")
    xs = np.arange(grid) / grid
    if fam.kind in ("standard", "fourier"):
        if n == 1:
            return xs, fam.phi(xs)
        return xs, np.zeros(grid)
    offsets, weights = _STENCILS[n]
    scale = min(abs(fam.a_min), fam.a_max)
    if not math.isfinite(scale) or scale <= 0.0:
        scale = 1.0
    h = _EPS ** (1.0 / (n + 2)) * scale
    if h == 0.0 or max(abs(o) for o in offsets) * h >= scale:
        raise StepUnderflow(
            f"stencil for n={n} does not fit in (-{scale:g}, {scale:g}) "
            f"with step {h:g}")
    acc = np.zeros(grid)
    for o, w in zip(offsets, weights):
        if w != 0.0:
            acc += w * fam.perturbation(o * h, xs)
    return xs, acc / (h ** n * math.factorial(n))


def degree_check(fam: FamilySpec, t: float, n: int, tol: float = _DEGREE_TOL,
                 k_max: int | None = None) -> SpectrumReport:
    """Fourier spectrum of Xi_n on a 2^12 grid and the degree-<= n verdict.

    degree_bound_satisfied is true iff |c_{n,k}| < tol for every
    n < |k| <= K_max (default K_max = 2n + 4); worst_violation reports the
    largest out-of-band coefficient either way. The full two-sided spectrum
    is returned, so the reality relation c_{n,-k} = conj(c_{n,k}) is
    checkable on the report itself.
    """
    n = _check_n(n)
    if k_max is None:
        k_max = 2 * n + 4
    if not isinstance(k_max, (int, np.integer)) or k_max < 2 * n + 4:
        raise ValueError(f"k_max must be an integer >= 2n+4 = {2 * n + 4}, got {k_max!r}")
    grid = _GRID
    if k_max >= grid // 2:
        raise ValueError(f"k_max {k_max} too large for the 2^12 analysis grid")
    xs, vals = xi_coefficient(fam, t, n, grid)
    spectrum = np.fft.fft(vals) / grid
    ks = np.arange(-k_max, k_max + 1)
    coeffs = spectrum[ks % grid]
    mags = np.abs(coeffs)
    out_of_band = np.abs(ks) > n
    masked = np.where(out_of_band, mags, -1.0)
    peak = float(np.max(masked))
    # Reality pairs +-k at equal magnitude; report the positive frequency.
    near = np.nonzero(masked >= peak * (1.0 - 1e-12))[0]
    worst_i = int(min(near, key=lambda i: (abs(int(ks[i])), -np.sign(ks[i]))))
    worst = (int(ks[worst_i]), float(mags[worst_i]))
    satisfied = bool(np.all(mags[out_of_band] < tol))
    return SpectrumReport(n=n, t=float(t), ks=ks, coeffs=coeffs,
                          degree_bound_satisfied=satisfied, worst_violation=worst)


def _guide_from_diagonal(t: float, diagonal, order: int = 8) -> TruncatedSeries:
    """Guide jet z e^{2 pi i t} * prod_n e^{2 pi i c_{n,n} z^n} from diagonal data.

    Inverse direction of the guided correspondence, used as a cross-check
    that diagonal coefficients extracted by degree_check rebuild the same
    guide the series module constructs directly.
    """
    acc = series_mul(TruncatedSeries([0.0, 1.0], order),
                     series_exp(TruncatedSeries([2j * math.pi * t], order)))
    for m, c in enumerate(diagonal, start=1):
        if c == 0:
            continue
        term = np.zeros(order + 1, dtype=complex)
        term[m] = 2j * math.pi * c
        acc = series_mul(acc, series_exp(TruncatedSeries(term, order)))
    return acc
