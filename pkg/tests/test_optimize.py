"""Grid-plus-golden-section extremum search on periodic functions."""

import numpy as np
import pytest

from tonguelab._optimize import golden_max, periodic_argmax, periodic_argmin


def test_periodic_argmax_sine():
    x, v = periodic_argmax(lambda xs: np.sin(2 * np.pi * np.asarray(xs)),
                           lambda x: np.sin(2 * np.pi * x), 256, 1e-12)
    assert x == pytest.approx(0.25, abs=1e-6)
    assert v == pytest.approx(1.0, abs=1e-12)


def test_periodic_argmin_sine():
    x, v = periodic_argmin(lambda xs: np.sin(2 * np.pi * np.asarray(xs)),
                           lambda x: np.sin(2 * np.pi * x), 256, 1e-12)
    assert x == pytest.approx(0.75, abs=1e-6)
    assert v == pytest.approx(-1.0, abs=1e-12)


def test_periodic_argmax_near_equal_peaks():
    # two peaks 3e-4 apart in height, one grid point each: refinement must
    # compare the polished values, not the raw grid samples
    def f(x):
        x = np.asarray(x, dtype=float)
        return np.sin(2 * np.pi * x) + 1.0003 * np.sin(6 * np.pi * x)

    def fs(x):
        return float(f(x))

    _, v = periodic_argmax(f, fs, 128, 1e-12)
    dense = np.max(f(np.arange(1 << 20) / (1 << 20)))
    assert v >= dense - 1e-9


def test_periodic_argmax_wraps_at_seam():
    # maximum at x = 0 sits on the period seam
    def f(x):
        return np.cos(2 * np.pi * np.asarray(x, dtype=float))

    x, v = periodic_argmax(f, lambda x: float(np.cos(2 * np.pi * x)), 64, 1e-12)
    assert min(x, 1.0 - x) == pytest.approx(0.0, abs=1e-6)
    assert v == pytest.approx(1.0, abs=1e-12)


def test_golden_max_interval():
    x, v = golden_max(lambda x: -(x - 0.3) ** 2, 0.0, 1.0, 1e-10)
    assert x == pytest.approx(0.3, abs=1e-5)
    assert v == pytest.approx(0.0, abs=1e-10)


def test_periodic_argmax_never_below_grid_best():
    rng = np.random.default_rng(11)
    ks = np.arange(1, 6)
    cs = rng.normal(size=5)

    def f(x):
        x = np.asarray(x, dtype=float)
        return sum(c * np.sin(2 * np.pi * k * x) for k, c in zip(ks, cs))

    grid_best = np.max(f(np.arange(512) / 512))
    _, v = periodic_argmax(f, lambda x: float(f(x)), 512, 1e-12)
    assert v >= grid_best
