"""Scalar extremum search: uniform grid scan plus golden-section refinement."""

import math

import numpy as np

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(f, lo, hi, tol):
    """Golden-section maximum of f on [lo, hi] to width tol; returns (x, f(x))."""
    a, b = lo, hi
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, f(x)
    c = b - INVPHI * h
    d = a + INVPHI * h
    fc, fd = f(c), f(d)
    while h > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - INVPHI * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + INVPHI * h
            fd = f(d)
    if fc >= fd:
        return c, fc
    return d, fd


def periodic_argmax(f_vec, f, grid, tol):
    """Global maximum of a 1-periodic function over [0, 1).

    Scans a uniform grid with the vectorized evaluator, then refines around
    the best three non-adjacent grid cells by golden section. The returned
    value never falls below the raw grid best.
    """
    xs = np.arange(grid) / grid
    vals = np.asarray(f_vec(xs), dtype=float)
    order = np.argsort(vals)[::-1]
    picked = []
    for idx in order:
        if all(min(abs(idx - j), grid - abs(idx - j)) > 1 for j in picked):
            picked.append(int(idx))
        if len(picked) == 3:
            break
    best_i = int(order[0])
    best_x, best_v = float(xs[best_i]), float(vals[best_i])
    h = 1.0 / grid
    for idx in picked:
        x0 = idx / grid
        x, v = golden_max(f, x0 - h, x0 + h, tol)
        if v > best_v:
            best_x, best_v = x % 1.0, v
    return best_x, best_v


def periodic_argmin(f_vec, f, grid, tol):
    x, v = periodic_argmax(lambda xs: -np.asarray(f_vec(xs)), lambda x: -f(x), grid, tol)
    return x, -v
