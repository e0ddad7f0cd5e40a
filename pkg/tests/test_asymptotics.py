"""Translate averages, first-order slopes, order-of-contact fits."""

import math

import numpy as np
import pytest

from tonguelab import (
    FamilySpec,
    InsufficientData,
    TongueSample,
    UnderflowedWidths,
    average_translates,
    fit_contact,
    irrational_slope,
    slopes,
    verify_first_order,
)

STD = FamilySpec.standard()
ANGLE = FamilySpec.angle()

# grid maximization of A_2(phi) for the angle family, frozen reference
M_A_ANGLE = 0.50547557575684099
ANGLE_GEOMETRIC = 0.9360369370437911
ANGLE_PAPER = 1.4842749399945212


def test_average_annihilates_nonresonant_frequencies():
    rep = average_translates(STD, 1, 2, grid=256)
    # phi = sin(2 pi x) has no frequency divisible by 2: average is flat 0
    assert np.max(np.abs(rep.values)) < 1e-15
    assert np.max(np.abs(rep.coeffs)) < 1e-15


def test_average_keeps_resonant_frequencies():
    fam = FamilySpec.fourier([(1, -0.5j), (2, 0.25)])
    rep = average_translates(fam, 1, 2, grid=256)
    # frequency 2 survives the 1/2 averaging, frequency 1 dies
    want = 0.5 * np.cos(4 * np.pi * rep.xs)
    assert np.allclose(rep.values, want, atol=1e-14)
    assert abs(rep.coeffs[1]) < 1e-15
    assert rep.coeffs[2] == pytest.approx(0.25, abs=1e-14)


def test_average_preserves_mean():
    fam = FamilySpec.fourier([(0, 0.3), (1, -0.5j)])
    rep = average_translates(fam, 1, 3, grid=256)
    assert np.mean(rep.values) == pytest.approx(0.3, abs=1e-14)


def test_average_grid_validation():
    with pytest.raises(ValueError):
        average_translates(STD, 1, 2, grid=8)


def test_slopes_standard_q1():
    rep = slopes(STD, 0, 1)
    assert rep.M_A == pytest.approx(1.0, abs=1e-12)
    assert rep.m_A == pytest.approx(-1.0, abs=1e-12)
    assert rep.slope_minus == -rep.M_A
    assert rep.slope_plus == -rep.m_A
    assert rep.mean_phi == pytest.approx(0.0, abs=1e-15)
    # m_A*M_A = -1: geometric angle between (1, -1) and (1, 1) is pi/2
    assert rep.angle_geometric == pytest.approx(math.pi / 2, abs=1e-10)


def test_slopes_standard_q2_degenerate():
    rep = slopes(STD, 1, 2)
    assert abs(rep.M_A) < 1e-12
    assert abs(rep.m_A) < 1e-12
    assert math.isnan(rep.angle_paper)  # m_A*M_A vanishes
    assert rep.angle_geometric == pytest.approx(0.0, abs=1e-10)


def test_slopes_angle_family_reference():
    rep = slopes(ANGLE, 1, 2)
    assert rep.M_A == pytest.approx(M_A_ANGLE, abs=1e-11)
    assert rep.angle_geometric == pytest.approx(ANGLE_GEOMETRIC, abs=1e-10)
    assert rep.angle_paper == pytest.approx(ANGLE_PAPER, abs=1e-10)


def test_irrational_slope_is_minus_mean():
    assert irrational_slope(STD) == pytest.approx(0.0, abs=1e-15)
    fam = FamilySpec.fourier([(0, 0.4), (1, -0.5j)])
    assert irrational_slope(fam) == pytest.approx(-0.4, abs=1e-13)


def test_verify_first_order_ratios_shrink():
    rep = verify_first_order(STD, 0, 1, [0.08, 0.04, 0.02, 0.01])
    # exact linear boundaries for 0/1: ratios vanish identically
    assert max(rep.ratios_minus) < 1e-10
    assert max(rep.ratios_plus) < 1e-10
    assert rep.worst_final_ratio < 1e-10
    with pytest.raises(ValueError):
        verify_first_order(STD, 0, 1, [0.1, 0.0])
    with pytest.raises(ValueError):
        verify_first_order(STD, 0, 1, [])


def _synthetic_samples(coeff, exponent, a_values):
    return [TongueSample(p=1, q=2, a=a, t_left=0.5, t_right=0.5,
                         x_left=0.0, x_right=0.0,
                         width=coeff * abs(a) ** exponent)
            for a in a_values]


def test_fit_contact_recovers_power_law():
    fit = fit_contact(_synthetic_samples(3.7, 2.0, [0.01, 0.02, 0.04, 0.08]))
    assert fit.exponent == pytest.approx(2.0, abs=1e-9)
    assert fit.coefficient == pytest.approx(3.7, rel=1e-9)
    assert fit.residual < 1e-12
    assert fit.samples_used == 4


def test_fit_contact_drops_out_of_regime_tail():
    samples = _synthetic_samples(2.0, 3.0, [0.01, 0.02, 0.04, 0.08])
    top = _synthetic_samples(2.0, 3.0, [0.16])[0]
    # corrupt the largest-|a| sample: outside the asymptotic regime
    bad = TongueSample(p=1, q=2, a=0.16, t_left=0.5, t_right=0.5,
                       x_left=0.0, x_right=0.0, width=top.width * 1.5)
    fit = fit_contact(samples + [bad])
    assert fit.samples_used == 4
    assert fit.exponent == pytest.approx(3.0, abs=1e-9)


def test_fit_contact_needs_enough_samples():
    with pytest.raises(InsufficientData):
        fit_contact(_synthetic_samples(1.0, 2.0, [0.01, 0.02, 0.04]))
    # zero-width samples are filtered out first
    degenerate = _synthetic_samples(0.0, 1.0, [0.01, 0.02, 0.04, 0.08])
    with pytest.raises(InsufficientData):
        fit_contact(degenerate)


def test_fit_contact_flags_underflowed_widths():
    with pytest.raises(UnderflowedWidths):
        fit_contact(_synthetic_samples(1e-9, 2.0, [0.01, 0.02, 0.04, 0.08]))
