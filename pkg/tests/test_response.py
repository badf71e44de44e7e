import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foqfilter.response import (
    DomainError,
    Family,
    FoFilterParams,
    FoSecondOrderBpParams,
    ModeError,
    PeakMethod,
    PoleOnAxisError,
    jw_pow,
    magnitude_bp,
    magnitude_bp2,
    magnitude_bs,
    peak_closed_form,
    phase,
    q_factor_bp,
    q_factor_bs,
    transfer,
)

from oracles import grid_argmax, jw_pow_oracle, t_bp, t_bp2

BP = Family.BANDPASS
BS = Family.BANDSTOP


def bp(a, b, alpha, beta):
    return FoFilterParams(a, b, alpha, beta, BP)


def bs(a, b, alpha, beta):
    return FoFilterParams(a, b, alpha, beta, BS)


# -- parameter validation ----------------------------------------------------


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(a=0, b=1, alpha=1, beta=0.5),
        dict(a=1, b=-1, alpha=1, beta=0.5),
        dict(a=1, b=1, alpha=0.5, beta=0.5),
        dict(a=1, b=1, alpha=1, beta=0),
        dict(a=1, b=1, alpha=2.0, beta=0.5),
        dict(a=math.nan, b=1, alpha=1, beta=0.5),
    ],
)
def test_invalid_first_order_params(kwargs):
    with pytest.raises(DomainError):
        FoFilterParams(**kwargs)


def test_stability_override():
    p = FoFilterParams(1, 1, 2.5, 1.0, allow_unstable=True)
    assert p.alpha == 2.5


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(a=-0.1, b=1, d=1, alpha=1),
        dict(a=0, b=0, d=1, alpha=1),
        dict(a=0, b=1, d=1, alpha=1.2),
        dict(a=0, b=1, d=1, alpha=0),
    ],
)
def test_invalid_second_order_params(kwargs):
    with pytest.raises(DomainError):
        FoSecondOrderBpParams(**kwargs)


def test_symmetric_flag_is_derived():
    assert FoFilterParams.symmetric(1, 1, 0.7).is_symmetric
    assert not bp(1, 1, 1.5, 0.7).is_symmetric


# -- jw_pow ------------------------------------------------------------------


def test_jw_pow_unit():
    z = jw_pow(1.0, 1.0)
    assert z.real == pytest.approx(0, abs=1e-15)
    assert z.imag == pytest.approx(1)


def test_jw_pow_sqrt4():
    z = jw_pow(4.0, 0.5)
    assert z.real == pytest.approx(2 * math.cos(math.pi / 4), rel=1e-14)
    assert z.imag == pytest.approx(2 * math.sin(math.pi / 4), rel=1e-14)


def test_jw_pow_against_exp_log():
    z = jw_pow(1.5, 1.848702)
    ref = jw_pow_oracle(1.5, 1.848702)
    assert abs(z) == pytest.approx(2.1161198584880236, rel=1e-14)
    assert math.atan2(z.imag, z.real) == pytest.approx(1.848702 * math.pi / 2, rel=1e-14)
    assert abs(z - ref) <= 1e-13


@pytest.mark.parametrize("w", [0.0, -1.0, math.nan])
def test_jw_pow_domain(w):
    with pytest.raises(DomainError):
        jw_pow(w, 0.5)


def test_jw_pow_vectorised():
    w = np.array([0.5, 1.0, 2.0])
    z = jw_pow(w, 0.3)
    assert z.shape == (3,)
    for wi, zi in zip(w, z):
        assert zi == pytest.approx(jw_pow_oracle(wi, 0.3), rel=1e-14)


# -- magnitudes ----------------------------------------------------------------


def test_magnitude_bp_cross_term_vanishes():
    assert magnitude_bp(bp(1, 1, 1, 0.5), 1.0) == pytest.approx(1 / math.sqrt(2), rel=1e-15)


def test_magnitude_bp_reported_optimum():
    m = magnitude_bp(bp(0.996307, 18.2033, 1.848702, 0.924351), 1.5)
    assert m == pytest.approx(22.6017, rel=1e-3)


def test_magnitude_bp_peak_value():
    p = bp(1, 1, 1.6, 0.8)
    expected = 1 / math.sqrt(2 * (1 + math.cos(0.8 * math.pi)))
    assert magnitude_bp(p, 1.0) == pytest.approx(expected, rel=1e-13)
    assert expected == pytest.approx(1.61803, rel=1e-5)
    w_star, m_star, ratio = grid_argmax(lambda w: t_bp(1, 1, 1.6, 0.8, w))
    assert abs(math.log(w_star)) <= math.log(ratio)
    assert m_star == pytest.approx(expected, rel=1e-7)


def test_magnitude_bs_values():
    assert magnitude_bs(bs(1, 1, 1, 0.5), 1.0) == pytest.approx(math.sqrt(2), rel=1e-15)
    m = magnitude_bs(bs(0.99767, 17.11228, 1.85186, 0.92593), 1.5)
    assert m == pytest.approx(1 / 21.2739, rel=2e-3)


def test_magnitude_bp2_values():
    assert magnitude_bp2(FoSecondOrderBpParams(0.5, 1, 1, 1), 1.0) == pytest.approx(1.0, rel=1e-14)
    assert abs(t_bp2(0.5, 1, 1, 1, 1.0)) == pytest.approx(1.0, rel=1e-14)
    assert magnitude_bp2(FoSecondOrderBpParams(0, 1, 1, 1), 2.0) == pytest.approx(2 / 3, rel=1e-14)


@pytest.mark.parametrize("alpha", [0.3, 0.7, 1.0])
def test_magnitude_bp2_a_zero_reduction(alpha):
    w = np.logspace(-1, 1, 7)
    reduced = w**alpha / np.sqrt(w ** (4 * alpha) + 2 * 2.0 * math.cos(alpha * math.pi) * w ** (2 * alpha) + 4.0)
    assert np.allclose(magnitude_bp2(FoSecondOrderBpParams(0, 2.0, 1, alpha), w), reduced, rtol=1e-13)


def test_pole_on_axis_bp2():
    with pytest.raises(PoleOnAxisError):
        magnitude_bp2(FoSecondOrderBpParams(0, 4.0, 1, 1), 2.0)


def test_pole_on_axis_unstable_first_order():
    p = FoFilterParams(1.0, 1, 2.0, 1.0, allow_unstable=True)
    with pytest.raises(PoleOnAxisError):
        magnitude_bp(p, 1.0)


def test_omega_zero_rejected():
    with pytest.raises(DomainError):
        magnitude_bp(bp(1, 1, 1, 0.5), 0.0)


def test_scalar_and_array_shapes():
    p = bp(1, 2, 1.2, 0.4)
    assert isinstance(magnitude_bp(p, 1.0), float)
    assert magnitude_bp(p, np.ones(4)).shape == (4,)


def test_transfer_matches_oracle():
    for w in (0.1, 1.0, 7.3):
        assert transfer(bp(2, 3, 1.3, 0.6), w) == pytest.approx(t_bp(2, 3, 1.3, 0.6, w), rel=1e-13)
        assert transfer(FoSecondOrderBpParams(0.3, 2, 1.5, 0.8), w) == pytest.approx(
            t_bp2(0.3, 2, 1.5, 0.8, w), rel=1e-13
        )


# -- phase -------------------------------------------------------------------


def test_phase_at_unit_frequency():
    assert phase(bp(1, 1, 1, 0.5), 1.0) == pytest.approx(0.0, abs=1e-15)


def test_phase_low_frequency_limit():
    # beta -> 0 approaches a real first-order low-pass
    assert phase(bp(1, 1, 1, 1e-9), 1e-8) == pytest.approx(0.0, abs=1e-7)


def test_phase_bs_is_negated():
    w = np.logspace(-2, 2, 25)
    p = bp(1.3, 2, 1.4, 0.5)
    assert np.allclose(phase(p.with_family(BS), w), -phase(p, w), atol=1e-14)


def test_phase_wrapped():
    w = np.logspace(-3, 3, 200)
    ph = phase(FoSecondOrderBpParams(0.1, 1, 1, 1), w)
    assert np.all(ph > -math.pi) and np.all(ph <= math.pi)


# -- Q factors -----------------------------------------------------------------


def test_q_bp_reported():
    p = FoFilterParams.symmetric(0.996307, 18.2033, 0.924351)
    assert q_factor_bp(p, 1.5) == pytest.approx(22.6017, rel=1e-3)


def test_q_bs_reported():
    p = FoFilterParams.symmetric(0.99767, 17.11228, 0.92593, BS)
    assert q_factor_bs(p, 1.5) == pytest.approx(21.2739, rel=2e-3)


def test_q_trivial():
    assert q_factor_bp(bp(1, 1, 1, 0.5), 1.0) == pytest.approx(1 / math.sqrt(2))
    assert q_factor_bs(bs(1, 1, 1, 0.5), 1.0) == pytest.approx(1 / math.sqrt(2))


def test_q_linear_in_b():
    p = bp(0.8, 3.0, 1.5, 0.7)
    p2 = bp(0.8, 6.0, 1.5, 0.7)
    assert q_factor_bp(p2, 1.5) == pytest.approx(2 * q_factor_bp(p, 1.5), rel=1e-15)
    s, s_half = p.with_family(BS), bs(0.8, 1.5, 1.5, 0.7)
    assert q_factor_bs(s_half, 1.5) == pytest.approx(0.5 * q_factor_bs(s, 1.5), rel=1e-15)


# -- closed-form peak --------------------------------------------------------


@pytest.mark.parametrize("alpha", [0.4, 1.0, 1.7])
def test_peak_unit_a(alpha):
    assert peak_closed_form(FoFilterParams.symmetric(1.0, 2.0, alpha / 2)).omega_m == pytest.approx(1.0)


def test_peak_against_grid_oracle():
    rep = peak_closed_form(FoFilterParams.symmetric(4.0, 1.0, 0.5))
    assert rep.omega_m == pytest.approx(4.0, rel=1e-15)
    assert rep.method is PeakMethod.CLOSED_FORM
    w_star, _, ratio = grid_argmax(lambda w: t_bp(4.0, 1.0, 1.0, 0.5, w))
    assert abs(math.log(w_star / 4.0)) <= math.log(ratio)


def test_peak_magnitude_consistent():
    p = FoFilterParams.symmetric(2.7, 5.0, 0.8)
    rep = peak_closed_form(p)
    assert rep.peak_magnitude == pytest.approx(magnitude_bp(p, rep.omega_m), rel=1e-12)


def test_peak_requires_symmetry():
    with pytest.raises(ModeError):
        peak_closed_form(bp(1, 1, 1.5, 0.5))


# -- properties ----------------------------------------------------------------

first_order = st.builds(
    lambda a, b, alpha, frac: (a, b, alpha, alpha * frac),
    st.floats(0.01, 20),
    st.floats(0.01, 20),
    st.floats(0.05, 1.95),
    st.floats(0.02, 0.98),
)
freq = st.floats(1e-3, 1e3)


@settings(max_examples=300, deadline=None)
@given(first_order, freq)
def test_reciprocity(pars, w):
    p = bp(*pars)
    assert magnitude_bp(p, w) * magnitude_bs(p.with_family(BS), w) == pytest.approx(1.0, rel=1e-12)


@settings(max_examples=300, deadline=None)
@given(first_order, freq)
def test_closed_form_matches_complex(pars, w):
    ref = abs(t_bp(*pars, w))
    assert magnitude_bp(bp(*pars), w) == pytest.approx(ref, rel=1e-12)


@settings(max_examples=300, deadline=None)
@given(st.floats(0, 5), st.floats(0.05, 10), st.floats(0.05, 10), st.floats(0.05, 1.0), freq)
def test_closed_form_bp2_matches_complex(a, b, d, alpha, w):
    ref = abs(t_bp2(a, b, d, alpha, w))
    try:
        got = magnitude_bp2(FoSecondOrderBpParams(a, b, d, alpha), w)
    except PoleOnAxisError:
        return
    # both sides lose accuracy next to a pole; keep to well-conditioned points
    if ref < 1e6:
        assert got == pytest.approx(ref, rel=1e-9)


@settings(max_examples=200, deadline=None)
@given(first_order, freq)
def test_radicand_positive(pars, w):
    a, b, alpha, beta = pars
    wa = w**alpha
    r = (wa - a) ** 2 + 2 * a * wa * (1 + math.cos(alpha * math.pi / 2))
    assert r > 0
    assert b * w**beta / math.sqrt(r) == pytest.approx(magnitude_bp(bp(*pars), w), rel=1e-10)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 20), st.floats(0.1, 10), st.floats(0.05, 0.95), st.floats(0.05, 3.0))
def test_symmetric_geometric_symmetry(a, b, beta, log_r):
    p = FoFilterParams.symmetric(a, b, beta)
    wm = a ** (1 / p.alpha)
    w1, w2 = wm * math.exp(log_r), wm * math.exp(-log_r)
    assert (w1 * w2) ** p.alpha == pytest.approx(a * a, rel=1e-12)
    assert magnitude_bp(p, w1) == pytest.approx(magnitude_bp(p, w2), rel=1e-10)
