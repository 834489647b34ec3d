"""Permittivity models on both frequency axes.

Numeric oracles below were frozen from 40-digit evaluations of the
closed forms at xi = 0.162433 eV (just under the first room-temperature
Matsubara energy) and k_hat = 1 eV.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nlcasimir import (CONSTANTS, CoreTable, DomainError, Drude, DrudeParams,
                       NonlocalAlt, NonlocalParams, PerfectReflector, Plasma,
                       PRESETS, UnsupportedOperationError, WithCore,
                       eval_imag_axis, eval_real_axis, gold_default,
                       static_transverse_conductivity)

XI = 0.162433
GOLD = gold_default()
DRUDE = Drude(GOLD.params.drude)
V0 = NonlocalAlt(NonlocalParams(DrudeParams(9.0, 0.035), 0.0, 0.0))


def test_gold_preset_parameters():
    p = GOLD.params
    assert p.drude.omega_p == 9.0
    assert p.drude.gamma == 0.035
    seven_vf = 7.0 * CONSTANTS.fermi_velocity_ratio_default
    assert p.v_t_ratio == seven_vf
    assert p.v_l_ratio == seven_vf
    assert "gold-default" in PRESETS
    assert PRESETS["gold-default"]() == GOLD


def test_drude_imaginary_axis_oracle():
    pair = eval_imag_axis(DRUDE, XI)
    assert math.isclose(pair.eps_t, 2526.753763354655, rel_tol=1e-14)
    assert pair.eps_l == pair.eps_t


def test_plasma_imaginary_axis_oracle():
    pair = eval_imag_axis(Plasma(9.0), XI)
    assert math.isclose(pair.eps_t, 3070.986657639763, rel_tol=1e-14)
    assert pair.eps_l == pair.eps_t


def test_nonlocal_imaginary_axis_oracle():
    pair = eval_imag_axis(GOLD, XI, 1.0)
    assert math.isclose(pair.eps_t, 3027.794649522278, rel_tol=1e-14)
    assert math.isclose(pair.eps_l, 2108.652752097694, rel_tol=1e-14)


def test_transverse_grows_and_longitudinal_shrinks_with_wavevector():
    base = eval_imag_axis(GOLD, XI, 0.0)
    kicked = eval_imag_axis(GOLD, XI, 2.0)
    assert kicked.eps_t > base.eps_t
    assert kicked.eps_l < base.eps_l


@given(xi=st.floats(1e-3, 1e2), k=st.floats(0.0, 1e2))
@settings(deadline=None)
def test_zero_velocity_collapses_to_drude_bitwise(xi, k):
    a = eval_imag_axis(V0, xi, k)
    b = eval_imag_axis(DRUDE, xi, k)
    assert a.eps_t == b.eps_t
    assert a.eps_l == b.eps_l


@given(xi=st.floats(1e-3, 1e2), k=st.floats(0.0, 1e2))
@settings(deadline=None)
def test_imaginary_axis_values_exceed_unity(xi, k):
    pair = eval_imag_axis(GOLD, xi, k)
    assert pair.eps_t > 1.0
    assert pair.eps_l > 1.0


def test_drude_real_axis_oracle():
    pair = eval_real_axis(DRUDE, 0.5)
    assert math.isclose(pair.eps_t.real, -321.4201413075928, rel_tol=1e-14)
    assert math.isclose(pair.eps_t.imag, 22.569409891531496, rel_tol=1e-14)
    assert pair.passive


def test_plasma_real_axis_is_lossless():
    pair = eval_real_axis(Plasma(9.0), 0.5)
    assert pair.eps_t.imag == 0.0
    assert math.isclose(pair.eps_t.real, 1.0 - 81.0 / 0.25, rel_tol=1e-15)


def test_nonlocal_passivity_flag_flips_at_large_wavevector():
    # Im eps_T changes sign where v_T k_hat crosses gamma
    k_star = GOLD.params.drude.gamma / GOLD.params.v_t_ratio
    assert eval_real_axis(GOLD, 0.5, 0.9 * k_star).passive
    flagged = eval_real_axis(GOLD, 0.5, 1.1 * k_star)
    assert not flagged.passive
    assert flagged.eps_t.imag < 0.0


def test_real_axis_components_differ_only_through_velocities():
    local = eval_real_axis(V0, 0.7, 3.0)
    assert local.eps_t == local.eps_l


def test_with_core_shifts_both_components():
    core = CoreTable(np.array([0.1, 1.0, 10.0]), np.array([5.0, 3.0, 1.5]))
    model = WithCore(DRUDE, core)
    inner = eval_imag_axis(DRUDE, 0.5, 0.7)
    shifted = eval_imag_axis(model, 0.5, 0.7)
    shift = core.value_at(0.5) - 1.0
    assert shifted.eps_t == inner.eps_t + shift
    assert shifted.eps_l == inner.eps_l + shift


def test_with_core_wraps_the_nonlocal_model_too():
    core = CoreTable(np.array([0.1, 10.0]), np.array([4.0, 1.2]))
    shifted = eval_imag_axis(WithCore(GOLD, core), XI, 1.0)
    plain = eval_imag_axis(GOLD, XI, 1.0)
    shift = core.value_at(XI) - 1.0
    assert shifted.eps_t == plain.eps_t + shift
    assert shifted.eps_l == plain.eps_l + shift


def test_with_core_has_no_real_axis_form():
    core = CoreTable(np.array([0.1, 10.0]), np.array([4.0, 1.2]))
    with pytest.raises(UnsupportedOperationError):
        eval_real_axis(WithCore(DRUDE, core), 0.5)


def test_perfect_reflector_has_no_permittivity():
    with pytest.raises(UnsupportedOperationError):
        eval_imag_axis(PerfectReflector(), 1.0)
    with pytest.raises(UnsupportedOperationError):
        eval_real_axis(PerfectReflector(), 1.0)


def test_axis_domain_validation():
    with pytest.raises(DomainError):
        eval_imag_axis(DRUDE, 0.0)
    with pytest.raises(DomainError):
        eval_imag_axis(DRUDE, -1.0)
    with pytest.raises(DomainError):
        eval_imag_axis(DRUDE, 1.0, -0.1)
    with pytest.raises(DomainError):
        eval_real_axis(DRUDE, 0.0)
    with pytest.raises(DomainError):
        eval_real_axis(DRUDE, 1.0, -0.1)


def test_parameter_validation():
    with pytest.raises(DomainError):
        DrudeParams(0.0, 0.035)
    with pytest.raises(DomainError):
        DrudeParams(9.0, -0.001)
    with pytest.raises(DomainError):
        NonlocalParams(DrudeParams(9.0, 0.035), -0.1, 0.0)
    with pytest.raises(DomainError):
        Plasma(-9.0)


def test_static_conductivity_oracles():
    p = GOLD.params
    assert math.isclose(static_transverse_conductivity(p, 0.0),
                        184.16500557776460, rel_tol=1e-14)
    assert math.isclose(static_transverse_conductivity(p, 0.2),
                        150.25518551186886, rel_tol=1e-14)


def test_static_conductivity_crosses_zero_with_the_passivity_flag():
    p = GOLD.params
    k_star = p.drude.gamma / p.v_t_ratio
    assert static_transverse_conductivity(p, k_star) == 0.0
    assert static_transverse_conductivity(p, 2.0 * k_star) < 0.0


def test_static_conductivity_needs_dissipation():
    lossless = NonlocalParams(DrudeParams(9.0, 0.0), 0.01, 0.01)
    with pytest.raises(DomainError):
        static_transverse_conductivity(lossless, 0.5)
