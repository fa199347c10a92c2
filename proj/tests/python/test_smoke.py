# Copyright 2026 The weakpolar Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import cmath
import math

import pytest

import weakpolar as wp

PI = math.pi


def test_weak_value_of_sigma_x_is_tan_alpha():
    z = (1.0, 0.0)
    for alpha in (0.0, 0.1, PI / 4, 0.4 * PI):
        w = wp.weak_value(wp.SIGMA_X, z, wp.linear_polarization(alpha))
        assert w == pytest.approx(math.tan(alpha), abs=1e-12)


def test_orthogonal_postselection_raises():
    with pytest.raises(wp.WeakpolarError) as info:
        wp.weak_value(wp.SIGMA_X, (1.0, 0.0), (0.0, 1.0))
    assert info.value.code == "orthogonal post-selection"


def test_modular_value_at_g_pi():
    f = wp.linear_polarization(PI / 4)
    half_x = [[0.0, 0.5], [0.5, 0.0]]
    am = wp.modular_value(half_x, PI, (1.0, 0.0), f)
    # exp(-i pi sigma/2) = -i sigma
    assert am == pytest.approx(-1j, abs=1e-12)


def test_geometric_argument_matches_weak_value():
    i = (0.0, 0.0, 1.0)
    n = (1.0, 0.0, 0.0)
    f = (math.sin(1.0) * math.cos(0.7), math.sin(1.0) * math.sin(0.7), math.cos(1.0))
    w = wp.weak_value(wp.pauli_along(n), wp.state_from_bloch(i), wp.state_from_bloch(f))
    geo = wp.weak_argument_geometric(i, n, f)
    assert abs(cmath.phase(w) - geo) < 1e-9
    # mirror of i about n is 2 (n.i) n - i = -i here
    loop = [i, n, (0.0, 0.0, -1.0), f]
    assert -0.5 * wp.solid_angle(loop) == pytest.approx(geo, abs=1e-9)


def test_cnot_protocol():
    cfg = wp.cnot_config(0.297 * PI, 0.836, PI / 4)
    assert cfg.strength == pytest.approx(0.297 * PI)
    assert wp.effective_modular_value(cfg) == pytest.approx(1.0, abs=1e-12)
    scan = wp.interference_scan(cfg)
    v = wp.visibility_closed_form(cfg.strength, cfg.purity, 1.0)
    assert scan["visibility"] == pytest.approx(v, abs=1e-9)
    polar = wp.polar_modular_value(cfg)
    assert polar["modulus"] == pytest.approx(1.0, abs=1e-9)
    q_re, q_im = wp.meter_configs(cfg.meter, cfg.control)
    assert wp.conditional_meter_average(cfg, q_re) == pytest.approx(wp.bruteforce_meter_average(cfg, q_re), abs=1e-10)


def test_modulus_roots_bracket_the_value():
    theta, p = 0.297 * PI, 0.836
    v = wp.visibility_closed_form(theta, p, 0.5)
    lo, hi = wp.modulus_from_visibility(v, theta, p)
    assert min(abs(lo - 0.5), abs(hi - 0.5)) < 1e-9


def test_statistics():
    assert wp.snr(0.6, 10000) == pytest.approx(75.0)
    assert wp.estimator_std(0.6, 10000) == pytest.approx(0.008)
    mc = wp.run_montecarlo(0.6, 10000, 500, seed=3)
    assert abs(mc["mean"] - 0.6) < 0.003
    assert wp.run_montecarlo(0.6, 10000, 50, seed=3)["v_hat"] == wp.run_montecarlo(0.6, 10000, 50, seed=3)["v_hat"]


def test_estimator_and_purity_fit():
    xi = [2 * PI * k / 24 for k in range(24)]
    n = 10**9
    n13 = [round(n * 0.5 * (1 + 0.7 * math.cos(0.4 - x))) for x in xi]
    est = wp.estimate_visibility_phase(xi, n13, [n - k for k in n13])
    assert est["visibility"] == pytest.approx(0.7, abs=1e-6)
    assert est["phase"] == pytest.approx(0.4, abs=1e-6)

    theta = 0.297 * PI
    alphas = [(0.05 + 0.05 * k) * PI for k in range(9)]
    vs = [wp.visibility_closed_form(theta, 0.836, abs(math.tan(a))) for a in alphas]
    fit = wp.fit_purity(theta, alphas, vs, [100000] * 9)
    assert fit["purity"] == pytest.approx(0.836, abs=1e-5)


def test_figure_tables():
    f2 = wp.run_figure2(0.297 * PI, 0.836)
    assert set(f2) == {"alpha_rad", "V_theory", "V_sampled", "arg_rad", "criterion"}
    assert len(f2["alpha_rad"]) == 197
    assert wp.run_figure2(0.297 * PI, 0.836)["V_sampled"] == f2["V_sampled"]
    f3 = wp.run_figure3(0.499 * PI, 0.882, alpha_grid=[0.0, PI / 4])
    assert f3["wv_polar"][1] == pytest.approx(1.0, abs=1e-9)


def test_verify_quick():
    assert all(r["passed"] for r in wp.verify(trials=20, seed=5))


def test_bad_purity_rejected():
    z = (0.0, 0.0, 1.0)
    with pytest.raises(wp.WeakpolarError) as info:
        wp.ProtocolConfig(z, 1.5, z, wp.SIGMA_X, PI, 0.0, (1.0, 0.0), (1.0, 0.0))
    assert info.value.code == "invalid-purity"
