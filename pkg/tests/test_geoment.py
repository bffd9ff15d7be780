"""Unit tests for the closest-product solver and its oracles."""

import itertools

import numpy as np
import pytest

from hgstate import geoment as gm
from hgstate import hypercore as hc
from hgstate import statevec as sv


def test_state_tensor_index_convention():
    s = sv.build_state(hc.parse_edges("1234,123"))
    t = gm.state_tensor(s)
    assert t.shape == (2, 2, 2, 2)
    for mu in range(16):
        bits = [(mu >> v) & 1 for v in range(4)]
        assert t[bits[0], bits[1], bits[2], bits[3]] == s[mu]


def test_solve_policy_validation():
    with pytest.raises(ValueError):
        gm.SolvePolicy(restarts=0)
    with pytest.raises(ValueError):
        gm.SolvePolicy(tol=0.0)
    with pytest.raises(ValueError):
        gm.SolvePolicy(max_iter=0)


def test_product_state_validation():
    with pytest.raises(ValueError):
        gm.ProductState(np.ones((4, 2)))
    gm.ProductState(np.full((4, 2), np.sqrt(0.5)))  # unit rows pass


def test_product_codes_have_zero_ge():
    # codes built purely from single-vertex edges are product states
    loop_bits = [1, 2, 8, 128]
    for picks in itertools.chain.from_iterable(
        itertools.combinations(loop_bits, k) for k in range(5)
    ):
        h = sum(picks)
        sol = gm.solve_code(h, gm.SolvePolicy(restarts=8))
        assert sol.overlap <= 1.0
        assert 0.0 <= sol.eg < 1e-12


def test_solver_is_deterministic():
    h = hc.parse_edges("1234,12,13")
    a = gm.solve_code(h)
    b = gm.solve_code(h)
    assert a.eg == b.eg
    assert np.array_equal(a.witness.qubits, b.witness.qubits)


def test_monotone_ascent():
    rng = np.random.default_rng(53)
    for h in rng.integers(0, hc.N_CODES, size=12):
        sol = gm.solve_code(int(h), gm.SolvePolicy(restarts=16))
        assert sol.converged
        assert sol.monotone_slack <= 1e-14


def test_refined_witness_is_a_fixed_point():
    rng = np.random.default_rng(59)
    for h in rng.integers(0, hc.N_CODES, size=8):
        sol = gm.solve_code(int(h), gm.SolvePolicy(restarts=16))
        assert abs(gm.refine_witness(sol, sweeps=2) - sol.overlap) < 1e-11


def test_ge_is_locally_invariant():
    rng = np.random.default_rng(61)
    policy = gm.SolvePolicy(restarts=24)
    for h in rng.integers(0, hc.N_CODES, size=10):
        h = int(h)
        base = gm.geometric_entanglement(h, policy)
        images = [
            hc.apply_x(h, 2),
            hc.apply_z(h, 4),
            hc.permute(h, (3, 1, 4, 2)),
        ]
        for img in images:
            assert abs(gm.geometric_entanglement(img, policy) - base) < 1e-6


def test_degeneracy_pattern_four_edge():
    sol = gm.solve_code(hc.parse_edges("1234"))
    pat = gm.degeneracy_pattern(sol)
    assert pat.label == "4"
    assert pat.reality == "R"
    assert pat.census  # census lists every competing grouping


def test_symmetric_z_iteration_attractor():
    z = gm.symmetric_z_iteration(0.5 + 0.5j)
    exact = gm.symmetric_z_closed_form()
    assert abs(z.imag) < 1e-9
    assert abs(z.real - exact) < 1e-10
    assert abs(gm.symmetric_cubic_residual(z)) < 1e-9
    assert abs(gm.symmetric_cubic_residual(exact)) < 1e-12


def test_symmetric_z_iteration_pole_handling():
    with pytest.raises(ValueError):
        gm.symmetric_z_iteration(-1.0)
    with pytest.raises(gm.IterationDiverged):
        gm.symmetric_z_iteration(-1.0 + 1e-10j)
    assert issubclass(gm.IterationDiverged, RuntimeError)


def test_stable_symmetric_z_deterministic():
    a = gm.stable_symmetric_z(seed=4)
    assert a == gm.stable_symmetric_z(seed=4)
    assert abs(a - gm.symmetric_z_closed_form()) < 1e-9


def test_triangle_closed_form_value():
    assert abs(gm.triangle_eg_closed_form() - 0.5647186012585346) < 1e-14


def test_closed_form_values_sane():
    vals = gm.closed_form_values()
    assert len(vals) == 16
    assert all(v > 0 for v in vals.values())
    assert set(vals) <= set(range(1, 29))


def test_real_grid_never_beats_the_solver():
    rng = np.random.default_rng(67)
    for h in rng.integers(0, hc.N_CODES, size=6):
        s = sv.build_state(int(h))
        eg = gm.closest_product(s, restarts=32).eg
        assert gm.real_grid_eg(s, points=12, levels=3) >= eg - 1e-9


def test_real_grid_matches_solver_on_real_witness_state():
    s = sv.build_state(hc.parse_edges("1234"))
    eg = gm.closest_product(s, restarts=32).eg
    grid = gm.real_grid_eg(s, points=24, levels=3)
    assert eg - 1e-9 <= grid <= eg + 1e-3
