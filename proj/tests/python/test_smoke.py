"""Smoke tests for the revival python bindings."""

import cmath
import math

import numpy as np
import pytest

import revival


PI = math.pi


def test_gauss_indicator():
    value, err = revival.gauss_indicator(3, 8, 5)
    assert value == 5
    assert err < 1e-9
    value, _ = revival.gauss_indicator(0, 1, 5)
    assert value == 0


def test_grid_function_numpy_roundtrip():
    values = np.sin(np.linspace(0.0, PI, 65)) * (1 + 0.5j)
    g = revival.GridFunction(values)
    assert g.intervals == 64
    np.testing.assert_allclose(g.values, values)
    assert g.l2_norm() == pytest.approx(
        math.sqrt(abs(1 + 0.5j) ** 2 * PI / 2), rel=1e-6
    )


def test_full_period_revival_is_identity():
    f = revival.make_indicator(3 * PI / 8, 5 * PI / 8, 256)
    rev = revival.revival_superposition(f, revival.RationalTime(1, 1), 0j)
    np.testing.assert_array_equal(rev.values, f.values)


def test_free_eigenvalue():
    pair = revival.find_eigenvalue(revival.Potential.mathieu(0j), 3, 512)
    assert pair.lambda_ == pytest.approx(9.0, abs=1e-9)
    assert pair.residual <= 1e-10


def test_mathieu_characteristic_value():
    spec = revival.characteristic_values(0.1 + 0j, 3)
    assert spec.values[2].real == pytest.approx(9.000625, abs=1e-4)


def test_evolution_single_mode():
    V = revival.Potential.mathieu(0j)
    system = revival.build_system(V, 6, 256)
    sweep = revival.eigen_sweep(V, 6, 256)
    d1 = revival.sine_basis(1, 256)
    u = revival.evolve(system, sweep.pairs, d1, 0.9)
    expected = cmath.exp(-0.9j) * np.asarray(d1.values)
    np.testing.assert_allclose(np.asarray(u.values), expected, atol=1e-9)


def test_decomposition_identity_and_jump_ratio():
    V = revival.Potential.mathieu(0.25j)
    M = 320
    system = revival.build_system(V, 24, M)
    sweep = revival.eigen_sweep(V, 24, M)
    f = revival.make_indicator(3 * PI / 8, 5 * PI / 8, M)
    d = revival.decompose_at_rational_time(V, system, sweep.pairs, f, revival.RationalTime(1, 5))
    residue = (
        np.asarray(d.solution.values)
        - np.asarray(d.revival_part.values)
        - np.asarray(d.correction.values)
    )
    np.testing.assert_array_equal(residue, np.zeros_like(residue))
    assert revival.jump_ratio(d, []) is None


def test_gauss_suite_passes():
    results = revival.run_suite("gauss")
    assert results and all(r.passed for r in results)
