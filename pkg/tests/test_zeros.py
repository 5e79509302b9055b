import numpy as np
import pytest

import opucchain as oc


def test_G_frozen_values(constant_input):
    g, dg = oc.eval_G(constant_input, 2, 0.0)
    assert float(g) == pytest.approx(-0.25, abs=1e-15)  # G_2 = x^2 - 1/4
    assert float(dg) == pytest.approx(0.0, abs=1e-15)
    g1, _ = oc.eval_G(constant_input, 1, 0.7)
    assert float(g1) == pytest.approx(0.7, abs=1e-15)  # G_1 = x when c_1 = 0


def test_G_matches_rescaled_R(complex_input):
    # G_n(cos(theta/2)) = (4 z)^{-n/2} R_n(z) with z^{1/2} = e^{i theta / 2}
    for n, theta in ((3, np.pi / 3), (7, 1.1), (20, 5.0)):
        x = np.cos(theta / 2)
        g, _ = oc.eval_G(complex_input, n, x)
        z = np.exp(1j * theta)
        r = oc.eval_R_Q(complex_input, n, z)[0]
        rhs = (2.0 ** n * np.exp(1j * n * theta / 2)) ** -1 * r
        assert abs(rhs.imag) < 1e-12 * abs(rhs)
        assert float(g) == pytest.approx(float(rhs.real), rel=1e-11)


def test_G_domain_error(constant_input):
    with pytest.raises(oc.DomainError):
        oc.eval_G(constant_input, 2, 1.5)
    with pytest.raises(oc.DomainError):
        oc.eval_G(constant_input, 2, np.array([0.0, -1.0001]))


def test_G_endpoint_derivative_is_finite_for_zero_c(constant_input):
    g, dg = oc.eval_G(constant_input, 3, np.array([-1.0, 1.0]))
    assert np.all(np.isfinite(g))
    assert np.all(np.isfinite(dg))


def test_zeros_frozen_constant(constant_input):
    zs1 = oc.zeros(constant_input, 1)
    np.testing.assert_allclose(zs1.theta, [np.pi], atol=1e-13)
    zs2 = oc.zeros(constant_input, 2)
    np.testing.assert_allclose(zs2.x, [0.5, -0.5], atol=1e-13)
    np.testing.assert_allclose(zs2.theta, [2 * np.pi / 3, 4 * np.pi / 3], atol=1e-13)
    zs3 = oc.zeros(constant_input, 3)
    np.testing.assert_allclose(
        zs3.theta, [np.pi / 2, np.pi, 3 * np.pi / 2], atol=1e-13
    )


def test_zeros_structure(complex_input):
    sets = oc.zero_sets(complex_input, 25)
    for zs in sets:
        assert zs.x.size == zs.n
        assert np.all(np.diff(zs.x) < 0)
        assert np.all(np.diff(zs.theta) > 0)
        assert np.all((zs.theta > 0) & (zs.theta < 2 * np.pi))
        assert np.max(np.abs(np.abs(zs.z) - 1.0)) < 1e-12
    # strict interlacing between consecutive levels
    for a, b in zip(sets, sets[1:]):
        assert np.all(b.theta[:-1] < a.theta)
        assert np.all(a.theta < b.theta[1:])


def test_zero_residuals(complex_input, constant_input):
    for inp in (complex_input, constant_input):
        for n in (5, 15, 25):
            zs = oc.zeros(inp, n)
            rv = oc.eval_R_Q(inp, n, zs.z)[0]
            scale = np.max(np.abs(oc.generate_R(inp, n)))
            assert np.max(np.abs(rv)) < 1e-9 * scale
            # simple roots: no derivative collapses relative to the level scale
            _, dg = oc.eval_G(inp, n, zs.x)
            assert np.min(np.abs(dg)) > 1e-8 * np.max(np.abs(dg))


def test_zeros_deterministic(complex_input):
    a = oc.zeros(complex_input, 12)
    b = oc.zeros(complex_input, 12)
    assert np.array_equal(a.x, b.x)
    assert np.array_equal(a.theta, b.theta)


def test_zeros_input_validation(constant_input):
    with pytest.raises(oc.DomainError):
        oc.zeros(constant_input, 0)
    with pytest.raises(oc.DomainError):
        oc.zeros(constant_input, 5, tol=0.0)


def test_wronskian_frozen(constant_input):
    zs = oc.zeros(constant_input, 2)
    wc = oc.wronskian_check(constant_input, 2, zs)
    # W_2 = G_2' G_1 = 2x * x at x = +-1/2
    np.testing.assert_allclose(wc.W_at_roots, [0.5, 0.5], atol=1e-12)
    assert wc.V_identity_residual < 1e-11


def test_wronskian_positivity_and_identity(complex_input):
    sets = oc.zero_sets(complex_input, 30)
    for n in (1, 2, 7, 18, 30):
        wc = oc.wronskian_check(complex_input, n, sets[n - 1])
        assert np.all(wc.W_at_roots > 0)
        assert wc.V_identity_residual < 1e-9


def test_wronskian_scaling(complex_input):
    # W_{n+1}(x_{n,j}) = d_{n+1} W_n(x_{n,j}), evaluated independently here
    n = 9
    zs = oc.zeros(complex_input, n)
    _, dg_n = oc.eval_G(complex_input, n, zs.x)
    g_prev, _ = oc.eval_G(complex_input, n - 1, zs.x)
    g_next, _ = oc.eval_G(complex_input, n + 1, zs.x)
    w_n = dg_n * g_prev
    w_next = -dg_n * g_next
    np.testing.assert_allclose(w_next, complex_input.d[n] * w_n, rtol=1e-10)


def test_wronskian_level_mismatch(constant_input):
    zs = oc.zeros(constant_input, 3)
    with pytest.raises(oc.DomainError):
        oc.wronskian_check(constant_input, 4, zs)
