import numpy as np
import pytest

import opucchain as oc
from conftest import random_chain_input


def test_nu_constant_frozen(constant_input):
    table = oc.nu_moments(constant_input, 10)
    assert table.nu(0) == pytest.approx(0.5)
    assert table.nu(1) == pytest.approx(-0.5)
    for k in range(2, 11):
        assert abs(table.nu(k)) < 1e-14
    for k in range(1, 11):
        assert abs(table.nu(-k)) < 1e-14
    # reflection symmetry links the two expansion directions
    assert table.nu(1) == pytest.approx(-np.conj(table.nu(0)))


def test_nu_closed_form(complex_input):
    p = oc.ExampleParams(0.5, 1.0, 0.3)
    table = oc.nu_moments(complex_input, 30)
    for k in range(-30, 31):
        ref = oc.example_nu(p, k)
        assert abs(table.nu(k) - ref) <= 1e-10 * max(1.0, abs(ref))


def test_mu_constant_frozen(constant_input):
    table = oc.moment_table(constant_input, 10)
    assert table.mu(0) == pytest.approx(1.0)
    for k in range(1, 11):
        assert table.mu(k) == pytest.approx(0.5, abs=1e-14)
        assert table.mu(-k) == pytest.approx(np.conj(table.mu(k)), abs=1e-14)


def test_mu_closed_form(complex_input):
    p = oc.ExampleParams(0.5, 1.0, 0.3)
    table = oc.moment_table(complex_input, 30)
    for k in range(-30, 31):
        ref = oc.example_mu(p, k)
        assert abs(table.mu(k) - ref) <= 1e-10 * max(1.0, abs(ref))


def test_moment_relations(complex_input):
    table = oc.moment_table(complex_input, 40)
    nu, mu, K = table.nu_values, table.mu_values, table.K
    assert np.max(np.abs(mu[::-1] - np.conj(mu))) < 1e-12
    assert np.max(np.abs(nu[1:] - (mu[1:] - mu[:-1]))) < 1e-12
    # nu_j = -conj(nu_{-j+1})
    assert np.max(np.abs(nu[K + 1 :] + np.conj(nu[K:0:-1]))) < 1e-12
    assert table.mu(0) == pytest.approx(1.0)


def test_nu_independent_of_division_order(complex_input):
    t1 = oc.nu_moments(complex_input, 20)
    t2 = oc.nu_moments(complex_input, 24)
    sl = slice(24 - 20, 24 + 20 + 1)
    assert np.max(np.abs(t2.nu_values[sl] - t1.nu_values)) < 1e-11


def test_nu_requires_margin(constant_input):
    with pytest.raises(oc.DomainError):
        oc.nu_moments(oc.RecurrenceInput.constant(0.25, 0.0, 10), 9)


def test_table_index_bounds(constant_input):
    table = oc.nu_moments(constant_input, 5)
    with pytest.raises(oc.DomainError):
        table.nu(6)
    with pytest.raises(oc.DomainError):
        table.mu(0)  # not filled yet
    full = oc.mu_moments(table)
    assert full.mu(0) == pytest.approx(1.0)


def test_quadrature_frozen_n1(constant_input):
    psi = oc.quadrature(constant_input, 1)
    assert psi.theta0_weight == pytest.approx(0.75, abs=1e-14)
    np.testing.assert_allclose(psi.nodes, [np.pi], atol=1e-13)
    np.testing.assert_allclose(psi.weights, [0.25], atol=1e-14)


def test_quadrature_frozen_n2(constant_input):
    psi = oc.quadrature(constant_input, 2)
    assert psi.theta0_weight == pytest.approx(2 / 3, abs=1e-14)
    np.testing.assert_allclose(psi.nodes, [2 * np.pi / 3, 4 * np.pi / 3], atol=1e-12)
    np.testing.assert_allclose(psi.weights, [1 / 6, 1 / 6], atol=1e-13)


def test_quadrature_matches_moments(complex_input):
    table = oc.moment_table(complex_input, 20)
    sets = oc.zero_sets(complex_input, 20)
    for n in (1, 4, 9, 20):
        psi = oc.quadrature(complex_input, n, sets[n - 1])
        assert psi.theta0_weight + np.sum(psi.weights) == pytest.approx(1.0, abs=1e-12)
        for k in range(-n, n + 1):
            assert abs(psi.moment(k) - table.mu(-k)) < 1e-9


def test_mass_at_one_decreases_toward_maximal(complex_input):
    params = oc.maximal_parameters(complex_input.d, n_out=4)
    sets = oc.zero_sets(complex_input, 30)
    masses = np.array(
        [oc.quadrature(complex_input, n, sets[n - 1]).theta0_weight for n in range(1, 31)]
    )
    assert np.all(np.diff(masses) < 0)
    assert np.all(masses > params.M[0])
    gaps = masses - params.M[0]
    assert gaps[-1] < gaps[0] / 5


def test_quadrature_level_mismatch(constant_input):
    zs = oc.zeros(constant_input, 3)
    with pytest.raises(oc.DomainError):
        oc.quadrature(constant_input, 4, zs)


def test_convergents_frozen(constant_input):
    seq = oc.convergents_at_one(constant_input, 6)
    n = np.arange(1, 7)
    np.testing.assert_allclose(seq, n / (2 * n + 2), atol=1e-15)
    assert seq[0] == pytest.approx(constant_input.d[0])


def test_convergents_monotone_and_bounded():
    inp = oc.RecurrenceInput.constant(0.25, 0.0, 3000)
    seq = oc.convergents_at_one(inp, 3000, M0=0.5)
    assert np.all(np.diff(seq) > 0)
    assert np.all(seq < 0.5)
    # the gap to the limit is exactly 1/(2n+2) on this family
    assert 0.5 - seq[-1] == pytest.approx(1 / 6002, rel=1e-10)


def test_convergents_limit_closed_form():
    p = oc.ExampleParams(0.5, 1.0, 0.3)
    inp = oc.example_sequences(p, 2000)
    seq = oc.convergents_at_one(inp, 2000)
    assert np.all(np.diff(seq) > 0)
    assert seq[-1] < 1 - p.t
    assert (1 - p.t) - seq[-1] < 2e-3


def test_hat_gamma_frozen(constant_input):
    table = oc.moment_table(constant_input, 10)
    gh = oc.hat_gamma_check(constant_input, table, 6)
    assert gh[0] == pytest.approx(1.0)
    # hat-gamma_1 = mu_{-1} + 1 = 3/2 = 2 (1 - 1/4)
    assert gh[1] == pytest.approx(1.5, abs=1e-14)


def test_hat_gamma_first_step_general():
    rng = np.random.default_rng(3)
    for _ in range(10):
        inp = random_chain_input(rng, 12)
        table = oc.moment_table(inp, 8)
        gh = oc.hat_gamma_check(inp, table, 6)
        assert gh[1] == pytest.approx(2 * (1 - inp.d[0]), rel=1e-11)
        assert np.max(np.abs(gh.imag)) < 1e-11 * np.max(np.abs(gh.real))


def test_hat_gamma_requires_mu(constant_input):
    frag = oc.nu_moments(constant_input, 8)
    with pytest.raises(oc.DomainError):
        oc.hat_gamma_check(constant_input, frag, 4)
