import numpy as np
import pytest

import opucchain as oc
from conftest import random_chain_input


def gram_schmidt_monic(mu, n):
    """Independent oracle: monic degree-n polynomial orthogonal to 1..z^{n-1}
    under <z^j, z^k> = mu(j - k), by solving the normal equations."""
    A = np.array([[mu(j - k) for k in range(n)] for j in range(n)], dtype=complex)
    rhs = -np.array([mu(j - n) for j in range(n)], dtype=complex)
    coeffs = np.linalg.solve(A, rhs)
    return np.concatenate([coeffs, [1.0 + 0j]])


def test_S0_S1_S2_frozen(constant_input):
    m = oc.minimal_parameters(constant_input.d)
    s = oc.szego_polynomials(constant_input, m, 2)
    np.testing.assert_allclose(s[0], [1.0], atol=1e-15)
    np.testing.assert_allclose(s[1], [-0.5, 1.0], atol=1e-15)  # z - 1/2
    # Gram-Schmidt oracle from the moment table fixes S_2 = z^2 - z/3 - 1/3
    table = oc.moment_table(constant_input, 6)
    oracle = gram_schmidt_monic(table.mu, 2)
    np.testing.assert_allclose(oracle, [-1 / 3, -1 / 3, 1.0], atol=1e-14)
    np.testing.assert_allclose(s[2], oracle, atol=1e-13)


def test_szego_matches_gram_schmidt(complex_input):
    table = oc.moment_table(complex_input, 16)
    fam = oc.szego_family(complex_input, 8)
    for n in range(1, 9):
        oracle = gram_schmidt_monic(table.mu, n)
        np.testing.assert_allclose(fam.s_coeffs[n], oracle, atol=1e-11)


def test_monic(complex_input):
    fam = oc.szego_family(complex_input, 30)
    for s in fam.s_coeffs:
        assert abs(s[-1] - 1.0) < 1e-12


def test_verblunsky_frozen_constant(constant_input):
    m = oc.minimal_parameters(constant_input.d)
    alpha = oc.verblunsky(constant_input, m, 10)
    np.testing.assert_allclose(alpha, 1.0 / np.arange(2, 12), atol=1e-14)
    assert np.max(np.abs(alpha.imag)) == 0.0


def test_verblunsky_lebesgue(lebesgue_input):
    alpha = oc.verblunsky(lebesgue_input, oc.minimal_parameters(lebesgue_input.d), 30)
    assert np.max(np.abs(alpha)) < 1e-14
    fam = oc.szego_family(lebesgue_input, 20)
    for n, s in enumerate(fam.s_coeffs):
        expect = np.zeros(n + 1, dtype=complex)
        expect[-1] = 1.0
        np.testing.assert_allclose(s, expect, atol=1e-14)


def test_verblunsky_routes_agree(complex_input):
    fam = oc.szego_family(complex_input, 40)
    other = np.array([-np.conj(fam.s_coeffs[n][0]) for n in range(1, 41)])
    assert np.max(np.abs(fam.alpha - other)) < 1e-10


def test_alpha_inside_disk_random_inputs():
    rng = np.random.default_rng(42)
    worst = 0.0
    for _ in range(200):
        inp = random_chain_input(rng, 10, c_scale=2.0)
        alpha = oc.verblunsky(inp, oc.minimal_parameters(inp.d), 10)
        worst = max(worst, float(np.max(np.abs(alpha))))
    assert worst < 1.0


def test_alpha_inside_disk_near_unit_mass():
    # t -> 1 drives d_1 -> 0 and alpha_0 -> 1, always staying inside the disk
    p = oc.ExampleParams(0.5, 1.0, 0.999)
    inp = oc.example_sequences(p, 40)
    alpha = oc.verblunsky(inp, oc.minimal_parameters(inp.d), 40)
    assert np.max(np.abs(alpha)) < 1.0
    assert abs(alpha[0]) > 0.99


def test_szego_recurrence_residuals(complex_input):
    fam = oc.szego_family(complex_input, 30)
    for n in range(1, 31):
        assert oc.szego_recurrence_residual(fam, n) < 1e-11


def test_szego_recurrence_first_step(constant_input):
    # S_1 = z - conj(alpha_0) exactly, since S_0* = 1
    fam = oc.szego_family(constant_input, 3)
    np.testing.assert_allclose(
        fam.s_coeffs[1], [-np.conj(fam.alpha[0]), 1.0], atol=1e-15
    )
    assert oc.szego_recurrence_residual(fam, 1) < 1e-15


def test_szego_recurrence_lebesgue_exact(lebesgue_input):
    fam = oc.szego_family(lebesgue_input, 12)
    for n in range(1, 13):
        assert oc.szego_recurrence_residual(fam, n) < 1e-15


def test_gram_orthogonality(complex_input):
    table = oc.moment_table(complex_input, 30)
    fam = oc.szego_family(complex_input, 30)
    gram = oc.gram_orthogonality(fam, table, 30)
    diag = np.real(np.diag(gram))
    assert np.all(diag > 0)
    assert gram[0, 0] == pytest.approx(1.0)  # <S_0, S_0> = mu_0
    off = np.abs(gram - np.diag(np.diag(gram)))
    assert np.max(off / np.sqrt(np.outer(diag, diag))) < 1e-9
    # norms shrink: diag_n = prod (1 - |alpha_k|^2) is decreasing
    assert np.all(np.diff(diag) < 1e-12)


def test_gram_first_column_frozen(constant_input):
    table = oc.moment_table(constant_input, 8)
    fam = oc.szego_family(constant_input, 4)
    gram = oc.gram_orthogonality(fam, table, 4)
    # <S_1, S_0> = mu_1 - 1/2 = 0 for this family
    assert abs(gram[1, 0]) < 1e-14
    assert abs(gram[0, 1]) < 1e-14


def test_gram_requires_filled_table(constant_input):
    frag = oc.nu_moments(constant_input, 8)
    fam = oc.szego_family(constant_input, 4)
    with pytest.raises(oc.DomainError):
        oc.gram_orthogonality(fam, frag, 4)


def test_szego_polynomials_bounds(constant_input):
    with pytest.raises(oc.DomainError):
        oc.szego_polynomials(constant_input, np.zeros(2), 5)  # params too short
    with pytest.raises(oc.DomainError):
        oc.szego_family(constant_input, 80)
