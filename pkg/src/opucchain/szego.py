"""Monic orthogonal polynomials on the unit circle and Verblunsky coefficients.

The monic OPUC of the induced probability measure are

    S_n(z) * prod_{k<=n} (1 + i c_k) = R_n(z) - 2 (1 - m_n) R_{n-1}(z)

with {m_n} the minimal parameter sequence of {d_n}.  Their Verblunsky
coefficients admit the closed form

    alpha_{n-1} = (1 - 2 m_n - i c_n) / (1 + i c_n) * prod_{k<=n} (1 + i c_k)/(1 - i c_k),

computed with a unit-modulus running product; the alternative route
alpha_{n-1} = -conj(S_n(0)) is used as a cross-check.  Orthogonality is
verified through the Toeplitz moment form <zeta^j, zeta^k> = mu_{j-k}, which
is algebraically exact (unlike the finitely-exact quadrature measures).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chains import ChainParams, minimal_parameters
from .errors import DomainError, MismatchError, OrthogonalityViolation
from .measure import MomentTable
from .recurrence import COEFF_DEGREE_CAP, RecurrenceInput, generate_R


@dataclass(frozen=True)
class SzegoFamily:
    """Monic OPUC coefficient vectors S_0..S_n and alpha_0..alpha_{n-1}."""

    s_coeffs: tuple
    alpha: np.ndarray

    @property
    def n_max(self) -> int:
        return len(self.s_coeffs) - 1


def _minimal(params) -> np.ndarray:
    if isinstance(params, ChainParams):
        return params.m
    return np.asarray(params, dtype=float)


def szego_polynomials(inp: RecurrenceInput, params, n_max: int) -> list[np.ndarray]:
    """Coefficient vectors of S_0..S_{n_max} (ascending powers, monic).

    `params` is a ChainParams or the minimal-parameter array m_0..m_N.
    """
    m = _minimal(params)
    if n_max < 0 or n_max > min(inp.N, COEFF_DEGREE_CAP):
        raise DomainError(f"n_max must be in 0..{min(inp.N, COEFF_DEGREE_CAP)}")
    if m.size < n_max + 1:
        raise DomainError("need minimal parameters up to n_max")
    out = [np.array([1.0 + 0j])]
    r_prev = np.array([1.0 + 0j])
    r_cur = np.array([1.0 - 1j * inp.c[0], 1.0 + 1j * inp.c[0]])
    lead = 1.0 + 0j
    for n in range(1, n_max + 1):
        lead *= 1.0 + 1j * inp.c[n - 1]
        s = r_cur.copy()
        s[: r_prev.size] -= 2.0 * (1.0 - m[n]) * r_prev
        out.append(s / lead)
        if n < n_max:
            a1 = 1.0 + 1j * inp.c[n]
            a0 = 1.0 - 1j * inp.c[n]
            nxt = np.zeros(r_cur.size + 1, dtype=complex)
            nxt[1:] = a1 * r_cur
            nxt[:-1] += a0 * r_cur
            nxt[1 : r_prev.size + 1] -= 4.0 * inp.d[n] * r_prev
            r_prev, r_cur = r_cur, nxt
    return out


def verblunsky(
    inp: RecurrenceInput,
    params,
    n_max: int,
    cross_check_tol: float = 1e-10,
) -> np.ndarray:
    """alpha_0..alpha_{n_max-1} by the closed form.

    When n_max is within coefficient range the values are cross-checked
    against -conj(S_n(0)); disagreement raises MismatchError.
    """
    m = _minimal(params)
    if n_max < 1 or n_max > inp.N:
        raise DomainError(f"n_max must be in 1..{inp.N}")
    if m.size < n_max + 1:
        raise DomainError("need minimal parameters up to n_max")
    alpha = np.empty(n_max, dtype=complex)
    u = 1.0 + 0j
    for n in range(1, n_max + 1):
        cn = inp.c[n - 1]
        u *= (1.0 + 1j * cn) / (1.0 - 1j * cn)
        alpha[n - 1] = (1.0 - 2.0 * m[n] - 1j * cn) / (1.0 + 1j * cn) * u
    if n_max <= COEFF_DEGREE_CAP:
        s = szego_polynomials(inp, m, n_max)
        other = np.array([-np.conj(s[n][0]) for n in range(1, n_max + 1)])
        worst = float(np.max(np.abs(alpha - other)))
        if worst > cross_check_tol:
            raise MismatchError(
                f"closed-form and S_n(0) Verblunsky routes differ by {worst:.3e}"
            )
    return alpha


def szego_family(inp: RecurrenceInput, n_max: int, params=None) -> SzegoFamily:
    """Bundle S_0..S_{n_max} with alpha_0..alpha_{n_max-1}."""
    m = _minimal(params) if params is not None else minimal_parameters(inp.d)
    return SzegoFamily(
        tuple(szego_polynomials(inp, m, n_max)),
        verblunsky(inp, m, n_max) if n_max >= 1 else np.empty(0, dtype=complex),
    )


def _reflect(coeffs: np.ndarray) -> np.ndarray:
    """Reciprocal polynomial P*(z) = z^deg conj(P(1/conj(z)))."""
    return np.conj(coeffs[::-1])


def szego_recurrence_residual(family: SzegoFamily, n: int) -> float:
    """Worst coefficientwise relative residual of the two Szego relations

        S_n = z S_{n-1} - conj(alpha_{n-1}) S*_{n-1}
        S_n = (1 - |alpha_{n-1}|^2) z S_{n-1} - conj(alpha_{n-1}) S_n*

    at level n."""
    if n < 1 or n > family.n_max:
        raise DomainError(f"n must be in 1..{family.n_max}")
    s_n = family.s_coeffs[n]
    s_prev = family.s_coeffs[n - 1]
    a = family.alpha[n - 1]
    scale = float(np.max(np.abs(s_n)))
    z_s_prev = np.concatenate(([0.0 + 0j], s_prev))
    first = z_s_prev - np.conj(a) * np.concatenate((_reflect(s_prev), [0.0 + 0j]))
    res1 = float(np.max(np.abs(s_n - first))) / scale
    second = (1.0 - abs(a) ** 2) * z_s_prev - np.conj(a) * _reflect(s_n)
    res2 = float(np.max(np.abs(s_n - second))) / scale
    return max(res1, res2)


def gram_orthogonality(
    family: SzegoFamily,
    table: MomentTable,
    n_max: int,
    tol: float = 1e-9,
) -> np.ndarray:
    """Gram matrix G[m, n] = <S_m, S_n> under <zeta^j, zeta^k> = mu_{j-k}.

    The diagonal must be real and positive and every off-diagonal entry below
    tol * sqrt(G[m,m] G[n,n]); violations raise OrthogonalityViolation.
    """
    if n_max > family.n_max:
        raise DomainError("family too short for requested n_max")
    if table.mu_values is None:
        raise DomainError("moment table must have mu filled")
    if table.K < n_max:
        raise DomainError("need K >= n_max moments")
    K = table.K
    size = n_max + 1
    smat = np.zeros((size, size), dtype=complex)
    for i in range(size):
        smat[i, : i + 1] = family.s_coeffs[i]
    jj, kk = np.meshgrid(np.arange(size), np.arange(size), indexing="ij")
    toeplitz = table.mu_values[jj - kk + K]
    gram = np.conj(smat) @ toeplitz @ smat.T
    diag = np.real(np.diag(gram))
    if np.any(diag <= 0.0) or np.max(np.abs(np.imag(np.diag(gram)))) > tol * np.min(diag):
        raise OrthogonalityViolation("Gram diagonal is not positive real")
    scale = np.sqrt(np.outer(diag, diag))
    off = np.abs(gram - np.diag(np.diag(gram))) / scale
    worst = float(np.max(off))
    if worst > tol:
        raise OrthogonalityViolation(f"off-diagonal Gram mass {worst:.3e} exceeds {tol:.1e}")
    return gram
