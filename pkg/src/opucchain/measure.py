"""Moment tables and discrete quadrature measures on the unit circle.

The rational functions Q_n/R_n correspond, at the origin, to a formal series
whose coefficients define the auxiliary moments nu_k; summing them yields the
probability-measure moments mu_k.  The partial-fraction decomposition of
(R_n - Q_n) / ((z - 1) R_n) carries positive weights at z = 1 and at the
zeros of R_n, giving an (2n+1)-moment-exact discrete approximant of the
underlying measure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chains import minimal_parameters
from .errors import (
    DomainError,
    MonotonicityViolation,
    NormalizationViolation,
    PositivityViolation,
    PrecisionLoss,
    RecursionViolation,
    RelationViolation,
)
from .recurrence import RecurrenceInput, eval_R_Q, gamma_sequence, generate_Q, generate_R
from .zeros import ZeroSet, zeros


@dataclass(frozen=True)
class MomentTable:
    """Doubly indexed moments nu_k, mu_k for k in [-K, K].

    mu_values is None on the fragment returned by nu_moments; mu_moments
    completes it.
    """

    K: int
    nu_values: np.ndarray
    mu_values: np.ndarray | None = None

    def _get(self, values, k):
        if abs(k) > self.K:
            raise DomainError(f"index {k} outside [-{self.K}, {self.K}]")
        return complex(values[k + self.K])

    def nu(self, k: int) -> complex:
        return self._get(self.nu_values, k)

    def mu(self, k: int) -> complex:
        if self.mu_values is None:
            raise DomainError("mu not filled; call mu_moments first")
        return self._get(self.mu_values, k)


@dataclass(frozen=True)
class DiscreteMeasure:
    """Nodes theta_{n,j} in (0, 2pi) with weights lambda_{n,j}, plus the mass
    at theta = 0 (z = 1)."""

    n: int
    theta0_weight: float
    nodes: np.ndarray
    weights: np.ndarray

    def moment(self, k: int) -> complex:
        """Integral of zeta^k against the step measure (equals mu_{-k} for |k| <= n)."""
        return self.theta0_weight + np.sum(self.weights * np.exp(1j * k * self.nodes))


def _series_quotient(q, r, m):
    """First m Taylor coefficients of Q/R about the origin (r[0] != 0)."""
    e = np.zeros(m, dtype=complex)
    r0 = r[0]
    e[0] = (q[0] if q.size else 0.0) / r0
    for k in range(1, m):
        acc = q[k] if k < q.size else 0.0
        jmax = min(k, r.size - 1)
        acc -= np.dot(r[1 : jmax + 1], e[k - jmax : k][::-1])
        e[k] = acc / r0
    return e


def nu_moments(inp: RecurrenceInput, K: int, guard: float = 1e-9) -> MomentTable:
    """MomentTable fragment with nu filled on [-K, K].

    nu_0 = 2 d_1 / (1 + i c_1); nu_1..nu_{K+1} are the negated Taylor
    coefficients of Q_M / R_M about the origin with M = K + 2 (the
    correspondence makes the first M coefficients exact); negative indices
    come from the reflection nu_{-k} = -conj(nu_{k+1}).
    """
    if K < 0:
        raise DomainError("K must be >= 0")
    M = K + 2
    if M > inp.N:
        raise DomainError(f"need K + 2 <= N = {inp.N}")
    r = generate_R(inp, M)
    q = generate_Q(inp, M)
    e = _series_quotient(q, r, M)
    recon = np.convolve(e, r)[:M]
    target = np.zeros(M, dtype=complex)
    target[: q.size] = q
    residual = float(np.max(np.abs(recon - target)) / max(1.0, float(np.max(np.abs(q)))))
    if residual > guard:
        raise PrecisionLoss(f"series-division residual {residual:.3e} exceeds {guard:.1e}")
    nu = np.zeros(2 * K + 1, dtype=complex)
    nu[K] = 2.0 * inp.d[0] / (1.0 + 1j * inp.c[0])
    for k in range(1, K + 1):
        nu[K + k] = -e[k - 1]
        nu[K - k] = np.conj(e[k])  # nu_{-k} = -conj(nu_{k+1})
    return MomentTable(K, nu)


def mu_moments(table: MomentTable, tol: float = 1e-12) -> MomentTable:
    """Complete a nu fragment with the mu moments and verify the functional
    relations mu_{-k} = conj(mu_k) and nu_{-k} = mu_{-k} - mu_{-k-1}."""
    K = table.K
    nu = table.nu_values
    mu = np.zeros(2 * K + 1, dtype=complex)
    mu[K] = 1.0
    for n in range(1, K + 1):
        mu[K + n] = mu[K + n - 1] + nu[K + n]
        mu[K - n] = mu[K - n + 1] - nu[K - n + 1]
    sym = np.max(np.abs(mu[::-1] - np.conj(mu)))
    if sym > tol:
        raise RelationViolation(f"mu conjugate symmetry off by {sym:.3e}")
    diff = np.max(np.abs(nu[1:] - (mu[1:] - mu[:-1])))
    if diff > tol:
        raise RelationViolation(f"nu_{{-k}} = mu_{{-k}} - mu_{{-k-1}} off by {diff:.3e}")
    return MomentTable(K, nu, mu)


def moment_table(inp: RecurrenceInput, K: int) -> MomentTable:
    """Convenience: nu_moments followed by mu_moments."""
    return mu_moments(nu_moments(inp, K))


def quadrature(
    inp: RecurrenceInput,
    n: int,
    zero_set: ZeroSet | None = None,
    tol: float = 1e-12,
) -> DiscreteMeasure:
    """Discrete measure psi_n with mass 1 - Q_n(1)/R_n(1) at z = 1 and
    weights Q_n(z_{n,j}) / ((1 - z_{n,j}) R_n'(z_{n,j})) at the zeros of R_n.

    Positivity of every weight and total mass 1 are enforced.
    """
    zs = zero_set if zero_set is not None else zeros(inp, n)
    if zs.n != n:
        raise DomainError("zero_set level does not match n")
    r1, _, q1, _ = eval_R_Q(inp, n, np.asarray(1.0 + 0j))
    lam0 = 1.0 - (q1 / r1).real
    rv, drv, qv, _ = eval_R_Q(inp, n, zs.z)
    lam = qv / ((1.0 - zs.z) * drv)
    weights = lam.real
    if np.max(np.abs(lam.imag)) > 1e-9 * max(1.0, np.max(np.abs(weights))):
        raise PositivityViolation("quadrature weights have non-negligible imaginary part")
    if lam0 <= 0.0 or np.any(weights <= 0.0):
        raise PositivityViolation("non-positive quadrature weight")
    total = lam0 + float(np.sum(weights))
    if abs(total - 1.0) > max(tol, 64 * np.finfo(float).eps * n):
        raise NormalizationViolation(f"weights sum to {total!r}, not 1")
    return DiscreteMeasure(n, float(lam0), zs.theta, weights)


def convergents_at_one(
    inp: RecurrenceInput,
    n_max: int,
    M0: float | None = None,
) -> np.ndarray:
    """The strictly increasing sequence Q_n(1)/R_n(1), n = 1..n_max.

    Evaluated by the value recurrence at z = 1 with per-step renormalization
    (safe for n_max far beyond coefficient range).  When M0 is supplied the
    upper bound Q_n(1)/R_n(1) < 1 - M0 is verified as well.
    """
    if n_max < 1 or n_max > inp.N:
        raise DomainError(f"n_max must be in 1..{inp.N}")
    d = inp.d.tolist()
    out = np.empty(n_max)
    r_prev, r_cur = 1.0, 2.0
    q_prev, q_cur = 0.0, 2.0 * d[0]
    out[0] = q_cur / r_cur
    for k in range(1, n_max):
        fd = 4.0 * d[k]
        r_next = 2.0 * r_cur - fd * r_prev
        q_next = 2.0 * q_cur - fd * q_prev
        scale = 1.0 / r_next
        out[k] = q_next * scale
        r_prev, r_cur = r_cur * scale, 1.0
        q_prev, q_cur = q_cur * scale, q_next * scale
    steps = np.diff(out)
    if np.any(steps <= 0.0):
        bad = int(np.argmax(steps <= 0.0)) + 2
        raise MonotonicityViolation(f"Q_n(1)/R_n(1) not increasing at n = {bad}")
    if M0 is not None and np.any(out >= 1.0 - M0 + 1e-9):
        raise MonotonicityViolation("convergents exceed the bound 1 - M_0")
    return out


def hat_gamma_check(
    inp: RecurrenceInput,
    table: MomentTable,
    n_max: int,
    tol: float = 1e-10,
) -> np.ndarray:
    """hat-gamma_n = sum_j r_{n,j} mu_{-j} for n = 0..n_max, verified against
    the recursion hat-gamma_n = 2 (1 - m_n) hat-gamma_{n-1}."""
    if table.mu_values is None:
        raise DomainError("moment table must have mu filled")
    if n_max > table.K:
        raise DomainError("need K >= n_max moments")
    m = minimal_parameters(inp.d)
    K = table.K
    mu_neg = table.mu_values[K::-1]  # mu_0, mu_{-1}, ..., mu_{-K}
    out = np.empty(n_max + 1, dtype=complex)
    out[0] = 1.0
    for n in range(1, n_max + 1):
        r = generate_R(inp, n)
        val = complex(np.dot(r, mu_neg[: n + 1]))
        out[n] = val
        expected = 2.0 * (1.0 - m[n]) * out[n - 1]
        if abs(val - expected) > tol * abs(val):
            raise RecursionViolation(
                f"hat-gamma recursion off at n = {n}: {abs(val - expected):.3e}"
            )
    return out


def verify_gamma_identity(inp: RecurrenceInput, n_max: int) -> float:
    """Worst relative error of gamma_{n-1} = (1/2) prod(4 d_k) / r_{n,n}
    against the gamma recursion values (diagnostic helper)."""
    g = gamma_sequence(inp, n_max - 1)
    worst = 0.0
    prod = 1.0
    lead = 1.0 + 0j
    for n in range(1, n_max + 1):
        prod *= 4.0 * inp.d[n - 1]
        lead *= 1.0 + 1j * inp.c[n - 1]
        direct = 0.5 * prod / lead
        worst = max(worst, abs(g[n - 1] - direct) / abs(direct))
    return worst
