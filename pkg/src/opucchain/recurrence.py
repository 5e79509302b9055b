"""Three-term recurrence engine for the polynomial pairs (R_n, Q_n).

Both families satisfy

    P_{n+1}(z) = [(1 + i c_{n+1}) z + (1 - i c_{n+1})] P_n(z) - 4 d_{n+1} z P_{n-1}(z)

with R_0 = 1, R_1 = (1 + i c_1) z + (1 - i c_1) and Q_0 = 0, Q_1 = 2 d_1.
R_n is self-inversive of degree n with leading coefficient prod(1 + i c_k);
Q_n is self-inversive of degree n - 1.  Coefficient vectors are exposed up to
degree COEFF_DEGREE_CAP; beyond that the recurrence-at-a-point evaluator is
the supported path (coefficients can grow like 2^n).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .chains import minimal_parameters
from .errors import DegreeTooLarge, DomainError, IdentityViolation

COEFF_DEGREE_CAP = 64


@dataclass(frozen=True)
class RecurrenceInput:
    """Validated pair of driving sequences (c_1..c_N real, d_1..d_N chain).

    Storage is zero-based: ``c[0]`` is c_1.  Construction runs the forward
    chain-parameter recursion on d, so any instance is guaranteed usable by
    the rest of the pipeline.
    """

    c: np.ndarray
    d: np.ndarray
    N: int = field(init=False)

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float)
        d = np.asarray(self.d, dtype=float)
        if c.ndim != 1 or d.ndim != 1 or c.size != d.size or c.size == 0:
            raise DomainError("c and d must be 1-d sequences of equal positive length")
        if not np.all(np.isfinite(c)) or not np.all(np.isfinite(d)):
            raise DomainError("c and d must be finite")
        minimal_parameters(d)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "N", int(c.size))

    @classmethod
    def constant(cls, d_value: float, c_value: float, N: int) -> "RecurrenceInput":
        """Constant family c_n = c_value, d_n = d_value."""
        return cls(np.full(N, float(c_value)), np.full(N, float(d_value)))


@dataclass(frozen=True)
class PolyPair:
    """Coefficient vectors of R_n (length n+1) and Q_n (length max(n, 1))."""

    degree: int
    r_coeffs: np.ndarray
    q_coeffs: np.ndarray


def _check_degree(inp: RecurrenceInput, n: int) -> None:
    if n < 0 or n > inp.N:
        raise DomainError(f"n must be in 0..{inp.N}")
    if n > COEFF_DEGREE_CAP:
        raise DegreeTooLarge(
            f"coefficient mode supports n <= {COEFF_DEGREE_CAP}; "
            "use eval_R_Q for pointwise values"
        )


def _coefficients(inp: RecurrenceInput, n: int, q_init: bool) -> np.ndarray:
    c, d = inp.c, inp.d
    if q_init:
        p_prev = np.array([0j])
        p_cur = np.array([2.0 * d[0] + 0j])
    else:
        p_prev = np.array([1.0 + 0j])
        p_cur = np.array([1.0 - 1j * c[0], 1.0 + 1j * c[0]])
    if n == 0:
        return p_prev
    for k in range(1, n):
        a1 = 1.0 + 1j * c[k]
        a0 = 1.0 - 1j * c[k]
        nxt = np.zeros(p_cur.size + 1, dtype=complex)
        nxt[1:] = a1 * p_cur
        nxt[:-1] += a0 * p_cur
        nxt[1 : p_prev.size + 1] -= 4.0 * d[k] * p_prev
        p_prev, p_cur = p_cur, nxt
    return p_cur


def generate_R(inp: RecurrenceInput, n: int) -> np.ndarray:
    """Coefficients of R_n in ascending powers (length n + 1)."""
    _check_degree(inp, n)
    return _coefficients(inp, n, q_init=False)


def generate_Q(inp: RecurrenceInput, n: int) -> np.ndarray:
    """Coefficients of Q_n in ascending powers (length n for n >= 1)."""
    _check_degree(inp, n)
    return _coefficients(inp, n, q_init=True)


def poly_pair(inp: RecurrenceInput, n: int) -> PolyPair:
    return PolyPair(n, generate_R(inp, n), generate_Q(inp, n))


def leading_coefficient(inp: RecurrenceInput, n: int) -> complex:
    """r_{n,n} = prod_{k<=n} (1 + i c_k); r_{0,0} = 1."""
    if n < 0 or n > inp.N:
        raise DomainError(f"n must be in 0..{inp.N}")
    return complex(np.prod(1.0 + 1j * inp.c[:n])) if n else 1.0 + 0j


def eval_R_Q(inp: RecurrenceInput, n: int, z):
    """Pointwise (R_n(z), R_n'(z), Q_n(z), Q_n'(z)) by running the recurrence.

    `z` may be a complex scalar or array; no coefficients are stored, so any
    n <= N is allowed (values themselves may overflow near 2^1024).
    Derivatives use the termwise-differentiated recurrence.
    """
    if n < 0 or n > inp.N:
        raise DomainError(f"n must be in 0..{inp.N}")
    z = np.asarray(z, dtype=complex)
    one = np.ones_like(z)
    zero = np.zeros_like(z)
    if n == 0:
        return one, zero, zero.copy(), zero.copy()
    c, d = inp.c, inp.d
    rp, drp = one, zero
    rc = (1.0 + 1j * c[0]) * z + (1.0 - 1j * c[0])
    drc = np.full_like(z, 1.0 + 1j * c[0])
    qp, dqp = zero.copy(), zero.copy()
    qc = np.full_like(z, 2.0 * d[0])
    dqc = np.zeros_like(z)
    for k in range(1, n):
        a = (1.0 + 1j * c[k]) * z + (1.0 - 1j * c[k])
        da = 1.0 + 1j * c[k]
        fd = 4.0 * d[k]
        rn = a * rc - fd * z * rp
        drn = da * rc + a * drc - fd * (rp + z * drp)
        qn = a * qc - fd * z * qp
        dqn = da * qc + a * dqc - fd * (qp + z * dqp)
        rp, rc, drp, drc = rc, rn, drc, drn
        qp, qc, dqp, dqc = qc, qn, dqc, dqn
    return rc, drc, qc, dqc


def determinant_U(inp: RecurrenceInput, n: int, tol: float = 1e-10) -> np.ndarray:
    """Coefficients of U_n = Q_n R_{n-1} - Q_{n-1} R_n (degree n - 1).

    The result is verified against the closed monomial form
    (1/2) prod_{k<=n} (4 d_k) z^{n-1}; IdentityViolation signals breakdown.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    _check_degree(inp, n)
    a = np.convolve(generate_Q(inp, n), generate_R(inp, n - 1))
    b = np.convolve(generate_Q(inp, n - 1), generate_R(inp, n))
    u = np.zeros(max(a.size, b.size, n), dtype=complex)
    u[: a.size] += a
    u[: b.size] -= b
    expected = 0.5 * np.prod(4.0 * inp.d[:n])
    target = np.zeros_like(u)
    target[n - 1] = expected
    err = np.max(np.abs(u - target)) / expected
    if err > tol:
        raise IdentityViolation(
            f"determinant formula residual {err:.3e} exceeds {tol:.1e} at n={n}"
        )
    return u[:n]


def gamma_sequence(inp: RecurrenceInput, n_max: int) -> np.ndarray:
    """gamma_0..gamma_{n_max} with gamma_0 = 2 d_1 / (1 + i c_1) and
    gamma_n = 4 d_{n+1} / (1 + i c_{n+1}) * gamma_{n-1}."""
    if n_max < 0 or n_max > inp.N - 1:
        raise DomainError(f"n_max must be in 0..{inp.N - 1}")
    g = np.empty(n_max + 1, dtype=complex)
    g[0] = 2.0 * inp.d[0] / (1.0 + 1j * inp.c[0])
    for k in range(1, n_max + 1):
        g[k] = 4.0 * inp.d[k] / (1.0 + 1j * inp.c[k]) * g[k - 1]
    return g
