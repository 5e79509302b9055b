"""Closed-form ground truth for the Gauss-hypergeometric example family.

The family is parameterized by lam > -1/2, eta real and t in [0, 1), with
b = lam + i eta:

    c_n = eta / (lam + n),
    d_1 = (1/2) (2 lam + 1)/(lam + 1) (1 - t),
    d_{n+1} = (1/4) n (2 lam + n + 1) / ((lam + n)(lam + n + 1)).

Everything the pipeline computes numerically has a closed form here:
maximal parameters, R_n as a terminating 2F1, the moments nu_n / mu_n as
Pochhammer ratios, the absolutely continuous weight, and (for t = 0) the
monic OPUC themselves.  Pochhammer symbols at negative index follow the
gamma-ratio convention, implemented by product inversion so the rational
test cases stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from mpmath import mp, mpc
from scipy.special import gamma as _gamma

from .errors import DomainError, PoleError
from .recurrence import RecurrenceInput

_F21_DPS = 40  # working digits for the terminating sum (alternating terms
               # cancel up to ~8 decimal digits at |x| ~ 2 in double)

_TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class ExampleParams:
    """Family parameters (lam, eta, t); b = lam + i eta."""

    lam: float
    eta: float
    t: float

    def __post_init__(self):
        if not self.lam > -0.5:
            raise DomainError("lam must exceed -1/2")
        if not 0.0 <= self.t < 1.0:
            raise DomainError("t must lie in [0, 1)")

    @property
    def b(self) -> complex:
        return complex(self.lam, self.eta)


def pochhammer(a: complex, n: int) -> complex:
    """(a)_n for signed integer n, with (a)_{-m} = 1 / prod_{k=1..m} (a - k)."""
    if n >= 0:
        v = 1.0 + 0j
        for k in range(n):
            v *= a + k
        return v
    v = 1.0 + 0j
    for k in range(1, -n + 1):
        f = a - k
        if f == 0:
            raise PoleError(f"({a})_{n} has a vanishing factor at k = {k}")
        v *= f
    return 1.0 / v


def pochhammer_ratio(a: complex, c: complex, n: int) -> complex:
    """(a)_n / (c)_n for signed integer n, evaluated factor by factor so
    zeros in the numerator are harmless."""
    v = 1.0 + 0j
    if n >= 0:
        for k in range(n):
            den = c + k
            if den == 0:
                raise PoleError(f"({c})_{n} vanishes at k = {k}")
            v *= (a + k) / den
        return v
    for k in range(1, -n + 1):
        den = a - k
        if den == 0:
            raise PoleError(f"({a})_{n} vanishes at k = {k}")
        v *= (c - k) / den
    return v


def f21_terminating(n: int, b: complex, c_param: complex, x):
    """Terminating Gauss series 2F1(-n, b + 1; c_param; x).

    Term-by-term accumulation of the n + 1 terms; `x` may be a scalar or
    array.  (c_param)_k must not vanish within the summation range.  The
    alternating terms cancel heavily for |x| near 2, so the sum is carried in
    extended precision and rounded once at the end.
    """
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    b = complex(b)
    c_param = complex(c_param)
    for k in range(n):
        if c_param + k == 0:
            raise PoleError(f"({c_param})_{k + 1} vanishes in the 2F1 sum")
    x = np.asarray(x, dtype=complex)
    flat = x.ravel()
    out = np.empty(flat.shape, dtype=complex)
    with mp.workdps(_F21_DPS):
        bb = mpc(b)
        cc = mpc(c_param)
        for i, xi in enumerate(flat):
            xm = mpc(xi)
            total = term = mpc(1)
            for k in range(n):
                term *= (-n + k) * (bb + 1 + k) * xm / ((cc + k) * (k + 1))
                total += term
            out[i] = complex(total)
    out = out.reshape(x.shape)
    return out if out.ndim else complex(out)


def example_sequences(p: ExampleParams, N: int) -> RecurrenceInput:
    """The (c, d) prefix of length N for the family."""
    if N < 1:
        raise DomainError("N must be >= 1")
    n = np.arange(1, N + 1, dtype=float)
    c = p.eta / (p.lam + n)
    d = np.empty(N)
    d[0] = 0.5 * (2 * p.lam + 1) / (p.lam + 1) * (1.0 - p.t)
    k = n[: N - 1]
    d[1:] = 0.25 * k * (2 * p.lam + k + 1) / ((p.lam + k) * (p.lam + k + 1))
    return RecurrenceInput(c, d)


def example_maximal(p: ExampleParams, N: int) -> np.ndarray:
    """Closed-form maximal parameters M_0 = t, M_n = (2 lam + n)/(2 (lam + n))."""
    M = np.empty(N + 1)
    M[0] = p.t
    n = np.arange(1, N + 1, dtype=float)
    M[1:] = 0.5 * (2 * p.lam + n) / (p.lam + n)
    return M


def example_R(p: ExampleParams, n: int, z):
    """Closed form R_n(z) = ((2 lam + 2)_n / (lam + 1)_n) 2F1(-n, b+1; 2 lam + 2; 1 - z)."""
    pref = pochhammer_ratio(2 * p.lam + 2, p.lam + 1, n).real
    return pref * f21_terminating(n, p.b, 2 * p.lam + 2, 1.0 - np.asarray(z, dtype=complex))


def example_nu(p: ExampleParams, n: int) -> complex:
    """nu_n = ((2 lam + 1)/(b + 1)) ((-b-1)_n / (conj(b)+1)_n) (1 - t), any integer n."""
    pref = (2 * p.lam + 1) / (p.b + 1)
    return pref * pochhammer_ratio(-p.b - 1, np.conj(p.b) + 1, n) * (1.0 - p.t)


def example_mu(p: ExampleParams, n: int) -> complex:
    """mu_n = t + (1 - t) (-b)_n / (conj(b)+1)_n for n >= 0; mu_{-n} = conj(mu_n)."""
    if n < 0:
        return np.conj(example_mu(p, -n))
    return p.t + (1.0 - p.t) * pochhammer_ratio(-p.b, np.conj(p.b) + 1, n)


def example_weight_density(p: ExampleParams, theta):
    """Density of the absolutely continuous part at theta in (0, 2 pi).

    The measure also carries the point mass t at theta = 0, reported
    separately by callers; the density integrates to 1 - t.
    """
    theta = np.asarray(theta, dtype=float)
    if np.any(theta <= 0.0) or np.any(theta >= _TWO_PI):
        raise DomainError("theta must lie strictly inside (0, 2 pi)")
    pref = (
        (1.0 - p.t)
        * 2.0 ** (2 * p.lam)
        * abs(_gamma(p.b + 1)) ** 2
        / (_TWO_PI * _gamma(2 * p.lam + 1))
    )
    vals = pref * np.exp((np.pi - theta) * p.eta) * np.sin(0.5 * theta) ** (2 * p.lam)
    return vals if vals.ndim else float(vals)


def example_S0(p: ExampleParams, n: int, z):
    """Closed-form monic OPUC for t = 0:
    S_n(z) = ((2 lam + 1)_n / (b + 1)_n) 2F1(-n, b+1; 2 lam + 1; 1 - z)."""
    if p.t != 0.0:
        raise DomainError("closed-form S_n requires t = 0")
    pref = pochhammer_ratio(2 * p.lam + 1, p.b + 1, n)
    return pref * f21_terminating(n, p.b, 2 * p.lam + 1, 1.0 - np.asarray(z, dtype=complex))
