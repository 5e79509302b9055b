"""Unit-circle zeros of R_n via the real functions G_n on [-1, 1].

With x = cos(theta/2) and z = e^{i theta} (branch z^{1/2} = e^{i theta/2},
theta in [0, 2pi), so sqrt(1 - x^2) = sin(theta/2) >= 0), the rescaled
functions

    G_n(x) = (4 z)^{-n/2} R_n(z)

are real on [-1, 1] and satisfy
G_{n+1} = (x - c_{n+1} sqrt(1 - x^2)) G_n - d_{n+1} G_{n-1}.  The zeros of
G_{n+1} strictly interlace those of G_n, so each level's roots are bracketed
by the previous level's roots together with the endpoints +-1.  Bisection on
those brackets followed by a single guarded Newton step makes the zero sets
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BracketFailure, DomainError, IdentityViolation, PositivityViolation
from .recurrence import RecurrenceInput, eval_R_Q

DEFAULT_X_TOL = 1e-13


@dataclass(frozen=True)
class ZeroSet:
    """Zeros of R_n: x (strictly decreasing, zeros of G_n), theta = 2 arccos x
    (strictly increasing in (0, 2pi)) and z = exp(i theta)."""

    n: int
    x: np.ndarray
    theta: np.ndarray
    z: np.ndarray


@dataclass(frozen=True)
class WronskianCheck:
    n: int
    W_at_roots: np.ndarray
    V_identity_residual: float


def eval_G(inp: RecurrenceInput, n: int, x):
    """(G_n(x), G_n'(x)) on [-1, 1], vectorized over x.

    At x = +-1 the derivative is infinite whenever the corresponding c_k is
    nonzero (the sqrt term is not differentiable there); the G values
    themselves are always finite.
    """
    if n < 0 or n > inp.N:
        raise DomainError(f"n must be in 0..{inp.N}")
    x = np.asarray(x, dtype=float)
    if np.any(x < -1.0) or np.any(x > 1.0):
        raise DomainError("x must lie in [-1, 1]")
    s = np.sqrt(np.maximum(1.0 - x * x, 0.0))
    g_prev = np.ones_like(x)
    dg_prev = np.zeros_like(x)
    if n == 0:
        return g_prev, dg_prev
    c, d = inp.c, inp.d
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        ds = np.where(s > 0.0, x / s, np.inf)
        g_cur = x - c[0] * s
        dg_cur = 1.0 + c[0] * ds if c[0] != 0.0 else np.ones_like(x)
        for k in range(1, n):
            a = x - c[k] * s
            da = 1.0 + c[k] * ds if c[k] != 0.0 else 1.0
            g_next = a * g_cur - d[k] * g_prev
            dg_next = da * g_cur + a * dg_cur - d[k] * dg_prev
            g_prev, g_cur = g_cur, g_next
            dg_prev, dg_cur = dg_cur, dg_next
    return g_cur, dg_cur


def zero_sets(inp: RecurrenceInput, n: int, tol: float = DEFAULT_X_TOL) -> list[ZeroSet]:
    """ZeroSets for levels 1..n, built inductively from the interlacing."""
    if n < 1 or n > inp.N:
        raise DomainError(f"n must be in 1..{inp.N}")
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    out = []
    prev = np.empty(0)
    for level in range(1, n + 1):
        pts = np.concatenate(([1.0], prev, [-1.0]))  # strictly decreasing
        hi, lo = pts[:-1], pts[1:]
        g_lo, _ = eval_G(inp, level, lo)
        g_hi, _ = eval_G(inp, level, hi)
        bad = np.sign(g_lo) * np.sign(g_hi) >= 0
        if np.any(bad):
            raise BracketFailure(level, int(np.argmax(bad)) + 1)
        while np.max(hi - lo) > tol:
            mid = 0.5 * (lo + hi)
            g_mid, _ = eval_G(inp, level, mid)
            left = np.sign(g_mid) == np.sign(g_lo)
            lo = np.where(left, mid, lo)
            g_lo = np.where(left, g_mid, g_lo)
            hi = np.where(left, hi, mid)
        x = 0.5 * (lo + hi)
        g, dg = eval_G(inp, level, x)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_newton = x - g / dg
        accept = np.isfinite(x_newton) & (x_newton > lo) & (x_newton < hi)
        x = np.where(accept, x_newton, x)
        theta = 2.0 * np.arccos(x)
        out.append(ZeroSet(level, x, theta, np.exp(1j * theta)))
        prev = x
    return out


def zeros(inp: RecurrenceInput, n: int, tol: float = DEFAULT_X_TOL) -> ZeroSet:
    """The level-n ZeroSet (levels below are computed as scaffolding)."""
    return zero_sets(inp, n, tol)[-1]


def wronskian_check(
    inp: RecurrenceInput,
    n: int,
    zeroset: ZeroSet,
    tol: float = 1e-9,
) -> WronskianCheck:
    """Evaluate W_n = G_n' G_{n-1} at the roots of G_n and the V/W identity.

    Checks W_n(x_{n,j}) > 0 and, when d_{n+1} is available, the scaling
    W_{n+1}(x_{n,j}) = d_{n+1} W_n(x_{n,j}) > 0.  The returned residual is
    the worst relative error of

        z^{-(n-2)} / (z - 1) * V_n(z) = 2^{2n-3} W_n(x)

    over the roots, where V_n = R_n' R_{n-1} - R_{n-1}' R_n.
    """
    if zeroset.n != n:
        raise DomainError("zeroset level does not match n")
    x = zeroset.x
    _, dg_n = eval_G(inp, n, x)
    g_nm1, _ = eval_G(inp, n - 1, x)
    w = dg_n * g_nm1
    if np.any(w <= 0.0):
        raise PositivityViolation(f"W_{n} not positive at some root (min {w.min():.3e})")
    if n < inp.N:
        g_np1, _ = eval_G(inp, n + 1, x)
        w_next = -dg_n * g_np1
        if np.any(w_next <= 0.0):
            raise PositivityViolation(f"W_{n + 1} not positive at a root of G_{n}")
        scale_err = np.max(np.abs(w_next - inp.d[n] * w) / (inp.d[n] * w))
        if scale_err > tol:
            raise IdentityViolation(
                f"W_{n + 1} = d_{n + 1} W_{n} fails: residual {scale_err:.3e}"
            )
    z = zeroset.z
    r_n, dr_n, _, _ = eval_R_Q(inp, n, z)
    r_nm1, dr_nm1, _, _ = eval_R_Q(inp, n - 1, z)
    v = dr_n * r_nm1 - dr_nm1 * r_n
    lhs = z ** (-(n - 2)) / (z - 1.0) * v
    rhs = 2.0 ** (2 * n - 3) * w
    residual = float(np.max(np.abs(lhs - rhs) / np.abs(rhs)))
    return WronskianCheck(n, w, residual)
