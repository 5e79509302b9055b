"""Positive chain sequences and their parameter sequences.

A sequence {d_n}_{n>=1} of positive numbers is a positive chain sequence when
it can be written d_n = (1 - g_{n-1}) g_n with g_0 in [0, 1) and g_n in (0, 1).
Among all such parameter sequences there is a minimal one {m_n} (m_0 = 0,
obtained by forward recursion) and a maximal one {M_n}.  Everything here works
on finite prefixes: "chain sequence" means "prefix admitting parameters".

The maximal parameters are approximated by running the backward recursion
g_{k-1} = 1 - d_k / g_k from the seed g_D = 1 at increasing depths D.  The
depth-D values are exact maximal parameters of the truncated sequence and
decrease monotonically toward the infinite-sequence values as D grows, but
only at an algebraic rate when d_n -> 1/4, so the doubling sequence of
approximants is extrapolated (iterated Aitken) and the result re-anchored
through the exact identity M_{n-1} = 1 - d_n / M_n.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import ChainViolation, DomainError, NoConvergence

DEFAULT_TOL = 1e-12
DEFAULT_DEPTH_CEILING = 1 << 22
_DEPTH_ENV = "OPUC_MAX_DEPTH"


@dataclass(frozen=True)
class ChainParams:
    """Parameter sequences of a positive chain-sequence prefix.

    Attributes
    ----------
    m : ndarray
        Minimal parameters m_0..m_N (m_0 = 0).
    M : ndarray
        Maximal-parameter estimates M_0..M_{n_out}.
    m_hat : ndarray
        Minimal parameters of the shifted sequence d_{n+1}, index 0..N-1.
    depth_used : int
        Largest backward-recursion depth that entered the estimate.
    tol_achieved : float
        Estimated uncertainty of the returned M values (inf when the prefix
        allowed no depth doubling, i.e. the truncated values are reported
        as-is).
    """

    m: np.ndarray
    M: np.ndarray
    m_hat: np.ndarray
    depth_used: int
    tol_achieved: float


def depth_ceiling(override: int | None = None) -> int:
    """Backward-recursion depth ceiling; OPUC_MAX_DEPTH overrides the default."""
    if override is not None:
        return int(override)
    env = os.environ.get(_DEPTH_ENV)
    if env:
        return int(env)
    return DEFAULT_DEPTH_CEILING


def minimal_parameters(d) -> np.ndarray:
    """Forward recursion m_0 = 0, m_n = d_n / (1 - m_{n-1}).

    Succeeding is exactly the statement that the prefix is a positive chain
    sequence; the first index where m_n leaves (0, 1) raises ChainViolation.
    """
    d = np.asarray(d, dtype=float)
    if d.ndim != 1 or d.size == 0:
        raise DomainError("d must be a non-empty 1-d sequence")
    m = np.empty(d.size + 1)
    m[0] = 0.0
    prev = 0.0
    for n, dn in enumerate(d.tolist(), start=1):
        if not dn > 0.0:
            raise ChainViolation(n, dn)
        cur = dn / (1.0 - prev)
        if not 0.0 < cur < 1.0:
            raise ChainViolation(n, cur)
        m[n] = cur
        prev = cur
    return m


def backward_maximal(d, depth: int) -> np.ndarray:
    """One backward pass g_{k-1} = 1 - d_k / g_k from g_depth = 1.

    Returns g_0..g_depth, the exact maximal parameters of the depth-truncated
    sequence.  For fixed position these values decrease monotonically as
    `depth` grows and bound the infinite-sequence maximal parameters from
    above.
    """
    d = np.asarray(d, dtype=float)
    if not 1 <= depth <= d.size:
        raise DomainError(f"depth must be in 1..{d.size}, got {depth}")
    out = np.empty(depth + 1)
    out[depth] = g = 1.0
    dl = d.tolist()
    for k in range(depth, 0, -1):
        g = 1.0 - dl[k - 1] / g
        out[k - 1] = g
    return out


def _tail_values(d_list, depth, keep):
    """g_0..g_keep of the depth-truncated backward pass (tail not stored)."""
    g = 1.0
    for k in range(depth, keep, -1):
        g = 1.0 - d_list[k - 1] / g
    out = np.empty(keep + 1)
    for k in range(keep, 0, -1):
        out[k] = g
        g = 1.0 - d_list[k - 1] / g
    out[0] = g
    return out


def _aitken(S):
    """Iterated Aitken extrapolation along axis 0 of S.

    Returns (best, est): per-position limit estimates together with the last
    accepted update size, used as an (optimistic) error indicator.
    """
    best = S[-1].copy()
    prev = best.copy()
    est = np.abs(S[-1] - S[-2])
    T = S
    with np.errstate(divide="ignore", invalid="ignore"):
        while T.shape[0] >= 3:
            d1 = T[1:] - T[:-1]
            d2 = d1[1:] - d1[:-1]
            U = T[2:] - np.where(d2 != 0.0, d1[1:] ** 2 / d2, 0.0)
            ok = np.isfinite(U[-1])
            delta = np.abs(U[-1] - prev)
            upd = ok & (delta < est)
            best = np.where(upd, U[-1], best)
            est = np.where(upd, delta, est)
            prev = np.where(ok, U[-1], prev)
            T = U
    return best, np.maximum(est, 16 * np.finfo(float).eps)


def maximal_parameters(
    d,
    tol: float = DEFAULT_TOL,
    n_out: int | None = None,
    ceiling: int | None = None,
) -> ChainParams:
    """Estimate the maximal parameter sequence M_0..M_{n_out}.

    The supplied prefix is consumed at depths N, N/2, N/4, ... and the
    resulting monotone approximants extrapolated per position; the final
    values are made exactly self-consistent (d_n = (1 - M_{n-1}) M_n to
    machine precision) by rebuilding from the best-converged position.

    Parameters
    ----------
    d : sequence of float
        Chain-sequence prefix d_1..d_N.  Longer prefixes give more depth
        range and hence better estimates of the infinite-sequence values.
    tol : float
        Requested stability of M_0 across depths.  When the raw doubling
        differences fall below `tol` early, extrapolation is skipped.
    n_out : int, optional
        Largest index of M to return (default min(N, 64)).
    ceiling : int, optional
        Depth ceiling override (else OPUC_MAX_DEPTH / 2**22).

    Raises
    ------
    NoConvergence
        Only when the configured depth ceiling truncated the available
        prefix and `tol` was still not met.  A short prefix alone never
        raises; `tol_achieved` reports the honest uncertainty instead.
    """
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    d = np.asarray(d, dtype=float)
    m = minimal_parameters(d)
    m_hat = minimal_parameters(d[1:]) if d.size > 1 else np.zeros(1)

    cap = depth_ceiling(ceiling)
    n_eff = min(d.size, cap)
    if n_out is None:
        n_out = min(n_eff, 64)
    if not 0 <= n_out <= n_eff:
        raise DomainError(f"n_out must be in 0..{n_eff}")

    d_list = d.tolist()
    floor = max(4 * (n_out + 1), 64)
    depths = []
    depth = n_eff
    while depth >= floor:
        depths.append(depth)
        depth //= 2
    depths.reverse()

    if len(depths) < 3:
        M = _tail_values(d_list, n_eff, n_out)
        return ChainParams(m, M, m_hat, n_eff, math.inf)

    rows = []
    raw_diff = math.inf
    for j, depth in enumerate(depths):
        rows.append(_tail_values(d_list, depth, n_out))
        if j >= 1:
            raw_diff = abs(rows[-1][0] - rows[-2][0])
            if raw_diff < tol:
                return ChainParams(m, rows[-1], m_hat, depth, raw_diff)

    S = np.array(rows)
    best, est = _aitken(S)
    anchor = int(np.argmin(est))
    M = best.copy()
    for n in range(anchor, 0, -1):
        M[n - 1] = 1.0 - d_list[n - 1] / M[n]
    for n in range(anchor + 1, n_out + 1):
        M[n] = d_list[n - 1] / (1.0 - M[n - 1])
    # M_0 = 0 is a legal boundary (no mass at z = 1); extrapolation noise may
    # put it a few ulp below zero, which the clamp absorbs
    if -1e-12 < M[0] < 0.0:
        M[0] = 0.0
    in_range = M[0] >= 0.0 and M[0] < 1.0 and np.all(M[1:] > 0.0) and np.all(M[1:] < 1.0)
    if not in_range:
        # anchored rebuild left the parameter range: fall back to the raw
        # deepest pass, which is always a valid (upper) parameter estimate
        M = S[-1]
        achieved = raw_diff
    else:
        achieved = max(float(est[anchor]), float(np.max(np.abs(M - best))))
    if achieved > tol and n_eff >= cap:
        raise NoConvergence(achieved, n_eff)
    return ChainParams(m, M, m_hat, depths[-1], achieved)


def shifted_minimal_from_R(R_at_1) -> np.ndarray:
    """Minimal parameters of the shifted chain sequence from values R_n(1).

    Given R_0(1)..R_K(1) (all positive), returns the sequence
    1 - R_{n+1}(1) / (2 R_n(1)) for n = 0..K-1, which is the minimal
    parameter sequence of {d_{n+1}}.
    """
    r = np.asarray(R_at_1, dtype=float)
    if r.ndim != 1 or r.size < 2:
        raise DomainError("need at least R_0(1) and R_1(1)")
    if np.any(r <= 0.0):
        raise DomainError("all R_n(1) must be positive")
    return 1.0 - r[1:] / (2.0 * r[:-1])
