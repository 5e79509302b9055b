"""Self-verification battery: every structural identity of the pipeline,
evaluated on a concrete input and reported as a fixed-order pass/fail table.

Each check recomputes its residual directly (independently of the guards the
library operations enforce internally) so the table shows sharp measured
values.  Checks against the closed-form hypergeometric family are appended
when the input came from that family.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import chains, hypergeo, measure, recurrence, szego
from .zeros import DEFAULT_X_TOL, wronskian_check as _wronskian_check, zero_sets
from .errors import OpucChainError


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    threshold: float
    note: str = ""


def _rel(a, b):
    return np.abs(a - b) / np.maximum(1.0, np.abs(b))


def run_battery(
    inp: recurrence.RecurrenceInput,
    n: int = 24,
    K: int = 24,
    tol: float | None = None,
    oracle: hypergeo.ExampleParams | None = None,
) -> list[CheckResult]:
    """Run every verification check feasible for the given input size."""
    results: list[CheckResult] = []
    n = min(n, inp.N, recurrence.COEFF_DEGREE_CAP)
    K = min(K, inp.N - 2, recurrence.COEFF_DEGREE_CAP - 2)
    x_tol = tol if tol is not None else DEFAULT_X_TOL

    def check(name, threshold, fn):
        try:
            value, extra_ok = fn()
            ok = bool(extra_ok) and (not np.isfinite(threshold) or value <= threshold)
            results.append(CheckResult(name, ok, float(value), threshold))
        except OpucChainError as exc:
            results.append(CheckResult(name, False, float("nan"), threshold, str(exc)))

    d = inp.d
    m = chains.minimal_parameters(d)

    def chain_minimal():
        err = np.max(np.abs(d - (1.0 - m[:-1]) * m[1:]) / d)
        return err, True

    check("chain_minimal_reconstruction", 1e-12, chain_minimal)

    params = None

    def chain_maximal():
        nonlocal params
        params = chains.maximal_parameters(d, n_out=min(inp.N, max(n, 50)))
        M = params.M
        err = np.max(np.abs(d[: M.size - 1] - (1.0 - M[:-1]) * M[1:]) / d[: M.size - 1])
        return err, bool(np.all(m[: M.size] <= M + 1e-12))

    check("chain_maximal_reconstruction", 1e-12, chain_maximal)

    def shifted():
        r_at_1 = np.array(
            [recurrence.eval_R_Q(inp, k, 1.0 + 0j)[0].real for k in range(n + 1)]
        )
        m_hat = chains.shifted_minimal_from_R(r_at_1)
        direct = chains.minimal_parameters(d[1:])[: m_hat.size]
        return float(np.max(np.abs(m_hat - direct))), bool(np.all(m_hat[1:] < m[2 : m_hat.size + 1]))

    check("shifted_minimal_consistency", 1e-12, shifted)

    def self_inversive():
        worst = 0.0
        for k in (1, max(2, n // 2), n):
            r = recurrence.generate_R(inp, k)
            q = recurrence.generate_Q(inp, k)
            scale = np.max(np.abs(r))
            worst = max(worst, float(np.max(np.abs(r - np.conj(r[::-1]))) / scale))
            if k >= 1:
                qs = max(np.max(np.abs(q)), 1e-300)
                worst = max(worst, float(np.max(np.abs(q - np.conj(q[::-1]))) / qs))
        return worst, True

    check("self_inversive_symmetry", 1e-12, self_inversive)

    def leading():
        r = recurrence.generate_R(inp, n)
        expect = recurrence.leading_coefficient(inp, n)
        return abs(r[-1] - expect) / abs(expect), True

    check("leading_coefficient_product", 1e-12, leading)

    def determinant():
        worst = 0.0
        for k in range(1, min(n, 30) + 1):
            u = recurrence.determinant_U(inp, k)
            expected = 0.5 * np.prod(4.0 * d[:k])
            target = np.zeros(k, dtype=complex)
            target[-1] = expected
            worst = max(worst, float(np.max(np.abs(u - target)) / expected))
        return worst, True

    check("determinant_monomial", 1e-10, determinant)

    def gamma_ident():
        return measure.verify_gamma_identity(inp, n), True

    check("gamma_cross_identity", 1e-12, gamma_ident)

    zsets = None

    def zeros_check():
        nonlocal zsets
        zsets = zero_sets(inp, n, x_tol)
        worst = 0.0
        for zs in (zsets[0], zsets[len(zsets) // 2], zsets[-1]):
            rv = recurrence.eval_R_Q(inp, zs.n, zs.z)[0]
            scale = np.max(np.abs(recurrence.generate_R(inp, zs.n)))
            worst = max(worst, float(np.max(np.abs(rv)) / scale))
        interlaced = all(
            np.all(zsets[k + 1].theta[:-1] < zsets[k].theta)
            and np.all(zsets[k].theta < zsets[k + 1].theta[1:])
            for k in range(len(zsets) - 1)
        )
        return worst, interlaced

    check("zeros_residual_interlacing", 1e-9, zeros_check)

    def wronskian():
        wc = _wronskian_check(inp, n, zsets[-1])
        return wc.V_identity_residual, bool(np.all(wc.W_at_roots > 0.0))

    check("wronskian_positivity_identity", 1e-9, wronskian)

    table = None

    def moments():
        nonlocal table
        table = measure.moment_table(inp, K)
        mu = table.mu_values
        nu = table.nu_values
        sym = np.max(np.abs(mu[::-1] - np.conj(mu)))
        rel = np.max(np.abs(nu[1:] - (mu[1:] - mu[:-1])))
        nu_sym = np.max(np.abs(nu[table.K + 1 :] + np.conj(nu[table.K : 0 : -1])))
        return float(max(sym, rel, nu_sym)), True

    check("moment_symmetry_relations", 1e-12, moments)

    def nu_stability():
        k2 = min(K + 2, inp.N - 2)
        if k2 <= K:
            return 0.0, True
        t2 = measure.nu_moments(inp, k2)
        lo, hi = k2 - K, k2 + K + 1
        return float(np.max(np.abs(t2.nu_values[lo:hi] - table.nu_values))), True

    check("nu_stability_across_order", 1e-11, nu_stability)

    psi = None

    def quad_norm():
        nonlocal psi
        psi = measure.quadrature(inp, n, zsets[-1])
        total = psi.theta0_weight + np.sum(psi.weights)
        return abs(total - 1.0), bool(np.all(psi.weights > 0.0) and psi.theta0_weight > 0.0)

    check("quadrature_positive_normalized", 1e-12, quad_norm)

    def quad_moments():
        kk = min(n, K)
        worst = max(
            abs(psi.moment(k) - table.mu(-k)) for k in range(-kk, kk + 1)
        )
        return worst, True

    check("quadrature_moment_match", 1e-9, quad_moments)

    def convergents():
        n_conv = min(inp.N, max(n, 256))
        m0 = params.M[0] if params is not None else None
        seq = measure.convergents_at_one(inp, n_conv, M0=m0)
        gap = ((1.0 - m0) - seq[-1]) if m0 is not None else 1.0
        return 0.0, gap > 0.0

    check("convergents_monotone_bounded", 0.0, convergents)

    def gamma_hat():
        gh = measure.hat_gamma_check(inp, table, min(n, K))
        worst = 0.0
        for k in range(1, gh.size):
            expect = 2.0 * (1.0 - m[k]) * gh[k - 1]
            worst = max(worst, abs(gh[k] - expect) / abs(gh[k]))
        return worst, True

    check("gamma_hat_recursion", 1e-10, gamma_hat)

    family = None

    def szego_rec():
        nonlocal family
        family = szego.szego_family(inp, n)
        worst = max(szego.szego_recurrence_residual(family, k) for k in range(1, n + 1))
        return worst, True

    check("szego_recurrence_forms", 1e-11, szego_rec)

    def verblunsky_routes():
        alpha = family.alpha
        other = np.array([-np.conj(family.s_coeffs[k][0]) for k in range(1, n + 1)])
        worst = float(np.max(np.abs(alpha - other)))
        return worst, bool(np.all(np.abs(alpha) < 1.0))

    check("verblunsky_two_routes", 1e-10, verblunsky_routes)

    def gram():
        nm = min(n, K)
        g = szego.gram_orthogonality(family, table, nm)
        diag = np.real(np.diag(g))
        scale = np.sqrt(np.outer(diag, diag))
        off = np.abs(g - np.diag(np.diag(g))) / scale
        return float(np.max(off)), bool(np.all(diag > 0.0))

    check("gram_diagonality", 1e-9, gram)

    if oracle is not None:
        p = oracle

        def oracle_maximal():
            M = params.M
            ref = hypergeo.example_maximal(p, M.size - 1)
            return float(np.max(np.abs(M - ref))), True

        check("oracle_maximal_parameters", 1e-9, oracle_maximal)

        def oracle_moments():
            worst = 0.0
            for k in range(-K, K + 1):
                worst = max(worst, float(_rel(table.nu(k), hypergeo.example_nu(p, k))))
                worst = max(worst, float(_rel(table.mu(k), hypergeo.example_mu(p, k))))
            return worst, True

        check("oracle_moment_tables", 1e-10, oracle_moments)

        def oracle_r_values():
            k = min(n, 20)
            pts = np.exp(2j * np.pi * np.arange(16) / 16.3)
            ours = recurrence.eval_R_Q(inp, k, pts)[0]
            ref = hypergeo.example_R(p, k, pts)
            return float(np.max(np.abs(ours - ref) / np.abs(ref))), True

        check("oracle_R_values", 1e-9, oracle_r_values)

        if p.t == 0.0:
            def oracle_s0():
                k = min(n, 20)
                pts = np.exp(2j * np.pi * np.arange(16) / 16.3)
                ours = np.polyval(family.s_coeffs[k][::-1], pts)
                ref = hypergeo.example_S0(p, k, pts)
                return float(np.max(np.abs(ours - ref))), True

            check("oracle_S0_values", 1e-11, oracle_s0)

    return results


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        meas = f"{r.measured:.3e}" if np.isfinite(r.measured) else "   error"
        thr = f"{r.threshold:.1e}" if np.isfinite(r.threshold) and r.threshold > 0 else "-"
        note = f"  {r.note}" if r.note else ""
        lines.append(f"{status}  {r.name:<{width}}  measured={meas}  limit={thr}{note}")
    return "\n".join(lines)
