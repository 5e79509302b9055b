"""Command-line front end.

Selects an input family (named or from a JSON file), runs one pipeline stage
and emits the result as JSON or CSV with full-precision decimal values.
Complex numbers are serialized as two-element arrays [re, im]; values with an
exactly-zero imaginary part are emitted as plain floats.  Angles are radians
in (0, 2 pi); the mass at z = 1 is reported under the key "mass_at_one".

Exit status: 0 success, 1 validation failure, 2 numerical criterion failure,
3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import chains, hypergeo, measure, recurrence, szego, verify
from .zeros import DEFAULT_X_TOL, zeros
from .errors import (
    ChainViolation,
    DegreeTooLarge,
    DomainError,
    OpucChainError,
    PoleError,
)

STAGES = ("params", "poly", "zeros", "measure", "moments", "opuc", "verblunsky", "verify")
_VALIDATION_ERRORS = (ChainViolation, DomainError, DegreeTooLarge, PoleError)
PARAMS_PREFIX_LENGTH = 1 << 14


@dataclass(frozen=True)
class JobSpec:
    family: str
    stage: str
    n: int
    K: int
    tol: float | None
    fmt: str
    out: str | None
    d_value: float = 0.25
    c_value: float = 0.0
    lam: float = 0.0
    eta: float = 0.0
    t: float = 0.0
    file: str | None = None


def _required_length(spec: JobSpec) -> int:
    if spec.stage == "params":
        return max(PARAMS_PREFIX_LENGTH, 2 * spec.n)
    if spec.stage == "moments":
        return spec.K + 2
    if spec.stage == "verify":
        return max(spec.n, spec.K + 2, 1 << 16)
    return max(spec.n, 1)


def build_input(spec: JobSpec):
    """RecurrenceInput for the job, plus oracle parameters when applicable."""
    length = min(_required_length(spec), chains.depth_ceiling())
    if spec.family == "constant":
        return recurrence.RecurrenceInput.constant(spec.d_value, spec.c_value, length), None
    if spec.family == "example6":
        p = hypergeo.ExampleParams(spec.lam, spec.eta, spec.t)
        return hypergeo.example_sequences(p, length), p
    if spec.family == "file":
        if not spec.file:
            raise DomainError("--file is required for family=file")
        with open(spec.file) as fh:
            payload = json.load(fh)
        try:
            c = np.asarray(payload["c"], dtype=float)
            d = np.asarray(payload["d"], dtype=float)
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"input file must contain numeric arrays 'c' and 'd': {exc}")
        return recurrence.RecurrenceInput(c, d), None
    raise DomainError(f"unknown family {spec.family!r}")


def _cx(value):
    if isinstance(value, complex) or isinstance(value, np.complexfloating):
        v = complex(value)
        return v.real if v.imag == 0.0 else [v.real, v.imag]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def _cx_list(values):
    return [_cx(v) for v in np.asarray(values).tolist()]


def _run_stage(spec: JobSpec, inp, oracle):
    """Returns (json_payload, csv_rows) for the requested stage."""
    if spec.stage == "params":
        tol = spec.tol if spec.tol is not None else chains.DEFAULT_TOL
        params = chains.maximal_parameters(inp.d, tol=tol, n_out=min(spec.n, inp.N))
        m = params.m[: spec.n + 1]
        m_hat = params.m_hat[: spec.n]
        payload = {
            "m": _cx_list(m),
            "M": _cx_list(params.M),
            "m_hat": _cx_list(m_hat),
            "depth_used": params.depth_used,
            "tol_achieved": params.tol_achieved,
        }
        rows = [["n", "m", "M", "m_hat"]]
        for k in range(params.M.size):
            rows.append([
                k,
                repr(float(m[k])) if k < m.size else "",
                repr(float(params.M[k])),
                repr(float(m_hat[k])) if k < m_hat.size else "",
            ])
        meta = {"depth_used": params.depth_used, "tol_achieved": params.tol_achieved}
        return payload, (rows, meta)

    if spec.stage == "poly":
        pair = recurrence.poly_pair(inp, spec.n)
        payload = {
            "n": pair.degree,
            "R": _cx_list(pair.r_coeffs),
            "Q": _cx_list(pair.q_coeffs),
        }
        rows = [["j", "R_re", "R_im", "Q_re", "Q_im"]]
        for j in range(pair.r_coeffs.size):
            q = pair.q_coeffs[j] if j < pair.q_coeffs.size else None
            rows.append([
                j,
                repr(pair.r_coeffs[j].real),
                repr(pair.r_coeffs[j].imag),
                repr(q.real) if q is not None else "",
                repr(q.imag) if q is not None else "",
            ])
        return payload, (rows, {})

    if spec.stage == "zeros":
        tol = spec.tol if spec.tol is not None else DEFAULT_X_TOL
        zs = zeros(inp, spec.n, tol)
        payload = _cx_list(zs.theta)
        rows = [["j", "theta"]] + [[j + 1, repr(float(t))] for j, t in enumerate(zs.theta)]
        return payload, (rows, {})

    if spec.stage == "measure":
        psi = measure.quadrature(inp, spec.n)
        payload = {
            "n": psi.n,
            "mass_at_one": psi.theta0_weight,
            "theta": _cx_list(psi.nodes),
            "weights": _cx_list(psi.weights),
        }
        rows = [["j", "theta", "weight"]]
        for j in range(psi.nodes.size):
            rows.append([j + 1, repr(float(psi.nodes[j])), repr(float(psi.weights[j]))])
        return payload, (rows, {"mass_at_one": psi.theta0_weight})

    if spec.stage == "moments":
        table = measure.moment_table(inp, spec.K)
        ks = list(range(-spec.K, spec.K + 1))
        payload = {
            "K": spec.K,
            "k": ks,
            "nu": _cx_list(table.nu_values),
            "mu": _cx_list(table.mu_values),
        }
        rows = [["k", "nu_re", "nu_im", "mu_re", "mu_im"]]
        for i, k in enumerate(ks):
            rows.append([
                k,
                repr(table.nu_values[i].real),
                repr(table.nu_values[i].imag),
                repr(table.mu_values[i].real),
                repr(table.mu_values[i].imag),
            ])
        return payload, (rows, {})

    if spec.stage in ("opuc", "verblunsky"):
        family = szego.szego_family(inp, spec.n)
        if spec.stage == "verblunsky":
            payload = _cx_list(family.alpha)
            rows = [["n", "alpha_re", "alpha_im"]]
            for j, a in enumerate(family.alpha):
                rows.append([j, repr(a.real), repr(a.imag)])
            return payload, (rows, {})
        payload = {
            "n": spec.n,
            "alpha": _cx_list(family.alpha),
            "S": [_cx_list(s) for s in family.s_coeffs],
        }
        rows = [["n", "j", "s_re", "s_im"]]
        for k, s in enumerate(family.s_coeffs):
            for j, v in enumerate(s):
                rows.append([k, j, repr(v.real), repr(v.imag)])
        rows.append(["alpha", "", "", ""])
        for j, a in enumerate(family.alpha):
            rows.append([j, "", repr(a.real), repr(a.imag)])
        return payload, (rows, {})

    raise DomainError(f"unknown stage {spec.stage!r}")


def _emit(spec: JobSpec, payload, csv_data) -> None:
    if spec.fmt == "json":
        text = json.dumps(payload, indent=2)
    else:
        rows, meta = csv_data
        buf = io.StringIO()
        for key in sorted(meta):
            buf.write(f"# {key}={meta[key]!r}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(rows)
        text = buf.getvalue()
    if spec.out:
        with open(spec.out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _run_verify(spec: JobSpec, inp, oracle) -> int:
    results = verify.run_battery(inp, n=spec.n, K=spec.K, tol=spec.tol, oracle=oracle)
    table = verify.format_table(results)
    print(table)
    if spec.out:
        payload = [
            {
                "name": r.name,
                "passed": r.passed,
                "measured": r.measured,
                "threshold": r.threshold,
            }
            for r in results
        ]
        with open(spec.out, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return 0 if all(r.passed for r in results) else 2


def run(spec: JobSpec) -> int:
    """Execute a job; returns the process exit status."""
    try:
        inp, oracle = build_input(spec)
        if spec.stage == "verify":
            return _run_verify(spec, inp, oracle)
        payload, csv_data = _run_stage(spec, inp, oracle)
        _emit(spec, payload, csv_data)
        return 0
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OpucChainError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 3


def parse_args(argv=None) -> JobSpec:
    parser = argparse.ArgumentParser(
        prog="opucchain",
        description=(
            "Unit-circle orthogonal-polynomial pipeline driven by a real "
            "sequence c and a positive chain sequence d."
        ),
    )
    parser.add_argument("--family", choices=("constant", "example6", "file"),
                        default="constant")
    parser.add_argument("--d", dest="d_value", type=float, default=0.25,
                        help="constant family: the value of every d_n")
    parser.add_argument("--c", dest="c_value", type=float, default=0.0,
                        help="constant family: the value of every c_n")
    parser.add_argument("--lambda", dest="lam", type=float, default=0.0,
                        help="example6 family parameter (> -1/2)")
    parser.add_argument("--eta", type=float, default=0.0,
                        help="example6 family parameter")
    parser.add_argument("--t", type=float, default=0.0,
                        help="example6 mass at z = 1, in [0, 1)")
    parser.add_argument("--file", help="JSON input {\"c\": [...], \"d\": [...]}")
    parser.add_argument("--stage", choices=STAGES, required=True)
    parser.add_argument("--n", type=int, default=8)
    parser.add_argument("--K", type=int, default=16)
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    parser.add_argument("--out", default=None)
    ns = parser.parse_args(argv)
    if ns.n < 1 or ns.K < 1:
        parser.error("--n and --K must be >= 1")
    if ns.tol is not None and not ns.tol > 0:
        parser.error("--tol must be positive")
    return JobSpec(
        family=ns.family, stage=ns.stage, n=ns.n, K=ns.K, tol=ns.tol,
        fmt=ns.fmt, out=ns.out, d_value=ns.d_value, c_value=ns.c_value,
        lam=ns.lam, eta=ns.eta, t=ns.t, file=ns.file,
    )


def main(argv=None) -> None:
    sys.exit(run(parse_args(argv)))


if __name__ == "__main__":
    main()
