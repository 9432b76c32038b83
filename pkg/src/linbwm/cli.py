"""Command-line interface: solve, ci-table, sensitivity, verify, aggregate, serve.

Exit codes: 0 on success, 1 on validation or schema errors (message on
stderr), 2 on a verification mismatch.  Warnings and timing diagnostics go
to stderr so stdout stays byte-deterministic for fixed input and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from . import io as bwmio
from .aggregate import solve_study
from .core import SAATY_SCALE_MAX, DominanceWarning, InputError, consistency_index, solve_analytical
from .lp_oracle import OracleError, verify
from .sensitivity import MODES, EquivalenceQuery, enumerate_equivalent


def _default_scale_max() -> int:
    raw = os.environ.get("BWM_SCALE_MAX")
    if raw is None:
        return SAATY_SCALE_MAX
    try:
        value = int(raw)
    except ValueError:
        raise InputError("SchemaViolation", f"BWM_SCALE_MAX must be an integer, got {raw!r}")
    if value < 1:
        raise InputError("SchemaViolation", f"BWM_SCALE_MAX must be >= 1, got {value}")
    return value


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError("SchemaViolation", f"cannot read {path}: {exc.strerror}")


def _load_pcs(path: str):
    text = _read(path)
    if path.lower().endswith(".csv"):
        return bwmio.parse_pcs_csv(text, _default_scale_max())
    return bwmio.parse_pcs(text, _default_scale_max())


def _cmd_solve(args) -> int:
    pcs = _load_pcs(args.input)
    solution = solve_analytical(pcs)
    sys.stdout.write(bwmio.render_solution(solution, args.format))
    if not args.verify:
        return 0
    report = verify(pcs, args.tol)
    sys.stdout.write(
        "\nverification\n"
        f"simplex epsilon*    {report.oracle.objective:.10f}\n"
        f"|delta epsilon*|    {report.delta_epsilon:.3e}\n"
        f"max |delta weight|  {report.max_weight_delta:.3e}\n"
        f"verdict             {'pass' if report.passed else 'FAIL'} (tol {report.tol:g})\n"
    )
    print(
        f"timing: analytical {report.analytical_seconds * 1e3:.3f} ms, "
        f"simplex {report.oracle_seconds * 1e3:.3f} ms",
        file=sys.stderr,
    )
    return 0 if report.passed else 2


def _cmd_ci_table(args) -> int:
    ns = range(args.n_min, args.n_max + 1)
    abws = range(args.abw_min, args.abw_max + 1)
    header = "n\\a_bw" + "".join(f"{a:>9}" for a in abws)
    print(header)
    for n in ns:
        print(f"{n:<6}" + "".join(f"{consistency_index(n, a):>9.4f}" for a in abws))
    return 0


def _cmd_sensitivity(args) -> int:
    pcs = _load_pcs(args.input)
    query = EquivalenceQuery(base=pcs, mode=args.vary)
    family = enumerate_equivalent(query)
    if args.count_only:
        print(family.count)
        return 0
    doc = {
        "mode": family.mode,
        "count": family.count,
        "members": [bwmio.pcs_to_document(m) for m in family.members],
    }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_verify(args) -> int:
    pcs = _load_pcs(args.input)
    report = verify(pcs, args.tol)
    sys.stdout.write(
        f"analytical epsilon* {report.analytical.epsilon_star:.10f}\n"
        f"simplex epsilon*    {report.oracle.objective:.10f}\n"
        f"|delta epsilon*|    {report.delta_epsilon:.3e}\n"
        f"max |delta weight|  {report.max_weight_delta:.3e}\n"
        f"simplex iterations  {report.oracle.iterations}\n"
        f"verdict             {'pass' if report.passed else 'FAIL'} (tol {report.tol:g})\n"
    )
    print(
        f"timing: analytical {report.analytical_seconds * 1e3:.3f} ms, "
        f"simplex {report.oracle_seconds * 1e3:.3f} ms",
        file=sys.stderr,
    )
    return 0 if report.passed else 2


def _cmd_aggregate(args) -> int:
    study = bwmio.parse_study(_read(args.input), _default_scale_max())
    result = solve_study(study)
    sys.stdout.write(bwmio.render_aggregation(study, result, args.format))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linbwm",
        description="Linear best-worst method: closed-form weights, consistency and sensitivity",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a comparison-system document")
    p.add_argument("-i", "--input", required=True, help="JSON (or CSV) document")
    p.add_argument("--format", choices=["json", "table", "csv"], default="table")
    p.add_argument("--verify", action="store_true", help="cross-check against the LP oracle")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("ci-table", help="print the consistency-index grid")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--abw-min", type=int, default=2)
    p.add_argument("--abw-max", type=int, default=9)
    p.set_defaults(func=_cmd_ci_table)

    p = sub.add_parser("sensitivity", help="enumerate the equivalence family")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--vary", choices=list(MODES), required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_sensitivity)

    p = sub.add_parser("verify", help="compare closed form against the LP oracle")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("aggregate", help="solve a multi-expert study document")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(func=_cmd_aggregate)

    p = sub.add_parser("serve", help="run the HTTP JSON API")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None, help="directory with the web UI bundle")
    p.set_defaults(func=_cmd_serve)

    return parser


def run(argv: list[str]) -> int:
    """Execute one command; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", DominanceWarning)
            code = args.func(args)
        for warning in caught:
            print(f"warning: {warning.message}", file=sys.stderr)
        return code
    except InputError as exc:
        field = f" (field: {exc.field})" if exc.field else ""
        print(f"error[{exc.code}]: {exc}{field}", file=sys.stderr)
        return 1
    except OracleError as exc:
        print(f"error[OracleFailure]: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
