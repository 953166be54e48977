"""Command-line front end.

Three subcommands: ``compute`` evaluates one function on a matrix or cube
document and reports the value plus ring-operation counts, ``verify`` runs
the randomized identity cross-check suites, and ``bench`` prints the
op-count comparison table.  Exit codes: 0 success, 1 verification or
cross-check failure, 2 usage or parse error.

For a fixed seed the verify and bench outputs are byte-identical across
runs and across worker counts; no timing data is ever printed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bench import (
    MAX_BENCH_N,
    MethodDisagreement,
    compare_methods,
    count_ops,
    evaluate_method,
    format_table,
    write_records,
)
from .document import DocumentError, MatrixDocument, parse_document, parse_scalar
from .verify import SUITE_ORDER, SUITES, run_suites

WORKERS_ENV_VAR = "MATIDENT_WORKERS"


class UsageError(ValueError):
    """Bad flag combination or argument value."""


_METHOD_TABLE = {
    ("per", "definitional"): "per_definitional",
    ("per", "identity"): "per_identity",
    ("per", "ryser"): "per_ryser",
    ("det", "definitional"): "det_definitional",
    ("det", "identity"): "det_identity",
    ("eper", "definitional"): "eper_definitional",
    ("eper", "identity"): "eper_identity",
    ("detp", "definitional"): "detp_definitional",
    ("detp", "identity"): "detp_identity",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matident",
        description="Exact evaluators and cross-checks for permanents, determinants, "
        "symmetrized permanents, and space-matrix determinants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="evaluate one function on a document")
    compute.add_argument("--fn", required=True, choices=("per", "det", "eper", "detp"))
    compute.add_argument(
        "--method", required=True, choices=("definitional", "identity", "ryser")
    )
    compute.add_argument(
        "--gamma", help="comma-separated shift scalars for per/det --method identity"
    )
    compute.add_argument("--delta", help="shift element for eper --method identity")
    compute.add_argument("file", metavar="FILE")

    verify = sub.add_parser("verify", help="run randomized identity cross-checks")
    verify.add_argument("--suite", default="all", choices=SUITE_ORDER + ("all",))
    verify.add_argument("--n", type=int, default=None, help="run one size instead of the defaults")
    verify.add_argument("--trials", type=int, default=5)
    verify.add_argument("--seed", type=int, default=1)

    bench = sub.add_parser("bench", help="compare op counts across methods")
    bench.add_argument("--nmin", type=int, default=2)
    bench.add_argument("--nmax", type=int, default=5)
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument("--out", default=None, help="also write rows as JSON lines")

    return parser


def _load_document(path: str) -> MatrixDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_document(text)


def _parse_flag_scalar(ring_name: str, token: str, where: str):
    text = token.strip()
    if not text:
        raise UsageError(f"{where}: empty scalar")
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = text
    try:
        return parse_scalar(ring_name, data, where)
    except DocumentError as exc:
        raise UsageError(str(exc)) from None


def _gamma_values(document: MatrixDocument, raw: str, count: int) -> tuple:
    tokens = raw.split(",")
    if len(tokens) != count:
        raise UsageError(
            f"--gamma expects {count} comma-separated value{'s' if count != 1 else ''}, "
            f"got {len(tokens)}"
        )
    return tuple(
        _parse_flag_scalar(document.ring_name, token, f"--gamma value {i}")
        for i, token in enumerate(tokens, start=1)
    )


def _run_compute(args: argparse.Namespace) -> int:
    method = _METHOD_TABLE.get((args.fn, args.method))
    if method is None:
        raise UsageError(f"method {args.method!r} does not apply to {args.fn}")
    document = _load_document(args.file)
    expected_kind = "cube" if args.fn == "detp" else "matrix"
    if document.kind != expected_kind:
        raise UsageError(
            f"{args.fn} expects a {expected_kind} document, got kind {document.kind!r}"
        )
    if args.fn in ("per", "det") and not document.ring.commutative:
        raise UsageError(f"{args.fn} requires a commutative ring, got {document.ring_name!r}")
    params: dict = {}
    if args.gamma is not None:
        if args.fn == "per" and args.method == "identity":
            params["gammas"] = _gamma_values(document, args.gamma, document.n)
        elif args.fn == "det" and args.method == "identity":
            params["gamma"] = _gamma_values(document, args.gamma, 1)[0]
        else:
            raise UsageError("--gamma applies only to per or det with --method identity")
    if args.delta is not None:
        if args.fn == "eper" and args.method == "identity":
            params["delta"] = _parse_flag_scalar(document.ring_name, args.delta, "--delta")
        else:
            raise UsageError("--delta applies only to eper with --method identity")
    value = evaluate_method(method, document.content, params)
    report = count_ops(method, document.content, params)
    print(f"value: {value}")
    print(
        f"ops: adds={report.adds} negs={report.negs} muls={report.muls} "
        f"power_muls={report.power_muls} powers={report.powers} "
        f"int_divs={report.int_divs} f_evals={report.f_evals}"
    )
    return 0


def _worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV_VAR)
    if raw is None:
        return os.cpu_count() or 1
    try:
        workers = int(raw)
    except ValueError:
        raise UsageError(f"{WORKERS_ENV_VAR} must be an integer, got {raw!r}") from None
    if workers < 1:
        raise UsageError(f"{WORKERS_ENV_VAR} must be at least 1")
    return workers


def _run_verify(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    names = SUITE_ORDER if args.suite == "all" else (args.suite,)
    ns = None
    if args.n is not None:
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        for name in names:
            if args.n > SUITES[name].max_n:
                raise UsageError(f"suite {name} supports --n up to {SUITES[name].max_n}")
        ns = (args.n,)
    print(f"verify: suite={args.suite} trials={args.trials} seed={args.seed}")
    lines, all_ok = run_suites(names, args.trials, args.seed, workers=_worker_count(), ns=ns)
    for line in lines:
        print(line)
    return 0 if all_ok else 1


def _run_bench(args: argparse.Namespace) -> int:
    if args.nmin < 1 or args.nmin > args.nmax or args.nmax > MAX_BENCH_N:
        raise UsageError(f"need 1 <= nmin <= nmax <= {MAX_BENCH_N}")
    rows = compare_methods(args.nmin, args.nmax, args.seed)
    print(format_table(rows))
    if args.out is not None:
        try:
            write_records(rows, args.out)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    return 0


def main(argv: "list[str] | None" = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "compute":
            return _run_compute(args)
        if args.command == "verify":
            return _run_verify(args)
        return _run_bench(args)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    except (UsageError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MethodDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
