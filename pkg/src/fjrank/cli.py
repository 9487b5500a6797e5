"""Command-line front end.

    fjrank run GRAPH [--mode ...] [--method ...] [--alpha A] [--format csv|json|table]
    fjrank dump GRAPH [--input-format edgelist|dense]

Exit status is 0 on success, 1 for input or flag errors and 2 for
numerical errors (dangling nodes under ``reject``, iteration caps, failed
equivalence checks).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings

from .centrality import (
    CentralityVector,
    PageRankForm,
    Scale,
    centrality,
    pagerank,
    total_effect_centrality,
    verify_equivalence,
)
from .errors import FJRankError, InputError, NumericalError
from .graph import DanglingPolicy, format_dense_matrix, read_graph, row_normalize
from .influence import DEFAULT_ALPHA, DIRECT_MAX_N, Method, SolverConfig, influence_matrix

MODES = {
    "fj-normalized": "c = ((1-a)/n) (I - a W^T)^-1 e        column averages of V",
    "fj-unnormalized": "c = (1-a) (I - a W^T)^-1 e            column sums of V",
    "pagerank-original": "PR(i) = (1-d) + d sum_j PR(j)/od(j)   values sum to n",
    "pagerank-normalized": "PR(i) = (1-d)/n + d sum_j PR(j)/od(j) values sum to 1",
    "influence-matrix": "V = (1-a) (I - a W)^-1 = (1-a) sum_k a^k W^k",
    "verify": "normalized PageRank vs column-averaged V, and original = n * normalized",
}

DANGLING = {
    "reject": DanglingPolicy.REJECT,
    "error": DanglingPolicy.REJECT,
    "teleport": DanglingPolicy.UNIFORM_TELEPORT,
    "self-loop": DanglingPolicy.SELF_LOOP,
}

EXIT_OK, EXIT_INPUT, EXIT_NUMERICAL = 0, 1, 2
SOLVER_TOL, VERIFY_TOL = 1e-10, 1e-9


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; that status is reserved for numerical errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def fmt(value: float) -> str:
    """15 significant digits, keeping a decimal point on integral values."""
    s = f"{value:.15g}"
    if s.lstrip("-").isdigit():
        s += ".0"
    return s


def _round15(value: float) -> float:
    return float(f"{value:.15g}")


def build_parser() -> argparse.ArgumentParser:
    modes = "\n".join(f"  {name:<21} {formula}" for name, formula in MODES.items())
    parser = _Parser(
        prog="fjrank",
        description="Total-effect centrality from a social influence model, and PageRank.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser(
        "run",
        help="compute centrality, PageRank, the influence matrix, or verify their identity",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"modes (W is the out-degree normalized adjacency, e the ones vector):\n{modes}",
    )
    run.add_argument("input", help="graph file")
    run.add_argument("--input-format", choices=["edgelist", "dense"], default="edgelist")
    run.add_argument("--mode", choices=list(MODES), default="pagerank-normalized")
    run.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default=None,
        help=f"solver (default: direct up to {DIRECT_MAX_N} nodes, fixed-point "
        "beyond); ignored by verify",
    )
    run.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help="damping factor in (0, 1)")
    run.add_argument(
        "--tol",
        type=float,
        default=None,
        help="solver tolerance (default 1e-10); for verify, the agreement "
        "threshold (default 1e-9)",
    )
    run.add_argument("--max-iter", type=int, default=1000)
    run.add_argument("--dangling", choices=list(DANGLING), default="reject")
    run.add_argument(
        "--exclude-diagonal",
        action="store_true",
        help="fj modes only: average each column over the n-1 off-diagonal entries",
    )
    run.add_argument(
        "--renormalize",
        action="store_true",
        help="with --exclude-diagonal, rescale the averages to sum to 1",
    )
    run.add_argument("--format", choices=["csv", "json", "table"], default="csv")

    dump = sub.add_parser("dump", help="write the adjacency matrix in the dense text format")
    dump.add_argument("input", help="graph file")
    dump.add_argument("--input-format", choices=["edgelist", "dense"], default="edgelist")
    return parser


def _resolve_method(args, n: int) -> Method:
    if args.method is not None:
        method = Method(args.method)
    elif n <= DIRECT_MAX_N or args.mode == "influence-matrix" or args.exclude_diagonal:
        method = Method.DIRECT
    else:
        method = Method.FIXED_POINT
    if args.mode == "influence-matrix" and method is Method.FIXED_POINT:
        raise InputError("influence-matrix mode needs --method direct or series")
    if args.exclude_diagonal:
        if not args.mode.startswith("fj-"):
            raise InputError("--exclude-diagonal applies only to the fj modes")
        if method is Method.FIXED_POINT:
            raise InputError("--exclude-diagonal needs the full influence matrix (direct or series)")
    if args.renormalize and not args.exclude_diagonal:
        raise InputError("--renormalize requires --exclude-diagonal")
    return method


def _config(args, method: Method) -> SolverConfig:
    if args.tol is None:
        args.tol = VERIFY_TOL if args.mode == "verify" else SOLVER_TOL
    return SolverConfig(alpha=args.alpha, tol=args.tol, max_iter=args.max_iter, method=method)


# -- output -----------------------------------------------------------------


def _node_rows(c: CentralityVector):
    ranks = c.ranks()
    return [(label, v, int(r)) for label, v, r in zip(c.labels, c.values.tolist(), ranks)]


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _table(header, rows) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_centrality(c: CentralityVector, mode: str, method: str | None, out: str) -> str:
    rows = _node_rows(c)
    if out == "json":
        return _json(
            {
                "mode": mode,
                "alpha": c.alpha,
                "method": method,
                "nodes": [{"label": l, "value": _round15(v), "rank": r} for l, v, r in rows],
            }
        )
    formatted = [(l, fmt(v), r) for l, v, r in rows]
    if out == "table":
        return _table(("label", "value", "rank"), formatted)
    return _csv([("label", "value", "rank"), *formatted])


def render_influence(V, out: str) -> str:
    labels = list(V.labels)
    if out == "json":
        return _json(
            {
                "mode": "influence-matrix",
                "alpha": V.alpha,
                "method": V.method.value,
                "terms": V.terms,
                "labels": labels,
                "matrix": [[_round15(x) for x in row] for row in V.entries.tolist()],
            }
        )
    rows = [[label, *map(fmt, row)] for label, row in zip(labels, V.entries.tolist())]
    if out == "table":
        return _table(["", *labels], rows)
    return _csv([["label", *labels], *rows])


def render_report(report, c: CentralityVector, out: str) -> str:
    fields = report.as_dict()
    if out == "json":
        rows = _node_rows(c)
        return _json(
            {
                "mode": "verify",
                "alpha": report.alpha,
                "method": None,
                "nodes": [{"label": l, "value": _round15(v), "rank": r} for l, v, r in rows],
                **{k: v for k, v in fields.items() if k != "alpha"},
            }
        )
    shown = {
        k: (fmt(v) if isinstance(v, float) else str(v).lower() if isinstance(v, bool) else str(v))
        for k, v in fields.items()
    }
    if out == "table":
        width = max(map(len, shown))
        return "".join(f"{k.ljust(width)}  {v}\n" for k, v in shown.items())
    return _csv([list(shown), list(shown.values())])


# -- commands ---------------------------------------------------------------


def _run(args) -> tuple[str, int]:
    A = read_graph(args.input, args.input_format)
    method = _resolve_method(args, A.n)
    config = _config(args, method)
    policy = DANGLING[args.dangling]

    if args.mode == "verify":
        report = verify_equivalence(A, config.alpha, policy, tol=args.tol, max_iter=args.max_iter)
        c = pagerank(A, config.alpha, PageRankForm.NORMALIZED, policy,
                     SolverConfig(config.alpha, min(args.tol, SOLVER_TOL), args.max_iter))
        status = EXIT_OK if report.passed else EXIT_NUMERICAL
        return render_report(report, c, args.format), status

    W = row_normalize(A, policy)
    if args.mode == "influence-matrix":
        return render_influence(influence_matrix(W, config), args.format), EXIT_OK

    if args.mode.startswith("pagerank-"):
        form = PageRankForm(args.mode.removeprefix("pagerank-"))
        c = centrality(W, config, form.scale)
    elif args.exclude_diagonal:
        c = total_effect_centrality(influence_matrix(W, config), True, args.renormalize)
    else:
        scale = Scale.NORMALIZED if args.mode == "fj-normalized" else Scale.UNNORMALIZED
        c = centrality(W, config, scale)
    return render_centrality(c, args.mode, method.value, args.format), EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            if args.command == "dump":
                text, status = format_dense_matrix(read_graph(args.input, args.input_format)), 0
            else:
                text, status = _run(args)
        for w in caught:
            print(f"fjrank: warning: {w.message}", file=sys.stderr)
    except NumericalError as exc:
        print(f"fjrank: error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except FJRankError as exc:
        print(f"fjrank: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
