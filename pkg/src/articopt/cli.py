"""Command-line front door: validate, solve, report, score, stats, serve.

Machine output goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 usage error, 2 validation error, 3 infeasible or degenerate input. Every
failure path prints a single ``error:`` line.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import redirect_stderr, redirect_stdout
from decimal import Decimal
from enum import IntEnum
from pathlib import Path
from typing import IO

from .errors import (
    DegenerateDataError,
    ExplosionError,
    InfeasibleError,
    UniverseTooLargeError,
    ValidationError,
)
from .evaluate import score_plan, unit_cap_check
from .ingest import (
    AgreementStore,
    load_agreement,
    load_catalog,
    resolve_plan,
    validate_selection,
)
from .model import Constraints, Selection
from .report import render_json, render_markdown, synthesize_rows, to_canonical_json
from .solver import Solution, solve
from .stats import (
    SummaryStats,
    WelchResult,
    cronbach_alpha,
    load_matrix_csv,
    load_two_group_csv,
    welch_from_samples,
    welch_from_summary,
)


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    VALIDATION = 2
    INFEASIBLE = 3


class UsageError(Exception):
    pass


def _comma_ids(text: str | None) -> list[str]:
    if not text:
        return []
    return [part.strip() for part in text.split(",") if part.strip()]


def _load_selection(args: argparse.Namespace) -> tuple[AgreementStore, Selection]:
    catalog = load_catalog(Path(args.catalog))
    agreements = tuple(load_agreement(Path(p), catalog) for p in args.agreement)
    store = AgreementStore(catalog=catalog, agreements=agreements)
    selection = validate_selection([a.store_id for a in agreements], store)
    return store, selection


def _constraints(args: argparse.Namespace, selection: Selection) -> Constraints:
    pinned = resolve_plan(_comma_ids(args.pin), selection.catalog)
    excluded = resolve_plan(_comma_ids(args.exclude), selection.catalog)
    return Constraints(pinned=pinned, excluded=excluded)


def _solution_document(solution: Solution, include_optima: bool) -> dict:
    document = {
        "opt_size": solution.opt_size,
        "canonical_plan": sorted(solution.canonical_plan),
        "forced": sorted(solution.forced),
        "optima_count": len(solution.all_optima),
        "constraints": {
            "pinned": sorted(solution.constraints_applied.pinned),
            "excluded": sorted(solution.constraints_applied.excluded),
        },
    }
    if include_optima:
        document["all_optima"] = sorted(
            sorted(plan) for plan in solution.all_optima
        )
    return document


def _cmd_validate(args: argparse.Namespace, out: IO[str], err: IO[str]) -> int:
    store, _ = _load_selection(args)
    print(
        f"ok: catalog {store.catalog.college!r} "
        f"({len(store.catalog.courses)} courses), "
        f"{len(store.agreements)} agreements",
        file=out,
    )
    for agreement in store.agreements:
        print(f"- {agreement.store_id}", file=out)
    return ExitCode.OK


def _cmd_solve(args: argparse.Namespace, out: IO[str], err: IO[str]) -> int:
    _, selection = _load_selection(args)
    solution = solve(selection, _constraints(args, selection))
    if args.format == "json":
        print(
            to_canonical_json(_solution_document(solution, args.all_optima)),
            file=out,
        )
    else:
        print(f"Optimal plan size: {solution.opt_size}", file=out)
        print(
            f"Canonical plan: {', '.join(sorted(solution.canonical_plan))}",
            file=out,
        )
        print(f"Forced courses: {', '.join(sorted(solution.forced)) or '(none)'}", file=out)
        print(f"Optimal plans: {len(solution.all_optima)}", file=out)
        if args.all_optima:
            for plan in sorted(sorted(p) for p in solution.all_optima):
                print(f"- {', '.join(plan)}", file=out)
    return ExitCode.OK


def _cmd_report(args: argparse.Namespace, out: IO[str], err: IO[str]) -> int:
    _, selection = _load_selection(args)
    solution = solve(selection, _constraints(args, selection))
    report = synthesize_rows(solution, selection)
    if args.format == "json":
        print(to_canonical_json(render_json(report)), file=out)
    else:
        out.write(render_markdown(report))
    cap_check = unit_cap_check(
        solution.canonical_plan, selection.catalog, Decimal(str(args.unit_cap))
    )
    if not cap_check.passed:
        print(
            f"warning: total units {cap_check.total_units} exceed "
            f"the {cap_check.cap}-unit cap",
            file=err,
        )
    return ExitCode.OK


def _cmd_score(args: argparse.Namespace, out: IO[str], err: IO[str]) -> int:
    _, selection = _load_selection(args)
    candidate = resolve_plan(_comma_ids(args.plan), selection.catalog)
    report = score_plan(candidate, selection)
    print(
        to_canonical_json(
            {
                "missing": report.missing,
                "excess": report.excess,
                "total": report.total,
                "nearest_optimum": sorted(report.nearest_optimum),
                "unfulfilled": [list(pair) for pair in report.unfulfilled],
            }
        ),
        file=out,
    )
    return ExitCode.OK


def _format_p(p: float) -> str:
    return "p<0.001" if p < 0.001 else f"p={p:.3f}"


def _welch_line(result: WelchResult) -> str:
    return (
        f"t={result.t:.2f} df={result.df:.2f} "
        f"{_format_p(result.p_two_tailed)} d={result.d:.2f}"
        + (" (degenerate)" if result.degenerate else "")
    )


def _cmd_stats_welch(args: argparse.Namespace, out: IO[str], err: IO[str]) -> int:
    if args.csv:
        xs, ys = load_two_group_csv(Path(args.csv))
        result = welch_from_samples(xs, ys)
    else:
        numeric = (args.m1, args.sd1, args.n1, args.m2, args.sd2, args.n2)
        if any(value is None for value in numeric):
            raise UsageError(
                "stats welch needs either --csv or all of "
                "--m1 --sd1 --n1 --m2 --sd2 --n2"
            )
        result = welch_from_summary(
            SummaryStats(mean=args.m1, sd=args.sd1, n=args.n1),
            SummaryStats(mean=args.m2, sd=args.sd2, n=args.n2),
        )
    print(_welch_line(result), file=out)
    infinite = result.degenerate and result.d != 0.0
    return ExitCode.INFEASIBLE if infinite else ExitCode.OK


def _cmd_stats_alpha(args: argparse.Namespace, out: IO[str], err: IO[str]) -> int:
    matrix = load_matrix_csv(Path(args.csv))
    alpha = cronbach_alpha(matrix)
    print(f"alpha={alpha:.4f}", file=out)
    return ExitCode.OK


def _cmd_serve(args: argparse.Namespace, out: IO[str], err: IO[str]) -> int:
    import uvicorn

    from .ingest import load_store
    from .service import create_app

    app = create_app(load_store(Path(args.data)))
    print(f"serving on http://{args.host}:{args.port}", file=err)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return ExitCode.OK


def _add_selection_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--catalog", required=True, help="catalog JSON file")
    parser.add_argument(
        "--agreement",
        action="append",
        required=True,
        help="agreement JSON file (repeatable)",
    )


def _add_constraint_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pin", help="comma-separated course ids to force in")
    parser.add_argument("--exclude", help="comma-separated course ids to ban")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="articopt",
        description="Optimal academic plans from articulation agreements",
    )
    subcommands = parser.add_subparsers(dest="command", required=True)

    validate = subcommands.add_parser("validate", help="check documents")
    _add_selection_flags(validate)
    validate.set_defaults(handler=_cmd_validate)

    solve_cmd = subcommands.add_parser("solve", help="compute optimal plans")
    _add_selection_flags(solve_cmd)
    _add_constraint_flags(solve_cmd)
    solve_cmd.add_argument("--format", choices=("md", "json"), default="json")
    solve_cmd.add_argument("--all-optima", action="store_true")
    solve_cmd.set_defaults(handler=_cmd_solve)

    report_cmd = subcommands.add_parser("report", help="emit the combined report")
    _add_selection_flags(report_cmd)
    _add_constraint_flags(report_cmd)
    report_cmd.add_argument("--format", choices=("md", "json"), default="md")
    report_cmd.add_argument("--unit-cap", type=float, default=60.0)
    report_cmd.set_defaults(handler=_cmd_report)

    score = subcommands.add_parser("score", help="grade a candidate plan")
    _add_selection_flags(score)
    score.add_argument("--plan", required=True, help="comma-separated course ids")
    score.set_defaults(handler=_cmd_score)

    stats = subcommands.add_parser("stats", help="statistics utilities")
    stats_sub = stats.add_subparsers(dest="stats_command", required=True)

    welch = stats_sub.add_parser("welch", help="Welch's two-tailed t-test")
    welch.add_argument("--m1", type=float)
    welch.add_argument("--sd1", type=float)
    welch.add_argument("--n1", type=int)
    welch.add_argument("--m2", type=float)
    welch.add_argument("--sd2", type=float)
    welch.add_argument("--n2", type=int)
    welch.add_argument("--csv", help="long-format CSV: group,value")
    welch.set_defaults(handler=_cmd_stats_welch)

    alpha = stats_sub.add_parser("alpha", help="Cronbach's alpha")
    alpha.add_argument("--csv", required=True, help="respondents-by-items CSV")
    alpha.set_defaults(handler=_cmd_stats_alpha)

    serve = subcommands.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--data", required=True, help="directory of JSON documents")
    serve.set_defaults(handler=_cmd_serve)

    return parser


def run(
    argv: list[str],
    stdout: IO[str] | None = None,
    stderr: IO[str] | None = None,
) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return ExitCode.OK if exc.code == 0 else ExitCode.USAGE
    try:
        return args.handler(args, out, err)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return ExitCode.USAGE
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return ExitCode.VALIDATION
    except InfeasibleError as exc:
        print(f"error: {exc}", file=err)
        for entry in exc.unsatisfiable:
            print(
                f"  unsatisfiable: {entry['agreement_id']} / {entry['label']}",
                file=err,
            )
        return ExitCode.INFEASIBLE
    except (UniverseTooLargeError, ExplosionError, DegenerateDataError) as exc:
        print(f"error: {exc}", file=err)
        return ExitCode.INFEASIBLE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
