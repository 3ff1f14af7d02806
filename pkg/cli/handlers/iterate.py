import argparse

from cli.create_cli import Router
from cli.utils.loaders import load_point, load_space_and_map
from cli.utils.output import emit
from cli.utils.validation import ExitCode, expectation_met, validate_horizon
from kannan.picard import run_picard
from utils.report_renderer import trace_rows

iterate_router = Router()


def _arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--x0", required=True, help="start point (scalar or label)")


@iterate_router.command("iterate", help="Picard iteration with proof-level diagnostics", arguments=_arguments)
def cmd_iterate(args: argparse.Namespace) -> int:
    _, space, m = load_space_and_map(args.space, args.map)
    run = run_picard(space, m, load_point(args.x0, space), validate_horizon(args.horizon))
    emit(args, run.to_report(), "iterate.txt.j2",
         csv_header=("step", "point", "gap"),
         csv_rows=lambda result: trace_rows(result["orbit"]))
    # --expect holds: итерация дошла до точной неподвижной точки
    if expectation_met(args.expect, run.fixed_point is not None):
        return ExitCode.OK
    return ExitCode.EXPECTATION_MISMATCH
