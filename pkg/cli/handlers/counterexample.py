import argparse

from cli.create_cli import Router
from cli.utils.output import emit
from cli.utils.validation import ExitCode, expectation_met
from kannan import settings
from kannan.completeness import build_reciprocal_witness, construct_counterexample_map, verify_counterexample

counterexample_router = Router()


def _arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--prefix", type=int, default=settings.COUNTEREXAMPLE_PREFIX,
                        help="number of sequence terms whose pairs are checked")


@counterexample_router.command("counterexample", help="fixed-point-free strict Kannan map on an incomplete space",
                               arguments=_arguments)
def cmd_counterexample(args: argparse.Namespace) -> int:
    cm = construct_counterexample_map(build_reciprocal_witness())
    report = verify_counterexample(cm, args.prefix)
    emit(args, report, "counterexample.txt.j2")
    return ExitCode.OK if expectation_met(args.expect, report.report.holds) else ExitCode.EXPECTATION_MISMATCH
