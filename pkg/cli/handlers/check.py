import argparse
import logging

from cli.create_cli import Router
from cli.utils.loaders import load_conditions, load_pairs, load_space_and_map
from cli.utils.output import render
from cli.utils.validation import ExitCode, expectation_met
from kannan.conditions import evaluate_condition
from utils.report_renderer import write_output

logger = logging.getLogger(__name__)

check_router = Router()


@check_router.command("check", help="check contractive conditions over an explicit pair set")
def cmd_check(args: argparse.Namespace) -> int:
    spec, space, m = load_space_and_map(args.space, args.map)
    pairs = load_pairs(args.pairs, spec, space, args.seed)
    conditions = load_conditions(args.condition)

    # один документ на условие, в порядке флагов --condition
    reports = [evaluate_condition(c, space, m, pairs) for c in conditions]
    write_output("".join(render(args, report, "check.txt.j2") for report in reports), args.out)

    if all(expectation_met(args.expect, report.holds) for report in reports):
        return ExitCode.OK
    logger.warning("check: verdicts do not match --expect %s", args.expect)
    return ExitCode.EXPECTATION_MISMATCH
