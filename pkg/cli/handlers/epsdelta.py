import argparse

from cli.create_cli import Router
from cli.utils.loaders import load_point, load_space_and_map
from cli.utils.output import emit
from cli.utils.validation import ExitCode, expectation_met, parse_scalar_list
from kannan.conditions import check_epsdelta_orbit

epsdelta_router = Router()


def _arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--x0", required=True)
    parser.add_argument("--eps", required=True, help="comma separated eps grid, e.g. 1/2,1/4")
    parser.add_argument("--delta", required=True, help="comma separated delta candidates")


@epsdelta_router.command("epsdelta", help="finite-horizon eps-delta orbit condition", arguments=_arguments)
def cmd_epsdelta(args: argparse.Namespace) -> int:
    _, space, m = load_space_and_map(args.space, args.map)
    report = check_epsdelta_orbit(space, m, load_point(args.x0, space), parse_scalar_list(args.eps),
                                  parse_scalar_list(args.delta), args.horizon)
    emit(args, report, "epsdelta.txt.j2")
    return ExitCode.OK if expectation_met(args.expect, report.passed) else ExitCode.EXPECTATION_MISMATCH
