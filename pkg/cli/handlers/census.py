import argparse
import logging

from cli.create_cli import Router
from cli.utils.loaders import load_condition, load_space
from cli.utils.output import emit
from cli.utils.validation import ExitCode
from kannan import settings
from kannan.errors import SpecError
from kannan.models.spaces import FiniteSpace
from kannan.oracle import enumerate_census, random_finite_space, raise_on_defects
from utils.report_renderer import census_rows

logger = logging.getLogger(__name__)

census_router = Router()


def _arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--size", type=int, help="size of a seeded random finite space")
    parser.add_argument("--mode", choices=("unit_band", "line"), default="unit_band")
    parser.add_argument("--workers", type=int, default=settings.WORKERS)


def _census_space(args: argparse.Namespace) -> FiniteSpace:
    if args.space:
        _, space = load_space(args.space)
        if not isinstance(space, FiniteSpace):
            raise SpecError("census runs on finite spaces only")
        return space
    if args.size is None:
        raise SpecError("census needs --space (finite) or --size")
    return random_finite_space(args.size, args.seed, args.mode)


@census_router.command("census", help="classify every self-map of a finite space", arguments=_arguments)
def cmd_census(args: argparse.Namespace) -> int:
    conditions = [load_condition(value) for value in (args.condition or [])]
    report = enumerate_census(_census_space(args), conditions, workers=args.workers)
    labels = report.conditions
    emit(args, report, "census.txt.j2",
         csv_header=["map_id", *labels, "fixed_point_count", "converges", "common_limit"],
         csv_rows=census_rows)
    raise_on_defects(report)
    logger.info("census: %d map(s), no theorem contradictions", len(report.rows))
    return ExitCode.OK
