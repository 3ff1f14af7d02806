"""
Gallery: every worked example end to end, each section judged against the expected verdict.
"""
import argparse
import logging
from fractions import Fraction
from typing import List, Optional

from cli.create_cli import Router
from cli.utils.loaders import load_space
from cli.utils.output import emit
from cli.utils.validation import ExitCode
from kannan import settings
from kannan.completeness import (build_reciprocal_witness, construct_counterexample_map, scan_fixed_points,
                                 verify_counterexample, verify_gornicki_answer)
from kannan.conditions import evaluate_condition, evaluate_pair, sample_pairs
from kannan.errors import SpecError
from kannan.models.maps import PiecewiseDrop, Scale, StairScale
from kannan.models.reports import GalleryReport, GallerySection
from kannan.models.scalar import format_scalar
from kannan.models.spaces import HalfLineUsual, SplitSet, UnitIntervalRight, sample_points
from kannan.models.specs import StrictKannan
from kannan.orbits import orbit, orbit_cluster_probe
from kannan.picard import run_picard, uniqueness_probe

logger = logging.getLogger(__name__)

gallery_router = Router()

CLUSTER_RADIUS = Fraction(1, 10)
CAUCHY_TOLERANCE = Fraction(1, 2 ** 15)


def _status(ok: bool) -> str:
    return "as-paper" if ok else "deviates"


def orbit_probes_section() -> GallerySection:
    half_line = HalfLineUsual()
    unit = UnitIntervalRight()
    stair = StairScale(half_line)

    probes = {
        "stair_scale_from_3/2": (orbit(stair, half_line.point("3/2"), 32), True),
        "scale_2_from_1": (orbit(Scale(half_line, 2), half_line.point(1), 16), False),
        "scale_1/2_on_[0,1)": (orbit(Scale(unit, "1/2"), unit.point("1/2"), 32), True),
    }
    details = {}
    ok = True
    for name, (o, expected) in probes.items():
        probe = orbit_cluster_probe(o, CLUSTER_RADIUS)
        details[name] = {"cluster_evidence": probe.cluster_evidence, "center": probe.center,
                         "diameter": format_scalar(probe.diameter)}
        ok = ok and probe.cluster_evidence == expected

    zero = half_line.point(0)
    details["stair_scale(0)"] = str(stair.apply(zero))
    ok = ok and stair.apply(zero) == zero
    return GallerySection(name="orbit_probes", status=_status(ok), details=details)


def picard_unit_interval_section() -> GallerySection:
    unit = UnitIntervalRight()
    run = run_picard(unit, Scale(unit, "1/2"), unit.point("1/2"), 20)
    gaps = run.orbit.gaps
    halving = all(gaps[i + 1] * 2 == gaps[i] for i in range(len(gaps) - 1))
    ok = (run.orbit.status.kind == "truncated" and run.gap_monotone and halving
          and run.cauchy_evidence < CAUCHY_TOLERANCE)
    details = {
        "status": run.orbit.status.kind,
        "gap_monotone": run.gap_monotone,
        "gaps_halving": halving,
        "cauchy_evidence": format_scalar(run.cauchy_evidence),
    }
    return GallerySection(name="picard_unit_interval", status=_status(ok), details=details)


def split_set_drop_section(space_value: Optional[str], seed: int) -> GallerySection:
    if space_value:
        spec, space = load_space(space_value)
        if not isinstance(space, SplitSet):
            raise SpecError(f"the drop example lives on split_set, got {spec.kind}")
        points = spec.sample_points(space, settings.SAMPLE_SIZE, seed)
    else:
        space = SplitSet()
        points = sample_points(space, settings.SAMPLE_SIZE, seed)

    m = PiecewiseDrop(space)
    strict = StrictKannan()
    report = evaluate_condition(strict, space, m, sample_pairs(space, points, seed=seed))
    fixed = uniqueness_probe(space, m, points)
    zero = space.point(0)
    reaches_zero = all(orbit(m, p, 3).fixed_point == zero for p in points)

    ok = report.holds and fixed == [zero] and reaches_zero
    details = {
        "sample_size": len(points),
        "pairs_checked": report.pairs_checked,
        "strict_kannan": "holds" if report.holds else "violated",
        "fixed_points": [str(z) for z in fixed],
        "all_starts_reach_0_within_3_steps": reaches_zero,
    }
    # d(Tx, T2) = d(0, -1) = 1 для любого x из (1, 2)
    outcome = evaluate_pair(strict, space, m, space.point("3/2"), space.point(2))
    details["d(T3/2, T2)"] = format_scalar(outcome.lhs)
    ok = ok and outcome.lhs == 1
    return GallerySection(name="split_set_drop", status=_status(ok), details=details)


def gornicki_answer_section(n: int) -> GallerySection:
    report = verify_gornicki_answer(n)
    return GallerySection(name="gornicki_answer", status=_status(report.confirmed),
                          details=report.model_dump(mode="json"))


def completeness_counterexample_section(prefix: int) -> GallerySection:
    w = build_reciprocal_witness()
    cm = construct_counterexample_map(w)
    targets = [cm.index_rule(w.term(1)), cm.index_rule(w.term(2))]
    verification = verify_counterexample(cm, prefix)
    spot = evaluate_pair(StrictKannan(), w.space, cm.as_self_map(), w.term(1), w.term(2))
    fixed = scan_fixed_points(cm, prefix)

    ok = (targets == [5, 13] and verification.report.holds and not verification.fixed_points
          and not fixed and spot.lhs == Fraction(8, 65) and spot.rhs == "159/260")
    details = {
        "targets": {"x_1": f"x_{targets[0]}", "x_2": f"x_{targets[1]}"},
        "pairs_checked": verification.report.pairs_checked,
        "strict_kannan": "holds" if verification.report.holds else "violated",
        "spot_pair": {"x": "1", "y": "1/2", "lhs": format_scalar(spot.lhs), "rhs": spot.rhs},
        "fixed_points": [str(p) for p in fixed],
    }
    return GallerySection(name="completeness_counterexample", status=_status(ok), details=details)


def run_gallery(space_value: Optional[str] = None, gornicki_n: int = settings.GORNICKI_N,
                prefix: int = settings.COUNTEREXAMPLE_PREFIX, seed: int = settings.SEED) -> GalleryReport:
    sections: List[GallerySection] = []
    for build in (
        orbit_probes_section,
        picard_unit_interval_section,
        lambda: split_set_drop_section(space_value, seed),
        lambda: gornicki_answer_section(gornicki_n),
        lambda: completeness_counterexample_section(prefix),
    ):
        section = build()
        logger.info("gallery section %s: %s", section.name, section.status)
        sections.append(section)
    return GalleryReport(sections=sections)


def _arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--gornicki-n", type=int, default=settings.GORNICKI_N)
    parser.add_argument("--prefix", type=int, default=settings.COUNTEREXAMPLE_PREFIX)


@gallery_router.command("gallery", help="run every worked example end to end", arguments=_arguments)
def cmd_gallery(args: argparse.Namespace) -> int:
    report = run_gallery(args.space, args.gornicki_n, args.prefix, args.seed)
    emit(args, report, "gallery.txt.j2")
    if report.passed:
        return ExitCode.OK
    failing = next(section for section in report.sections if section.status != "as-paper")
    logger.error("gallery section '%s' deviates from the expected verdict", failing.name)
    return ExitCode.EXPECTATION_MISMATCH
