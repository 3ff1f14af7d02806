"""
Picard iteration with the diagnostics of the strict Kannan fixed point argument:
gap monotonicity, the pairwise orbit bound, Cauchy evidence and fixed point checks.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from math import ceil
from typing import List, Optional, Sequence, Tuple

from kannan import settings
from kannan.conditions import evaluate_condition, sample_pairs
from kannan.errors import TheoremContradictionError
from kannan.models.maps import SelfMap
from kannan.models.reports import FixedPointCheck, PicardReport
from kannan.models.scalar import HALF, ZERO, Scalar
from kannan.models.spaces import FiniteSpace, Point, Space
from kannan.models.specs import StrictKannan
from kannan.orbits import Orbit, orbit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PicardRun:
    orbit: Orbit
    gap_monotone: bool
    pairwise_bound_ok: bool
    gap_limit_evidence: Scalar
    fixed_point: Optional[Point]
    cauchy_evidence: Scalar

    def to_report(self) -> PicardReport:
        return PicardReport(
            orbit=self.orbit.to_report(),
            gap_monotone=self.gap_monotone,
            pairwise_bound_ok=self.pairwise_bound_ok,
            gap_limit_evidence=self.gap_limit_evidence,
            fixed_point=str(self.fixed_point) if self.fixed_point is not None else None,
            cauchy_evidence=self.cauchy_evidence,
        )


def _gap_monotone(gaps: Sequence[Scalar]) -> bool:
    # после s_{n-1} = 0 неподвижная точка уже достигнута
    return all(gaps[n] < gaps[n - 1] for n in range(1, len(gaps)) if gaps[n - 1] != 0)


def _pairwise_bound_ok(space: Space, points: Sequence[Point], gaps: Sequence[Scalar]) -> bool:
    """d(x_n, x_m) < (s_{n-1} + s_{m-1}) / 2 для всех 1 <= n < m"""
    for n, m in combinations(range(1, len(points)), 2):
        if points[n] == points[m]:
            continue
        if not space.dist(points[n], points[m]) < HALF * (gaps[n - 1] + gaps[m - 1]):
            logger.debug("pairwise bound fails at n=%d, m=%d", n, m)
            return False
    return True


def _cauchy_evidence(space: Space, points: Sequence[Point]) -> Scalar:
    tail = points[-max(1, ceil(len(points) / 4)):]
    return max((space.dist(p, q) for p, q in combinations(tail, 2)), default=ZERO)


def run_picard(space: Space, m: SelfMap, x0: Point, horizon: int = settings.DEFAULT_HORIZON) -> PicardRun:
    if horizon > settings.MAX_PAIRWISE_HORIZON:
        raise ValueError(f"horizon {horizon} exceeds the pairwise-check cap {settings.MAX_PAIRWISE_HORIZON}")
    o = orbit(m, x0, horizon)

    fixed = o.fixed_point
    if fixed is not None:
        assert m.apply(fixed) == fixed, "orbit reported a fixed point that moves"

    run = PicardRun(
        orbit=o,
        gap_monotone=_gap_monotone(o.gaps),
        pairwise_bound_ok=_pairwise_bound_ok(space, o.points, o.gaps),
        gap_limit_evidence=o.gaps[-1],
        fixed_point=fixed,
        cauchy_evidence=_cauchy_evidence(space, o.points),
    )
    logger.debug("Picard %s from %s: %s, gap_monotone=%s", m.name, x0, o.status.kind, run.gap_monotone)
    return run


def verify_fixed_point(space: Space, m: SelfMap, z: Point) -> FixedPointCheck:
    residual = space.dist(z, m.apply(z))
    return FixedPointCheck(point=str(z), is_fixed=residual == 0, residual=residual)


def uniqueness_probe(space: Space, m: SelfMap, candidates: Sequence[Point]) -> List[Point]:
    """Все кандидаты с нулевой невязкой; два различных при строгом условии на кандидатах - противоречие"""
    found = [z for z in candidates if verify_fixed_point(space, m, z).is_fixed]
    if len(found) > 1:
        # проверка согласованности: пара неподвижных точек сама нарушает строгое условие
        pairs = sample_pairs(space, list(dict.fromkeys(candidates)))
        report = evaluate_condition(StrictKannan(), space, m, pairs)
        if report.holds:
            raise TheoremContradictionError(
                [f"strict Kannan holds on {report.pairs_checked} candidate pair(s) yet {len(found)} fixed points: "
                 f"{', '.join(map(str, found))}"]
            )
    return found


def verify_picard_operator(space: FiniteSpace, m: SelfMap) -> Tuple[bool, Optional[Point]]:
    """Сходится ли итерация из каждой точки к одной и той же неподвижной точке за |X| шагов"""
    limits = set()
    for start in space.points():
        limit = orbit(m, start, len(space)).fixed_point
        if limit is None:
            return False, None
        limits.add(limit)
    if len(limits) != 1:
        return False, None
    return True, limits.pop()
