"""
Exact checker for the contractive conditions of the catalog.

Every verdict refers only to the explicit pair set it was computed on.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence

from kannan.errors import InvalidConditionError
from kannan.models.maps import SelfMap
from kannan.models.reports import (ConditionReport, EpsDeltaEntry, EpsDeltaReport, PairSource,
                                   ViolatedVerdict, Violation)
from kannan.models.scalar import HALF, ONE, Ordering, Scalar, compare, format_scalar, lt_sqrt
from kannan.models.spaces import FiniteSpace, Point, Space
from kannan.models.specs import (ChenYeh, ConditionKind, Fisher, IteratedKannan, KannanK, Khan,
                                 StrictKannan)
from kannan.orbits import iterates

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairSet:
    points: List[Point]
    source: PairSource

    @property
    def domain_exhausted(self) -> bool:
        return self.source.kind == "exhaustive"

    def __len__(self) -> int:
        return comb(len(self.points), 2)

    def __iter__(self):
        return combinations(self.points, 2)


def exhaustive_pairs(space: FiniteSpace) -> PairSet:
    return PairSet(space.points(), PairSource(kind="exhaustive", space_size=len(space)))


def sample_pairs(space: Space, points: Sequence[Point], seed: Optional[int] = None) -> PairSet:
    """Все неупорядоченные пары различных точек выборки"""
    points = [space.require(p) for p in points]
    if len({p.value for p in points}) != len(points):
        raise ValueError("sample points must be distinct")
    return PairSet(points, PairSource(kind="sample", points=[str(p) for p in points], seed=seed))


@dataclass
class PairOutcome:
    ok: bool
    lhs: Scalar
    rhs: str
    terms: Dict[str, str] = field(default_factory=dict)
    displacement: Optional[Scalar] = None
    refinement_ok: Optional[bool] = None


def _strict(lhs: Scalar, rhs: Scalar) -> bool:
    return compare(lhs, rhs) is Ordering.LESS


def _chen_yeh(c: ChenYeh, lhs: Scalar, dxy: Scalar, dxtx: Scalar, dyty: Scalar,
              dxty: Scalar, dytx: Scalar, x: Point, y: Point) -> PairOutcome:
    a = c.lookup("a", x, y)
    b = c.lookup("b", x, y)
    if a < 0 or b < 0:
        raise InvalidConditionError(f"Chen-Yeh tables must be non-negative, got a={a}, b={b} at ({x}, {y})")

    rational_terms = {
        "d(x,y)": dxy,
        "kannan": HALF * (dxtx + dyty),
        "fisher": HALF * (dxty + dytx),
        "reciprocal": dxtx * dyty / dxy,
        "a_term": a * dxty * dytx,
    }
    cross = dxty * dytx
    # max(...) > lhs тогда и только тогда, когда хотя бы один член больше lhs
    ok = any(_strict(lhs, term) for term in rational_terms.values())
    ok = ok or lt_sqrt(lhs, dxtx * dyty)
    ok = ok or (b > 0 and lt_sqrt(lhs / b, cross))

    terms = {name: format_scalar(value) for name, value in rational_terms.items()}
    terms["khan"] = f"sqrt({format_scalar(dxtx * dyty)})"
    terms["b_term"] = f"{format_scalar(b)}*sqrt({format_scalar(cross)})"
    refinement = None
    if c.uniqueness_refinement:
        refinement = a <= ONE / dxy and b <= 1
    return PairOutcome(ok=ok, lhs=lhs, rhs="max(" + ", ".join(terms.values()) + ")",
                       terms=terms, refinement_ok=refinement)


def evaluate_pair(c: ConditionKind, space: Space, m: SelfMap, x: Point, y: Point) -> PairOutcome:
    if isinstance(c, IteratedKannan):
        xm, ym = m.iterate(x, c.m), m.iterate(y, c.m)
        txm, tym = m.apply(xm), m.apply(ym)
        lhs = space.dist(txm, tym)
        rhs = HALF * (space.dist(xm, txm) + space.dist(ym, tym))
        return PairOutcome(ok=_strict(lhs, rhs), lhs=lhs, rhs=format_scalar(rhs))

    tx, ty = m.apply(x), m.apply(y)
    lhs = space.dist(tx, ty)
    dxtx, dyty = space.dist(x, tx), space.dist(y, ty)
    displacement = dxtx + dyty

    if isinstance(c, KannanK):
        rhs = c.k * displacement
        outcome = PairOutcome(ok=compare(lhs, rhs) is not Ordering.GREATER, lhs=lhs, rhs=format_scalar(rhs))
    elif isinstance(c, StrictKannan):
        rhs = HALF * displacement
        outcome = PairOutcome(ok=_strict(lhs, rhs), lhs=lhs, rhs=format_scalar(rhs))
    elif isinstance(c, Fisher):
        rhs = HALF * (space.dist(x, ty) + space.dist(y, tx))
        outcome = PairOutcome(ok=_strict(lhs, rhs), lhs=lhs, rhs=format_scalar(rhs))
    elif isinstance(c, Khan):
        radicand = dxtx * dyty
        outcome = PairOutcome(ok=lt_sqrt(lhs, radicand), lhs=lhs, rhs=f"sqrt({format_scalar(radicand)})")
    elif isinstance(c, ChenYeh):
        outcome = _chen_yeh(c, lhs, space.dist(x, y), dxtx, dyty, space.dist(x, ty), space.dist(y, tx), x, y)
    else:
        raise InvalidConditionError(f"unknown condition {c!r}")

    outcome.displacement = displacement
    return outcome


def evaluate_condition(c: ConditionKind, space: Space, m: SelfMap, pairs: PairSet) -> ConditionReport:
    """
    Проверяет условие на явном множестве пар. Останавливается на первом нарушении
    в порядке множества пар; отчёт не утверждает ничего сверх проверенных пар.
    """
    checked = 0
    ratio: Optional[Scalar] = None
    refinement: Optional[bool] = True if isinstance(c, ChenYeh) and c.uniqueness_refinement else None
    zero_displacement = 0
    verdict = "holds"

    for x, y in pairs:
        outcome = evaluate_pair(c, space, m, x, y)
        checked += 1
        if outcome.displacement is not None:
            if outcome.displacement > 0:
                candidate = outcome.lhs / outcome.displacement
                ratio = candidate if ratio is None else max(ratio, candidate)
            else:
                zero_displacement += 1
        if outcome.refinement_ok is False:
            refinement = False
        if not outcome.ok:
            verdict = ViolatedVerdict(violated=Violation(
                x=str(x), y=str(y), lhs=outcome.lhs, rhs=outcome.rhs, terms=outcome.terms,
            ))
            break

    notes = []
    if isinstance(c, ChenYeh) and zero_displacement:
        notes.append(f"{zero_displacement} pair(s) with d(x,Tx)+d(y,Ty) = 0; a/b tables evaluated as supplied")
    if not pairs.domain_exhausted:
        notes.append("sample set only; no claim about the whole space")

    report = ConditionReport(
        condition=c.label,
        pair_source=pairs.source,
        pairs_checked=checked,
        domain_exhausted=pairs.domain_exhausted,
        verdict=verdict,
        kannan_ratio=ratio,
        refinement_ok=refinement,
        notes=notes,
    )
    logger.debug("%s on %s/%s: %s after %d pair(s)", c.label, space.name, m.name,
                 "holds" if report.holds else "violated", checked)
    return report


def replay_violation(report: ConditionReport, c: ConditionKind, space: Space, m: SelfMap) -> bool:
    """Повторная проверка свидетеля нарушения"""
    violation = report.violation
    if violation is None:
        return False
    outcome = evaluate_pair(c, space, m, space.point(violation.x), space.point(violation.y))
    return not outcome.ok and outcome.lhs == violation.lhs


def check_epsdelta_orbit(space: Space, m: SelfMap, x0: Point, eps_grid: Sequence[Scalar],
                         delta_candidates: Sequence[Scalar], horizon: int) -> EpsDeltaReport:
    """
    Конечная проверка: для всех 0 <= i < j <= horizon из d(T^i x0, T^j x0) < eps + delta
    следует d(T^{i+1} x0, T^{j+1} x0) <= eps. Только свидетельство, не доказательство.
    """
    if horizon < 2:
        raise ValueError("horizon must be at least 2")
    if any(v <= 0 for v in list(eps_grid) + list(delta_candidates)):
        raise ValueError("eps and delta must be positive")

    points = iterates(m, x0, horizon + 1)
    size = horizon + 2
    dist = [[space.dist(points[i], points[j]) for j in range(size)] for i in range(size)]

    def first_failure(eps: Scalar, delta: Scalar) -> Optional[List[int]]:
        for i, j in combinations(range(horizon + 1), 2):
            if dist[i][j] < eps + delta and dist[i + 1][j + 1] > eps:
                return [i, j]
        return None

    entries = []
    for eps in eps_grid:
        entry = EpsDeltaEntry(eps=eps, passed=False)
        for delta in delta_candidates:
            failing = first_failure(eps, delta)
            if failing is None:
                entry = EpsDeltaEntry(eps=eps, passed=True, delta=delta)
                break
            entry = EpsDeltaEntry(eps=eps, passed=False, failing_pair=failing)
        entries.append(entry)

    return EpsDeltaReport(start=str(x0), horizon=horizon, entries=entries)
