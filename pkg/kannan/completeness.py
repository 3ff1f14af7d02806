"""
Completeness lab.

From a Cauchy sequence without a limit in the space, build the fixed-point-free
map that still satisfies the strict Kannan condition; also verify the complete,
non-compact answer space (GornickiNat with x -> 3x).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np

from kannan.conditions import PairSet, evaluate_condition, sample_pairs
from kannan.errors import ConstructionError
from kannan.models.maps import Custom, TripleNat
from kannan.models.reports import (ConstructionEntry, CounterexampleReport, GornickiReport, PairSource)
from kannan.models.scalar import HALF, Scalar
from kannan.models.spaces import GornickiNat, Point, ReciprocalSet, Space
from kannan.models.specs import StrictKannan

logger = logging.getLogger(__name__)

_MAX_INDEX_BITS = 256
WITNESS_CHECK_PREFIX = 64


@dataclass(frozen=True)
class IncompleteWitness:
    """
    Cauchy-последовательность x_1, x_2, ... без предела в пространстве,
    с сертифицированными оценками.
    """
    space: Space
    term: Callable[[int], Point]
    index_of: Callable[[Point], Optional[int]]
    gap_lower_bound: Callable[[int], Scalar]
    tail_bound: Callable[[int], Scalar]
    distance_to_set_lower_bound: Optional[Callable[[Point], Scalar]] = None
    label: str = "witness"


def build_reciprocal_witness() -> IncompleteWitness:
    space = ReciprocalSet()
    return IncompleteWitness(
        space=space,
        term=lambda n: space.point(Fraction(1, n)),
        index_of=lambda p: space.require(p).value.denominator,
        # ближайший сосед 1/n - это 1/(n+1)
        gap_lower_bound=lambda n: Fraction(1, n * (n + 1)),
        tail_bound=lambda n: Fraction(1, n),
        label="x_n = 1/n",
    )


def _minimal_index(tail_bound: Callable[[int], Scalar], threshold: Scalar, lower: int) -> int:
    """Наименьший n >= lower с tail_bound(n) < threshold; tail_bound невозрастающая"""
    if threshold <= 0:
        raise ConstructionError(f"non-positive threshold {threshold}")
    if tail_bound(lower) < threshold:
        return lower
    low, high = lower, lower + 1
    while not tail_bound(high) < threshold:
        low, high = high, lower + 2 * (high - lower)
        if high.bit_length() > _MAX_INDEX_BITS:
            raise ConstructionError(f"tail bound never drops below {threshold}")
    while high - low > 1:
        middle = (low + high) // 2
        if tail_bound(middle) < threshold:
            high = middle
        else:
            low = middle
    return high


@dataclass
class ConstructedMap:
    witness: IncompleteWitness
    _cache: Dict[Point, int] = field(default_factory=dict, repr=False)

    def index_rule(self, p: Point) -> int:
        if p in self._cache:
            return self._cache[p]
        w = self.witness
        source = w.index_of(p)
        if source is not None:
            gap = w.gap_lower_bound(source)
            if gap <= 0:
                raise ConstructionError(f"gap lower bound at index {source} is not positive")
            target = _minimal_index(w.tail_bound, HALF * gap, source + 1)
        else:
            if w.distance_to_set_lower_bound is None:
                raise ConstructionError(f"{p} lies outside the sequence and the witness has no d(x, A) bound")
            bound = w.distance_to_set_lower_bound(p)
            if bound <= 0:
                raise ConstructionError(f"d({p}, A) lower bound is not positive")
            target = _minimal_index(w.tail_bound, HALF * bound, 1)
        self._cache[p] = target
        return target

    def image(self, p: Point) -> Point:
        return self.witness.term(self.index_rule(p))

    def as_self_map(self) -> Custom:
        space = self.witness.space
        return Custom(space, lambda value: self.image(space.point(value)).value, label="completeness_counterexample")


def check_witness(w: IncompleteWitness, prefix: int = WITNESS_CHECK_PREFIX) -> None:
    """
    Выборочная проверка оценок свидетеля на первых prefix членах:
    члены попарно различны, tail_bound не возрастает и мажорирует хвост,
    gap_lower_bound(n) положительна и не больше расстояния от x_n до любого другого члена.
    """
    if prefix < 2:
        raise ValueError("witness check prefix must be at least 2")
    terms = [w.term(n) for n in range(1, prefix + 1)]
    dist = [[w.space.dist(p, q) for q in terms] for p in terms]

    for n, p in enumerate(terms, start=1):
        if w.index_of(p) != n:
            raise ConstructionError(f"{w.label}: index_of(x_{n}) = {w.index_of(p)}")
    for i in range(prefix):
        for j in range(i + 1, prefix):
            if dist[i][j] == 0:
                raise ConstructionError(f"{w.label}: x_{i + 1} and x_{j + 1} coincide")

    for n in range(1, prefix + 1):
        gap = w.gap_lower_bound(n)
        if gap <= 0:
            raise ConstructionError(f"{w.label}: gap lower bound at index {n} is not positive")
        nearest = min(dist[n - 1][k] for k in range(prefix) if k != n - 1)
        if gap > nearest:
            raise ConstructionError(f"{w.label}: gap lower bound {gap} at index {n} exceeds "
                                    f"the distance {nearest} to another term")

    tails = [w.tail_bound(n) for n in range(1, prefix + 1)]
    for n in range(1, prefix):
        if tails[n] > tails[n - 1]:
            raise ConstructionError(f"{w.label}: tail bound increases at index {n + 1}")

    # диаметр хвоста x_n, ..., x_prefix
    diameter = Fraction(0)
    for n in range(prefix, 0, -1):
        diameter = max([diameter] + dist[n - 1][n:])
        tail = tails[n - 1]
        if tail < diameter:
            raise ConstructionError(f"{w.label}: tail bound {tail} at index {n} is below "
                                    f"the tail diameter {diameter}")
    logger.debug("witness %s passed the check on %d term(s)", w.label, prefix)


def construct_counterexample_map(w: IncompleteWitness) -> ConstructedMap:
    check_witness(w)
    return ConstructedMap(w)


def scan_fixed_points(cm: ConstructedMap, count: int) -> List[Point]:
    terms = [cm.witness.term(n) for n in range(1, count + 1)]
    return [p for p in terms if cm.image(p) == p]


def verify_counterexample(cm: ConstructedMap, prefix: int) -> CounterexampleReport:
    if prefix < 1:
        raise ValueError("prefix must be positive")
    w = cm.witness
    terms = [w.term(n) for n in range(1, prefix + 1)]
    pairs = PairSet(sample_pairs(w.space, terms).points, PairSource(kind="sample", space_size=prefix))
    report = evaluate_condition(StrictKannan(), w.space, cm.as_self_map(), pairs)
    report.notes.append(f"first {prefix} terms of {w.label}, all distinct pairs")

    construction = [ConstructionEntry(source_index=n, target_index=cm.index_rule(p))
                    for n, p in enumerate(terms, start=1)]
    fixed = [str(p) for p in terms if cm.image(p) == p]
    logger.info("counterexample on %s: %s over %d pair(s)", w.label,
                "holds" if report.holds else "violated", report.pairs_checked)
    return CounterexampleReport(report=report, construction=construction, fixed_points=fixed)


def _exact_quotient(numerator: np.ndarray, denominator) -> np.ndarray:
    quotient, remainder = np.divmod(numerator, denominator)
    if np.any(remainder != 0):
        raise ArithmeticError("inexact common-denominator conversion")
    return quotient


def verify_gornicki_answer(n: int) -> GornickiReport:
    """
    Полный перебор 1 <= x < y <= n для d(x,y) = 1 + |1/x - 1/y| и Tx = 3x.
    Все величины приводятся к знаменателю D = 9xy и сравниваются как целые числители.
    """
    if n < 2:
        raise ValueError("N must be at least 2")
    space = GornickiNat()
    triple = TripleNat(space)
    # 18 n^3 ограничивает промежуточные произведения
    dtype = np.int64 if 18 * n ** 3 < 2 ** 62 else object

    closed_forms_ok = holds = in_band = True
    first_failure: Optional[List[int]] = None
    pairs = 0

    for x in range(1, n):
        y = np.array(range(x + 1, n + 1), dtype=dtype)
        pairs += len(y)
        tx, ty = 3 * x, 3 * y
        common = 9 * x * y

        lhs = _exact_quotient(np.abs(ty - tx) * common, tx * ty)
        rhs_x = _exact_quotient(np.abs(tx - x) * common, x * tx)
        rhs_y = _exact_quotient(np.abs(ty - y) * common, y * ty)

        closed = (lhs == 3 * y - 3 * x) & (rhs_x + rhs_y == 2 * (3 * y + 3 * x))
        strict = 2 * lhs < rhs_x + rhs_y
        band = np.abs(y - x) <= x * y

        for ok, name in ((closed, "closed"), (strict, "strict"), (band, "band")):
            if not np.all(ok):
                bad = int(y[np.argmin(ok)])
                first_failure = first_failure or [x, bad]
                if name == "closed":
                    closed_forms_ok = False
                elif name == "strict":
                    holds = False
                else:
                    in_band = False

    # сверка векторной проверки с точным проверяющим на начальном отрезке
    head = [space.point(v) for v in range(1, min(n, 40) + 1)]
    spot = evaluate_condition(StrictKannan(), space, triple, sample_pairs(space, head))
    holds = holds and spot.holds

    fixed = [x for x in range(1, n + 1) if triple.apply(space.point(x)).value == x]
    logger.info("Górnicki answer up to N=%d: %d pair(s), holds=%s", n, pairs, holds)
    return GornickiReport(
        n=n,
        pairs_checked=pairs,
        closed_forms_ok=closed_forms_ok,
        holds=holds,
        distances_in_band=in_band,
        fixed_points=fixed,
        first_failure=first_failure,
    )
