"""
Brute-force oracle on finite spaces.

Finite spaces are compact, so every strict-Kannan self-map must be a Picard
operator; the census checks this for every self-map of a space.
"""
import logging
from fractions import Fraction
from itertools import product
from multiprocessing import Pool
from typing import List, Optional, Sequence, Tuple

import numpy as np

from kannan import settings
from kannan.conditions import evaluate_condition, evaluate_pair, exhaustive_pairs
from kannan.errors import CensusSizeError, TheoremContradictionError
from kannan.models.maps import TableMap
from kannan.models.reports import CensusReport, CensusRow, KhanCrossCheck, TightnessReport
from kannan.models.scalar import Scalar
from kannan.models.spaces import FiniteSpace
from kannan.models.specs import ChenYeh, ConditionKind, Fisher, Khan, StrictKannan
from kannan.picard import verify_picard_operator

logger = logging.getLogger(__name__)

MIN_SPACE, MAX_SPACE = 2, 8
KHAN_FLOAT_MARGIN = Fraction(1, 2 ** 20)


def random_finite_space(n: int, seed: int = 0, mode: str = "unit_band") -> FiniteSpace:
    """
    unit_band: расстояния вне диагонали из [1, 2] с малыми знаменателями,
    неравенство треугольника выполняется автоматически (1 + 1 >= 2).
    line: n различных рациональных точек на прямой с метрикой |a - b|.
    """
    if not MIN_SPACE <= n <= MAX_SPACE:
        raise CensusSizeError(f"random spaces have {MIN_SPACE}..{MAX_SPACE} points, got {n}")
    rng = np.random.default_rng(seed)
    labels = [f"p{i}" for i in range(n)]
    d = [[Fraction(0)] * n for _ in range(n)]

    if mode == "unit_band":
        for i in range(n):
            for j in range(i + 1, n):
                den = int(rng.integers(1, 7))
                d[i][j] = d[j][i] = 1 + Fraction(int(rng.integers(0, den + 1)), den)
    elif mode == "line":
        den = int(rng.integers(1, 7))
        numerators = rng.choice(4 * den * n, size=n, replace=False)
        values = [Fraction(int(k), den) for k in numerators]
        for i in range(n):
            for j in range(n):
                d[i][j] = abs(values[i] - values[j])
    else:
        raise ValueError(f"unknown generator mode {mode!r}")

    return FiniteSpace(labels, d)


def map_ids(space: FiniteSpace) -> int:
    total = len(space) ** len(space)
    if total > settings.CENSUS_MAX_MAPS:
        raise CensusSizeError(f"{total} self-maps exceed the census bound {settings.CENSUS_MAX_MAPS}")
    return total


def _digits(map_number: int, n: int) -> List[int]:
    digits = []
    for _ in range(n):
        map_number, digit = divmod(map_number, n)
        digits.append(digit)
    return digits[::-1]


def _with_strict(conditions: Sequence[ConditionKind]) -> List[ConditionKind]:
    conditions = list(conditions)
    if not any(isinstance(c, StrictKannan) for c in conditions):
        conditions.insert(0, StrictKannan())
    return conditions


def classify_map(space: FiniteSpace, m: TableMap, conditions: Sequence[ConditionKind]) -> CensusRow:
    pairs = exhaustive_pairs(space)
    satisfies = {c.label: evaluate_condition(c, space, m, pairs).holds for c in conditions}
    fixed_point_count = sum(1 for p in space.points() if m.apply(p) == p)
    converges, limit = verify_picard_operator(space, m)
    return CensusRow(
        map_id=m.map_id,
        satisfies=satisfies,
        fixed_point_count=fixed_point_count,
        picard_converges_from_all_starts=converges,
        common_limit=str(limit) if limit is not None else None,
    )


def _census_chunk(args: Tuple[FiniteSpace, List[ConditionKind], int, int]) -> List[CensusRow]:
    space, conditions, start, stop = args
    n = len(space)
    return [classify_map(space, TableMap.from_digits(space, _digits(i, n)), conditions) for i in range(start, stop)]


def _defects(row: CensusRow, conditions: Sequence[ConditionKind]) -> List[str]:
    defects = []
    for c in conditions:
        if not row.satisfies[c.label]:
            continue
        if isinstance(c, StrictKannan):
            if row.fixed_point_count != 1 or not row.picard_converges_from_all_starts:
                defects.append(f"map {row.map_id}: strict Kannan holds but fixed points = "
                               f"{row.fixed_point_count}, converges = {row.picard_converges_from_all_starts}")
        elif isinstance(c, (Fisher, Khan, ChenYeh)) and row.fixed_point_count < 1:
            defects.append(f"map {row.map_id}: {c.label} holds but there is no fixed point")
    return defects


def enumerate_census(space: FiniteSpace, conditions: Sequence[ConditionKind] = (),
                     workers: int = settings.WORKERS) -> CensusReport:
    """Одна строка на каждое отображение; порядок - числовой порядок map id"""
    total = map_ids(space)
    conditions = _with_strict(conditions)

    if workers > 1 and total > 1:
        chunk = -(-total // workers)
        jobs = [(space, conditions, start, min(start + chunk, total)) for start in range(0, total, chunk)]
        logger.info("census of %d maps on %d worker(s)", total, workers)
        with Pool(workers) as pool:
            rows = [row for part in pool.map(_census_chunk, jobs) for row in part]
    else:
        logger.info("census of %d maps (serial)", total)
        rows = _census_chunk((space, conditions, 0, total))

    rows.sort(key=lambda row: int(row.map_id, len(space)) if len(space) > 1 else 0)
    defects = [defect for row in rows for defect in _defects(row, conditions)]
    if defects:
        logger.error("census found %d theorem-contradiction defect(s)", len(defects))
    return CensusReport(
        space=space.describe(),
        conditions=[c.label for c in conditions],
        rows=rows,
        defects=defects,
    )


def raise_on_defects(report: CensusReport) -> CensusReport:
    if report.defects:
        raise TheoremContradictionError(report.defects)
    return report


def all_table_maps(space: FiniteSpace):
    map_ids(space)
    for digits in product(range(len(space)), repeat=len(space)):
        yield TableMap.from_digits(space, digits)


def tightness_scan(space: FiniteSpace) -> TightnessReport:
    """Максимум 2*d(Tx,Ty)/(d(x,Tx)+d(y,Ty)) по отображениям со строгим условием"""
    strict = StrictKannan()
    pairs = exhaustive_pairs(space)
    satisfying = 0
    best: Optional[Scalar] = None
    witness_map: Optional[str] = None
    witness_pair: Optional[List[str]] = None

    for m in all_table_maps(space):
        if not evaluate_condition(strict, space, m, pairs).holds:
            continue
        satisfying += 1
        for x, y in pairs:
            outcome = evaluate_pair(strict, space, m, x, y)
            ratio = 2 * outcome.lhs / outcome.displacement
            if best is None or ratio > best:
                best, witness_map, witness_pair = ratio, m.map_id, [str(x), str(y)]

    return TightnessReport(satisfying_maps=satisfying, ratio=best, map_id=witness_map, pair=witness_pair)


def _longdouble(value: Scalar) -> np.longdouble:
    return np.longdouble(value.numerator) / np.longdouble(value.denominator)


def cross_check_khan(space: FiniteSpace) -> KhanCrossCheck:
    """
    Точные вердикты Khan против вычисления в np.longdouble вдали от границы.
    Ширина мантиссы longdouble зависит от платформы (112, 63 или 52 бита) и попадает в отчёт.
    """
    khan = Khan()
    agreements = skipped = disagreements = 0
    first: Optional[List[str]] = None

    for m in all_table_maps(space):
        for x, y in exhaustive_pairs(space):
            outcome = evaluate_pair(khan, space, m, x, y)
            radicand = space.dist(x, m.apply(x)) * space.dist(y, m.apply(y))
            lhs, root = _longdouble(outcome.lhs), np.sqrt(_longdouble(radicand))
            if abs(lhs - root) <= _longdouble(KHAN_FLOAT_MARGIN):
                skipped += 1
                continue
            if bool(lhs < root) == outcome.ok:
                agreements += 1
            else:
                disagreements += 1
                first = first or [m.map_id, str(x), str(y)]

    return KhanCrossCheck(agreements=agreements, skipped=skipped, disagreements=disagreements,
                          first_disagreement=first, float_mantissa_bits=int(np.finfo(np.longdouble).nmant))
