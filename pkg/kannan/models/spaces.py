"""
Metric spaces of the lab: explicit finite spaces and the catalog spaces over the rationals.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from kannan.errors import MembershipError, MetricAxiomError
from kannan.models.catalog import get_space_info, get_space_name
from kannan.models.reports import AxiomReport, SpaceFlags
from kannan.models.scalar import ONE, ZERO, Scalar, format_scalar, parse_scalar

logger = logging.getLogger(__name__)

PointValue = Union[Fraction, str]


@dataclass(frozen=True)
class Point:
    space: str
    value: PointValue

    def __str__(self) -> str:
        if isinstance(self.value, Fraction):
            return format_scalar(self.value)
        return str(self.value)


class Space(ABC):
    kind: str = ""
    is_finite: bool = False

    @property
    def name(self) -> str:
        return get_space_name(self.kind)

    @property
    def flags(self) -> SpaceFlags:
        info = get_space_info(self.kind)
        return SpaceFlags(
            complete=info["complete"],
            boundedly_compact=info["boundedly_compact"],
            compact=info["compact"],
            closed_subset_of_rn=info["closed_subset_of_rn"],
        )

    @abstractmethod
    def contains(self, value: PointValue) -> bool:
        ...

    @abstractmethod
    def _distance(self, a: PointValue, b: PointValue) -> Scalar:
        ...

    def coerce(self, value) -> PointValue:
        return parse_scalar(value)

    def point(self, value) -> Point:
        """Создать точку пространства с проверкой принадлежности"""
        try:
            coerced = self.coerce(value)
        except (ValueError, TypeError):
            raise MembershipError(self.name, value)
        if not self.contains(coerced):
            raise MembershipError(self.name, value)
        return Point(self.name, coerced)

    def require(self, p: Point) -> Point:
        if p.space != self.name or not self.contains(p.value):
            raise MembershipError(self.name, p)
        return p

    def dist(self, p: Point, q: Point) -> Scalar:
        self.require(p)
        self.require(q)
        if p.value == q.value:
            return ZERO
        return self._distance(p.value, q.value)

    def describe(self) -> dict:
        return {"kind": self.kind}


class RationalLineSpace(Space):
    """Подмножество рациональных чисел с обычной метрикой |x - y|"""

    def _distance(self, a: Fraction, b: Fraction) -> Scalar:
        return abs(a - b)

    def contains(self, value) -> bool:
        return isinstance(value, Fraction) and self._admits(value)

    @abstractmethod
    def _admits(self, value: Fraction) -> bool:
        ...


class HalfLineUsual(RationalLineSpace):
    kind = "half_line"

    def _admits(self, value: Fraction) -> bool:
        return value >= 0


class UnitIntervalRight(RationalLineSpace):
    kind = "unit_interval_right"

    def _admits(self, value: Fraction) -> bool:
        return 0 <= value < 1


class SplitSet(RationalLineSpace):
    kind = "split_set"

    def _admits(self, value: Fraction) -> bool:
        return value in (-1, 0) or 1 < value <= 2


class ReciprocalSet(RationalLineSpace):
    kind = "reciprocal"

    def _admits(self, value: Fraction) -> bool:
        return value > 0 and value.numerator == 1


class GornickiNat(Space):
    """Натуральные числа с метрикой d(x,y) = 1 + |1/x - 1/y| при x != y"""
    kind = "gornicki_nat"

    def contains(self, value) -> bool:
        return isinstance(value, Fraction) and value.denominator == 1 and value >= 1

    def _distance(self, a: Fraction, b: Fraction) -> Scalar:
        return ONE + abs(1 / a - 1 / b)


class FiniteSpace(Space):
    kind = "finite"
    is_finite = True

    def __init__(self, labels: Sequence[str], d: Sequence[Sequence], validate: bool = True):
        labels = [str(label) for label in labels]
        if not labels:
            raise MetricAxiomError("non-empty", ())
        if len(set(labels)) != len(labels):
            raise MetricAxiomError("distinct labels", tuple(labels))
        if len(d) != len(labels) or any(len(row) != len(labels) for row in d):
            raise MetricAxiomError("square matrix", (len(labels),))
        self.labels: List[str] = labels
        self.matrix: List[List[Scalar]] = [[parse_scalar(v) for v in row] for row in d]
        self._index: Dict[str, int] = {label: i for i, label in enumerate(labels)}
        if validate:
            report = verify_metric_axioms(self)
            if not report.passed:
                raise MetricAxiomError(report.failed_axiom, tuple(report.witness))

    def __len__(self) -> int:
        return len(self.labels)

    def __getstate__(self):
        return {"labels": self.labels, "matrix": self.matrix}

    def __setstate__(self, state):
        self.labels = state["labels"]
        self.matrix = state["matrix"]
        self._index = {label: i for i, label in enumerate(self.labels)}

    def coerce(self, value) -> str:
        return str(value)

    def contains(self, value) -> bool:
        return isinstance(value, str) and value in self._index

    def index_of(self, p: Point) -> int:
        self.require(p)
        return self._index[p.value]

    def points(self) -> List[Point]:
        return [Point(self.name, label) for label in self.labels]

    def _distance(self, a: str, b: str) -> Scalar:
        return self.matrix[self._index[a]][self._index[b]]

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "labels": list(self.labels),
            "d": [[format_scalar(v) for v in row] for row in self.matrix],
        }


def verify_metric_axioms(space: FiniteSpace) -> AxiomReport:
    """Проверка аксиом метрики; ошибка оформляется отчётом, а не исключением"""
    n = len(space.labels)
    d = space.matrix
    labels = space.labels
    witnesses: Dict[str, Optional[List[str]]] = {
        "symmetry": None, "identity": None, "positivity": None, "triangle": None,
    }

    for i, j in product(range(n), repeat=2):
        if witnesses["symmetry"] is None and d[i][j] != d[j][i]:
            witnesses["symmetry"] = [labels[i], labels[j]]
        if i == j and witnesses["identity"] is None and d[i][i] != 0:
            witnesses["identity"] = [labels[i], labels[i]]
        if i != j and witnesses["positivity"] is None and d[i][j] <= 0:
            witnesses["positivity"] = [labels[i], labels[j]]

    for i, j, k in product(range(n), repeat=3):
        if d[i][k] > d[i][j] + d[j][k]:
            witnesses["triangle"] = [labels[i], labels[j], labels[k]]
            break

    checks = {axiom: witness is None for axiom, witness in witnesses.items()}
    failed = next((axiom for axiom, ok in checks.items() if not ok), None)
    return AxiomReport(
        passed=failed is None,
        checks=checks,
        failed_axiom=failed,
        witness=witnesses[failed] if failed else None,
    )


def _distinguished(space: Space) -> List[Fraction]:
    return {
        "split_set": [Fraction(2), Fraction(-1), Fraction(0)],
        "half_line": [Fraction(0)],
        "unit_interval_right": [Fraction(0)],
        "reciprocal": [Fraction(1)],
        "gornicki_nat": [Fraction(1)],
    }.get(space.kind, [])


def _draw(space: Space, rng: np.random.Generator, count: int) -> Fraction:
    if space.kind == "gornicki_nat":
        return Fraction(int(rng.integers(2, 10 * count + 3)))
    if space.kind == "reciprocal":
        return Fraction(1, int(rng.integers(2, 10 * count + 3)))
    den = int(rng.integers(2, 64))
    if space.kind == "split_set":
        return 1 + Fraction(int(rng.integers(1, den)), den)
    if space.kind == "unit_interval_right":
        return Fraction(int(rng.integers(0, den)), den)
    return Fraction(int(rng.integers(0, 10 * den)), den)


def sample_points(space: Space, count: int, seed: int = 0) -> List[Point]:
    """
    Детерминированная рациональная выборка точек пространства.
    Особые точки из статьи (например 2, -1, 0 для SplitSet) идут первыми.
    """
    if count < 1:
        raise ValueError("sample size must be positive")
    if isinstance(space, FiniteSpace):
        return space.points()[:count]

    rng = np.random.default_rng(seed)
    values: List[Fraction] = []
    seen = set()
    for value in _distinguished(space):
        if len(values) < count:
            values.append(value)
            seen.add(value)

    attempts = 0
    while len(values) < count:
        attempts += 1
        if attempts > 1000 * count:
            raise ValueError(f"could not draw {count} distinct points of {space.name}")
        value = _draw(space, rng, count)
        if value not in seen:
            seen.add(value)
            values.append(value)

    logger.debug("sampled %d points of %s with seed %d", count, space.name, seed)
    return [space.point(value) for value in values]
