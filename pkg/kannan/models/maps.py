"""
Self-maps on lab spaces.
"""
from abc import ABC, abstractmethod
from fractions import Fraction
from math import floor
from typing import Callable, Dict, Mapping, Sequence

from kannan.errors import ClosureError, SpecError
from kannan.models.catalog import get_map_name
from kannan.models.scalar import Scalar, format_scalar, parse_scalar
from kannan.models.spaces import FiniteSpace, Point, PointValue, Space


class SelfMap(ABC):
    kind: str = ""

    def __init__(self, space: Space):
        self.space = space

    @property
    def name(self) -> str:
        return get_map_name(self.kind)

    @abstractmethod
    def _rule(self, value: PointValue) -> PointValue:
        ...

    def apply(self, p: Point) -> Point:
        self.space.require(p)
        try:
            image = self._rule(p.value)
        except (ArithmeticError, ValueError, TypeError, KeyError):
            raise ClosureError(self.name, p, "undefined")
        if not self.space.contains(image):
            raise ClosureError(self.name, p, image)
        return Point(self.space.name, image)

    def iterate(self, p: Point, times: int) -> Point:
        for _ in range(times):
            p = self.apply(p)
        return p

    def describe(self) -> dict:
        return {"kind": self.kind}


class TableMap(SelfMap):
    kind = "table"

    def __init__(self, space: FiniteSpace, assign: Mapping[str, str]):
        if not isinstance(space, FiniteSpace):
            raise SpecError("table maps live on finite spaces")
        super().__init__(space)
        assign = {str(k): str(v) for k, v in assign.items()}
        missing = [label for label in space.labels if label not in assign]
        extra = [label for label in assign if label not in space.labels]
        if missing or extra:
            raise SpecError(f"table must assign every label exactly once (missing {missing}, unknown {extra})")
        # замкнутость проверяется сразу для всей таблицы
        for source, target in assign.items():
            if not space.contains(target):
                raise ClosureError(self.name, source, target)
        self.assign: Dict[str, str] = assign

    @classmethod
    def from_digits(cls, space: FiniteSpace, digits: Sequence[int]) -> "TableMap":
        return cls(space, {label: space.labels[d] for label, d in zip(space.labels, digits)})

    @property
    def map_id(self) -> str:
        labels = self.space.labels
        return "".join(str(labels.index(self.assign[label])) for label in labels)

    def _rule(self, value: str) -> str:
        return self.assign[value]

    def describe(self) -> dict:
        return {"kind": self.kind, "assign": dict(self.assign)}


class Scale(SelfMap):
    kind = "scale"

    def __init__(self, space: Space, c):
        super().__init__(space)
        self.c: Scalar = parse_scalar(c)

    def _rule(self, value: Fraction) -> Fraction:
        return self.c * value

    def describe(self) -> dict:
        return {"kind": self.kind, "c": format_scalar(self.c)}


class StairScale(SelfMap):
    """x -> x/(n+1), где n - единственное натуральное с n-1 <= x < n"""
    kind = "stair_scale"

    @staticmethod
    def branch(value: Fraction) -> int:
        if value < 0:
            raise ValueError("stair scale is defined on [0, inf)")
        return floor(value) + 1

    def _rule(self, value: Fraction) -> Fraction:
        return value / (self.branch(value) + 1)


class PiecewiseDrop(SelfMap):
    kind = "piecewise_drop"

    def _rule(self, value: Fraction) -> Fraction:
        return Fraction(-1) if value == 2 else Fraction(0)


class TripleNat(SelfMap):
    kind = "triple_nat"

    def _rule(self, value: Fraction) -> Fraction:
        return 3 * value


class Custom(SelfMap):
    kind = "custom"

    def __init__(self, space: Space, rule: Callable[[PointValue], PointValue], label: str = "custom"):
        super().__init__(space)
        self.rule = rule
        self.label = label

    def _rule(self, value: PointValue) -> PointValue:
        return self.rule(value)

    def describe(self) -> dict:
        return {"kind": self.kind, "label": self.label}


def identity_map(space: Space) -> Custom:
    return Custom(space, lambda value: value, label="identity")


def constant_map(space: Space, target: Point) -> Custom:
    space.require(target)
    return Custom(space, lambda value: target.value, label=f"constant({target})")
