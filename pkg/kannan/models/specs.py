"""
JSON specs of spaces, maps and contractive conditions (discriminated by "kind").
"""
from typing import Annotated, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from kannan.models.maps import PiecewiseDrop, Scale, SelfMap, StairScale, TableMap, TripleNat
from kannan.models.scalar import HALF, ZERO, Scalar, ScalarField, format_scalar
from kannan.models.spaces import (FiniteSpace, GornickiNat, HalfLineUsual, Point, ReciprocalSet, Space,
                                  SplitSet, UnitIntervalRight, sample_points)

CATALOG_SPACES = {
    "gornicki_nat": GornickiNat,
    "half_line": HalfLineUsual,
    "unit_interval_right": UnitIntervalRight,
    "split_set": SplitSet,
    "reciprocal": ReciprocalSet,
}


class FiniteSpaceSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["finite"]
    labels: List[str]
    d: List[List[ScalarField]]

    def build(self) -> FiniteSpace:
        return FiniteSpace(self.labels, self.d)

    def sample_points(self, space: FiniteSpace, count: int, seed: int) -> List[Point]:
        return space.points()


class CatalogSpaceSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["gornicki_nat", "half_line", "unit_interval_right", "split_set", "reciprocal"]
    sample: Optional[List[ScalarField]] = Field(None, description="explicit rational sample of the space")

    def build(self) -> Space:
        return CATALOG_SPACES[self.kind]()

    def sample_points(self, space: Space, count: int, seed: int) -> List[Point]:
        if self.sample is not None:
            return [space.point(value) for value in self.sample]
        return sample_points(space, count, seed)


SpaceSpec = Annotated[Union[FiniteSpaceSpec, CatalogSpaceSpec], Field(discriminator="kind")]


class TableMapSpec(BaseModel):
    kind: Literal["table"]
    assign: Dict[str, str]

    def build(self, space: Space) -> SelfMap:
        return TableMap(space, self.assign)


class ScaleSpec(BaseModel):
    kind: Literal["scale"]
    c: ScalarField

    def build(self, space: Space) -> SelfMap:
        return Scale(space, self.c)


class RuleMapSpec(BaseModel):
    kind: Literal["stair_scale", "piecewise_drop", "triple_nat"]

    def build(self, space: Space) -> SelfMap:
        rules = {"stair_scale": StairScale, "piecewise_drop": PiecewiseDrop, "triple_nat": TripleNat}
        return rules[self.kind](space)


MapSpec = Annotated[Union[TableMapSpec, ScaleSpec, RuleMapSpec], Field(discriminator="kind")]


class KannanK(BaseModel):
    kind: Literal["kannan_k"] = "kannan_k"
    k: ScalarField

    @field_validator("k")
    @classmethod
    def _k_in_range(cls, k: Scalar) -> Scalar:
        if not ZERO <= k < HALF:
            raise ValueError(f"Kannan constant must lie in [0, 1/2), got {format_scalar(k)}")
        return k

    @property
    def label(self) -> str:
        return f"kannan_k({format_scalar(self.k)})"


class StrictKannan(BaseModel):
    kind: Literal["strict_kannan"] = "strict_kannan"

    @property
    def label(self) -> str:
        return "strict_kannan"


class Fisher(BaseModel):
    kind: Literal["fisher"] = "fisher"

    @property
    def label(self) -> str:
        return "fisher"


class Khan(BaseModel):
    kind: Literal["khan"] = "khan"

    @property
    def label(self) -> str:
        return "khan"


class PairValue(BaseModel):
    x: str
    y: str
    value: ScalarField


class ChenYeh(BaseModel):
    """
    Таблицы a, b задаются на проверяемых парах; отсутствующие пары берут значение по умолчанию.
    """
    kind: Literal["chen_yeh"] = "chen_yeh"
    a: List[PairValue] = Field(default_factory=list)
    b: List[PairValue] = Field(default_factory=list)
    a_default: ScalarField = ZERO
    b_default: ScalarField = ZERO
    uniqueness_refinement: bool = False

    def lookup(self, table: str, x: Point, y: Point) -> Scalar:
        entries = self.a if table == "a" else self.b
        keys = {(str(x), str(y)), (str(y), str(x))}
        for entry in entries:
            if (entry.x, entry.y) in keys:
                return entry.value
        return self.a_default if table == "a" else self.b_default

    @property
    def label(self) -> str:
        if not self.a and not self.b and self.a_default == 0 and self.b_default == 0:
            return "chen_yeh(a=0,b=0)"
        return "chen_yeh"


class IteratedKannan(BaseModel):
    kind: Literal["iterated_kannan"] = "iterated_kannan"
    m: int = Field(..., ge=0)

    @property
    def label(self) -> str:
        return f"iterated_kannan(m={self.m})"


ConditionKind = Annotated[
    Union[KannanK, StrictKannan, Fisher, Khan, ChenYeh, IteratedKannan],
    Field(discriminator="kind"),
]
