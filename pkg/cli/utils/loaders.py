"""
Loading spaces, maps, conditions and pair sources from CLI flags.
"""
from typing import List, Optional, Tuple

from pydantic import TypeAdapter

from cli.utils.validation import read_json_argument
from kannan import settings
from kannan.conditions import PairSet, exhaustive_pairs, sample_pairs
from kannan.errors import SpecError
from kannan.models.catalog import MAP_CATALOG, SPACE_CATALOG
from kannan.models.maps import SelfMap
from kannan.models.spaces import FiniteSpace, Point, Space, sample_points
from kannan.models.specs import ConditionKind, MapSpec, SpaceSpec

_space_adapter = TypeAdapter(SpaceSpec)
_map_adapter = TypeAdapter(MapSpec)
_condition_adapter = TypeAdapter(ConditionKind)

CONDITION_KINDS = ("strict_kannan", "fisher", "khan", "chen_yeh")


def _spec_payload(value: str, shorthand: tuple) -> dict:
    # "split_set" - сокращение для {"kind": "split_set"}
    if value in shorthand:
        return {"kind": value}
    payload = read_json_argument(value)
    if not isinstance(payload, dict):
        raise SpecError(f"expected a JSON object, got {type(payload).__name__}")
    return payload


def load_space(value: Optional[str]):
    if not value:
        raise SpecError("--space is required")
    spec = _space_adapter.validate_python(_spec_payload(value, tuple(SPACE_CATALOG)))
    return spec, spec.build()


def load_map(value: Optional[str], space: Space) -> SelfMap:
    if not value:
        raise SpecError("--map is required")
    spec = _map_adapter.validate_python(_spec_payload(value, tuple(MAP_CATALOG)))
    return spec.build(space)


def load_condition(value: str) -> ConditionKind:
    if ":" in value and value.split(":", 1)[0] in ("kannan_k", "iterated_kannan"):
        kind, argument = value.split(":", 1)
        payload = {"kind": kind, "k" if kind == "kannan_k" else "m": argument}
    else:
        payload = _spec_payload(value, CONDITION_KINDS)
    return _condition_adapter.validate_python(payload)


def load_conditions(values: Optional[List[str]]) -> List[ConditionKind]:
    return [load_condition(value) for value in (values or ["strict_kannan"])]


def load_pairs(value: Optional[str], spec, space: Space, seed: int) -> PairSet:
    """
    Источник пар: по умолчанию полный перебор для конечных пространств,
    для каталожных - выборка из описания или случайная выборка KANNAN_SAMPLE_SIZE точек.
    """
    if value is None:
        if isinstance(space, FiniteSpace):
            return exhaustive_pairs(space)
        if getattr(spec, "sample", None) is not None:
            return sample_pairs(space, spec.sample_points(space, 0, seed))
        return sample_pairs(space, sample_points(space, settings.SAMPLE_SIZE, seed), seed=seed)

    if value.startswith("sample:"):
        count = int(value.split(":", 1)[1])
        return sample_pairs(space, sample_points(space, count, seed), seed=seed)

    values = read_json_argument(value)
    if not isinstance(values, list):
        raise SpecError("--pairs expects a JSON list of points or sample:N")
    return sample_pairs(space, [space.point(v) for v in values])


def load_point(value: Optional[str], space: Space) -> Point:
    if value is None:
        raise SpecError("--x0 is required")
    return space.point(value)


def load_space_and_map(space_value: Optional[str], map_value: Optional[str]) -> Tuple[object, Space, SelfMap]:
    spec, space = load_space(space_value)
    return spec, space, load_map(map_value, space)
