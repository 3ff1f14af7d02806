import json
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from kannan.errors import (CensusSizeError, ClosureError, KannanLabError, MembershipError, MetricAxiomError,
                           SpecError, TheoremContradictionError)
from kannan.models.scalar import Scalar, parse_scalar


class ExitCode:
    OK = 0
    EXPECTATION_MISMATCH = 1
    CONFIG_ERROR = 2
    MEMBERSHIP_ERROR = 3
    THEOREM_CONTRADICTION = 4


def get_exit_code(error: Exception) -> int:
    if isinstance(error, TheoremContradictionError):
        return ExitCode.THEOREM_CONTRADICTION
    if isinstance(error, (MembershipError, ClosureError)):
        return ExitCode.MEMBERSHIP_ERROR
    if isinstance(error, (SpecError, MetricAxiomError, CensusSizeError, ValidationError, ValueError, OSError)):
        return ExitCode.CONFIG_ERROR
    if isinstance(error, KannanLabError):
        return ExitCode.CONFIG_ERROR
    raise error


def get_error_message(code: int, error: Exception) -> str:
    messages = {
        ExitCode.EXPECTATION_MISMATCH: "verdict does not match the expectation",
        ExitCode.CONFIG_ERROR: "configuration error",
        ExitCode.MEMBERSHIP_ERROR: "membership / closure error",
        ExitCode.THEOREM_CONTRADICTION: "THEOREM CONTRADICTION",
    }
    return f"{messages.get(code, 'unknown error')}: {error}"


def read_json_argument(value: str):
    """Инлайн-JSON или путь к JSON-файлу"""
    text = value.strip()
    if text[:1] in ("{", "["):
        return json.loads(text)
    path = Path(value)
    if not path.exists():
        raise SpecError(f"no such file: {value}")
    return json.loads(path.read_text(encoding="utf-8"))


def parse_scalar_list(value: Optional[str]) -> List[Scalar]:
    if not value:
        return []
    return [parse_scalar(item) for item in value.split(",") if item.strip()]


def validate_horizon(value: int) -> int:
    if value < 1:
        raise SpecError(f"horizon must be a positive integer, got {value}")
    return value


def expectation_met(expect: Optional[str], holds: bool) -> bool:
    if expect is None:
        return True
    return (expect == "holds") == holds
