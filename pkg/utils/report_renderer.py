"""
Rendering of run outputs: JSON, CSV (trace / census) and human text through Jinja2 templates.
"""
import csv
import io
import json
import os
from typing import Any, Dict, Iterable, List, Optional, Sequence

from jinja2 import Environment, FileSystemLoader, StrictUndefined
from pydantic import BaseModel

from kannan.models.reports import RunOutput
from kannan.models.scalar import approx, parse_scalar

project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
templates_dir = os.path.join(project_root, 'templates')


def exact_and_approx(value) -> str:
    """159/260 (≈0.611538): точное значение и явно помеченное приближение"""
    if value is None:
        return "undefined"
    text = str(value)
    try:
        scalar = parse_scalar(text)
    except ValueError:
        return text
    if scalar.denominator == 1:
        return text
    return f"{text} ({approx(scalar)})"


def _environment() -> Environment:
    env = Environment(
        loader=FileSystemLoader(templates_dir),
        undefined=StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    env.filters['scalar'] = exact_and_approx
    return env


def render_json(config: Dict[str, Any], result: BaseModel) -> str:
    output = RunOutput(config=config, result=result.model_dump(mode="json"))
    return json.dumps(output.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"


def render_csv(config: Dict[str, Any], header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    buffer.write("# config: " + json.dumps(config, sort_keys=True, ensure_ascii=False) + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_human(config: Dict[str, Any], result: BaseModel, template_name: str) -> str:
    template = _environment().get_template(template_name)
    header = "# config: " + json.dumps(config, sort_keys=True, ensure_ascii=False) + "\n"
    return header + template.render(config=config, result=result.model_dump(mode="json"))


def trace_rows(orbit: Dict[str, Any]) -> List[List[str]]:
    """Строки step, point, gap; у последней точки зазора нет"""
    points, gaps = orbit["points"], orbit["gaps"]
    return [[str(step), point, gaps[step] if step < len(gaps) else ""] for step, point in enumerate(points)]


def census_rows(census: Dict[str, Any]) -> List[List[str]]:
    rows = []
    for row in census["rows"]:
        rows.append(
            [row["map_id"]]
            + [str(row["satisfies"][label]).lower() for label in census["conditions"]]
            + [str(row["fixed_point_count"]), str(row["picard_converges_from_all_starts"]).lower(),
               row["common_limit"] or ""]
        )
    return rows


def write_output(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        print(text, end="")
