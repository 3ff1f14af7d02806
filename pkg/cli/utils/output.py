import argparse
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from kannan.errors import SpecError
from utils.report_renderer import render_csv, render_human, render_json, write_output

# не влияют на результат: куда писать и сколько процессов считать
_NOT_ECHOED = ("handler", "out", "workers")


class RunConfig(BaseModel):
    """Полная конфигурация запуска; печатается в заголовке каждого вывода"""
    model_config = ConfigDict(extra="allow")

    command: str
    format: str

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        flags = {key: value for key, value in sorted(vars(args).items()) if key not in _NOT_ECHOED}
        return cls(**flags)

    def header(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")


def render(args: argparse.Namespace, result: BaseModel, template: str,
           csv_header: Optional[Sequence[str]] = None,
           csv_rows: Optional[Callable[[Dict[str, Any]], List[List[str]]]] = None) -> str:
    config = RunConfig.from_args(args).header()
    if args.format == "json":
        return render_json(config, result)
    if args.format == "csv":
        if csv_rows is None:
            raise SpecError(f"csv output is not available for '{args.command}'")
        return render_csv(config, csv_header, csv_rows(result.model_dump(mode="json")))
    return render_human(config, result, template)


def emit(args: argparse.Namespace, result: BaseModel, template: str, **csv) -> None:
    write_output(render(args, result, template, **csv), args.out)
