import argparse
import json
import logging
from pathlib import Path

from pydantic import TypeAdapter

from cli.create_cli import Router
from cli.utils.validation import ExitCode
from kannan.models.reports import (CensusReport, ConditionReport, CounterexampleReport, EpsDeltaReport,
                                   GalleryReport, PicardReport, RunOutput)
from kannan.models.specs import ConditionKind, MapSpec, SpaceSpec

logger = logging.getLogger(__name__)

schema_router = Router()

INPUT_SCHEMAS = {
    "space": SpaceSpec,
    "map": MapSpec,
    "condition": ConditionKind,
}

OUTPUT_SCHEMAS = {
    "run_output": RunOutput,
    "check": ConditionReport,
    "iterate": PicardReport,
    "census": CensusReport,
    "counterexample": CounterexampleReport,
    "epsdelta": EpsDeltaReport,
    "gallery": GalleryReport,
}


def build_schemas() -> dict:
    schemas = {f"{name}.input": TypeAdapter(tp).json_schema() for name, tp in INPUT_SCHEMAS.items()}
    schemas.update({f"{name}.output": model.model_json_schema(mode="serialization")
                    for name, model in OUTPUT_SCHEMAS.items()})
    return schemas


@schema_router.command("schema", help="export JSON Schemas of every input and output document")
def cmd_schema(args: argparse.Namespace) -> int:
    target = Path(args.out or "schemas")
    target.mkdir(parents=True, exist_ok=True)
    for name, schema in build_schemas().items():
        path = target / f"{name}.schema.json"
        path.write_text(json.dumps(schema, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
        logger.info("wrote %s", path)
    return ExitCode.OK
