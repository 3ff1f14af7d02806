import argparse
import logging
from typing import Callable, Dict, List, Optional

from kannan import settings

logging.basicConfig(level=settings.LOG_LEVEL, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


class Router:
    """Набор команд одного обработчика"""

    def __init__(self):
        self.commands: Dict[str, dict] = {}

    def command(self, name: str, help: str, arguments: Optional[Callable[[argparse.ArgumentParser], None]] = None):
        def register(handler):
            self.commands[name] = {"handler": handler, "help": help, "arguments": arguments}
            return handler
        return register


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", help="space JSON (inline or file) or a catalog kind")
    common.add_argument("--map", help="map JSON (inline or file) or a catalog kind")
    common.add_argument("--condition", action="append", help="condition JSON, kind, kannan_k:K or iterated_kannan:M")
    common.add_argument("--pairs", help="pair sample: JSON list (inline or file) or sample:N")
    common.add_argument("--horizon", type=int, default=settings.DEFAULT_HORIZON)
    common.add_argument("--seed", type=int, default=settings.SEED)
    common.add_argument("--format", choices=("json", "csv", "human"), default="json")
    common.add_argument("--out", help="write output to a file instead of stdout")
    common.add_argument("--expect", choices=("holds", "violated"))
    return common


class Dispatcher:
    def __init__(self):
        self.parser = argparse.ArgumentParser(prog="kannan-lab", description="Kannan-type contractive maps laboratory")
        self._subparsers = self.parser.add_subparsers(dest="command", required=True)
        self._common = _common_arguments()
        self.routers: List[Router] = []

    def include_router(self, router: Router) -> None:
        self.routers.append(router)
        for name, entry in router.commands.items():
            sub = self._subparsers.add_parser(name, help=entry["help"], parents=[self._common])
            if entry["arguments"] is not None:
                entry["arguments"](sub)
            sub.set_defaults(handler=entry["handler"])


dp = Dispatcher()
