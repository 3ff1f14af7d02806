import logging
import sys
from typing import Optional, Sequence

from cli.create_cli import dp
from cli.handlers.census import census_router
from cli.handlers.check import check_router
from cli.handlers.counterexample import counterexample_router
from cli.handlers.epsdelta import epsdelta_router
from cli.handlers.gallery import gallery_router
from cli.handlers.iterate import iterate_router
from cli.handlers.schema import schema_router
from cli.utils.validation import get_error_message, get_exit_code

logger = logging.getLogger(__name__)

for router in (gallery_router, check_router, iterate_router, census_router,
               counterexample_router, epsdelta_router, schema_router):
    dp.include_router(router)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = dp.parser.parse_args(argv)
    try:
        return args.handler(args)
    except Exception as e:
        code = get_exit_code(e)
        print(get_error_message(code, e), file=sys.stderr)
        logger.debug("command %s failed", args.command, exc_info=True)
        return code
