"""Command-line entry point."""

import sys
from typing import List, Optional

import click
import orjson
from pydantic import ValidationError as PydanticValidationError

from src.core.config.settings import get_settings
from src.core.exceptions import CloudCleanException
from src.core.observability import configure_logging, get_logger
from src.presentation.cli import cli

logger = get_logger(__name__)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI and translate failures into exit statuses.

    0 on success, 2 when a file cannot be read or written, 1 for every other
    known error. The error body goes to stderr as JSON.
    """
    configure_logging(get_settings())
    try:
        cli.main(args=argv, prog_name="cloudclean", standalone_mode=False)
    except CloudCleanException as exc:
        _report(exc.to_dict())
        return _get_exit_code(exc.code)
    except PydanticValidationError as exc:
        _report(
            {
                "error": {
                    "code": "VALIDATION_ERROR",
                    "message": str(exc),
                    "details": {"errors": exc.errors(include_url=False)},
                }
            }
        )
        return 1
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except click.ClickException as exc:
        # usage errors are configuration errors
        exc.show()
        return 1
    return 0


def _get_exit_code(error_code: str) -> int:
    """Map error codes to process exit statuses."""
    status_map = {
        "STORAGE_ERROR": 2,
    }
    return status_map.get(error_code, 1)


def _report(body: dict) -> None:
    logger.debug("command_failed", code=body["error"]["code"])
    sys.stderr.write(orjson.dumps(body, default=str).decode() + "\n")


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
