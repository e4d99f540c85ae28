import functools
import logging
import sys

import click

from src.core.errors import OrbiDRError

logger = logging.getLogger(__name__)


def handle_errors(fn):
    """Turns package errors into a message on stderr and the matching exit code."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except OrbiDRError as exc:
            logger.debug("command failed", exc_info=True)
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(exc.exit_code)

    return wrapper


problem_argument = click.argument(
    "problem_path", type=click.Path(dir_okay=False, path_type=str)
)
