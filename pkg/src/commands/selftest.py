import sys

import click

from src.commands.common import handle_errors
from src.services.selftest import run_selftest


@click.command("selftest")
@handle_errors
def cmd_selftest() -> None:
    """Run the built-in consistency checks."""
    results = run_selftest()
    for result in results:
        mark = "✅" if result.passed else "❌"
        click.echo(f"{mark} {result.name}: {result.detail}")
    failed = sum(1 for result in results if not result.passed)
    click.echo(f"{len(results) - failed} passed, {failed} failed")
    sys.exit(1 if failed else 0)
