import sys
from pathlib import Path
from typing import Optional

# Configure the Python path to resolve imports
current_dir = Path(__file__).resolve().parent
project_dir = current_dir.parent
sys.path.insert(0, str(project_dir))

import click

from src.commands.dr import cmd_dr
from src.commands.graphs import cmd_graphs
from src.commands.poly import cmd_poly
from src.commands.psi import cmd_psi
from src.commands.selftest import cmd_selftest
from src.commands.weights import cmd_weights
from src.core.log import setup_logging


@click.group()
@click.option(
    "--log-config",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Logging INI file; defaults to ORBIDR_LOGGING_CONFIG.",
)
def app(log_config: Optional[Path]) -> None:
    """Orbifold double ramification cycles for B Z_m."""
    setup_logging(log_config)


# Register every subcommand on the group
app.add_command(cmd_dr)
app.add_command(cmd_poly)
app.add_command(cmd_graphs)
app.add_command(cmd_weights)
app.add_command(cmd_psi)
app.add_command(cmd_selftest)


if __name__ == "__main__":
    app()
