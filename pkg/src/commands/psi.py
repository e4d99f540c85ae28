import click

from src.commands.common import handle_errors
from src.exact.rational import format_rational
from src.oracle.intersection import kappa_psi_integral


def _indices(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}")


@click.command("psi")
@click.argument("g", type=int)
@click.argument("exponents", type=str)
@click.option("--kappa", default="", help="Comma-separated kappa indices.")
@handle_errors
def cmd_psi(g: int, exponents: str, kappa: str) -> None:
    """Print the integral of psi_1^e_1 ... psi_n^e_n (times kappas) over Mbar_{G,n}."""
    value = kappa_psi_integral(g, _indices(exponents), _indices(kappa))
    click.echo(format_rational(value))
