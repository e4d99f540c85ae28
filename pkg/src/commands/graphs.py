import click

from src.commands.common import handle_errors
from src.graphs.canonical import automorphism_order
from src.graphs.enumeration import enumerate_graphs


@click.command("graphs")
@click.argument("g", type=int)
@click.argument("n", type=int)
@handle_errors
def cmd_graphs(g: int, n: int) -> None:
    """List the stable graphs of genus G with N legs, one per line."""
    for graph in enumerate_graphs(g, n):
        click.echo(f"{graph.encode()} aut={automorphism_order(graph)}")
