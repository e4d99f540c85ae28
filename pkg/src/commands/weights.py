import sys
from pathlib import Path

import click

from src.commands.common import handle_errors, problem_argument
from src.decorations.decorations import enumerate_decorations
from src.decorations.weights import dump, enumerate_weights, validate_weight, weight_count
from src.graphs.enumeration import enumerate_graphs
from src.services.problems import load_problem, to_topdata


@click.command("weights")
@problem_argument
@click.option("--r", "r", type=int, required=True, help="Modulus r.")
@click.option("--check", is_flag=True, help="Enumerate every weight function and validate it.")
@click.option("--dump", "dump_weights", is_flag=True, help="Print every weight function, one per line.")
@handle_errors
def cmd_weights(problem_path: str, r: int, check: bool, dump_weights: bool) -> None:
    """Count weight functions mod R on every decorated graph of the problem."""
    if r < 1:
        raise click.BadParameter("r must be positive", param_hint="--r")
    data = to_topdata(load_problem(Path(problem_path)))
    total = 0
    invalid = 0
    for graph in enumerate_graphs(data.g, data.n):
        for decoration in enumerate_decorations(graph, data.rep, data.leg_sectors):
            count = weight_count(decoration, data.rep, data.lifts, r)
            total += count
            click.echo(f"{graph.encode()} chi={list(decoration.chi)} count={count}")
            if not (check or dump_weights):
                continue
            for weight in enumerate_weights(decoration, data.rep, data.lifts, r):
                if dump_weights:
                    click.echo(dump(weight))
                if check:
                    problems = validate_weight(weight, data.rep, data.lifts)
                    if problems:
                        invalid += 1
                        click.echo(f"{dump(weight)}: {'; '.join(problems)}", err=True)
    click.echo(f"total={total}")
    if check:
        click.echo(f"invalid={invalid}")
        if invalid:
            sys.exit(1)
