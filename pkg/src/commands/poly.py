import json
from pathlib import Path
from typing import Optional

import click

from src.commands.common import handle_errors, problem_argument
from src.engine.leading import leading_rpoly
from src.engine.rpoly import polynomial_class
from src.services.problems import load_problem, to_topdata


@click.command("poly")
@problem_argument
@click.option("--degree", "-d", type=int, default=None, help="Degree d; defaults to the genus.")
@click.option("--leading", is_flag=True, help="Print the exact leading-term weight sums instead; no r is sampled.")
@handle_errors
def cmd_poly(problem_path: str, degree: Optional[int], leading: bool) -> None:
    """Print the r-polynomial class of every degree up to d."""
    problem = load_problem(Path(problem_path))
    data = to_topdata(problem)
    d = degree if degree is not None else (problem.options.degree if problem.options.degree is not None else data.g)
    if leading:
        rpoly = leading_rpoly(data, d)
    else:
        rpoly = polynomial_class(data, d, problem.options.r_samples)
    payload = {
        "samples": list(rpoly.samples),
        "max_r_degree": rpoly.max_degree,
        "terms": rpoly.to_json(),
    }
    click.echo(json.dumps(payload, indent=2, sort_keys=True))
