from pathlib import Path
from typing import Optional

import click

from src.commands.common import handle_errors, problem_argument
from src.engine.dr import dr_branch, require_valid
from src.engine.problem import validate_dr_problem
from src.services.problems import (
    build_result,
    load_problem,
    requested_branches,
    to_dr_problem,
    write_result,
)


@click.command("dr")
@problem_argument
@click.option(
    "--branch",
    type=click.Choice(["zero", "infinity", "both"]),
    default=None,
    help="Branch to compute; overrides the problem file.",
)
@click.option("--emit-rpoly", is_flag=True, help="Include the per-term r-polynomials.")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
@handle_errors
def cmd_dr(problem_path: str, branch: Optional[str], emit_rpoly: bool, out: Optional[Path]) -> None:
    """Compute the DR cycle of a problem file and write the result JSON."""
    problem = load_problem(Path(problem_path))
    dr_problem = to_dr_problem(problem)
    report = validate_dr_problem(dr_problem)
    if not report.ok:
        click.echo(report.render(), err=True)
    require_valid(dr_problem)

    samples = problem.options.r_samples
    results = [dr_branch(dr_problem, name, samples) for name in requested_branches(problem, branch)]
    result = build_result(problem, results, emit_rpoly=emit_rpoly)
    text = write_result(result, out)
    if text is not None:
        click.echo(text, nl=False)
    if result.agreement is False:
        click.echo("error: branches disagree", err=True)
        raise SystemExit(3)
