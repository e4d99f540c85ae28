import json
import logging
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from src.core.config import settings
from src.core.errors import ProblemFileError
from src.engine.dr import BranchResult
from src.engine.problem import DRProblem, TopData
from src.exact.rational import parse_rational
from src.orbifold.sectors import BundleRep, Sector
from src.schemas.problem import ProblemFile
from src.schemas.result import BranchSchema, ProvenanceSchema, ResultFile, TermSchema

logger = logging.getLogger(__name__)

VERSION = "1.0.0"


def load_problem(path: Path) -> ProblemFile:
    """
    Reads and validates a problem file.

    Any failure (missing file, invalid JSON, unknown key, bad rational) is
    reported as a ProblemFileError so the CLI can exit with the input code.
    """
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc}") from exc
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"{path} is not valid JSON: {exc}") from exc
    try:
        return ProblemFile.model_validate(payload)
    except ValidationError as exc:
        raise ProblemFileError(f"{path} does not match the problem schema:\n{exc}") from exc


def to_dr_problem(problem: ProblemFile) -> DRProblem:
    """
    Converts the validated file into the engine's problem type.

    Mathematical constraints (admissibility, balance) are not checked here;
    validate_dr_problem reports them one by one.
    """
    return DRProblem(
        g=problem.genus,
        rep=BundleRep(problem.target.m, problem.target.s),
        absolute=tuple(Sector(marking.sector) for marking in problem.absolute),
        mu_zero=tuple(
            (Sector(marking.sector), parse_rational(marking.contact))
            for marking in problem.relative_zero
        ),
        mu_inf=tuple(
            (Sector(marking.sector), parse_rational(marking.contact))
            for marking in problem.relative_infinity
        ),
    )


def to_topdata(problem: ProblemFile) -> TopData:
    """TopData of the branch named in the options; 'both' falls back to zero."""
    branch = "infinity" if problem.options.branch == "infinity" else "zero"
    return to_dr_problem(problem).topdata(branch)


def requested_branches(problem: ProblemFile, override: Optional[str] = None) -> list[str]:
    choice = override or problem.options.branch
    return ["zero", "infinity"] if choice == "both" else [choice]


def _terms(payload: Sequence[dict]) -> list[TermSchema]:
    return [TermSchema(**item) for item in payload]


def build_result(
    problem: ProblemFile, results: Sequence[BranchResult], emit_rpoly: bool = False
) -> ResultFile:
    """Assembles the result file for one or both branches."""
    branches = {}
    for result in results:
        branches[result.branch] = BranchSchema(
            normalization=result.normalization,
            terms=_terms(result.cycle.to_json()),
            rpoly=_terms(result.rpoly.to_json()) if emit_rpoly else None,
        )
    agreement = None
    if len(results) == 2:
        agreement = results[0].cycle == results[1].cycle
        if not agreement:
            logger.error("branches disagree for problem %s", problem.model_dump_json())
    return ResultFile(
        problem=problem,
        branches=branches,
        agreement=agreement,
        provenance=ProvenanceSchema(
            version=VERSION,
            r_samples={result.branch: list(result.rpoly.samples) for result in results},
            rbound_factor=settings.RBOUND_FACTOR,
        ),
    )


def dump_result(result: ResultFile) -> str:
    """Serializes deterministically: sorted keys, no timestamps."""
    return json.dumps(result.model_dump(mode="json", exclude_none=True), indent=2, sort_keys=True) + "\n"


def write_result(result: ResultFile, out: Optional[Path]) -> Optional[str]:
    text = dump_result(result)
    if out is None:
        return text
    Path(out).write_text(text, encoding="utf-8")
    logger.info("result written to %s", out)
    return None
