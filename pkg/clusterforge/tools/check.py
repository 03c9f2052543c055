"""Check command: 1-Gorenstein verdict or global dimension."""

from ..covering.gorenstein import gldim_report, gorenstein_check
from ..schemas.inputs import CheckInput, CheckKind, Construction
from ..utils.serialization import dumps
from .pipeline import Pipeline
from .registry import CommandResult, ExitCode, command, emit


@command(name="check", input_model=CheckInput, tags=["covering"])
def check_command(params: CheckInput) -> CommandResult:
    """Run `gorenstein` or `gldim` on the algebra, its trivial extension or its duplicated algebra."""
    pipeline = Pipeline.from_input(params)
    if params.construction is Construction.TRIVIAL_EXTENSION:
        algebra = pipeline.tilde.algebra
    elif params.construction is Construction.DUPLICATED:
        algebra = pipeline.duplicated.algebra
    else:
        algebra = pipeline.base

    if params.kind is CheckKind.GLDIM:
        d = gldim_report(algebra, cap=params.cap)
        return emit(CommandResult(artifact=f"{d}\n", report={"gldim": d.to_json()}), params.out)

    verdict = gorenstein_check(algebra, vertices=params.vertices, cap=params.cap)
    exit_code = ExitCode.OK if verdict.holds else ExitCode.VERDICT_FAILED
    return emit(CommandResult(exit_code, dumps(verdict.to_json()), {"holds": verdict.holds}), params.out)
