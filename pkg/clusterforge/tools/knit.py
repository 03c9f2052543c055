"""Knit command: the AR quiver of the algebra in a quiver file."""

from ..ar.knitting import knit
from ..core.errors import CapExceededError
from ..schemas.inputs import KnitInput
from .pipeline import Pipeline, render_translation_quiver
from .registry import CommandResult, ExitCode, command, emit


@command(name="knit", input_model=KnitInput, tags=["arquiver"])
def knit_command(params: KnitInput) -> CommandResult:
    """Knit the Auslander-Reiten quiver; a partial quiver is flagged when the cap is hit."""
    algebra = Pipeline.from_input(params).base
    try:
        quiver = knit(algebra, cap=params.cap)
    except CapExceededError as e:
        partial = e.partial
        result = CommandResult(
            exit_code=ExitCode.VERDICT_FAILED,
            artifact=render_translation_quiver(partial, params.format, algebra.name or "AR"),
            report={"partial": True, "vertices": len(partial.vertices), "error": str(e)},
        )
        return emit(result, params.out)
    report = {
        "partial": False,
        "vertices": len(quiver.vertices),
        "arrows": sum(quiver.arrows.values()),
        "mesh_problems": quiver.check_meshes(),
    }
    exit_code = ExitCode.OK if not report["mesh_problems"] else ExitCode.VERDICT_FAILED
    return emit(CommandResult(exit_code, render_translation_quiver(quiver, params.format, algebra.name or "AR"),
                              report), params.out)
