"""
Construction commands: present, trivial-ext, cluster-rep, repetitive, duplicated.

Each reads a quiver file and emits the presented quiver of the constructed
algebra as a quiver file (JSON) or a DOT view.
"""

from ..algebra.presentation import present
from ..schemas.inputs import CommandInput, LevelsInput
from .pipeline import Pipeline, render_algebra
from .registry import CommandResult, command, emit


def _summary(algebra) -> dict:
    return {
        "dim": algebra.dim,
        "vertices": len(algebra.quiver.vertices),
        "arrows": len(algebra.quiver.arrows),
        "relations": len(algebra.relations),
    }


@command(name="present", input_model=CommandInput, tags=["constructions"])
def present_command(params: CommandInput) -> CommandResult:
    """Re-present an algebra from its structure constants (quiver and minimal relations)."""
    base = Pipeline.from_input(params).base
    presented = present(base.to_structure_constants(), cap=params.cap, name=base.name)
    result = CommandResult(artifact=render_algebra(presented, params.format), report=_summary(presented))
    return emit(result, params.out)


@command(name="trivial-ext", input_model=CommandInput, tags=["constructions"])
def trivial_ext_command(params: CommandInput) -> CommandResult:
    """The trivial extension C ⋉ Ext²(DC, C)."""
    pipeline = Pipeline.from_input(params)
    algebra = pipeline.tilde.algebra
    report = _summary(algebra)
    report["dim_extension"] = pipeline.tilde.bimodule.dim
    return emit(CommandResult(artifact=render_algebra(algebra, params.format), report=report), params.out)


@command(name="cluster-rep", input_model=LevelsInput, tags=["constructions"])
def cluster_rep_command(params: LevelsInput) -> CommandResult:
    """Levels [a, b] of the cluster repetitive algebra."""
    window = Pipeline.from_input(params).cluster_window(*params.levels)
    report = _summary(window.algebra)
    report["connected"] = window.is_connected()
    return emit(CommandResult(artifact=render_algebra(window.algebra, params.format), report=report), params.out)


@command(name="repetitive", input_model=LevelsInput, tags=["constructions"])
def repetitive_command(params: LevelsInput) -> CommandResult:
    """Levels [a, b] of the repetitive algebra."""
    window = Pipeline.from_input(params).repetitive_window(*params.levels)
    report = _summary(window.algebra)
    report["connected"] = window.is_connected()
    return emit(CommandResult(artifact=render_algebra(window.algebra, params.format), report=report), params.out)


@command(name="duplicated", input_model=CommandInput, tags=["constructions"])
def duplicated_command(params: CommandInput) -> CommandResult:
    """The cluster duplicated algebra (levels 0 and 1)."""
    algebra = Pipeline.from_input(params).duplicated.algebra
    return emit(CommandResult(artifact=render_algebra(algebra, params.format), report=_summary(algebra)), params.out)
