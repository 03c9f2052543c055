"""
Reproduce command: the two AR quivers of the removal picture and the
isomorphism verdict between the cut repetitive strip and the cluster
repetitive strip.
"""

import os
from pathlib import Path

from ..core.config import config
from ..core.errors import InputError
from ..core.security import artifact_writer
from ..schemas.inputs import ReproduceInput
from ..utils.dot import translation_quiver_to_dot
from ..utils.serialization import dumps, load_algebra
from .covering import run_surgery
from .pipeline import Pipeline
from .registry import CommandResult, ExitCode, command

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
DEFAULT_EXAMPLE = FIXTURES / "a5_abc.json"


def reproduce_surgery(params: ReproduceInput) -> dict:
    """Write ``gamma_hat.dot`` and ``gamma_check.dot`` under ``params.out`` and return the report."""
    path = params.path or str(DEFAULT_EXAMPLE)
    pipeline = Pipeline(load_algebra(path, field=params.field))
    outcome = run_surgery(pipeline, params.levels, params.strip, params.compare_levels, config.margin)
    written = []
    for name, quiver in (("gamma_hat.dot", outcome["gamma_hat"]), ("gamma_check.dot", outcome["gamma_check"])):
        result = artifact_writer.write(os.path.join(params.out, name), translation_quiver_to_dot(quiver, name[:-4]))
        if not result.success:
            raise InputError(f"cannot write {name}: {result.error}")
        written.append(result.path)
    report = dict(outcome["report"])
    report["written"] = written
    return report


@command(name="reproduce", input_model=ReproduceInput, tags=["covering"])
def reproduce_command(params: ReproduceInput) -> CommandResult:
    """Emit both AR quivers with diamond and circle markers and print the surgery verdict."""
    report = reproduce_surgery(params)
    exit_code = ExitCode.OK if report["verdict"] == "isomorphic" else ExitCode.VERDICT_FAILED
    return CommandResult(exit_code, dumps(report), {"verdict": report["verdict"]}, written=report["written"])
