"""
Covering commands: pushdown, quotient, surgery, domain.

Reports carry verdicts and witnesses; the exit code is 1 whenever a verdict
fails.
"""

from typing import List, Optional, Tuple

from ..ar.knitting import TranslationQuiver, knit
from ..ar.ordering import validate_slice
from ..ar.translate import almost_split_sequence
from ..constructions.windows import WindowedAlgebra, support_levels
from ..core.config import config
from ..covering.domain import fundamental_domain, slice_copies
from ..covering.push_down import CoveringMap, push_down, push_down_sequence
from ..covering.quotient import compare, quotient_ar_quiver
from ..covering.surgery import compare_strips, compute_removal_set, surgery_quiver, restrict_to_strip
from ..schemas.inputs import DomainInput, LevelsInput, PushDownInput, SurgeryInput
from ..utils.serialization import dumps, load_module, load_slice, module_to_json
from .pipeline import Pipeline, render_translation_quiver
from .registry import CommandResult, ExitCode, command, emit


def _interior(quiver: TranslationQuiver, window: WindowedAlgebra, margin: int) -> List[int]:
    lo, hi = window.low + margin, window.high - margin
    out = []
    for v in quiver.vertices:
        levels = support_levels(window, v.module)
        if lo <= levels[0] and levels[-1] <= hi:
            out.append(v.index)
    return out


@command(name="pushdown", input_model=PushDownInput, tags=["covering"])
def pushdown_command(params: PushDownInput) -> CommandResult:
    """Push modules and almost split sequences of a cluster repetitive window down to C̃."""
    pipeline = Pipeline.from_input(params)
    window = pipeline.cluster_window(*params.levels)
    g = CoveringMap(window, pipeline.tilde)
    if params.module:
        pushed = push_down(g, load_module(params.module, window.algebra))
        return emit(CommandResult(artifact=dumps(module_to_json(pushed)),
                                  report={"dim_vector": list(pushed.dim_vector)}), params.out)

    margin = config.resolve("margin", params.margin)
    gamma = knit(window.algebra, cap=params.cap)
    gamma_tilde = pipeline.gamma_tilde
    inside = set(_interior(gamma, window, margin))
    images = {}
    for i in sorted(inside):
        images[str(i)] = gamma_tilde.find(push_down(g, gamma.vertices[i].module))
    sequences = []
    for j, i in sorted(gamma.tau.items()):
        middle = set(gamma.arrows_into(j))
        if j in inside and i in inside and middle <= inside:
            pushed = push_down_sequence(g, almost_split_sequence(gamma.vertices[j].module))
            sequences.append({"right": j, **pushed.to_json()})
    ok = None not in images.values() and all(s["almost_split"] for s in sequences)
    report = {"images": images, "sequences": sequences, "holds": ok}
    return emit(CommandResult(ExitCode.OK if ok else ExitCode.VERDICT_FAILED, dumps(report), {"holds": ok}),
                params.out)


@command(name="quotient", input_model=LevelsInput, tags=["covering"])
def quotient_command(params: LevelsInput) -> CommandResult:
    """The orbit quotient of a knitted cluster repetitive window, compared with Γ(mod C̃)."""
    pipeline = Pipeline.from_input(params)
    window = pipeline.cluster_window(*params.levels)
    gamma = knit(window.algebra, cap=params.cap)
    result = quotient_ar_quiver(gamma, window, params.margin)
    mapping = compare(result.quiver, pipeline.gamma_tilde)
    report = {
        "orbits": len(result.representatives),
        "indecomposables": len(pipeline.gamma_tilde.vertices),
        "missing": result.missing,
        "isomorphic": mapping is not None,
    }
    exit_code = ExitCode.OK if mapping is not None and not result.missing else ExitCode.VERDICT_FAILED
    return emit(CommandResult(exit_code, render_translation_quiver(result.quiver, params.format, "quotient"),
                              report), params.out)


def _default_strip(levels: Tuple[int, int], margin: int) -> Tuple[int, int]:
    a, b = levels
    return a + margin, b - margin


def run_surgery(pipeline: Pipeline, levels: Tuple[int, int], strip: Tuple[int, int],
                compare_levels: Tuple[int, int], margin: int, cap: Optional[int] = None) -> dict:
    """Knit both windows, cut the repetitive one and compare the strips."""
    hat_window = pipeline.repetitive_window(*levels)
    gamma_hat = knit(hat_window.algebra, cap=cap)
    removal = compute_removal_set(hat_window, gamma_hat)
    survivors, _ = surgery_quiver(gamma_hat, removal)
    hat_strip, hat_position = restrict_to_strip(survivors, hat_window, *strip)

    check_window = pipeline.cluster_window(*compare_levels)
    gamma_check = knit(check_window.algebra, cap=cap)
    check_strip, check_position = restrict_to_strip(gamma_check, check_window,
                                                    *_default_strip(compare_levels, margin))
    mapping = compare_strips(survivors, list(hat_position), gamma_check, list(check_position))
    return {
        "gamma_hat": gamma_hat,
        "gamma_check": gamma_check,
        "removal": removal,
        "report": {
            "removal": removal.to_json(),
            "survivors": len(survivors.vertices),
            "strip_sizes": [len(hat_strip.vertices), len(check_strip.vertices)],
            "verdict": "isomorphic" if mapping is not None else "not isomorphic",
        },
    }


@command(name="surgery", input_model=SurgeryInput, tags=["covering"])
def surgery_command(params: SurgeryInput) -> CommandResult:
    """Delete diamonds and circles from Γ(mod Ĉ window) and compare with Γ(mod Č window)."""
    margin = config.resolve("margin", params.margin)
    strip = params.strip or _default_strip(params.levels, margin)
    compare_levels = params.compare_levels or params.levels
    outcome = run_surgery(Pipeline.from_input(params), params.levels, strip, compare_levels, margin, params.cap)
    report = outcome["report"]
    exit_code = ExitCode.OK if report["verdict"] == "isomorphic" else ExitCode.VERDICT_FAILED
    return emit(CommandResult(exit_code, render_translation_quiver(outcome["gamma_hat"], params.format, "hat"),
                              report), params.out)


@command(name="domain", input_model=DomainInput, tags=["covering"])
def domain_command(params: DomainInput) -> CommandResult:
    """The fundamental domain between the two copies of a slice, with the covering axioms checked."""
    pipeline = Pipeline.from_input(params)
    gamma_c = knit(pipeline.base, cap=params.cap)
    sigma = load_slice(params.slice, gamma_c)
    verdict = validate_slice(gamma_c, sigma)
    if not verdict.valid:
        report = {"slice": {"valid": False, "violation": verdict.violation, "witness": verdict.witness}}
        return emit(CommandResult(ExitCode.VERDICT_FAILED, dumps(report), report), params.out)

    dup = pipeline.duplicated
    gamma_bar = knit(dup.algebra, cap=params.cap)
    copies = slice_copies(dup, gamma_c, gamma_bar, sigma)
    g = CoveringMap(dup.window, pipeline.tilde)
    wide = pipeline.cluster_window(-1, 2) if params.faithful else None
    domain = fundamental_domain(g, gamma_bar, pipeline.gamma_tilde, copies[0], copies[1], wide=wide)
    exit_code = ExitCode.OK if domain.holds else ExitCode.VERDICT_FAILED
    return emit(CommandResult(exit_code, dumps(domain.to_json()), {"holds": domain.holds}), params.out)
