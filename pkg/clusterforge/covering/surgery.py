"""
Removal of projective-injectives and of the modules τ^{1-i}Ω^{-i}C from the
AR quiver of a window of Ĉ, and comparison of the result with the AR quiver
of a window of Č.

The iterates are tracked as τF^iC with F = τ⁻¹Ω⁻¹ (and F⁻¹ = Ωτ), computed
in an auxiliary repetitive window around level 0 and re-centred with the
Nakayama shift after every step, then shifted back into the window whose
AR quiver is being cut.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..ar.knitting import ARVertex, TranslationQuiver
from ..ar.translate import ar_translate, inverse_ar_translate
from ..constructions.windows import (
    WindowKind,
    WindowedAlgebra,
    level_copy,
    nakayama_shift,
    repetitive_window,
    shift_twist,
    support_levels,
)
from ..core.config import config
from ..core.errors import (
    InjectiveHasNoInverseTranslateError,
    InputError,
    ProjectiveHasNoTranslateError,
    QuiverIncompleteError,
    SupportLeavesWindowError,
    WindowTooNarrowError,
    ZeroModuleError,
)
from ..core.logging import log_progress
from ..modules.decomposition import decompose
from ..modules.homology import cosyzygy, syzygy
from ..modules.projectives import projective
from ..modules.representation import Representation
from .quotient import embeds_as_core

DIAMOND = "diamond"
CIRCLE = "circle"


@dataclass
class RemovalSet:
    proj_injectives: List[int] = field(default_factory=list)
    circles: Dict[int, List[int]] = field(default_factory=dict)

    @property
    def vertices(self) -> Set[int]:
        out = set(self.proj_injectives)
        for found in self.circles.values():
            out.update(found)
        return out

    def to_json(self) -> dict:
        return {
            "proj_injectives": sorted(self.proj_injectives),
            "circles": {str(i): sorted(v) for i, v in sorted(self.circles.items())},
        }


class _Tracker:
    """An iterate living in the auxiliary window, with the levels it was moved by."""

    def __init__(self, aux: WindowedAlgebra, module: Representation, offset: int = 0):
        self.aux = aux
        self.module = module
        self.offset = offset

    def recentre(self) -> None:
        low = support_levels(self.aux, self.module)[0]
        if low:
            self.module = nakayama_shift(self.aux, self.module, -low)
            self.offset += low

    def step(self, forward: bool) -> bool:
        """Apply F or F⁻¹; False once the iterate vanishes."""
        try:
            if forward:
                nxt = inverse_ar_translate(cosyzygy(self.module))
            else:
                nxt = syzygy(ar_translate(self.module))
        except (ZeroModuleError, ProjectiveHasNoTranslateError, InjectiveHasNoInverseTranslateError):
            return False
        except SupportLeavesWindowError as exc:
            raise WindowTooNarrowError(f"window too narrow: {exc}") from exc
        if nxt.is_zero():
            return False
        levels = support_levels(self.aux, nxt)
        if levels[0] == self.aux.low or levels[-1] == self.aux.high:
            raise WindowTooNarrowError("window too narrow: iterate reaches the edge of the working window")
        self.module = nxt
        self.recentre()
        return True

    def translate_into(self, window: WindowedAlgebra) -> Optional[Representation]:
        """τ of the current iterate, moved back into ``window``; None when it does not fit."""
        try:
            shifted = ar_translate(self.module)
        except (ZeroModuleError, ProjectiveHasNoTranslateError):
            return None
        try:
            return shift_twist(self.aux, shifted, self.offset, target=window)
        except SupportLeavesWindowError:
            return None


def _locate(gamma_hat: TranslationQuiver, m: Representation) -> List[int]:
    found = []
    for summand in decompose(m):
        i = gamma_hat.find(summand)
        if i is None:
            raise QuiverIncompleteError(f"quiver incomplete: no vertex with dimension vector {summand.dim_vector}")
        found.append(i)
    return found


def compute_removal_set(window: WindowedAlgebra, gamma_hat: TranslationQuiver,
                        working_margin: Optional[int] = None) -> RemovalSet:
    """
    Diamonds are the projective-injective vertices; circles are the summands of
    τ^{1-i}Ω^{-i}C, keyed by i, for every i whose iterate fits in the window.
    """
    if window.kind is not WindowKind.REPETITIVE:
        raise InputError("the removal set lives in a repetitive window")
    if not gamma_hat.complete:
        raise QuiverIncompleteError("quiver incomplete: knit the window first")
    w = config.resolve("working_margin", working_margin)
    if w < 2:
        raise WindowTooNarrowError(f"window too narrow: working margin {w} leaves no room to translate")
    aux = repetitive_window(window.base, -w, w)
    removal = RemovalSet(proj_injectives=[v.index for v in gamma_hat.vertices if v.proj_injective])
    steps = window.high - window.low + 2
    base = window.base
    for ell in base.vertices:
        start = level_copy(aux, projective(base, ell), 0)
        for forward in (True, False):
            tracker = _Tracker(aux, start)
            i = 0
            while abs(i) <= steps:
                if forward or i:
                    image = tracker.translate_into(window)
                    if image is not None:
                        removal.circles.setdefault(i, [])
                        for j in _locate(gamma_hat, image):
                            if j not in removal.circles[i]:
                                removal.circles[i].append(j)
                if not tracker.step(forward):
                    break
                i += 1 if forward else -1
    log_progress(f"{len(removal.proj_injectives)} projective-injectives, "
                 f"{sum(len(v) for v in removal.circles.values())} circles", stage="surgery")
    return removal


def surgery_quiver(gamma_hat: TranslationQuiver, removal: RemovalSet) -> Tuple[TranslationQuiver, Dict[int, int]]:
    """
    Marks the removed vertices on ``gamma_hat`` and returns the quiver of the
    survivors with the old -> new index map. τ is kept where both ends survive.
    """
    for i in removal.proj_injectives:
        gamma_hat.vertices[i].markers.add(DIAMOND)
    for found in removal.circles.values():
        for i in found:
            gamma_hat.vertices[i].markers.add(CIRCLE)
    removed = removal.vertices
    survivors = [v.index for v in gamma_hat.vertices if v.index not in removed]
    return _induced(gamma_hat, survivors)


def _induced(quiver: TranslationQuiver, keep: List[int]) -> Tuple[TranslationQuiver, Dict[int, int]]:
    position = {old: new for new, old in enumerate(keep)}
    result = TranslationQuiver(quiver.algebra, complete=quiver.complete)
    for old in keep:
        v = quiver.vertices[old]
        result.vertices.append(ARVertex(position[old], v.module, v.projective, v.injective, set(v.markers)))
    for (i, j), m in quiver.arrows.items():
        if i in position and j in position:
            result.arrows[(position[i], position[j])] = m
    for j, i in quiver.tau.items():
        if i in position and j in position:
            result.tau[position[j]] = position[i]
    return result, position


def restrict_to_strip(quiver: TranslationQuiver, window: WindowedAlgebra, lo: int, hi: int
                      ) -> Tuple[TranslationQuiver, Dict[int, int]]:
    """The full translation subquiver on modules supported in levels [lo, hi]."""
    if not (window.has_level(lo) and window.has_level(hi)) or lo > hi:
        raise WindowTooNarrowError(f"window too narrow: strip [{lo},{hi}] outside [{window.low},{window.high}]")
    keep = []
    for v in quiver.vertices:
        levels = support_levels(window, v.module)
        if levels and lo <= levels[0] and levels[-1] <= hi:
            keep.append(v.index)
    return _induced(quiver, keep)


def compare_strips(first: TranslationQuiver, first_strip: Sequence[int],
                   second: TranslationQuiver, second_strip: Sequence[int]) -> Optional[Dict[int, int]]:
    """
    Embedding of the core of the smaller strip into the larger one, keyed by
    the smaller. Strips are vertex lists of the whole quivers they were cut
    from; the positions returned by ``restrict_to_strip`` are such lists.
    """
    if len(first_strip) <= len(second_strip):
        return embeds_as_core(first, second, first_strip, second_strip)
    return embeds_as_core(second, first, second_strip, first_strip)
