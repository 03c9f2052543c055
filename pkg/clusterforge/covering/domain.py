"""
Fundamental domains of the push-down inside Γ(mod C̄).

Given a complete slice Σ of mod C, Ω = {M : Σ₀ ≤ M < Σ₁} in ind C̄ should be
sent bijectively onto ind C̃, faithfully, preserving irreducible maps and
almost split sequences. Each of these is checked separately.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from ..ar.knitting import TranslationQuiver
from ..ar.ordering import Reachability, Reading, validate_slice
from ..constructions.windows import ClusterDuplicatedAlgebra, WindowedAlgebra, level_copy, shift_twist
from ..core.errors import InputError, SupportLeavesWindowError
from ..core.logging import log_progress
from ..modules.representation import hom_dim
from .push_down import CoveringMap, push_down


@dataclass
class FundamentalDomain:
    vertices: List[int]
    lower: List[int]
    upper: List[int]
    reading: Reading
    images: Dict[int, Optional[int]] = field(default_factory=dict)
    verdicts: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, str] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return bool(self.verdicts) and all(self.verdicts.values())

    def to_json(self) -> dict:
        return {
            "size": len(self.vertices),
            "vertices": self.vertices,
            "sigma0": self.lower,
            "sigma1": self.upper,
            "reading": self.reading.value,
            "images": {str(k): v for k, v in self.images.items()},
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "holds": self.holds,
        }


def slice_copies(dup: ClusterDuplicatedAlgebra, gamma_c: TranslationQuiver, gamma_bar: TranslationQuiver,
                 slice_vertices: Sequence[int]) -> Dict[int, List[int]]:
    """Positions of Σ₀ and Σ₁ in Γ(mod C̄) for a slice Σ given in Γ(mod C)."""
    verdict = validate_slice(gamma_c, slice_vertices)
    if not verdict.valid:
        raise InputError(f"invalid slice: {verdict.violation} at {verdict.witness}")
    out: Dict[int, List[int]] = {}
    for level in (0, 1):
        found = []
        for i in slice_vertices:
            copy = level_copy(dup.window, gamma_c.vertices[i].module, level)
            j = gamma_bar.find(copy)
            if j is None:
                raise InputError(f"slice module {i} has no copy at level {level} in the quiver")
            found.append(j)
        out[level] = found
    return out


def _image_map(g: CoveringMap, gamma_bar: TranslationQuiver, gamma_tilde: TranslationQuiver,
               vertices: Sequence[int]) -> Dict[int, Optional[int]]:
    return {i: gamma_tilde.find(push_down(g, gamma_bar.vertices[i].module)) for i in vertices}


def _is_bijective(images: Dict[int, Optional[int]], target_size: int) -> bool:
    values = list(images.values())
    return None not in values and len(set(values)) == len(values) == target_size


def hom_dimension_report(g: CoveringMap, gamma_bar: TranslationQuiver, vertices: Sequence[int],
                         wide: WindowedAlgebra) -> List[dict]:
    """
    dim Hom(X, Y), dim Hom(GX, GY) and Σ_k dim Hom(X, Y^{φ^k}) for all pairs,
    the shifts computed inside the wider window ``wide``.
    """
    window = g.window
    embedded = {i: shift_twist(window, gamma_bar.vertices[i].module, 0, target=wide) for i in vertices}
    pushed = {i: push_down(g, gamma_bar.vertices[i].module) for i in vertices}
    rows = []
    span = wide.high - wide.low
    for x in vertices:
        for y in vertices:
            shifted_total = 0
            for k in range(-span, span + 1):
                try:
                    shifted = shift_twist(wide, embedded[y], k)
                except SupportLeavesWindowError:
                    continue
                shifted_total += hom_dim(embedded[x], shifted)
            rows.append({
                "source": x,
                "target": y,
                "hom": hom_dim(gamma_bar.vertices[x].module, gamma_bar.vertices[y].module),
                "hom_pushed": hom_dim(pushed[x], pushed[y]),
                "hom_shifts": shifted_total,
            })
    return rows


def _check_axioms(domain: FundamentalDomain, gamma_bar: TranslationQuiver, gamma_tilde: TranslationQuiver,
                  report: Optional[List[dict]]) -> None:
    images = domain.images
    inside = set(domain.vertices)
    domain.verdicts["bijective"] = _is_bijective(images, len(gamma_tilde.vertices))
    if not domain.verdicts["bijective"]:
        domain.witnesses["bijective"] = f"{len(set(images.values()) - {None})} images for {len(gamma_tilde.vertices)} targets"
        return

    if report is not None:
        bad = [r for r in report if r["hom"] > r["hom_pushed"] or r["hom_pushed"] != r["hom_shifts"]]
        domain.verdicts["faithful"] = not bad
        if bad:
            domain.witnesses["faithful"] = f"pair {bad[0]['source']} -> {bad[0]['target']}"

    irreducible = True
    for (i, j), m in gamma_bar.arrows.items():
        if i in inside and j in inside and gamma_tilde.arrows.get((images[i], images[j]), 0) != m:
            irreducible = False
            domain.witnesses["irreducible"] = f"arrow {i} -> {j}"
            break
    domain.verdicts["irreducible"] = irreducible

    almost_split = True
    for j, i in gamma_bar.tau.items():
        if i in inside and j in inside:
            if gamma_tilde.tau.get(images[j]) != images[i]:
                almost_split = False
                domain.witnesses["almost_split"] = f"τ of {j}"
                break
            into_j = {images[k]: m for k, m in gamma_bar.arrows_into(j).items() if k in inside}
            if any(gamma_tilde.arrows_into(images[j]).get(k) != m for k, m in into_j.items()):
                almost_split = False
                domain.witnesses["almost_split"] = f"mesh ending at {j}"
                break
    domain.verdicts["almost_split"] = almost_split


def fundamental_domain(g: CoveringMap, gamma_bar: TranslationQuiver, gamma_tilde: TranslationQuiver,
                       lower: Sequence[int], upper: Sequence[int],
                       wide: Optional[WindowedAlgebra] = None) -> FundamentalDomain:
    """
    Ω between the slice copies, first in the singleton reading of the set order
    and, when that is not bijective, in the exclusion reading.

    ``g`` must cover from the [0, 1] window; faithfulness is checked only
    when a wider window is supplied.
    """
    if g.window.low != 0 or g.window.high != 1:
        raise InputError("the fundamental domain lives in the cluster duplicated algebra")
    order = Reachability(gamma_bar)
    domain = None
    for reading in (Reading.SINGLETON, Reading.EXCLUSION):
        vertices = order.between(lower, upper, reading)
        images = _image_map(g, gamma_bar, gamma_tilde, vertices)
        domain = FundamentalDomain(vertices, list(lower), list(upper), reading, images)
        log_progress(f"{reading.value} reading gives {len(vertices)} modules", stage="domain")
        if _is_bijective(images, len(gamma_tilde.vertices)):
            break
    report = hom_dimension_report(g, gamma_bar, domain.vertices, wide) if wide is not None else None
    _check_axioms(domain, gamma_bar, gamma_tilde, report)
    return domain
