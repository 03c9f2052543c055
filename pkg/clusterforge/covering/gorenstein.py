"""1-Gorenstein and global dimension checks."""

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

from ..algebra.quiver import BoundQuiverAlgebra
from ..core.config import config
from ..modules.homology import HomologicalDimension, gldim, injective_dimension, pd
from ..modules.projectives import injective, projective


@dataclass
class GorensteinVerdict:
    holds: bool
    projective_dimensions: Dict[str, HomologicalDimension] = field(default_factory=dict)
    injective_dimensions: Dict[str, HomologicalDimension] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "pd_injectives": {v: d.to_json() for v, d in self.projective_dimensions.items()},
            "id_projectives": {v: d.to_json() for v, d in self.injective_dimensions.items()},
        }


def _at_most(d: HomologicalDimension, bound: int) -> bool:
    return not d.at_least and d.value <= bound


def gorenstein_check(algebra: BoundQuiverAlgebra, vertices: Optional[Sequence[str]] = None,
                     cap: Optional[int] = None) -> GorensteinVerdict:
    """pd I_v ≤ 1 and id P_v ≤ 1 for every v in ``vertices`` (default: all)."""
    cap = config.resolve("resolution_cap", cap)
    vertices = list(vertices or algebra.vertices)
    pds = {v: pd(injective(algebra, v), cap) for v in vertices}
    ids = {v: injective_dimension(projective(algebra, v), cap) for v in vertices}
    holds = all(_at_most(d, 1) for d in pds.values()) and all(_at_most(d, 1) for d in ids.values())
    return GorensteinVerdict(holds, pds, ids)


def gldim_report(algebra: BoundQuiverAlgebra, cap: Optional[int] = None) -> HomologicalDimension:
    return gldim(algebra, cap)


def in_gorenstein_dichotomy(d: HomologicalDimension) -> bool:
    """gl.dim of a 1-Gorenstein algebra is at most 1 or infinite."""
    return d.at_least or d.value <= 1
