"""
The push-down functor G_λ from a window of Č to C̃.

G_λM(ℓ) is the direct sum of the spaces M(ℓ,i) in increasing level order;
an arrow copy (x,i) contributes its matrix to the block of x linking the
summands at its two endpoints.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..algebra.linalg import Matrix, block_diagonal
from ..ar.translate import AlmostSplitSequence, almost_split_sequence
from ..constructions.trivial_extension import TrivialExtensionAlgebra
from ..constructions.windows import WindowKind, WindowedAlgebra
from ..core.errors import InputError
from ..modules.decomposition import is_indecomposable, is_isomorphic
from ..modules.projectives import is_projective
from ..modules.representation import ModuleMap, Representation


@dataclass
class CoveringMap:
    window: WindowedAlgebra
    target: TrivialExtensionAlgebra

    def __post_init__(self):
        if self.window.kind is not WindowKind.CLUSTER_REPETITIVE:
            raise InputError("push-down is defined on cluster repetitive windows")
        if self.window.base is not self.target.base or self.window.connector.labels != self.target.bimodule.labels:
            raise InputError("window and trivial extension are built from different data")
        names = {a.name for a in self.target.algebra.quiver.arrows}
        for a in self.window.algebra.quiver.arrows:
            label, _ = self.window.label_positions[a.name]
            if label not in names:
                raise InputError(f"window arrow {a.name!r} has no image in the trivial extension")

    def vertex_image(self, v: str) -> str:
        return self.window.positions[v][0]

    def arrow_image(self, name: str) -> str:
        return self.window.label_positions[name][0]

    def fiber(self, vertex: str) -> List[str]:
        return [self.window.vertex(vertex, i) for i in self.window.levels]


def _fiber_offsets(g: CoveringMap, m: Representation) -> Tuple[Dict[str, int], Dict[str, int]]:
    offsets, dims = {}, {}
    for ell in g.window.base.vertices:
        pos = 0
        for v in g.fiber(ell):
            offsets[v] = pos
            pos += m.dims[v]
        dims[ell] = pos
    return offsets, dims


def push_down(g: CoveringMap, m: Representation) -> Representation:
    """G_λM; raises RelationViolatedError if the result is not a C̃-module."""
    if m.algebra is not g.window.algebra:
        raise InputError("module is not over the covering window")
    field = m.field
    offsets, dims = _fiber_offsets(g, m)
    rows: Dict[str, List[List]] = {}
    target_quiver = g.target.algebra.quiver
    for x in target_quiver.arrows:
        rows[x.name] = [[field.zero] * dims[x.target] for _ in range(dims[x.source])]
    for a in g.window.algebra.quiver.arrows:
        block = m.maps[a.name]
        if block.is_zero():
            continue
        grid = rows[g.arrow_image(a.name)]
        r0, c0 = offsets[a.source], offsets[a.target]
        for i, row in enumerate(block.rows):
            for j, c in enumerate(row):
                grid[r0 + i][c0 + j] = c
    maps = {name: Matrix(field, grid, dims[target_quiver.arrow(name).target]) for name, grid in rows.items()}
    return Representation(g.target.algebra, dims, maps)


def push_down_map(g: CoveringMap, f: ModuleMap) -> ModuleMap:
    source, target = push_down(g, f.source), push_down(g, f.target)
    field = f.source.field
    components = {ell: block_diagonal(field, [f.components[v] for v in g.fiber(ell)])
                  for ell in g.window.base.vertices}
    return ModuleMap(source, target, components)


@dataclass
class PushedSequence:
    left: Representation
    middle: Representation
    right: Representation
    inclusion: ModuleMap
    projection: ModuleMap
    almost_split: bool
    reason: str = ""

    def to_json(self) -> dict:
        return {"left": list(self.left.dim_vector), "middle": list(self.middle.dim_vector),
                "right": list(self.right.dim_vector), "almost_split": self.almost_split, "reason": self.reason}


def push_down_sequence(g: CoveringMap, seq: AlmostSplitSequence) -> PushedSequence:
    """
    G_λ of an almost split sequence, with a verdict: exact, non-split, right end
    indecomposable and non-projective, left end ≅ τ of the right end and middle
    term ≅ the middle of the almost split sequence over C̃.
    """
    inclusion = push_down_map(g, seq.inclusion)
    projection = push_down_map(g, seq.projection)
    pushed = AlmostSplitSequence(inclusion.source, inclusion.target, projection.target, inclusion, projection)

    def verdict(ok: bool, reason: str = "") -> PushedSequence:
        return PushedSequence(pushed.left, pushed.middle, pushed.right, inclusion, projection, ok, reason)

    if not pushed.is_exact():
        return verdict(False, "not exact")
    right = pushed.right
    if not is_indecomposable(right) or is_projective(right):
        return verdict(False, "right end is not indecomposable non-projective")
    if pushed.splits():
        return verdict(False, "sequence splits")
    reference = almost_split_sequence(right)
    if not is_isomorphic(reference.left, pushed.left):
        return verdict(False, "left end is not the translate of the right end")
    if not is_isomorphic(reference.middle, pushed.middle):
        return verdict(False, "middle term differs from the almost split sequence")
    return verdict(True)
