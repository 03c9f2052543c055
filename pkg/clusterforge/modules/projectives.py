"""
Projective and injective modules, covers, envelopes and minimal resolutions.

P_v has basis the basis paths starting at v; I_v is the dual of the
projective of the opposite algebra at v.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.linalg import Element, Matrix, Subspace, kernel_basis, solve_left
from ..algebra.quiver import BoundQuiverAlgebra, SparseElement
from ..core.errors import DimensionMismatchError, ZeroModuleError
from ..core.logging import log_progress
from .representation import ModuleMap, Representation, direct_sum, dual


def projective(algebra: BoundQuiverAlgebra, v: str) -> Representation:
    v = algebra.quiver.check_vertex(v)
    dims = {w: algebra.block_dim(v, w) for w in algebra.vertices}
    maps = {a.name: algebra.right_mult_matrix(algebra.arrow_element(a.name), v, a.source, a.target)
            for a in algebra.quiver.arrows}
    return Representation(algebra, dims, maps, check=False)


def injective(algebra: BoundQuiverAlgebra, v: str) -> Representation:
    return dual(projective(algebra.opposite(), v))


@dataclass
class ProjectiveModule:
    """⊕ P_{tops[i]} with the position of each summand's block at every vertex."""

    algebra: BoundQuiverAlgebra
    tops: Tuple[str, ...]
    module: Representation
    offsets: List[Dict[str, int]]

    def is_zero(self) -> bool:
        return not self.tops

    def generator_vector(self, i: int) -> Tuple[Element, ...]:
        """Coordinates of the trivial path of summand i inside module(tops[i])."""
        v = self.tops[i]
        field = self.algebra.field
        pos = self.offsets[i][v] + self.algebra.block_position(self.algebra.idempotent(v))
        return Matrix.unit_rows(field, self.module.dims[v], [pos]).row(0)

    def components(self, w: str, vector: Sequence[Element]) -> List[SparseElement]:
        """Split a vector of module(w) into algebra elements, one per summand."""
        out = []
        for i, v in enumerate(self.tops):
            start = self.offsets[i][w]
            size = self.algebra.block_dim(v, w)
            out.append(self.algebra.from_coordinates(vector[start:start + size], v, w))
        return out

    def vector(self, w: str, elements: Sequence[SparseElement]) -> Tuple[Element, ...]:
        """Inverse of ``components``."""
        out: List[Element] = []
        for v, x in zip(self.tops, elements):
            out.extend(self.algebra.coordinates(x, v, w))
        return tuple(out)


def projective_module(algebra: BoundQuiverAlgebra, tops: Sequence[str]) -> ProjectiveModule:
    summands = [projective(algebra, v) for v in tops]
    total = direct_sum(algebra, summands).module
    offsets, running = [], {w: 0 for w in algebra.vertices}
    for v in tops:
        offsets.append(dict(running))
        for w in algebra.vertices:
            running[w] += algebra.block_dim(v, w)
    return ProjectiveModule(algebra, tuple(tops), total, offsets)


def map_from_generators(p: ProjectiveModule, target: Representation,
                        images: Sequence[Sequence[Element]]) -> ModuleMap:
    """The module map sending generator i to images[i] ∈ target(tops[i])."""
    if len(images) != len(p.tops):
        raise DimensionMismatchError(f"{len(images)} images for {len(p.tops)} generators")
    algebra = p.algebra
    field = algebra.field
    components = {}
    for w in algebra.vertices:
        rows = []
        for v, image in zip(p.tops, images):
            source_row = Matrix(field, [image], target.dims[v])
            for k in algebra.block(v, w):
                rows.extend((source_row @ target.path_matrix(algebra.basis[k])).rows)
        components[w] = Matrix(field, rows, target.dims[w])
    return ModuleMap(p.module, target, components)


def projective_cover(m: Representation) -> Tuple[ProjectiveModule, ModuleMap]:
    """P(M) -> M, with generators the unit vectors outside the radical."""
    algebra = m.algebra
    field = m.field
    tops: List[str] = []
    images: List[Tuple[Element, ...]] = []
    for v in algebra.vertices:
        rows = [r for a in algebra.quiver.arrows_to(v) for r in m.maps[a.name].rows]
        rad = Subspace.span(field, m.dims[v], Matrix(field, rows, m.dims[v]))
        for j in rad.complement_indices():
            tops.append(v)
            images.append(Matrix.unit_rows(field, m.dims[v], [j]).row(0))
    p = projective_module(algebra, tops)
    return p, map_from_generators(p, m, images)


def is_projective(m: Representation) -> bool:
    p, _ = projective_cover(m)
    return p.module.total_dim == m.total_dim


def is_injective(m: Representation) -> bool:
    return is_projective(dual(m))


def injective_envelope(m: Representation) -> Tuple[Representation, ModuleMap]:
    """M -> I(M), dual to the projective cover of D M."""
    p, cover = projective_cover(dual(m))
    envelope = dual(p.module)
    return envelope, ModuleMap(m, envelope, {v: c.transpose() for v, c in cover.components.items()})


def lift_through(cover: ModuleMap, v: str, vector: Sequence[Element],
                 alternate: bool = False) -> Tuple[Element, ...]:
    """Some x with x·cover_v = vector; ``alternate`` adds a kernel vector."""
    field = cover.source.field
    target = Matrix(field, [vector], cover.target.dims[v])
    x = solve_left(cover.components[v], target)
    if x is None:
        raise DimensionMismatchError(f"vector is not in the image at vertex {v}")
    row = x.row(0)
    if alternate:
        ker = kernel_basis(cover.components[v])
        if ker.dim:
            row = tuple(a + b for a, b in zip(row, ker.basis.row(0)))
    return row


@dataclass
class Resolution:
    """P_k -> ... -> P_1 -> P_0 -> M; ``differentials[k-1]`` is P_k -> P_{k-1}."""

    module: Representation
    terms: List[ProjectiveModule]
    differentials: List[ModuleMap]
    augmentation: ModuleMap
    complete: bool

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def differential(self, k: int) -> ModuleMap:
        return self.differentials[k - 1]


def minimal_projective_resolution(m: Representation, terms: int) -> Resolution:
    """The first ``terms`` projectives of the minimal resolution (fewer if it stops)."""
    p0, cover = projective_cover(m)
    projectives, differentials = [p0], []
    current = cover
    complete = False
    while True:
        kernel, inclusion = current.kernel()
        if kernel.is_zero():
            complete = True
            break
        if len(projectives) >= terms:
            break
        pk, pik = projective_cover(kernel)
        differentials.append(pik.compose(inclusion))
        projectives.append(pk)
        current = pik
        log_progress(f"resolution term {len(projectives) - 1}: tops {pk.tops}", stage="resolution")
    return Resolution(m, projectives, differentials, cover, complete)


@dataclass
class Presentation:
    p1: ProjectiveModule
    p0: ProjectiveModule
    differential: ModuleMap
    cover: ModuleMap


def minimal_projective_presentation(m: Representation) -> Presentation:
    if m.is_zero():
        raise ZeroModuleError("zero module has no minimal presentation")
    res = minimal_projective_resolution(m, terms=2)
    p0 = res.terms[0]
    if res.length >= 1:
        return Presentation(res.terms[1], p0, res.differentials[0], res.augmentation)
    p1 = projective_module(m.algebra, [])
    return Presentation(p1, p0, ModuleMap(p1.module, p0.module), res.augmentation)


def generator_images(f: ModuleMap, p: ProjectiveModule) -> List[Tuple[Element, ...]]:
    """Images of the generators of p (the source of f)."""
    return [f.apply(v, p.generator_vector(i)) for i, v in enumerate(p.tops)]


def restrict_generators(f: ModuleMap, p: ProjectiveModule, q: ProjectiveModule) -> List[List[SparseElement]]:
    """Matrix of algebra elements a[i][j] ∈ e_{q_i} Λ e_{p_j} with f(gen_j) = Σ_i q_i·a[i][j]."""
    out: List[List[SparseElement]] = [[{} for _ in p.tops] for _ in q.tops]
    for j, (v, image) in enumerate(zip(p.tops, generator_images(f, p))):
        for i, x in enumerate(q.components(v, image)):
            out[i][j] = x
    return out

