"""
Auslander-Reiten translates and almost split sequences.

τ = D Tr and τ⁻¹ = Tr D, with the transpose taken from a minimal projective
presentation. The almost split sequence ending at M is the extension whose
class generates the socle of Ext¹(M, τM) over End(M).
"""

from dataclasses import dataclass, field
from typing import List, Tuple

from ..algebra.linalg import (
    Matrix,
    block_diagonal,
    factor_charpoly,
    hstack,
    image_basis,
    kernel_basis,
    linear_root,
    solve_left,
)
from ..algebra.quiver import BoundQuiverAlgebra
from ..core.errors import (
    DimensionMismatchError,
    InjectiveHasNoInverseTranslateError,
    ProjectiveHasNoTranslateError,
    ZeroModuleError,
)
from ..modules.decomposition import decompose, multiplicities
from ..modules.homology import ExtGroup, ext, lift_chain_map
from ..modules.projectives import (
    is_injective,
    is_projective,
    map_from_generators,
    minimal_projective_presentation,
    projective_module,
    restrict_generators,
)
from ..modules.representation import ModuleMap, Representation, direct_sum, dual, hom


def transpose(m: Representation) -> Representation:
    """Tr M = coker Hom(d, Λ) for a minimal presentation P₁ -d-> P₀ -> M, over Λ^op."""
    pres = minimal_projective_presentation(m)
    op = m.algebra.opposite()
    coeffs = restrict_generators(pres.differential, pres.p1, pres.p0)
    p0_op = projective_module(op, pres.p0.tops)
    p1_op = projective_module(op, pres.p1.tops)
    images = []
    for j, v in enumerate(pres.p0.tops):
        images.append(p1_op.vector(v, [coeffs[j][i] for i in range(len(pres.p1.tops))]))
    hom_d = map_from_generators(p0_op, p1_op.module, images)
    tr, _ = hom_d.cokernel()
    return tr


def ar_translate(m: Representation) -> Representation:
    if m.is_zero():
        raise ZeroModuleError("zero module has no translate")
    if is_projective(m):
        raise ProjectiveHasNoTranslateError()
    return dual(transpose(m))


def inverse_ar_translate(m: Representation) -> Representation:
    if m.is_zero():
        raise ZeroModuleError("zero module has no inverse translate")
    if is_injective(m):
        raise InjectiveHasNoInverseTranslateError()
    return transpose(dual(m))


def coxeter_matrix(algebra: BoundQuiverAlgebra) -> Matrix:
    """Φ = -C⁻¹Cᵀ, so that dim τM = dim M · Φ over a hereditary algebra."""
    field = algebra.field
    cartan = Matrix.from_values(field, algebra.cartan_matrix())
    return -(cartan.inverse() @ cartan.transpose())


# =============================================================================
# ALMOST SPLIT SEQUENCES
# =============================================================================

@dataclass
class AlmostSplitSequence:
    """0 -> τM -f-> E -g-> M -> 0."""

    left: Representation
    middle: Representation
    right: Representation
    inclusion: ModuleMap
    projection: ModuleMap
    summands: List[Tuple[Representation, int]] = field(default_factory=list)

    def is_exact(self) -> bool:
        if not (self.inclusion.is_injective() and self.projection.is_surjective()):
            return False
        if not self.inclusion.compose(self.projection).is_zero():
            return False
        return all(self.left.dims[v] + self.right.dims[v] == self.middle.dims[v]
                   for v in self.middle.algebra.vertices)

    def splits(self) -> bool:
        """True when g has a section, i.e. some s: M -> E with s·g = id."""
        maps = hom(self.right, self.middle)
        if not maps:
            return self.right.is_zero()
        field = self.right.field
        vertices = self.right.algebra.vertices
        # Find coefficients c with Σ c_k (s_k g)_v = id_v for all v, as one linear system.
        columns = []
        for s in maps:
            composed = s.compose(self.projection)
            columns.append([x for v in vertices for row in composed.components[v].rows for x in row])
        target = [x for v in vertices for row in Matrix.identity(field, self.right.dims[v]).rows for x in row]
        system = Matrix(field, columns, len(target))
        return solve_left(system, Matrix(field, [target], len(target))) is not None


def _endomorphism_radical(m: Representation) -> List[ModuleMap]:
    """Spanning maps φ - λ·id of rad End(M) for a local endomorphism ring."""
    out = []
    identity = ModuleMap.identity(m)
    for phi in hom(m, m):
        whole = block_diagonal(m.field, [phi.components[v] for v in m.algebra.vertices])
        factors = factor_charpoly(whole)
        if len(factors) != 1 or len(factors[0][0]) != 2:
            continue
        lam = linear_root(factors[0][0])
        out.append(phi + identity.scale(-lam))
    return out


def _pullback_matrix(group: ExtGroup, f: ModuleMap) -> Matrix:
    """Matrix of η ↦ η·f on Ext¹(M, X) in the representative basis."""
    res = group.resolution
    chain = lift_chain_map(f, res, res, 1)
    p1 = res.terms[1]
    coeffs = restrict_generators(chain[1], p1, p1)
    x = group.target
    field = x.field
    rows = []
    for z in group.representatives.rows:
        parts = [group.component(z, i) for i in range(len(p1.tops))]
        new = []
        for j, vj in enumerate(p1.tops):
            total = Matrix.zeros(field, 1, x.dims[vj])
            for i, ui in enumerate(p1.tops):
                if coeffs[i][j]:
                    total = total + Matrix(field, [parts[i]], x.dims[ui]) @ x.act(coeffs[i][j], ui, vj)
            new.extend(total.row(0))
        rows.append(group.coordinates(new))
    return Matrix(field, rows, group.dim)


def socle_class(group: ExtGroup, m: Representation) -> Tuple:
    """A cocycle in Hom(P₁, X) whose class is killed by rad End(M)."""
    field = m.field
    radical_maps = _endomorphism_radical(m)
    if radical_maps:
        joined = hstack(field, group.dim, [_pullback_matrix(group, f) for f in radical_maps])
        socle = kernel_basis(joined)
    else:
        socle = kernel_basis(Matrix.zeros(field, group.dim, 0))
    if socle.is_zero():
        raise DimensionMismatchError("Ext¹(M, τM) has no socle element")
    return (Matrix(field, [socle.basis.row(0)], group.dim) @ group.representatives).row(0)


def extension_from_cocycle(group: ExtGroup, cocycle) -> Tuple[Representation, ModuleMap, ModuleMap]:
    """Middle term of the extension 0 -> X -> E -> M -> 0 of a degree-one class."""
    res = group.resolution
    x = group.target
    algebra = x.algebra
    field = x.field
    p0, p1 = res.terms[0], res.terms[1]
    z = map_from_generators(p1, x, [group.component(cocycle, i) for i in range(len(p1.tops))])
    d1 = res.differential(1)
    total = direct_sum(algebra, [x, p0.module])
    h = ModuleMap(p1.module, total.module,
                  {v: hstack(field, p1.module.dims[v], [z.components[v].scale(-field.one), d1.components[v]])
                   for v in algebra.vertices})
    middle, proj = h.cokernel()
    inclusion = total.injections[0].compose(proj)
    down = {}
    for v in algebra.vertices:
        lift = Matrix.unit_rows(field, total.module.dims[v], image_basis(h.components[v]).complement_indices())
        on_sum = total.projections[1].components[v] @ res.augmentation.components[v]
        down[v] = lift @ on_sum
    return middle, inclusion, ModuleMap(middle, group.resolution.module, down)


def almost_split_sequence(m: Representation) -> AlmostSplitSequence:
    """The almost split sequence ending at the indecomposable non-projective M."""
    left = ar_translate(m)
    group = ext(m, left, 1)
    if group.dim == 0:
        raise DimensionMismatchError("Ext¹(M, τM) vanishes")
    cocycle = socle_class(group, m)
    middle, inclusion, projection = extension_from_cocycle(group, cocycle)
    summands = multiplicities(decompose(middle))
    return AlmostSplitSequence(left, middle, m, inclusion, projection, summands)
