"""
Homological algebra over bound quiver algebras: Ext groups via Yoneda
cochains on minimal projective resolutions, chain-map lifting, syzygies and
homological dimensions.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..algebra.linalg import (
    Element,
    Matrix,
    Subspace,
    greedy_independent,
    hstack,
    image_basis,
    kernel_basis,
    solve_left,
    vstack,
)
from ..algebra.quiver import BoundQuiverAlgebra
from ..core.config import config
from ..core.errors import DimensionMismatchError
from .decomposition import decompose
from .projectives import (
    ProjectiveModule,
    Resolution,
    generator_images,
    is_injective,
    is_projective,
    lift_through,
    map_from_generators,
    minimal_projective_resolution,
    projective_cover,
    projective_module,
    restrict_generators,
)
from .representation import ModuleMap, Representation, direct_sum, dual, simple


# =============================================================================
# DIMENSIONS
# =============================================================================

@dataclass(frozen=True)
class HomologicalDimension:
    """A dimension, or a lower bound when the resolution hit the step cap."""

    value: int
    at_least: bool = False

    def __str__(self) -> str:
        return f"≥{self.value}" if self.at_least else str(self.value)

    def to_json(self):
        return str(self) if self.at_least else self.value


def pd(m: Representation, cap: Optional[int] = None) -> HomologicalDimension:
    cap = config.resolve("resolution_cap", cap)
    res = minimal_projective_resolution(m, terms=cap + 1)
    if res.complete:
        return HomologicalDimension(res.length)
    return HomologicalDimension(cap, at_least=True)


def injective_dimension(m: Representation, cap: Optional[int] = None) -> HomologicalDimension:
    return pd(dual(m), cap)


def gldim(algebra: BoundQuiverAlgebra, cap: Optional[int] = None) -> HomologicalDimension:
    """Maximum projective dimension of the simple modules."""
    worst = HomologicalDimension(0)
    for v in algebra.vertices:
        d = pd(simple(algebra, v), cap)
        if d.at_least:
            return d
        if d.value > worst.value:
            worst = d
    return worst


# =============================================================================
# SYZYGIES
# =============================================================================

def strip_projective_summands(m: Representation) -> Representation:
    summands = decompose(m)
    kept = [s for s in summands if not is_projective(s)]
    if len(kept) == len(summands):
        return m
    return direct_sum(m.algebra, kept).module


def strip_injective_summands(m: Representation) -> Representation:
    summands = decompose(m)
    kept = [s for s in summands if not is_injective(s)]
    if len(kept) == len(summands):
        return m
    return direct_sum(m.algebra, kept).module


def syzygy(m: Representation, i: int = 1) -> Representation:
    """Ω^i M without projective summands."""
    if i < 0:
        return cosyzygy(m, -i)
    current = m
    for _ in range(i):
        _, cover = projective_cover(current)
        kernel, _ = cover.kernel()
        current = strip_projective_summands(kernel)
    return current


def cosyzygy(m: Representation, i: int = 1) -> Representation:
    """Ω^{-i} M without injective summands."""
    if i < 0:
        return syzygy(m, -i)
    return dual(syzygy(dual(m), i))


# =============================================================================
# EXT
# =============================================================================

def cochain_offsets(p: ProjectiveModule, n: Representation) -> List[int]:
    out, pos = [], 0
    for v in p.tops:
        out.append(pos)
        pos += n.dims[v]
    return out + [pos]


def cochain_differential(res: Resolution, n: Representation, k: int) -> Matrix:
    """δ^k: Hom(P_k, N) -> Hom(P_{k+1}, N), both written as generator images."""
    field = n.field
    pk = res.terms[k] if k <= res.length else None
    pk1 = res.terms[k + 1] if k + 1 <= res.length else None
    rows_dim = sum(n.dims[v] for v in pk.tops) if pk else 0
    cols_dim = sum(n.dims[v] for v in pk1.tops) if pk1 else 0
    if pk is None or pk1 is None:
        return Matrix.zeros(field, rows_dim, cols_dim)
    coeffs = restrict_generators(res.differential(k + 1), pk1, pk)
    block_rows = []
    for i, v in enumerate(pk.tops):
        blocks = [n.act(coeffs[i][j], v, w) for j, w in enumerate(pk1.tops)]
        block_rows.append(hstack(field, n.dims[v], blocks))
    return vstack(field, cols_dim, block_rows)


@dataclass
class ExtGroup:
    """Ext^k(M, N) with cocycle representatives in Hom(P_k, N)."""

    degree: int
    resolution: Resolution
    target: Representation
    cocycles: Subspace
    coboundaries: Subspace
    representatives: Matrix

    @property
    def dim(self) -> int:
        return self.representatives.nrows

    @property
    def tops(self) -> Tuple[str, ...]:
        if self.degree > self.resolution.length:
            return ()
        return self.resolution.terms[self.degree].tops

    def coordinates(self, cocycle: Sequence[Element]) -> Tuple[Element, ...]:
        """Coordinates of the class of a cocycle in the representative basis."""
        field = self.target.field
        n = self.cocycles.ambient
        stacked = vstack(field, n, [self.representatives, self.coboundaries.basis])
        x = solve_left(stacked, Matrix(field, [cocycle], n))
        if x is None:
            raise DimensionMismatchError("vector is not a cocycle")
        return x.row(0)[: self.dim]

    def component(self, cocycle: Sequence[Element], i: int) -> Tuple[Element, ...]:
        """The generator image of summand i of P_k."""
        offsets = cochain_offsets(self.resolution.terms[self.degree], self.target)
        return tuple(cocycle[offsets[i]:offsets[i + 1]])


def ext(m: Representation, n: Representation, k: int,
        resolution: Optional[Resolution] = None) -> ExtGroup:
    """Ext^k(M, N) as homology of Hom(P_•, N); k = 0 gives Hom(M, N)."""
    if k < 0:
        raise DimensionMismatchError("Ext degree must be non-negative")
    field = n.field
    res = resolution or minimal_projective_resolution(m, terms=k + 2)
    delta = cochain_differential(res, n, k)
    cocycles = kernel_basis(delta)
    if k >= 1:
        coboundaries = image_basis(cochain_differential(res, n, k - 1))
    else:
        coboundaries = Subspace.zero(field, cocycles.ambient)
    chosen = greedy_independent(field, cocycles.basis.rows, cocycles.ambient, start=coboundaries)
    reps = cocycles.basis.select_rows(chosen)
    return ExtGroup(k, res, n, cocycles, coboundaries, reps)


def ext_by_coresolution(m: Representation, n: Representation, k: int) -> int:
    """dim Ext^k(M, N) from the minimal injective coresolution of N (via duality)."""
    return ext(dual(n), dual(m), k).dim


# =============================================================================
# CHAIN MAPS
# =============================================================================

def lift_chain_map(g: ModuleMap, source: Resolution, target: Resolution, degree: int,
                   alternate: bool = False) -> List[ModuleMap]:
    """
    Chain maps f_0..f_degree between resolutions lifting g: M -> M'.

    ``alternate`` picks a different lift at every step.
    """
    algebra = g.source.algebra
    maps: List[ModuleMap] = []
    for k in range(degree + 1):
        if k > source.length:
            break
        pk = source.terms[k]
        if k > target.length:
            zero = projective_module(algebra, [])
            maps.append(ModuleMap(pk.module, zero.module))
            continue
        qk = target.terms[k]
        if k == 0:
            images = [g.apply(v, y) for v, y in zip(pk.tops, generator_images(source.augmentation, pk))]
            down = target.augmentation
        else:
            d = source.differential(k)
            images = [maps[k - 1].apply(v, y) for v, y in zip(pk.tops, generator_images(d, pk))]
            down = target.differential(k)
        lifted = [lift_through(down, v, y, alternate) for v, y in zip(pk.tops, images)]
        maps.append(map_from_generators(pk, qk.module, lifted))
    return maps
