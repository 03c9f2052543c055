"""
Representations of bound quivers and the maps between them.

A representation M attaches a vector space M(v) to each vertex and a
dim M(s) x dim M(t) matrix to each arrow s -> t; a path acts by the product
of its arrow matrices in traversal order. Module maps are per-vertex
matrices commuting with every arrow.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..algebra.linalg import (
    Element,
    Matrix,
    Subspace,
    block_diagonal,
    hstack,
    image_basis,
    kernel_basis,
    quotient_map,
    solve_left,
)
from ..algebra.quiver import BoundQuiverAlgebra, PathWord, SparseElement
from ..core.errors import (
    DimensionMismatchError,
    InputError,
    NotAModuleMapError,
    RelationViolatedError,
)


class Representation:
    """A right module over a bound quiver algebra, as vertex spaces and arrow matrices."""

    def __init__(
        self,
        algebra: BoundQuiverAlgebra,
        dims: Mapping[str, int],
        maps: Optional[Mapping[str, Matrix]] = None,
        check: bool = True,
    ):
        quiver = algebra.quiver
        maps = dict(maps or {})
        for v in dims:
            quiver.check_vertex(v)
        unknown = set(maps) - {a.name for a in quiver.arrows}
        if unknown:
            raise InputError(f"maps given for unknown arrows {sorted(unknown)}")
        self.algebra = algebra
        self.dims: Dict[str, int] = {v: int(dims.get(v, 0)) for v in quiver.vertices}
        self.maps: Dict[str, Matrix] = {}
        for a in quiver.arrows:
            shape = (self.dims[a.source], self.dims[a.target])
            m = maps.get(a.name)
            if m is None:
                m = Matrix.zeros(algebra.field, *shape)
            if m.shape != shape:
                raise DimensionMismatchError(f"map of {a.name} has shape {m.shape}, expected {shape}")
            self.maps[a.name] = m
        self._path_cache: Dict[PathWord, Matrix] = {}
        if check:
            self.check_relations()

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim_vector(self) -> Tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def support(self) -> List[str]:
        return [v for v in self.algebra.vertices if self.dims[v]]

    def __repr__(self) -> str:
        return f"Representation{self.dim_vector}"

    def equals(self, other: "Representation") -> bool:
        """Exact equality of vertex spaces and arrow matrices."""
        return self.algebra is other.algebra and self.dims == other.dims and self.maps == other.maps

    def path_matrix(self, path: PathWord) -> Matrix:
        cached = self._path_cache.get(path)
        if cached is not None:
            return cached
        m = Matrix.identity(self.field, self.dims[path.source])
        for name in path.arrows:
            m = m @ self.maps[name]
        self._path_cache[path] = m
        return m

    def act(self, x: SparseElement, s: str, t: str) -> Matrix:
        """Matrix of v ↦ v·x from M(s) to M(t) for the e_s Λ e_t part of x."""
        out = Matrix.zeros(self.field, self.dims[s], self.dims[t])
        for k, c in x.items():
            p = self.algebra.basis[k]
            if p.source == s and p.target == t:
                out = out + self.path_matrix(p).scale(c)
        return out

    def check_relations(self) -> None:
        for r in self.algebra.relations:
            total = Matrix.zeros(self.field, self.dims[r.source], self.dims[r.target])
            for c, p in r.terms:
                total = total + self.path_matrix(p).scale(c)
            if not total.is_zero():
                raise RelationViolatedError(f"relation violated: {r.format(self.field)}")

    def offsets(self) -> Dict[str, int]:
        """Position of M(v) inside the concatenation of all vertex spaces."""
        out, pos = {}, 0
        for v in self.algebra.vertices:
            out[v] = pos
            pos += self.dims[v]
        return out


class ModuleMap:
    """Module homomorphism f: source -> target given by per-vertex matrices."""

    def __init__(
        self,
        source: Representation,
        target: Representation,
        components: Optional[Mapping[str, Matrix]] = None,
        check: bool = False,
    ):
        components = dict(components or {})
        self.source = source
        self.target = target
        self.components: Dict[str, Matrix] = {}
        for v in source.algebra.vertices:
            shape = (source.dims[v], target.dims[v])
            m = components.get(v)
            if m is None:
                m = Matrix.zeros(source.field, *shape)
            if m.shape != shape:
                raise DimensionMismatchError(f"component at {v} has shape {m.shape}, expected {shape}")
            self.components[v] = m
        if check and not self.is_natural():
            raise NotAModuleMapError("matrices do not commute with the arrow maps")

    def __repr__(self) -> str:
        return f"ModuleMap({self.source!r} -> {self.target!r})"

    @classmethod
    def identity(cls, m: Representation) -> "ModuleMap":
        return cls(m, m, {v: Matrix.identity(m.field, d) for v, d in m.dims.items()})

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "ModuleMap":
        return cls(source, target)

    def is_natural(self) -> bool:
        for a in self.source.algebra.quiver.arrows:
            left = self.source.maps[a.name] @ self.components[a.target]
            right = self.components[a.source] @ self.target.maps[a.name]
            if left != right:
                return False
        return True

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self, then other."""
        return ModuleMap(self.source, other.target,
                         {v: self.components[v] @ other.components[v] for v in self.components})

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target,
                         {v: self.components[v] + other.components[v] for v in self.components})

    def scale(self, c: Element) -> "ModuleMap":
        return ModuleMap(self.source, self.target, {v: m.scale(c) for v, m in self.components.items()})

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.components.values())

    def rank_vector(self) -> Tuple[int, ...]:
        return tuple(self.components[v].rank() for v in self.source.algebra.vertices)

    def is_injective(self) -> bool:
        return all(self.components[v].rank() == self.source.dims[v] for v in self.components)

    def is_surjective(self) -> bool:
        return all(self.components[v].rank() == self.target.dims[v] for v in self.components)

    def is_isomorphism(self) -> bool:
        return all(m.is_invertible() for m in self.components.values())

    def apply(self, v: str, vector: Sequence[Element]) -> Tuple[Element, ...]:
        return (Matrix(self.source.field, [vector], self.source.dims[v]) @ self.components[v]).row(0)

    def kernel(self) -> Tuple[Representation, "ModuleMap"]:
        return submodule(self.source, {v: kernel_basis(m) for v, m in self.components.items()})

    def image(self) -> Tuple[Representation, "ModuleMap"]:
        return submodule(self.target, {v: image_basis(m) for v, m in self.components.items()})

    def cokernel(self) -> Tuple[Representation, "ModuleMap"]:
        return quotient(self.target, {v: image_basis(m) for v, m in self.components.items()})

    def dual(self) -> "ModuleMap":
        return ModuleMap(dual(self.target), dual(self.source),
                         {v: m.transpose() for v, m in self.components.items()})


# =============================================================================
# CONSTRUCTIONS
# =============================================================================

def zero_module(algebra: BoundQuiverAlgebra) -> Representation:
    return Representation(algebra, {})


def simple(algebra: BoundQuiverAlgebra, v: str) -> Representation:
    v = algebra.quiver.check_vertex(v)
    return Representation(algebra, {v: 1})


def submodule(m: Representation, subspaces: Mapping[str, Subspace]) -> Tuple[Representation, ModuleMap]:
    """Subrepresentation spanned by per-vertex subspaces, with its inclusion."""
    field = m.field
    bases = {v: subspaces[v].basis if v in subspaces else Matrix.zeros(field, 0, m.dims[v])
             for v in m.algebra.vertices}
    maps = {}
    for a in m.algebra.quiver.arrows:
        image = bases[a.source] @ m.maps[a.name]
        x = solve_left(bases[a.target], image)
        if x is None:
            raise InputError(f"subspaces are not closed under arrow {a.name}")
        maps[a.name] = x
    sub = Representation(m.algebra, {v: b.nrows for v, b in bases.items()}, maps, check=False)
    return sub, ModuleMap(sub, m, bases)


def quotient(m: Representation, subspaces: Mapping[str, Subspace]) -> Tuple[Representation, ModuleMap]:
    """Quotient by a subrepresentation given by per-vertex subspaces, with the projection."""
    field = m.field
    projections, lifts = {}, {}
    for v in m.algebra.vertices:
        sub = subspaces.get(v) or Subspace.zero(field, m.dims[v])
        projections[v] = quotient_map(m.dims[v], sub)
        lifts[v] = Matrix.unit_rows(field, m.dims[v], sub.complement_indices())
    maps = {a.name: lifts[a.source] @ m.maps[a.name] @ projections[a.target]
            for a in m.algebra.quiver.arrows}
    q = Representation(m.algebra, {v: p.ncols for v, p in projections.items()}, maps, check=False)
    return q, ModuleMap(m, q, projections)


@dataclass
class DirectSum:
    module: Representation
    injections: List[ModuleMap]
    projections: List[ModuleMap]


def direct_sum(algebra: BoundQuiverAlgebra, summands: Sequence[Representation]) -> DirectSum:
    field = algebra.field
    dims = {v: sum(s.dims[v] for s in summands) for v in algebra.vertices}
    maps = {a.name: block_diagonal(field, [s.maps[a.name] for s in summands]) for a in algebra.quiver.arrows}
    total = Representation(algebra, dims, maps, check=False)
    injections, projections = [], []
    offset = {v: 0 for v in algebra.vertices}
    for s in summands:
        inj, proj = {}, {}
        for v in algebra.vertices:
            rows = range(offset[v], offset[v] + s.dims[v])
            inj[v] = Matrix.unit_rows(field, dims[v], rows)
            proj[v] = inj[v].transpose()
            offset[v] += s.dims[v]
        injections.append(ModuleMap(s, total, inj))
        projections.append(ModuleMap(total, s, proj))
    return DirectSum(total, injections, projections)


def dual(m: Representation) -> Representation:
    """D M = Hom_k(M, k), a module over the opposite algebra."""
    op = m.algebra.opposite()
    return Representation(op, dict(m.dims), {name: mat.transpose() for name, mat in m.maps.items()},
                          check=False)


def radical(m: Representation) -> Tuple[Representation, ModuleMap]:
    field = m.field
    spaces = {}
    for v in m.algebra.vertices:
        incoming = [m.maps[a.name] for a in m.algebra.quiver.arrows_to(v)]
        rows = [r for mat in incoming for r in mat.rows]
        spaces[v] = Subspace.span(field, m.dims[v], Matrix(field, rows, m.dims[v]))
    return submodule(m, spaces)


def top(m: Representation) -> Tuple[Representation, ModuleMap]:
    _, inclusion = radical(m)
    return inclusion.cokernel()


def socle(m: Representation) -> Tuple[Representation, ModuleMap]:
    field = m.field
    spaces = {}
    for v in m.algebra.vertices:
        outgoing = [m.maps[a.name] for a in m.algebra.quiver.arrows_from(v)]
        joined = hstack(field, m.dims[v], outgoing)
        spaces[v] = kernel_basis(joined) if outgoing else Subspace.full(field, m.dims[v])
    return submodule(m, spaces)


def is_sincere(m: Representation) -> bool:
    return all(d > 0 for d in m.dim_vector)


# =============================================================================
# HOM SPACES
# =============================================================================

def _hom_system(m: Representation, n: Representation) -> Tuple[Matrix, Dict[str, int]]:
    """Coefficient matrix (unknowns x equations) of the naturality equations."""
    field = m.field
    vertices = m.algebra.vertices
    offsets, count = {}, 0
    for v in vertices:
        offsets[v] = count
        count += m.dims[v] * n.dims[v]
    zero = field.zero
    columns: List[List[Element]] = []
    for a in m.algebra.quiver.arrows:
        s, t = a.source, a.target
        ma, na = m.maps[a.name], n.maps[a.name]
        ms, mt, ns, nt = m.dims[s], m.dims[t], n.dims[s], n.dims[t]
        # (M_a f_t - f_s N_a)[i][j] = 0
        for i in range(ms):
            for j in range(nt):
                col = [zero] * count
                for k in range(mt):
                    c = ma.entry(i, k)
                    if c != zero:
                        col[offsets[t] + k * nt + j] += c
                for k in range(ns):
                    c = na.entry(k, j)
                    if c != zero:
                        col[offsets[s] + i * ns + k] -= c
                columns.append(col)
    system = Matrix(field, columns, count).transpose() if columns else Matrix.zeros(field, count, 0)
    return system, offsets


def hom(m: Representation, n: Representation) -> List[ModuleMap]:
    """Basis of Hom(M, N), canonical for fixed inputs."""
    field = m.field
    system, offsets = _hom_system(m, n)
    solutions = kernel_basis(system)
    out = []
    for row in solutions.basis.rows:
        comps = {}
        for v in m.algebra.vertices:
            r, c = m.dims[v], n.dims[v]
            flat = row[offsets[v]:offsets[v] + r * c]
            comps[v] = Matrix(field, [flat[i * c:(i + 1) * c] for i in range(r)], c)
        out.append(ModuleMap(m, n, comps))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    system, _ = _hom_system(m, n)
    return system.nrows - system.rank()


def combine(maps: Sequence[ModuleMap], coeffs: Sequence[Element]) -> ModuleMap:
    total = ModuleMap.zero(maps[0].source, maps[0].target)
    for f, c in zip(maps, coeffs):
        if c != maps[0].source.field.zero:
            total = total + f.scale(c)
    return total
