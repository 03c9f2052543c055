"""
Quivers, paths, relations and bound quiver algebras.

A path is read left to right: ``αβ`` is "α then β", so a path from s to t
lives in e_s Λ e_t. Algebra elements are sparse dicts {basis index: coeff}.
"""

from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..core.config import config
from ..core.errors import (
    InconsistentRelationError,
    InputError,
    NotAdmissibleError,
    UnknownVertexError,
)
from ..core.logging import log_progress
from .linalg import RATIONALS, Element, FieldSpec, Matrix, quotient_map, Subspace

SparseElement = Dict[int, Element]


# =============================================================================
# QUIVERS AND PATHS
# =============================================================================

@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class PathWord:
    """A path of the quiver; a trivial path has no arrows and source == target."""

    source: str
    target: str
    arrows: Tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def then(self, other: "PathWord") -> "PathWord":
        if self.target != other.source:
            raise InputError(f"paths {self.label()} and {other.label()} do not compose")
        return PathWord(self.source, other.target, self.arrows + other.arrows)

    def reversed(self) -> "PathWord":
        return PathWord(self.target, self.source, self.arrows[::-1])

    def sort_key(self) -> Tuple[int, Tuple[str, ...]]:
        return (len(self.arrows), self.arrows)

    def label(self) -> str:
        return f"e{self.source}" if self.is_trivial else "".join(self.arrows)

    def __str__(self) -> str:
        return self.label()


class Quiver:
    """Finite quiver with named vertices and uniquely named arrows."""

    def __init__(self, vertices: Iterable, arrows: Iterable[Arrow]):
        self.vertices: Tuple[str, ...] = tuple(str(v) for v in vertices)
        self.arrows: Tuple[Arrow, ...] = tuple(arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("vertex ids must be unique")
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._arrows: Dict[str, Arrow] = {}
        for a in self.arrows:
            if a.name in self._arrows:
                raise InputError(f"duplicate arrow name {a.name!r}")
            for end in (a.source, a.target):
                if end not in self._vertex_index:
                    raise UnknownVertexError(f"arrow {a.name!r} uses unknown vertex {end!r}")
            self._arrows[a.name] = a

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_index

    def has_arrow(self, name: str) -> bool:
        return name in self._arrows

    def check_vertex(self, v: str) -> str:
        v = str(v)
        if v not in self._vertex_index:
            raise UnknownVertexError(f"unknown vertex {v!r}")
        return v

    def vertex_index(self, v: str) -> int:
        return self._vertex_index[self.check_vertex(v)]

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrows[name]
        except KeyError:
            raise InputError(f"unknown arrow {name!r}")

    def arrows_from(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v: str) -> List[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def trivial_path(self, v: str) -> PathWord:
        v = self.check_vertex(v)
        return PathWord(v, v)

    def path(self, names: Sequence[str], start: Optional[str] = None) -> PathWord:
        """Build a path from arrow names, checking that consecutive arrows compose."""
        if not names:
            if start is None:
                raise InputError("a trivial path needs a base vertex")
            return self.trivial_path(start)
        first = self.arrow(names[0])
        current = first.target
        for name in names[1:]:
            a = self.arrow(name)
            if a.source != current:
                raise InputError(f"path {'·'.join(names)} does not compose at {name!r}")
            current = a.target
        return PathWord(first.source, current, tuple(names))

    def paths_up_to(self, length: int) -> List[PathWord]:
        """All paths of length <= ``length``, in length-lex order."""
        layer = [PathWord(v, v) for v in self.vertices]
        out = list(layer)
        for _ in range(length):
            layer = [PathWord(p.source, a.target, p.arrows + (a.name,))
                     for p in layer for a in self.arrows_from(p.target)]
            if not layer:
                break
            out.extend(layer)
        out.sort(key=PathWord.sort_key)
        return out

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def to_networkx(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows:
            g.add_edge(a.source, a.target, key=a.name, name=a.name)
        return g

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        return nx.is_weakly_connected(self.to_networkx())

    def components(self) -> List[List[str]]:
        """Vertex sets of the connected components, in vertex order."""
        comps = nx.weakly_connected_components(self.to_networkx())
        ordered = [sorted(c, key=self._vertex_index.__getitem__) for c in comps]
        return sorted(ordered, key=lambda c: self._vertex_index[c[0]])


# =============================================================================
# RELATIONS
# =============================================================================

@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of length >= 2."""

    terms: Tuple[Tuple[Element, PathWord], ...]

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target

    def min_length(self) -> int:
        return min(len(p) for _, p in self.terms)

    def degree(self) -> int:
        return max(len(p) for _, p in self.terms)

    def reversed(self) -> "Relation":
        return Relation(tuple((c, p.reversed()) for c, p in self.terms))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def format(self, field: FieldSpec) -> str:
        parts = []
        for c, p in self.terms:
            if c == field.one:
                parts.append(p.label())
            else:
                parts.append(f"{field.format(c)}·{p.label()}")
        return " + ".join(parts) + " = 0"


@dataclass(frozen=True)
class RelationSystem:
    relations: Tuple[Relation, ...] = dc_field(default_factory=tuple)

    def __iter__(self) -> Iterator[Relation]:
        return iter(self.relations)

    def __len__(self) -> int:
        return len(self.relations)

    def validate(self, quiver: Quiver) -> None:
        for r in self.relations:
            if not r.terms:
                raise InconsistentRelationError("inconsistent relation: empty relation")
            pairs = {(p.source, p.target) for _, p in r.terms}
            if len(pairs) > 1:
                raise InconsistentRelationError(
                    f"inconsistent relation: terms run between {sorted(pairs)}"
                )
            if r.min_length() < 2:
                raise InconsistentRelationError(
                    "inconsistent relation: every term must have length at least 2"
                )
            for _, p in r.terms:
                quiver.path(p.arrows)

    def reversed(self) -> "RelationSystem":
        return RelationSystem(tuple(r.reversed() for r in self.relations))

    def between(self, source: str, target: str) -> List[Relation]:
        return [r for r in self.relations if r.source == source and r.target == target]


# =============================================================================
# BOUND QUIVER ALGEBRAS
# =============================================================================

def add_scaled(acc: SparseElement, x: SparseElement, c: Element, zero: Element) -> None:
    """acc += c·x, in place, dropping zero coefficients."""
    for k, v in x.items():
        s = acc.get(k, zero) + c * v
        if s == zero:
            acc.pop(k, None)
        else:
            acc[k] = s


class BoundQuiverAlgebra:
    """
    kQ/I with a path basis and sparse structure constants.

    ``products[(i, j)]`` holds the nonzero coordinates of basis_i · basis_j.
    """

    def __init__(
        self,
        quiver: Quiver,
        relations: RelationSystem,
        field: FieldSpec,
        basis: Sequence[PathWord],
        products: Dict[Tuple[int, int], SparseElement],
        realization=None,
        name: Optional[str] = None,
    ):
        self.quiver = quiver
        self.relations = relations
        self.field = field
        self.basis: Tuple[PathWord, ...] = tuple(basis)
        self.index: Dict[PathWord, int] = {p: k for k, p in enumerate(self.basis)}
        self.products = products
        self.realization = realization
        self.name = name
        self._opposite: Optional["BoundQuiverAlgebra"] = None
        self._blocks: Dict[Tuple[str, str], List[int]] = {}
        for k, p in enumerate(self.basis):
            self._blocks.setdefault((p.source, p.target), []).append(k)
        self._block_position = {k: pos for idx in self._blocks.values() for pos, k in enumerate(idx)}

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"BoundQuiverAlgebra{label}(dim={self.dim}, {self.quiver!r}, {len(self.relations)} relations)"

    # -- shape --------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    def block(self, s: str, t: str) -> List[int]:
        return self._blocks.get((s, t), [])

    def block_dim(self, s: str, t: str) -> int:
        return len(self.block(s, t))

    def block_position(self, k: int) -> int:
        return self._block_position[k]

    def dim_table(self) -> Dict[Tuple[str, str], int]:
        return {(s, t): self.block_dim(s, t) for s in self.vertices for t in self.vertices}

    def cartan_matrix(self) -> List[List[int]]:
        """C[i][j] = dim e_i Λ e_j."""
        return [[self.block_dim(s, t) for t in self.vertices] for s in self.vertices]

    def loewy_length(self) -> int:
        return max((len(p) for p in self.basis), default=-1) + 1

    def has_relations(self) -> bool:
        return len(self.relations) > 0

    # -- elements -----------------------------------------------------------

    def idempotent(self, v: str) -> int:
        return self.index[self.quiver.trivial_path(v)]

    def element(self, k: int) -> SparseElement:
        return {k: self.field.one}

    def arrow_element(self, name: str) -> SparseElement:
        a = self.quiver.arrow(name)
        return self.element(self.index[PathWord(a.source, a.target, (name,))])

    def multiply(self, x: SparseElement, y: SparseElement) -> SparseElement:
        zero = self.field.zero
        out: SparseElement = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.products.get((i, j))
                if prod:
                    add_scaled(out, prod, a * b, zero)
        return out

    def reduce(self, path: PathWord) -> SparseElement:
        """Coordinates of an arbitrary path of the quiver in the basis."""
        x = self.element(self.idempotent(path.source))
        for name in path.arrows:
            x = self.multiply(x, self.arrow_element(name))
            if not x:
                break
        return x

    def evaluate(self, relation: Relation) -> SparseElement:
        zero = self.field.zero
        out: SparseElement = {}
        for c, p in relation.terms:
            add_scaled(out, self.reduce(p), c, zero)
        return out

    def coordinates(self, x: SparseElement, s: str, t: str) -> Tuple[Element, ...]:
        """Dense coordinates of an element of e_s Λ e_t in its block basis."""
        idx = self.block(s, t)
        zero = self.field.zero
        return tuple(x.get(k, zero) for k in idx)

    def from_coordinates(self, vector: Sequence[Element], s: str, t: str) -> SparseElement:
        zero = self.field.zero
        return {k: c for k, c in zip(self.block(s, t), vector) if c != zero}

    def right_mult_matrix(self, x: SparseElement, s: str, t_from: str, t_to: str) -> Matrix:
        """Matrix of y ↦ y·x from e_s Λ e_{t_from} to e_s Λ e_{t_to}."""
        rows = [self.coordinates(self.multiply(self.element(k), x), s, t_to)
                for k in self.block(s, t_from)]
        return Matrix(self.field, rows, self.block_dim(s, t_to))

    def left_mult_matrix(self, x: SparseElement, s_from: str, s_to: str, t: str) -> Matrix:
        """Matrix of y ↦ x·y from e_{s_from} Λ e_t to e_{s_to} Λ e_t."""
        rows = [self.coordinates(self.multiply(x, self.element(k)), s_to, t)
                for k in self.block(s_from, t)]
        return Matrix(self.field, rows, self.block_dim(s_to, t))

    def check_associativity(self) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.products.get((i, j))
                if not ij:
                    continue
                for k in range(n):
                    left = self.multiply(ij, self.element(k))
                    right = self.multiply(self.element(i), self.products.get((j, k), {}))
                    if left != right:
                        return False
        return True

    # -- derived algebras ---------------------------------------------------

    def opposite(self) -> "BoundQuiverAlgebra":
        """Arrows and relation paths reversed; basis index k is the reverse of path k."""
        if self._opposite is None:
            products = {(j, i): dict(v) for (i, j), v in self.products.items()}
            op = BoundQuiverAlgebra(
                self.quiver.opposite(),
                self.relations.reversed(),
                self.field,
                [p.reversed() for p in self.basis],
                products,
                name=f"{self.name}^op" if self.name else None,
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def to_structure_constants(self):
        from .presentation import StructureConstantAlgebra

        return StructureConstantAlgebra(
            field=self.field,
            vertices=self.vertices,
            labels=[p.label() for p in self.basis],
            blocks=[(p.source, p.target) for p in self.basis],
            products=self.products,
            idempotents={v: self.idempotent(v) for v in self.vertices},
        )


def _relation_generators(quiver: Quiver, relations: RelationSystem, paths_by_end: Dict[str, List[PathWord]],
                         paths_by_start: Dict[str, List[PathWord]], length: int):
    """u·r·w for every relation r and paths u, w, dropping terms longer than ``length``."""
    for r in relations:
        lo = r.min_length()
        for u in paths_by_end[r.source]:
            if len(u) + lo > length:
                continue
            for w in paths_by_start[r.target]:
                if len(u) + lo + len(w) > length:
                    continue
                terms = [(c, PathWord(u.source, w.target, u.arrows + p.arrows + w.arrows))
                         for c, p in r.terms]
                terms = [(c, p) for c, p in terms if len(p) <= length]
                if terms:
                    yield terms


def compute_basis(
    quiver: Quiver,
    relations: RelationSystem,
    field: FieldSpec = RATIONALS,
    cap: Optional[int] = None,
    name: Optional[str] = None,
) -> BoundQuiverAlgebra:
    """
    Path basis and structure constants of kQ/I.

    Grows a length bound L until every path of length L lies in the ideal
    truncated at L; the basis in each block is chosen greedily in
    length-lex order.
    """
    cap = config.resolve("length_cap", cap)
    relations.validate(quiver)
    length = 1
    while True:
        if length > cap:
            raise NotAdmissibleError(f"ideal not admissible: paths survive beyond length {cap}")
        paths = quiver.paths_up_to(length)
        blocks: Dict[Tuple[str, str], List[PathWord]] = {}
        for p in paths:
            blocks.setdefault((p.source, p.target), []).append(p)
        by_end: Dict[str, List[PathWord]] = {v: [] for v in quiver.vertices}
        by_start: Dict[str, List[PathWord]] = {v: [] for v in quiver.vertices}
        for p in paths:
            by_end[p.target].append(p)
            by_start[p.source].append(p)

        generators: Dict[Tuple[str, str], List[Dict[PathWord, Element]]] = {}
        for terms in _relation_generators(quiver, relations, by_end, by_start, length):
            key = (terms[0][1].source, terms[0][1].target)
            vec: Dict[PathWord, Element] = {}
            for c, p in terms:
                vec[p] = vec.get(p, field.zero) + c
            generators.setdefault(key, []).append(vec)

        ideal: Dict[Tuple[str, str], Subspace] = {}
        positions: Dict[PathWord, int] = {}
        for key, block_paths in blocks.items():
            positions.update((p, k) for k, p in enumerate(block_paths))
            rows = [[vec.get(p, field.zero) for p in block_paths] for vec in generators.get(key, [])]
            ideal[key] = Subspace.span(field, len(block_paths), Matrix(field, rows, len(block_paths)))

        longest = [p for p in paths if len(p) == length]
        saturated = all(
            ideal[(p.source, p.target)].contains(
                Matrix.unit_rows(field, len(blocks[(p.source, p.target)]), [positions[p]]).row(0)
            )
            for p in longest
        )
        if saturated:
            break
        length += 1
    log_progress(f"path basis stabilised at length {length}", stage="compute_basis")

    # Basis: pivot paths of the quotient map, block by block
    basis: List[PathWord] = []
    coords: Dict[PathWord, Tuple[Tuple[str, str], Tuple[Element, ...]]] = {}
    block_bases: Dict[Tuple[str, str], List[PathWord]] = {}
    for v in quiver.vertices:
        for w in quiver.vertices:
            key = (v, w)
            if key not in blocks:
                continue
            block_paths = blocks[key]
            q = quotient_map(len(block_paths), ideal[key])
            _, pivots = q.transpose().rref()
            chosen = [block_paths[k] for k in pivots]
            if not chosen:
                continue
            inverse = q.select_rows(pivots).inverse()
            for k, p in enumerate(block_paths):
                coords[p] = (key, (q.select_rows([k]) @ inverse).row(0))
            block_bases[key] = chosen
            basis.extend(chosen)

    index = {p: k for k, p in enumerate(basis)}
    zero = field.zero
    products: Dict[Tuple[int, int], SparseElement] = {}
    for i, p in enumerate(basis):
        for j, q in enumerate(basis):
            if p.target != q.source:
                continue
            pq = p.then(q)
            if len(pq) > length or pq not in coords:
                continue
            key, vec = coords[pq]
            prod = {index[b]: c for b, c in zip(block_bases.get(key, []), vec) if c != zero}
            if prod:
                products[(i, j)] = prod
    return BoundQuiverAlgebra(quiver, relations, field, basis, products, name=name)
