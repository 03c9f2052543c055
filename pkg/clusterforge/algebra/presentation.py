"""
Structure-constant algebras and their quiver presentations.

``present`` turns a basic algebra given by a multiplication table on a basis
adapted to a complete set of primitive orthogonal idempotents into a bound
quiver algebra, remembering how the path basis sits inside the input.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.config import config
from ..core.errors import DimensionMismatchError, InputError, NotAdmissibleError, NotBasicError
from ..core.logging import log_progress
from .linalg import (
    Element,
    FieldSpec,
    Matrix,
    Subspace,
    factor_charpoly,
    greedy_independent,
    kernel_basis,
    linear_root,
)
from .quiver import (
    Arrow,
    BoundQuiverAlgebra,
    PathWord,
    Quiver,
    Relation,
    RelationSystem,
    SparseElement,
    add_scaled,
)


class StructureConstantAlgebra:
    """
    Finite-dimensional algebra on a basis graded by idempotent pairs.

    Basis element k lies in e_s Λ e_t for ``blocks[k] == (s, t)``;
    ``idempotents[v]`` is the index of the basis element e_v.
    """

    def __init__(
        self,
        field: FieldSpec,
        vertices: Sequence[str],
        labels: Sequence[str],
        blocks: Sequence[Tuple[str, str]],
        products: Dict[Tuple[int, int], SparseElement],
        idempotents: Dict[str, int],
    ):
        if len(labels) != len(blocks):
            raise DimensionMismatchError("one block per basis element is required")
        if len(set(labels)) != len(labels):
            raise InputError("basis labels must be unique")
        self.field = field
        self.vertices = tuple(vertices)
        self.labels = tuple(labels)
        self.blocks_of = tuple(blocks)
        self.products = products
        self.idempotents = dict(idempotents)
        if set(self.idempotents) != set(self.vertices):
            raise InputError("every vertex needs an idempotent")
        self._blocks: Dict[Tuple[str, str], List[int]] = {}
        for k, key in enumerate(self.blocks_of):
            self._blocks.setdefault(key, []).append(k)
        self._position = {k: pos for idx in self._blocks.values() for pos, k in enumerate(idx)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def block(self, s: str, t: str) -> List[int]:
        return self._blocks.get((s, t), [])

    def block_dim(self, s: str, t: str) -> int:
        return len(self.block(s, t))

    def element(self, k: int) -> SparseElement:
        return {k: self.field.one}

    def multiply(self, x: SparseElement, y: SparseElement) -> SparseElement:
        zero = self.field.zero
        out: SparseElement = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self.products.get((i, j))
                if prod:
                    add_scaled(out, prod, a * b, zero)
        return out

    def coordinates(self, x: SparseElement, s: str, t: str) -> Tuple[Element, ...]:
        zero = self.field.zero
        return tuple(x.get(k, zero) for k in self.block(s, t))

    def identity(self) -> SparseElement:
        return {k: self.field.one for k in self.idempotents.values()}

    def check(self) -> bool:
        """Idempotents orthogonal and summing to one, products graded, associativity."""
        one = self.identity()
        for v, i in self.idempotents.items():
            for w, j in self.idempotents.items():
                expected = self.element(i) if v == w else {}
                if self.multiply(self.element(i), self.element(j)) != expected:
                    return False
        for k in range(self.dim):
            x = self.element(k)
            if self.multiply(one, x) != x or self.multiply(x, one) != x:
                return False
        for (i, j), prod in self.products.items():
            s, t = self.blocks_of[i]
            t2, u = self.blocks_of[j]
            if t != t2 or any(self.blocks_of[k] != (s, u) for k in prod):
                return False
        for (i, j), ij in self.products.items():
            for k in range(self.dim):
                if self.multiply(ij, self.element(k)) != self.multiply(self.element(i), self.products.get((j, k), {})):
                    return False
        return True


@dataclass
class Realization:
    """How the path basis of a presented algebra sits in its source algebra."""

    source: StructureConstantAlgebra
    arrow_lifts: Dict[str, SparseElement]
    to_source_rows: List[SparseElement]
    from_source_rows: List[SparseElement]

    def to_source(self, x: SparseElement) -> SparseElement:
        zero = self.source.field.zero
        out: SparseElement = {}
        for k, c in x.items():
            add_scaled(out, self.to_source_rows[k], c, zero)
        return out

    def from_source(self, x: SparseElement) -> SparseElement:
        zero = self.source.field.zero
        out: SparseElement = {}
        for k, c in x.items():
            add_scaled(out, self.from_source_rows[k], c, zero)
        return out


def _sparse_rows(m: Matrix) -> List[SparseElement]:
    zero = m.field.zero
    return [{j: c for j, c in enumerate(r) if c != zero} for r in m.rows]


def _radical(algebra: StructureConstantAlgebra) -> Dict[Tuple[str, str], List[Tuple[str, SparseElement]]]:
    """Labelled spanning vectors of rad Λ, block by block."""
    field = algebra.field
    rad: Dict[Tuple[str, str], List[Tuple[str, SparseElement]]] = {}
    for s in algebra.vertices:
        for t in algebra.vertices:
            idx = algebra.block(s, t)
            if s != t:
                rad[(s, t)] = [(algebra.labels[k], algebra.element(k)) for k in idx]
                continue
            e = algebra.idempotents[s]
            if e not in idx:
                raise NotBasicError(f"not basic: idempotent of {s} is outside its corner")
            d = len(idx)
            vectors = []
            for k in idx:
                if k == e:
                    continue
                left = Matrix(field, [algebra.coordinates(algebra.multiply(algebra.element(k), algebra.element(m)), s, s)
                                      for m in idx], d)
                factors = factor_charpoly(left)
                if len(factors) != 1 or len(factors[0][0]) != 2:
                    raise NotBasicError(f"not basic: corner algebra at {s} is not local")
                lam = linear_root(factors[0][0])
                shifted = left - Matrix.identity(field, d).scale(lam)
                if not shifted.power(d).is_zero():
                    raise NotBasicError(f"not basic: corner algebra at {s} is not local")
                vec = dict(algebra.element(k))
                if lam != field.zero:
                    vec[e] = -lam
                vectors.append((algebra.labels[k], vec))
            rad[(s, t)] = vectors
    return rad


def present(
    algebra: StructureConstantAlgebra,
    cap: Optional[int] = None,
    name: Optional[str] = None,
) -> BoundQuiverAlgebra:
    """
    Quiver, minimal relations and path basis of a basic algebra.

    Arrows are named after the basis elements they lift; relations are chosen
    greedily in degree order among the linear dependencies of paths.
    """
    cap = config.resolve("length_cap", cap)
    field = algebra.field
    zero, one = field.zero, field.one
    vertices = algebra.vertices

    rad = _radical(algebra)

    # rad^2, block by block in local coordinates
    rad_sq: Dict[Tuple[str, str], Subspace] = {}
    for s in vertices:
        for u in vertices:
            rows = []
            for t in vertices:
                for _, x in rad.get((s, t), []):
                    for _, y in rad.get((t, u), []):
                        prod = algebra.multiply(x, y)
                        if prod:
                            rows.append(algebra.coordinates(prod, s, u))
            n = algebra.block_dim(s, u)
            rad_sq[(s, u)] = Subspace.span(field, n, Matrix(field, rows, n))

    # Arrows: rad vectors independent modulo rad^2
    arrows: List[Arrow] = []
    lifts: Dict[str, SparseElement] = {}
    for s in vertices:
        for t in vertices:
            candidates = rad.get((s, t), [])
            if not candidates:
                continue
            n = algebra.block_dim(s, t)
            vectors = [algebra.coordinates(x, s, t) for _, x in candidates]
            for k in greedy_independent(field, vectors, n, start=rad_sq[(s, t)]):
                label, x = candidates[k]
                arrows.append(Arrow(label, s, t))
                lifts[label] = x
    quiver = Quiver(vertices, arrows)

    # Paths whose proper prefixes are all nonzero, with their values
    values: Dict[PathWord, SparseElement] = {}
    layer = []
    for v in vertices:
        p = PathWord(v, v)
        values[p] = algebra.element(algebra.idempotents[v])
        layer.append(p)
    length = 0
    while layer:
        length += 1
        if length > cap:
            raise NotAdmissibleError(f"ideal not admissible: nonzero paths beyond length {cap}")
        next_layer = []
        for p in layer:
            for a in quiver.arrows_from(p.target):
                q = PathWord(p.source, a.target, p.arrows + (a.name,))
                val = algebra.multiply(values[p], lifts[a.name])
                values[q] = val
                if val:
                    next_layer.append(q)
        layer = next_layer
    log_progress(f"{len(values)} candidate paths up to length {length}", stage="present")

    by_block: Dict[Tuple[str, str], List[PathWord]] = {}
    for p in sorted(values, key=PathWord.sort_key):
        by_block.setdefault((p.source, p.target), []).append(p)
    surviving = {p for p, val in values.items() if val}

    basis: List[PathWord] = []
    relation_space: Dict[Tuple[str, str], Subspace] = {}
    for s in vertices:
        for t in vertices:
            paths = by_block.get((s, t), [])
            n = algebra.block_dim(s, t)
            if not paths:
                if n:
                    raise NotBasicError(f"not basic: arrows do not generate e_{s} Λ e_{t}")
                continue
            value_matrix = Matrix(field, [algebra.coordinates(values[p], s, t) for p in paths], n)
            chosen = greedy_independent(field, value_matrix.rows, n)
            if len(chosen) != n:
                raise NotBasicError(f"not basic: arrows do not generate e_{s} Λ e_{t}")
            basis.extend(paths[k] for k in chosen)
            relation_space[(s, t)] = kernel_basis(value_matrix)

    position = {}
    for key, paths in by_block.items():
        for k, p in enumerate(paths):
            position[p] = (key, k)

    def _project(terms: Dict[PathWord, Element], key: Tuple[str, str]) -> Tuple[Element, ...]:
        vec = [zero] * len(by_block[key])
        for p, c in terms.items():
            if p in position:
                vec[position[p][1]] += c
        return tuple(vec)

    # (rad I + I rad) inside the span of candidate paths
    consequences: Dict[Tuple[str, str], List[Tuple[Element, ...]]] = {key: [] for key in by_block}
    for (s, t), space in relation_space.items():
        paths = by_block[(s, t)]
        for row in space.basis.rows:
            terms = {p: c for p, c in zip(paths, row) if c != zero}
            for a in quiver.arrows_from(t):
                key = (s, a.target)
                if key in by_block:
                    shifted = {PathWord(s, a.target, p.arrows + (a.name,)): c for p, c in terms.items()}
                    consequences[key].append(_project(shifted, key))
            for a in quiver.arrows_to(s):
                key = (a.source, t)
                if key in by_block:
                    shifted = {PathWord(a.source, t, (a.name,) + p.arrows): c for p, c in terms.items()}
                    consequences[key].append(_project(shifted, key))
        for p in paths:
            if p.is_trivial:
                continue
            first = quiver.arrow(p.arrows[0])
            suffix = PathWord(first.target, p.target, p.arrows[1:])
            if suffix not in surviving:
                consequences[(s, t)].append(_project({p: one}, (s, t)))

    relations: List[Relation] = []
    for s in vertices:
        for t in vertices:
            space = relation_space.get((s, t))
            if space is None or space.is_zero():
                continue
            paths = by_block[(s, t)]
            n = len(paths)

            def degree(row):
                return max(len(p) for p, c in zip(paths, row) if c != zero)

            candidates = sorted(space.basis.rows, key=lambda r: (degree(r), [c == zero for c in r]))
            start = Subspace.span(field, n, Matrix(field, consequences[(s, t)], n))
            for k in greedy_independent(field, candidates, n, start=start):
                row = candidates[k]
                relations.append(Relation(tuple((c, p) for p, c in zip(paths, row) if c != zero)))

    if len(basis) != algebra.dim:
        raise NotBasicError(f"not basic: {len(basis)} basis paths for an algebra of dimension {algebra.dim}")

    to_source = Matrix(field, [[values[p].get(k, zero) for k in range(algebra.dim)] for p in basis], algebra.dim)
    from_source = to_source.inverse()
    to_rows = _sparse_rows(to_source)
    from_rows = _sparse_rows(from_source)
    realization = Realization(algebra, lifts, to_rows, from_rows)

    products: Dict[Tuple[int, int], SparseElement] = {}
    for i, p in enumerate(basis):
        for j, q in enumerate(basis):
            if p.target != q.source:
                continue
            prod = realization.from_source(algebra.multiply(to_rows[i], to_rows[j]))
            if prod:
                products[(i, j)] = prod
    return BoundQuiverAlgebra(quiver, RelationSystem(tuple(relations)), field, basis, products,
                              realization=realization, name=name)
