"""
Bimodules over a bound quiver algebra: the dual DC and Ext²_C(DC, C).

A bimodule basis element lies in a block e_a E e_b. Arrow actions are stored
as square matrices on the whole space, acting on row vectors: ``left[α]``
is x ↦ α·x and ``right[α]`` is x ↦ x·α.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.linalg import Matrix, block_diagonal
from ..algebra.quiver import BoundQuiverAlgebra, PathWord, SparseElement
from ..core.config import config
from ..core.errors import BimoduleError, ResolutionTooLongError
from ..core.logging import log_progress
from .homology import ExtGroup, ext, lift_chain_map
from .projectives import injective, minimal_projective_resolution, projective, restrict_generators
from .representation import ModuleMap


class Bimodule:
    """Finite-dimensional C-C-bimodule with basis graded by vertex pairs."""

    def __init__(
        self,
        algebra: BoundQuiverAlgebra,
        labels: Sequence[str],
        blocks: Sequence[Tuple[str, str]],
        left: Dict[str, Matrix],
        right: Dict[str, Matrix],
    ):
        self.algebra = algebra
        self.labels = tuple(labels)
        self.blocks_of = tuple(blocks)
        n = len(self.labels)
        zero = Matrix.zeros(algebra.field, n, n)
        self.left = {a.name: left.get(a.name, zero) for a in algebra.quiver.arrows}
        self.right = {a.name: right.get(a.name, zero) for a in algebra.quiver.arrows}
        self._blocks: Dict[Tuple[str, str], List[int]] = {}
        for k, key in enumerate(self.blocks_of):
            self._blocks.setdefault(key, []).append(k)

    def __repr__(self) -> str:
        return f"Bimodule(dim={self.dim})"

    @classmethod
    def zero(cls, algebra: BoundQuiverAlgebra) -> "Bimodule":
        return cls(algebra, [], [], {}, {})

    @property
    def dim(self) -> int:
        return len(self.labels)

    def is_zero(self) -> bool:
        return self.dim == 0

    def block(self, a: str, b: str) -> List[int]:
        return self._blocks.get((a, b), [])

    def block_dim(self, a: str, b: str) -> int:
        return len(self.block(a, b))

    def _projection(self, v: str, side: int) -> Matrix:
        field = self.algebra.field
        z, o = field.zero, field.one
        n = self.dim
        return Matrix(field, [[o if i == j and self.blocks_of[i][side] == v else z for j in range(n)]
                              for i in range(n)], n)

    def left_path_matrix(self, path: PathWord) -> Matrix:
        """x ↦ p·x, the arrow matrices multiplied in reverse order."""
        m = self._projection(path.target, 0)
        for name in reversed(path.arrows):
            m = m @ self.left[name]
        return m

    def right_path_matrix(self, path: PathWord) -> Matrix:
        """x ↦ x·p."""
        m = self._projection(path.source, 1)
        for name in path.arrows:
            m = m @ self.right[name]
        return m

    def left_matrix(self, x: SparseElement) -> Matrix:
        total = Matrix.zeros(self.algebra.field, self.dim, self.dim)
        for k, c in x.items():
            total = total + self.left_path_matrix(self.algebra.basis[k]).scale(c)
        return total

    def right_matrix(self, x: SparseElement) -> Matrix:
        total = Matrix.zeros(self.algebra.field, self.dim, self.dim)
        for k, c in x.items():
            total = total + self.right_path_matrix(self.algebra.basis[k]).scale(c)
        return total

    def check(self) -> None:
        """Raise BimoduleError unless grading, commutation and relations hold."""
        quiver = self.algebra.quiver
        for a in quiver.arrows:
            for k, (x, y) in enumerate(self.blocks_of):
                for j, c in enumerate(self.left[a.name].row(k)):
                    if c != self.algebra.field.zero and (x != a.target or self.blocks_of[j] != (a.source, y)):
                        raise BimoduleError(f"left action of {a.name} breaks the grading")
                for j, c in enumerate(self.right[a.name].row(k)):
                    if c != self.algebra.field.zero and (y != a.source or self.blocks_of[j] != (x, a.target)):
                        raise BimoduleError(f"right action of {a.name} breaks the grading")
        for a in quiver.arrows:
            for b in quiver.arrows:
                la, rb = self.left[a.name], self.right[b.name]
                if la @ rb != rb @ la:
                    raise BimoduleError(f"left {a.name} and right {b.name} do not commute")
        for r in self.algebra.relations:
            left = Matrix.zeros(self.algebra.field, self.dim, self.dim)
            right = left
            for c, p in r.terms:
                left = left + self.left_path_matrix(p).scale(c)
                right = right + self.right_path_matrix(p).scale(c)
            if not left.is_zero() or not right.is_zero():
                raise BimoduleError(f"relation {r.format(self.algebra.field)} acts nontrivially")


def regular_action_matrices(algebra: BoundQuiverAlgebra) -> Tuple[Dict[str, Matrix], Dict[str, Matrix]]:
    """Left and right multiplication by each arrow on the whole algebra."""
    field = algebra.field
    n = algebra.dim
    left, right = {}, {}
    for a in algebra.quiver.arrows:
        x = algebra.arrow_element(a.name)
        lrows, rrows = [], []
        for k in range(n):
            lx = algebra.multiply(x, algebra.element(k))
            rx = algebra.multiply(algebra.element(k), x)
            lrows.append([lx.get(j, field.zero) for j in range(n)])
            rrows.append([rx.get(j, field.zero) for j in range(n)])
        left[a.name] = Matrix(field, lrows, n)
        right[a.name] = Matrix(field, rrows, n)
    return left, right


def regular_bimodule(algebra: BoundQuiverAlgebra) -> Bimodule:
    left, right = regular_action_matrices(algebra)
    return Bimodule(algebra, [p.label() for p in algebra.basis],
                    [(p.source, p.target) for p in algebra.basis], left, right)


def dual_bimodule(algebra: BoundQuiverAlgebra) -> Bimodule:
    """DC with (c·f)(x) = f(xc) and (f·c)(x) = f(cx)."""
    left, right = regular_action_matrices(algebra)
    bimodule = Bimodule(
        algebra,
        [f"{p.label()}*" for p in algebra.basis],
        [(p.target, p.source) for p in algebra.basis],
        {name: m.transpose() for name, m in right.items()},
        {name: m.transpose() for name, m in left.items()},
    )
    bimodule.check()
    return bimodule


def _ext2_labels(a: str, b: str, n: int) -> List[str]:
    if n == 1:
        return [f"δ_{a}_{b}"]
    return [f"δ_{a}_{b}_{k}" for k in range(1, n + 1)]


def ext2_bimodule(algebra: BoundQuiverAlgebra, cap: Optional[int] = None,
                  alternate: bool = False) -> Bimodule:
    """
    Ext²_C(DC, C) with e_a E e_b = Ext²(I_b, P_a).

    The left action comes from left multiplication P_t -> P_s on the second
    argument; the right action from lifting α·-: I_t -> I_s to a chain map on
    minimal resolutions. ``alternate`` uses different lifts.
    """
    cap = config.resolve("resolution_cap", cap)
    field = algebra.field
    vertices = algebra.vertices
    injectives = {b: injective(algebra, b) for b in vertices}
    resolutions = {}
    for b in vertices:
        res = minimal_projective_resolution(injectives[b], terms=cap + 1)
        if not res.complete:
            raise ResolutionTooLongError(f"resolution too long: I_{b} has projective dimension ≥ {cap}")
        resolutions[b] = res
    projectives = {a: projective(algebra, a) for a in vertices}

    groups: Dict[Tuple[str, str], ExtGroup] = {}
    labels: List[str] = []
    blocks: List[Tuple[str, str]] = []
    offsets: Dict[Tuple[str, str], int] = {}
    for a in vertices:
        for b in vertices:
            g = ext(injectives[b], projectives[a], 2, resolution=resolutions[b])
            groups[(a, b)] = g
            offsets[(a, b)] = len(labels)
            labels.extend(_ext2_labels(a, b, g.dim))
            blocks.extend([(a, b)] * g.dim)
    n = len(labels)
    log_progress(f"Ext² bimodule has dimension {n}", stage="ext2_bimodule")
    zero = field.zero

    def _place(rows: List[List], source_key, target_key, vectors):
        for r, vec in enumerate(vectors):
            coords = groups[target_key].coordinates(vec)
            for c, value in enumerate(coords):
                rows[offsets[source_key] + r][offsets[target_key] + c] = value

    left: Dict[str, Matrix] = {}
    for arrow in algebra.quiver.arrows:
        s, t = arrow.source, arrow.target
        x = algebra.arrow_element(arrow.name)
        rows = [[zero] * n for _ in range(n)]
        for b in vertices:
            source, target = groups[(t, b)], groups[(s, b)]
            if source.dim == 0 or target.dim == 0:
                continue
            tops = source.tops
            mult = block_diagonal(field, [algebra.left_mult_matrix(x, t, s, v) for v in tops])
            images = (source.representatives @ mult).rows
            _place(rows, (t, b), (s, b), images)
        left[arrow.name] = Matrix(field, rows, n)

    right: Dict[str, Matrix] = {}
    for arrow in algebra.quiver.arrows:
        s, t = arrow.source, arrow.target
        x = algebra.arrow_element(arrow.name)
        rows = [[zero] * n for _ in range(n)]
        g = ModuleMap(injectives[t], injectives[s],
                      {w: algebra.right_mult_matrix(x, w, s, t).transpose() for w in vertices})
        chain = lift_chain_map(g, resolutions[t], resolutions[s], 2, alternate=alternate)
        if len(chain) == 3 and resolutions[s].length >= 2:
            p2_t, p2_s = resolutions[t].terms[2], resolutions[s].terms[2]
            coeffs = restrict_generators(chain[2], p2_t, p2_s)
            for a in vertices:
                source, target = groups[(a, s)], groups[(a, t)]
                if source.dim == 0 or target.dim == 0:
                    continue
                images = []
                for z in source.representatives.rows:
                    parts = [source.component(z, i) for i in range(len(p2_s.tops))]
                    new = []
                    for j, vj in enumerate(p2_t.tops):
                        total = Matrix.zeros(field, 1, algebra.block_dim(a, vj))
                        for i, ui in enumerate(p2_s.tops):
                            if not coeffs[i][j]:
                                continue
                            zi = Matrix(field, [parts[i]], algebra.block_dim(a, ui))
                            total = total + zi @ algebra.right_mult_matrix(coeffs[i][j], a, ui, vj)
                        new.extend(total.row(0))
                    images.append(tuple(new))
                _place(rows, (a, s), (a, t), images)
        right[arrow.name] = Matrix(field, rows, n)

    bimodule = Bimodule(algebra, labels, blocks, left, right)
    bimodule.check()
    return bimodule
