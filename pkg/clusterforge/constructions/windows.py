"""
Finite windows of the cluster repetitive algebra Č and the repetitive
algebra Ĉ.

A window on levels [a, b] is the matrix algebra with copies C_a..C_b of C
on the diagonal and copies of the connecting bimodule (E for Č, DC for Ĉ)
just below it. Vertex (ℓ, i) is written "(ℓ,i)", and every basis element
of a level copy is labelled "(label,i)", so arrows of a presented window
carry the name of the C arrow or bimodule element they copy.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..algebra.presentation import StructureConstantAlgebra, present
from ..algebra.quiver import Arrow, BoundQuiverAlgebra, Quiver, SparseElement
from ..core.errors import BimoduleMismatchError, InputError, SupportLeavesWindowError
from ..core.logging import log_progress
from ..modules.bimodule import Bimodule, dual_bimodule
from ..modules.representation import Representation
from .trivial_extension import extension_products


class WindowKind(str, Enum):
    CLUSTER_REPETITIVE = "cluster-repetitive"
    REPETITIVE = "repetitive"


def window_vertex(vertex: str, level: int) -> str:
    return f"({vertex},{level})"


def window_label(label: str, level: int) -> str:
    return f"({label},{level})"


@dataclass
class WindowedAlgebra:
    kind: WindowKind
    base: BoundQuiverAlgebra
    connector: Bimodule
    low: int
    high: int
    structure: StructureConstantAlgebra
    algebra: BoundQuiverAlgebra
    positions: Dict[str, Tuple[str, int]] = field(default_factory=dict)
    label_positions: Dict[str, Tuple[str, int]] = field(default_factory=dict)

    def __repr__(self) -> str:
        return f"WindowedAlgebra({self.kind.value}, [{self.low},{self.high}], dim={self.algebra.dim})"

    @property
    def levels(self) -> range:
        return range(self.low, self.high + 1)

    def has_level(self, i: int) -> bool:
        return self.low <= i <= self.high

    def vertex(self, vertex: str, level: int) -> str:
        if not self.has_level(level):
            raise SupportLeavesWindowError(f"support leaves window: level {level} not in [{self.low},{self.high}]")
        return window_vertex(self.base.quiver.check_vertex(vertex), level)

    def level_vertices(self, level: int) -> List[str]:
        return [self.vertex(v, level) for v in self.base.vertices]

    def arrow_name(self, label: str, level: int) -> Optional[str]:
        """The window arrow copying ``label`` at ``level``, if the window has it."""
        name = window_label(label, level)
        return name if self.algebra.quiver.has_arrow(name) else None

    def is_interior(self, level: int, margin: int) -> bool:
        return self.low + margin <= level <= self.high - margin

    def shift_vertex(self, v: str, k: int) -> Optional[str]:
        """(ℓ,i) ↦ (ℓ,i+k), or None when i+k is outside the window."""
        ell, i = self.positions[v]
        return window_vertex(ell, i + k) if self.has_level(i + k) else None

    def level_idempotent(self, level: int) -> SparseElement:
        """Sum of the trivial paths at ``level``, in path coordinates."""
        one = self.algebra.field.one
        return {self.algebra.idempotent(v): one for v in self.level_vertices(level)}

    def structure_element(self, label: str, level: int) -> SparseElement:
        """A level copy of a basis element of C or of the connector, in path coordinates."""
        k = self.structure.labels.index(window_label(label, level))
        return self.algebra.realization.from_source({k: self.algebra.field.one})

    def block_dimension_table(self) -> Dict[Tuple[str, str], int]:
        return self.algebra.dim_table()

    def is_connected(self) -> bool:
        return self.algebra.quiver.is_connected()


def _build_window(kind: WindowKind, base: BoundQuiverAlgebra, connector: Bimodule, a: int, b: int,
                  cap: Optional[int], name: Optional[str]) -> WindowedAlgebra:
    if a > b:
        raise InputError(f"empty level range [{a},{b}]")
    if connector.algebra is not base:
        raise BimoduleMismatchError("bimodule/algebra mismatch: bimodule is over another algebra")
    field_ = base.field
    labels: List[str] = []
    blocks: List[Tuple[str, str]] = []
    label_positions: Dict[str, Tuple[str, int]] = {}
    c_offset: Dict[int, int] = {}
    x_offset: Dict[int, int] = {}
    for i in range(a, b + 1):
        c_offset[i] = len(labels)
        for p in base.basis:
            labels.append(window_label(p.label(), i))
            label_positions[labels[-1]] = (p.label(), i)
            blocks.append((window_vertex(p.source, i), window_vertex(p.target, i)))
    for i in range(a + 1, b + 1):
        x_offset[i] = len(labels)
        for label, (left, right) in zip(connector.labels, connector.blocks_of):
            labels.append(window_label(label, i))
            label_positions[labels[-1]] = (label, i)
            blocks.append((window_vertex(left, i), window_vertex(right, i - 1)))

    products: Dict[Tuple[int, int], SparseElement] = {}
    for i in range(a, b + 1):
        off = c_offset[i]
        for (p, q), prod in base.products.items():
            products[(off + p, off + q)] = {off + k: c for k, c in prod.items()}
    for i in range(a + 1, b + 1):
        products.update(extension_products(base, connector, c_offset[i], x_offset[i], None, x_offset[i]))
        products.update(extension_products(base, connector, c_offset[i - 1], None, x_offset[i], x_offset[i]))

    vertices = [window_vertex(v, i) for i in range(a, b + 1) for v in base.vertices]
    idempotents = {window_vertex(v, i): c_offset[i] + base.idempotent(v)
                   for i in range(a, b + 1) for v in base.vertices}
    structure = StructureConstantAlgebra(field_, vertices, labels, blocks, products, idempotents)
    log_progress(f"{kind.value} window [{a},{b}] of dimension {structure.dim}", stage="window")
    algebra = present(structure, cap=cap, name=name)
    positions = {window_vertex(v, i): (v, i) for i in range(a, b + 1) for v in base.vertices}
    return WindowedAlgebra(kind, base, connector, a, b, structure, algebra, positions, label_positions)


def cluster_repetitive_window(base: BoundQuiverAlgebra, bimodule: Bimodule, a: int, b: int,
                              cap: Optional[int] = None) -> WindowedAlgebra:
    """Levels [a, b] of Č, glued by E = Ext²(DC, C)."""
    name = f"{base.name}_cluster[{a},{b}]" if base.name else None
    return _build_window(WindowKind.CLUSTER_REPETITIVE, base, bimodule, a, b, cap, name)


def repetitive_window(base: BoundQuiverAlgebra, a: int, b: int,
                      cap: Optional[int] = None) -> WindowedAlgebra:
    """Levels [a, b] of Ĉ, glued by DC."""
    name = f"{base.name}_rep[{a},{b}]" if base.name else None
    return _build_window(WindowKind.REPETITIVE, base, dual_bimodule(base), a, b, cap, name)


@dataclass
class ClusterDuplicatedAlgebra:
    window: WindowedAlgebra

    @property
    def base(self) -> BoundQuiverAlgebra:
        return self.window.base

    @property
    def bimodule(self) -> Bimodule:
        return self.window.connector

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        return self.window.algebra

    @property
    def e0(self) -> SparseElement:
        return self.window.level_idempotent(0)

    @property
    def e1(self) -> SparseElement:
        return self.window.level_idempotent(1)


def cluster_duplicated(base: BoundQuiverAlgebra, bimodule: Bimodule,
                       cap: Optional[int] = None) -> ClusterDuplicatedAlgebra:
    return ClusterDuplicatedAlgebra(cluster_repetitive_window(base, bimodule, 0, 1, cap=cap))


# =============================================================================
# MODULES ACROSS LEVELS
# =============================================================================

def shift_twist(window: WindowedAlgebra, m: Representation, k: int,
                target: Optional[WindowedAlgebra] = None) -> Representation:
    """
    M^{φ^k}: the space at (ℓ,i) moves to (ℓ,i+k).

    ``target`` is the window receiving the result (default: the same one);
    it must be of the same kind over the same base algebra.
    """
    target = target or window
    if m.algebra is not window.algebra:
        raise InputError("module is not over this window")
    if (target.base is not window.base or target.kind is not window.kind
            or target.connector.labels != window.connector.labels):
        raise InputError("windows over different algebras")
    dims: Dict[str, int] = {}
    for v, d in m.dims.items():
        if not d:
            continue
        ell, i = window.positions[v]
        if not target.has_level(i + k):
            raise SupportLeavesWindowError(f"support leaves window: {v} shifted by {k}")
        dims[window_vertex(ell, i + k)] = d
    maps = {}
    for a in target.algebra.quiver.arrows:
        label, j = target.label_positions[a.name]
        source_name = window.arrow_name(label, j - k)
        if source_name is not None and dims.get(a.source) and dims.get(a.target):
            maps[a.name] = m.maps[source_name]
    return Representation(target.algebra, dims, maps)


def nakayama_shift(window: WindowedAlgebra, m: Representation, k: int = 1,
                   target: Optional[WindowedAlgebra] = None) -> Representation:
    """M^{ν^k} on a window of Ĉ."""
    if window.kind is not WindowKind.REPETITIVE:
        raise InputError("the Nakayama shift acts on repetitive windows")
    return shift_twist(window, m, k, target)


def level_copy(window: WindowedAlgebra, m: Representation, level: int) -> Representation:
    """A C-module placed at one level of the window."""
    if m.algebra is not window.base:
        raise InputError("module is not over the base algebra")
    dims = {window.vertex(v, level): d for v, d in m.dims.items() if d}
    maps = {}
    for a in window.base.quiver.arrows:
        name = window.arrow_name(a.name, level)
        if name is None:
            raise InputError(f"arrow {a.name!r} has no copy at level {level}")
        maps[name] = m.maps[a.name]
    return Representation(window.algebra, dims, maps)


def restrict_to_level(window: WindowedAlgebra, m: Representation, level: int) -> Representation:
    """M·e_i as a C-module."""
    dims = {v: m.dims[window.vertex(v, level)] for v in window.base.vertices}
    maps = {a.name: m.maps[window.arrow_name(a.name, level)] for a in window.base.quiver.arrows}
    return Representation(window.base, dims, maps, check=False)


def support_levels(window: WindowedAlgebra, m: Representation) -> List[int]:
    return sorted({window.positions[v][1] for v in m.support()})


# =============================================================================
# COMBINATORIAL CHECKS
# =============================================================================

def expected_block_dimensions(base: BoundQuiverAlgebra, connector: Bimodule,
                              a: int, b: int) -> Dict[Tuple[str, str], int]:
    """dim e_(ℓ,i) Λ e_(h,j): C-blocks on the diagonal, connector blocks one level down."""
    table = {}
    for i in range(a, b + 1):
        for j in range(a, b + 1):
            for ell in base.vertices:
                for h in base.vertices:
                    if i == j:
                        d = base.block_dim(ell, h)
                    elif i == j + 1:
                        d = connector.block_dim(ell, h)
                    else:
                        d = 0
                    table[(window_vertex(ell, i), window_vertex(h, j))] = d
    return table


def predicted_window_quiver(base: BoundQuiverAlgebra, a: int, b: int) -> Quiver:
    """
    Quiver of the cluster repetitive window built from Q_C and the relations:
    level copies of every arrow, and one arrow (ℓ,i+1) -> (h,i) for each
    relation from h to ℓ.
    """
    vertices = [window_vertex(v, i) for i in range(a, b + 1) for v in base.vertices]
    arrows = [Arrow(window_label(x.name, i), window_vertex(x.source, i), window_vertex(x.target, i))
              for i in range(a, b + 1) for x in base.quiver.arrows]
    for i in range(a, b):
        for n, r in enumerate(base.relations, start=1):
            arrows.append(Arrow(window_label(f"ρ{n}", i + 1), window_vertex(r.target, i + 1),
                                window_vertex(r.source, i)))
    return Quiver(vertices, arrows)


def collapse_levels(window: WindowedAlgebra) -> Quiver:
    """The orbit quiver: (ℓ,i) ↦ ℓ and (x,i) ↦ x, one arrow per label."""
    arrows: Dict[str, Arrow] = {}
    for x in window.algebra.quiver.arrows:
        label, _ = window.label_positions[x.name]
        arrows.setdefault(label, Arrow(label, window.positions[x.source][0], window.positions[x.target][0]))
    return Quiver(window.base.vertices, arrows.values())


def _labelled_graph(quiver: Quiver) -> nx.MultiDiGraph:
    g = quiver.to_networkx()
    for v in g.nodes:
        g.nodes[v]["vertex"] = v
    return g


def same_labelled_shape(first: Quiver, second: Quiver) -> bool:
    """Isomorphic as multigraphs by an isomorphism fixing every vertex name."""
    if set(first.vertices) != set(second.vertices):
        return False
    if Counter((a.source, a.target) for a in first.arrows) != Counter((a.source, a.target) for a in second.arrows):
        return False
    return nx.is_isomorphic(_labelled_graph(first), _labelled_graph(second),
                            node_match=lambda x, y: x["vertex"] == y["vertex"])


def same_arrow_set(first: Quiver, second: Quiver) -> bool:
    """Equal vertex sets and equal named arrows, in any order."""
    return set(first.vertices) == set(second.vertices) and set(first.arrows) == set(second.arrows)
