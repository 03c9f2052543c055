"""
Knitting of Auslander-Reiten quivers.

Starting from the indecomposable projectives and injectives, the vertex set
is closed under τ, τ⁻¹, the middle terms of almost split sequences and the
summands of rad P and I/soc I. Arrows into a vertex come from rad P for a
projective and from the middle term of its almost split sequence otherwise,
so the mesh condition at τ-translates is an independent check.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from ..algebra.quiver import BoundQuiverAlgebra
from ..core.config import config
from ..core.errors import CapExceededError
from ..core.logging import log_progress
from ..modules.decomposition import decompose, is_isomorphic, multiplicities
from ..modules.projectives import injective, is_injective, is_projective, projective
from ..modules.representation import Representation, radical, socle
from .translate import almost_split_sequence, inverse_ar_translate


@dataclass
class ARVertex:
    index: int
    module: Representation
    projective: bool
    injective: bool
    markers: Set[str] = field(default_factory=set)

    @property
    def dim_vector(self) -> Tuple[int, ...]:
        return self.module.dim_vector

    @property
    def proj_injective(self) -> bool:
        return self.projective and self.injective

    def label(self) -> str:
        if max(self.dim_vector, default=0) < 10:
            return "".join(str(d) for d in self.dim_vector)
        return ",".join(str(d) for d in self.dim_vector)


@dataclass
class TranslationQuiver:
    """Vertices are iso classes of indecomposables; ``arrows[(i, j)]`` is a multiplicity."""

    algebra: BoundQuiverAlgebra
    vertices: List[ARVertex] = field(default_factory=list)
    arrows: Dict[Tuple[int, int], int] = field(default_factory=dict)
    tau: Dict[int, int] = field(default_factory=dict)
    complete: bool = False

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"TranslationQuiver({len(self.vertices)} vertices, {sum(self.arrows.values())} arrows)"

    @property
    def tau_inverse(self) -> Dict[int, int]:
        return {j: i for i, j in self.tau.items()}

    def arrows_into(self, j: int) -> Dict[int, int]:
        return {i: m for (i, t), m in self.arrows.items() if t == j}

    def arrows_out(self, i: int) -> Dict[int, int]:
        return {j: m for (s, j), m in self.arrows.items() if s == i}

    def find(self, m: Representation) -> Optional[int]:
        for v in self.vertices:
            if v.dim_vector == m.dim_vector and is_isomorphic(v.module, m):
                return v.index
        return None

    def check_meshes(self) -> List[str]:
        """Violations of the mesh condition and of dimension additivity."""
        problems = []
        for j, i in sorted(self.tau.items()):
            into_j = self.arrows_into(j)
            out_of_i = self.arrows_out(i)
            if into_j != out_of_i:
                problems.append(f"mesh at {j}: arrows into {into_j} but out of τ {out_of_i}")
            total = [a + b for a, b in zip(self.vertices[i].dim_vector, self.vertices[j].dim_vector)]
            middle = [0] * len(total)
            for k, mult in into_j.items():
                middle = [x + mult * d for x, d in zip(middle, self.vertices[k].dim_vector)]
            if total != middle:
                problems.append(f"mesh at {j}: dimension vectors are not additive")
        return problems

    def tau_orbits(self) -> List[List[int]]:
        """Orbits ordered from the τ-most end, i.e. starting at a projective when there is one."""
        inverse = self.tau_inverse
        seen: Set[int] = set()
        orbits = []
        for v in self.vertices:
            if v.index in seen:
                continue
            start = v.index
            while start in self.tau and self.tau[start] not in seen and self.tau[start] != v.index:
                start = self.tau[start]
            orbit = [start]
            seen.add(start)
            while orbit[-1] in inverse and inverse[orbit[-1]] not in seen:
                orbit.append(inverse[orbit[-1]])
                seen.add(orbit[-1])
            orbits.append(orbit)
        return orbits

    def is_directed(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        for v in self.vertices:
            g.add_node(v.index, dim=v.dim_vector, projective=v.projective, injective=v.injective,
                       tau=self.tau.get(v.index), markers=tuple(sorted(v.markers)))
        for (i, j), m in self.arrows.items():
            g.add_edge(i, j, multiplicity=m)
        return g

    def projectives(self) -> List[int]:
        return [v.index for v in self.vertices if v.projective]

    def injectives(self) -> List[int]:
        return [v.index for v in self.vertices if v.injective]


class _Knitter:
    def __init__(self, algebra: BoundQuiverAlgebra, cap: int):
        self.quiver = TranslationQuiver(algebra)
        self.cap = cap
        self.queue: List[int] = []
        self._by_dim: Dict[Tuple[int, ...], List[int]] = {}

    def add(self, m: Representation) -> int:
        for i in self._by_dim.get(m.dim_vector, []):
            if is_isomorphic(self.quiver.vertices[i].module, m):
                return i
        if len(self.quiver.vertices) >= self.cap:
            raise CapExceededError(f"cap exceeded: more than {self.cap} indecomposables", partial=self.quiver)
        index = len(self.quiver.vertices)
        self.quiver.vertices.append(ARVertex(index, m, is_projective(m), is_injective(m)))
        self._by_dim.setdefault(m.dim_vector, []).append(index)
        self.queue.append(index)
        return index

    def add_summands(self, m: Representation) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for summand, mult in multiplicities(decompose(m)):
            i = self.add(summand)
            counts[i] = counts.get(i, 0) + mult
        return counts

    def process(self, j: int) -> None:
        vertex = self.quiver.vertices[j]
        m = vertex.module
        if vertex.projective:
            rad, _ = radical(m)
            incoming = self.add_summands(rad)
        else:
            seq = almost_split_sequence(m)
            self.quiver.tau[j] = self.add(seq.left)
            incoming = {}
            for summand, mult in seq.summands:
                i = self.add(summand)
                incoming[i] = incoming.get(i, 0) + mult
        for i, mult in incoming.items():
            self.quiver.arrows[(i, j)] = mult
        if vertex.injective:
            _, inclusion = socle(m)
            quotient, _ = inclusion.cokernel()
            self.add_summands(quotient)
        else:
            self.add(inverse_ar_translate(m))


def knit(algebra: BoundQuiverAlgebra, cap: Optional[int] = None) -> TranslationQuiver:
    """
    The Auslander-Reiten quiver of a representation-finite algebra.

    Raises CapExceededError, carrying the partial quiver, once more than
    ``cap`` indecomposables have been found.
    """
    cap = config.resolve("knit_cap", cap)
    knitter = _Knitter(algebra, cap)
    for v in algebra.vertices:
        knitter.add(projective(algebra, v))
    for v in algebra.vertices:
        knitter.add(injective(algebra, v))
    done = 0
    while done < len(knitter.queue):
        knitter.process(knitter.queue[done])
        done += 1
        if done % 10 == 0:
            log_progress(f"{done} processed, {len(knitter.queue) - done} in frontier", stage="knit")
    knitter.quiver.complete = True
    log_progress(f"knitted {len(knitter.quiver)} indecomposables", stage="knit")
    return knitter.quiver
