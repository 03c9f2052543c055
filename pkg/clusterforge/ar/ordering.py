"""
Path order on indecomposables and complete slices.

For a representation-directed algebra M ≤ N (a chain of nonzero maps
between indecomposables) coincides with reachability in the AR quiver;
``Reachability.directed`` records whether that applies.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Set

import networkx as nx

from ..core.errors import QuiverIncompleteError
from ..modules.representation import hom_dim
from .knitting import TranslationQuiver


class Reading(str, Enum):
    SINGLETON = "singleton"
    EXCLUSION = "exclusion"
    LITERAL = "literal"


@dataclass
class OrderVerdict:
    holds: bool
    clauses: Dict[str, bool] = field(default_factory=dict)
    witness: Optional[str] = None

    def to_json(self) -> dict:
        return {"holds": self.holds, "clauses": self.clauses, "witness": self.witness}


class Reachability:
    def __init__(self, quiver: TranslationQuiver):
        if not quiver.complete:
            raise QuiverIncompleteError("quiver incomplete: knit it to completion first")
        self.quiver = quiver
        self.graph = quiver.to_networkx()
        self.directed = nx.is_directed_acyclic_graph(self.graph)
        self._descendants: Dict[int, Set[int]] = {}

    def successors(self, x: int) -> Set[int]:
        """Strict successors of x."""
        if x not in self._descendants:
            self._descendants[x] = nx.descendants(self.graph, x)
        return self._descendants[x]

    def predecessors(self, y: int) -> Set[int]:
        return {x for x in self.graph.nodes if y in self.successors(x)}

    def leq(self, x: int, y: int) -> bool:
        return x == y or y in self.successors(x)

    def set_leq(self, first: Iterable[int], second: Iterable[int]) -> OrderVerdict:
        """S₁ ≤ S₂; the last two clauses ignore a module's trivial path to itself."""
        s1, s2 = list(first), list(second)
        clauses = {
            "every module of S2 has a predecessor in S1": all(any(self.leq(x, y) for x in s1) for y in s2),
            "every module of S1 has a successor in S2": all(any(self.leq(x, y) for y in s2) for x in s1),
            "no module of S2 has a successor in S1": not any(self.leq(y, x) for y in s2 for x in s1 if x != y),
            "no module of S1 has a predecessor in S2": not any(self.leq(y, x) for x in s1 for y in s2 if x != y),
        }
        failed = [name for name, ok in clauses.items() if not ok]
        return OrderVerdict(not failed, clauses, failed[0] if failed else None)

    def set_less(self, first: Iterable[int], second: Iterable[int]) -> OrderVerdict:
        s1, s2 = list(first), list(second)
        verdict = self.set_leq(s1, s2)
        disjoint = not set(s1) & set(s2)
        verdict.clauses["disjoint"] = disjoint
        if not disjoint and verdict.holds:
            verdict.holds, verdict.witness = False, "disjoint"
        return verdict

    def between(self, lower: Sequence[int], upper: Sequence[int],
                reading: Reading = Reading.SINGLETON) -> List[int]:
        """Vertices M with lower ≤ M < upper under the chosen reading of the set order."""
        low, up = set(lower), set(upper)
        out = []
        for m in range(len(self.quiver.vertices)):
            if reading is Reading.SINGLETON:
                keep = (any(self.leq(x, m) for x in low)
                        and any(self.leq(m, y) for y in up)
                        and m not in up
                        and not any(self.leq(y, m) for y in up))
            elif reading is Reading.EXCLUSION:
                keep = (not any(m not in low and self.leq(m, x) for x in low)
                        and not any(self.leq(y, m) for y in up))
            else:
                keep = self.set_leq(low, [m]).holds and self.set_less([m], up).holds
            if keep:
                out.append(m)
        return out


# =============================================================================
# SLICES
# =============================================================================

@dataclass
class SliceVerdict:
    valid: bool
    violation: Optional[str] = None
    witness: List[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"valid": self.valid, "violation": self.violation, "witness": self.witness}


def validate_slice(quiver: TranslationQuiver, candidates: Sequence[int]) -> SliceVerdict:
    """Checks sincerity, convexity, one vertex per τ-orbit and Hom(Σ, τΣ) = 0, in that order."""
    order = Reachability(quiver)
    members = list(dict.fromkeys(candidates))
    n = len(quiver.algebra.vertices)
    total = [0] * n
    for i in members:
        total = [a + b for a, b in zip(total, quiver.vertices[i].dim_vector)]
    if not members or not all(total):
        return SliceVerdict(False, "not sincere", members)

    inside = set(members)
    for x in members:
        for y in members:
            if x == y or not order.leq(x, y):
                continue
            for z in order.successors(x):
                if z not in inside and order.leq(z, y):
                    return SliceVerdict(False, "not convex", [x, z, y])

    orbit_of = {}
    for k, orbit in enumerate(quiver.tau_orbits()):
        for v in orbit:
            orbit_of[v] = k
    seen: Dict[int, int] = {}
    for x in members:
        k = orbit_of[x]
        if k in seen:
            return SliceVerdict(False, "two vertices in one τ-orbit", [seen[k], x])
        seen[k] = x

    for y in members:
        t = quiver.tau.get(y)
        if t is None:
            continue
        for x in members:
            if hom_dim(quiver.vertices[x].module, quiver.vertices[t].module):
                return SliceVerdict(False, "Hom(Σ, τΣ) ≠ 0", [x, t])
    return SliceVerdict(True)
