"""
Orbit quotients of window AR quivers and τ-respecting comparison of
translation quivers.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from ..ar.knitting import ARVertex, TranslationQuiver
from ..constructions.windows import WindowedAlgebra, shift_twist, support_levels
from ..core.config import config
from ..core.errors import QuiverIncompleteError, SupportLeavesWindowError, WindowTooNarrowError
from ..core.logging import log_progress
from ..modules.decomposition import is_isomorphic


def _min_level(window: WindowedAlgebra, vertex: ARVertex) -> int:
    return support_levels(window, vertex.module)[0]


def orbit_representative(quiver: TranslationQuiver, window: WindowedAlgebra, index: int,
                         level: int) -> Optional[int]:
    """The vertex isomorphic to the shift of ``index`` whose support starts at ``level``."""
    vertex = quiver.vertices[index]
    k = level - _min_level(window, vertex)
    if k == 0:
        return index
    try:
        shifted = shift_twist(window, vertex.module, k)
    except SupportLeavesWindowError:
        return None
    for other in quiver.vertices:
        if other.dim_vector == shifted.dim_vector and is_isomorphic(other.module, shifted):
            return other.index
    return None


@dataclass
class QuotientResult:
    quiver: TranslationQuiver
    representatives: List[int]
    missing: List[int] = field(default_factory=list)


def quotient_ar_quiver(quiver: TranslationQuiver, window: WindowedAlgebra,
                       margin: Optional[int] = None) -> QuotientResult:
    """
    Γ(window)/⟨φ⟩ on the interior strip: one vertex per shift orbit, taken with
    support starting at level a + margin, with arrows and τ read off the
    representatives and mapped to orbit representatives.
    """
    if not quiver.complete:
        raise QuiverIncompleteError("quiver incomplete: knit the window first")
    margin = config.resolve("margin", margin)
    width = window.high - window.low + 1
    if width < 2 * margin + 2:
        raise WindowTooNarrowError(f"window too narrow: {width} levels for margin {margin}")
    start = window.low + margin
    reps = [v.index for v in quiver.vertices if _min_level(window, v) == start]
    position = {old: new for new, old in enumerate(reps)}
    cache: Dict[int, Optional[int]] = {}

    def orbit(i: int) -> Optional[int]:
        if i not in cache:
            cache[i] = orbit_representative(quiver, window, i, start)
        return cache[i]

    result = TranslationQuiver(quiver.algebra, complete=True)
    for new, old in enumerate(reps):
        v = quiver.vertices[old]
        result.vertices.append(ARVertex(new, v.module, v.projective, v.injective, set(v.markers)))
    missing: Set[int] = set()
    for old in reps:
        for target, mult in quiver.arrows_out(old).items():
            rep = orbit(target)
            if rep is None or rep not in position:
                missing.add(target)
                continue
            key = (position[old], position[rep])
            result.arrows[key] = result.arrows.get(key, 0) + mult
        if old in quiver.tau:
            rep = orbit(quiver.tau[old])
            if rep is None or rep not in position:
                missing.add(quiver.tau[old])
            else:
                result.tau[position[old]] = position[rep]
    log_progress(f"quotient has {len(reps)} orbits", stage="quotient")
    return QuotientResult(result, reps, sorted(missing))


# =============================================================================
# COMPARISON
# =============================================================================

def comparison_graph(quiver: TranslationQuiver, vertices: Optional[Sequence[int]] = None) -> nx.DiGraph:
    """Arrows and τ as one digraph whose edges carry (multiplicity, is τ-edge)."""
    keep = set(range(len(quiver.vertices)) if vertices is None else vertices)
    g = nx.DiGraph()
    g.add_nodes_from(sorted(keep))
    for (i, j), m in quiver.arrows.items():
        if i in keep and j in keep:
            g.add_edge(i, j, arrow=m, tau=False)
    for j, i in quiver.tau.items():
        if i in keep and j in keep:
            if g.has_edge(j, i):
                g.edges[j, i]["tau"] = True
            else:
                g.add_edge(j, i, arrow=0, tau=True)
    return g


def _edge_match(a: dict, b: dict) -> bool:
    return a["arrow"] == b["arrow"] and a["tau"] == b["tau"]


def compare(first: TranslationQuiver, second: TranslationQuiver) -> Optional[Dict[int, int]]:
    """A τ-respecting isomorphism first -> second, or None."""
    g1, g2 = comparison_graph(first), comparison_graph(second)
    if g1.number_of_nodes() != g2.number_of_nodes() or g1.number_of_edges() != g2.number_of_edges():
        return None
    matcher = DiGraphMatcher(g1, g2, edge_match=_edge_match)
    if not matcher.is_isomorphic():
        return None
    return dict(matcher.mapping)


def _signature(quiver: TranslationQuiver, i: int) -> Tuple[int, int, bool, bool]:
    return (sum(quiver.arrows_into(i).values()), sum(quiver.arrows_out(i).values()),
            i in quiver.tau, i in quiver.tau_inverse)


def core_vertices(quiver: TranslationQuiver, vertices: Sequence[int]) -> List[int]:
    """Vertices all of whose arrows and τ-neighbours stay inside ``vertices``."""
    inside = set(vertices)
    inverse = quiver.tau_inverse
    core = []
    for i in vertices:
        neighbours = set(quiver.arrows_into(i)) | set(quiver.arrows_out(i))
        for t in (quiver.tau.get(i), inverse.get(i)):
            if t is not None:
                neighbours.add(t)
        if neighbours <= inside:
            core.append(i)
    return core


def embeds_as_core(small: TranslationQuiver, big: TranslationQuiver,
                   small_within: Optional[Sequence[int]] = None,
                   big_within: Optional[Sequence[int]] = None) -> Optional[Dict[int, int]]:
    """
    An embedding of the core of ``small`` with its neighbourhood into ``big``
    as an induced, τ-respecting subquiver with core vertices keeping their
    full neighbourhoods.

    ``small_within`` and ``big_within`` cut each quiver down to a strip. The
    core and the degrees matched on it are still read from the whole quiver,
    so vertices on the cut edge never count as core.
    """
    keep = range(len(small.vertices)) if small_within is None else sorted(small_within)
    core = core_vertices(small, keep)
    if not core:
        return None
    around = set(core)
    for i in core:
        around |= set(small.arrows_into(i)) | set(small.arrows_out(i))
        if i in small.tau:
            around.add(small.tau[i])
        if i in small.tau_inverse:
            around.add(small.tau_inverse[i])
    pattern = comparison_graph(small, sorted(around))
    for i in pattern.nodes:
        pattern.nodes[i]["signature"] = _signature(small, i) if i in core else None
    host = comparison_graph(big, big_within)
    for i in host.nodes:
        host.nodes[i]["signature"] = _signature(big, i)

    def node_match(h: dict, p: dict) -> bool:
        return p["signature"] is None or h["signature"] == p["signature"]

    matcher = DiGraphMatcher(host, pattern, node_match=node_match, edge_match=_edge_match)
    for mapping in matcher.subgraph_isomorphisms_iter():
        return {p: h for h, p in mapping.items()}
    return None
