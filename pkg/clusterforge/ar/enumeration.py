"""Brute-force enumeration of indecomposables over a small prime field."""

import itertools
from typing import Dict, Iterator, List, Tuple

from ..algebra.linalg import Matrix
from ..algebra.quiver import BoundQuiverAlgebra
from ..core.errors import CapExceededError, FieldError, RelationViolatedError
from ..core.logging import log_progress
from ..modules.decomposition import is_indecomposable, is_isomorphic
from ..modules.representation import Representation


def dimension_vectors(algebra: BoundQuiverAlgebra, bound: int) -> Iterator[Dict[str, int]]:
    """Nonzero dimension vectors of total dimension at most ``bound``."""
    vertices = algebra.vertices
    for dims in itertools.product(range(bound + 1), repeat=len(vertices)):
        if 0 < sum(dims) <= bound:
            yield dict(zip(vertices, dims))


def enumerate_indecomposables(algebra: BoundQuiverAlgebra, bound: int,
                              max_entries: int = 16) -> List[Representation]:
    """
    One representative per iso class of indecomposables with total dimension
    at most ``bound``, found by trying every tuple of arrow matrices.
    """
    field = algebra.field
    p = field.characteristic
    if p == 0:
        raise FieldError("enumeration needs a finite field")
    elements = [field.element(i) for i in range(p)]
    found: List[Representation] = []
    for dims in dimension_vectors(algebra, bound):
        shapes: List[Tuple[str, int, int]] = [(a.name, dims[a.source], dims[a.target])
                                              for a in algebra.quiver.arrows]
        entries = sum(r * c for _, r, c in shapes)
        if entries > max_entries:
            raise CapExceededError(f"cap exceeded: {entries} matrix entries for {dims}")
        classes: List[Representation] = []
        for values in itertools.product(elements, repeat=entries):
            maps, pos = {}, 0
            for name, r, c in shapes:
                flat = values[pos:pos + r * c]
                maps[name] = Matrix(field, [flat[i * c:(i + 1) * c] for i in range(r)], c)
                pos += r * c
            try:
                m = Representation(algebra, dims, maps)
            except RelationViolatedError:
                continue
            if not is_indecomposable(m):
                continue
            if any(is_isomorphic(m, other) for other in classes):
                continue
            classes.append(m)
        found.extend(classes)
    log_progress(f"{len(found)} indecomposables of total dimension ≤ {bound}", stage="enumerate")
    return sorted(found, key=lambda m: m.dim_vector)
