"""
Krull-Schmidt decomposition and isomorphism testing.

Both rest on seeded random searches in Hom spaces: a module splits along the
primary decomposition of an endomorphism whose characteristic polynomial has
two coprime factors, and two modules are isomorphic when some combination of
a Hom basis is invertible at every vertex. Over a prime field with a small
enough Hom space every combination is tried, so the isomorphism verdict is
exact there.
"""

import itertools
import random
from typing import List, Optional, Tuple

from ..algebra.linalg import (
    block_diagonal,
    factor_charpoly,
    image_basis,
    kernel_basis,
    matrix_polynomial,
)
from ..core.config import config
from .representation import ModuleMap, Representation, combine, hom, submodule

# Hom spaces over GF(p) with at most this many elements are searched exhaustively.
EXHAUSTIVE_LIMIT = 4096


def _candidates(maps: List[ModuleMap], rng: random.Random, tries: int, bound: int):
    """Each basis map, then random combinations of all of them."""
    field = maps[0].source.field
    yield from maps
    for _ in range(tries):
        yield combine(maps, [field.random_element(rng, bound) for _ in maps])


def _every_combination(maps: List[ModuleMap]):
    """All nonzero combinations of a Hom basis over a prime field."""
    field = maps[0].source.field
    p = field.characteristic
    for coeffs in itertools.product(range(p), repeat=len(maps)):
        if any(coeffs):
            yield combine(maps, [field.element(c) for c in coeffs])


def _fitting_split(m: Representation, phi: ModuleMap) -> Optional[Tuple[Representation, Representation]]:
    vertices = m.algebra.vertices
    whole = block_diagonal(m.field, [phi.components[v] for v in vertices])
    factors = factor_charpoly(whole)
    if len(factors) < 2:
        return None
    coeffs, mult = factors[0]
    kernels, images = {}, {}
    for v in vertices:
        g = matrix_polynomial(phi.components[v], coeffs).power(mult)
        kernels[v] = kernel_basis(g)
        images[v] = image_basis(g)
    first, _ = submodule(m, kernels)
    second, _ = submodule(m, images)
    if first.is_zero() or second.is_zero():
        return None
    return first, second


def split(m: Representation, rng: Optional[random.Random] = None,
          tries: Optional[int] = None) -> Optional[Tuple[Representation, Representation]]:
    """A nontrivial splitting M = X ⊕ Y, or None when none was found."""
    if m.is_zero():
        return None
    tries = config.resolve("search_tries", tries)
    rng = rng or random.Random(config.seed)
    endomorphisms = hom(m, m)
    if len(endomorphisms) <= 1:
        return None
    for phi in _candidates(endomorphisms, rng, tries, config.coefficient_range):
        parts = _fitting_split(m, phi)
        if parts is not None:
            return parts
    return None


def decompose(m: Representation, tries: Optional[int] = None) -> List[Representation]:
    """Indecomposable summands, sorted by dimension vector."""
    rng = random.Random(config.seed)
    pending, done = [m], []
    while pending:
        x = pending.pop()
        if x.is_zero():
            continue
        parts = split(x, rng, tries)
        if parts is None:
            done.append(x)
        else:
            pending.extend(parts)
    return sorted(done, key=lambda s: s.dim_vector)


def is_indecomposable(m: Representation, tries: Optional[int] = None) -> bool:
    return not m.is_zero() and split(m, tries=tries) is None


def find_isomorphism(m: Representation, n: Representation,
                     tries: Optional[int] = None) -> Optional[ModuleMap]:
    if m.dim_vector != n.dim_vector:
        return None
    if m.is_zero():
        return ModuleMap(m, n)
    tries = config.resolve("search_tries", tries)
    maps = hom(m, n)
    if not maps:
        return None
    p = m.field.characteristic
    if p and p ** len(maps) <= EXHAUSTIVE_LIMIT:
        candidates = _every_combination(maps)
    else:
        candidates = _candidates(maps, random.Random(config.seed), tries, config.coefficient_range)
    for f in candidates:
        if f.is_isomorphism():
            return f
    return None


def is_isomorphic(m: Representation, n: Representation, tries: Optional[int] = None) -> bool:
    return find_isomorphism(m, n, tries) is not None


def multiplicities(summands: List[Representation]) -> List[Tuple[Representation, int]]:
    """Group summands into isomorphism classes."""
    classes: List[Tuple[Representation, int]] = []
    for s in summands:
        for i, (rep, count) in enumerate(classes):
            if is_isomorphic(rep, s):
                classes[i] = (rep, count + 1)
                break
        else:
            classes.append((s, 1))
    return classes
