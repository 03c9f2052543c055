"""
Modules over the cluster duplicated algebra C̄ as triples (U, V, μ) and the
two ways of turning them into C̃-modules: restriction along C̃ -> C̄
(c ↦ c₀ + c₁, x ↦ x₁) and the explicit functor on U ⊕ V with
(u, v)·x = (0, μ(u ⊗ x)).
"""

from dataclasses import dataclass
from typing import Dict, Optional

from ..algebra.linalg import Matrix, block_diagonal, hstack, vstack
from ..algebra.quiver import SparseElement, add_scaled
from ..constructions.trivial_extension import TrivialExtensionAlgebra
from ..constructions.windows import ClusterDuplicatedAlgebra, WindowedAlgebra, restrict_to_level, shift_twist, window_label
from ..core.errors import InputError, NotAModuleMapError, UnbalancedTripleError
from ..modules.representation import ModuleMap, Representation


@dataclass
class Triple:
    """A C̄-module as U = M·e₁, V = M·e₀ and μ_x: U(a) -> V(b) for each x ∈ e_a E e_b."""

    u: Representation
    v: Representation
    mu: Dict[int, Matrix]


def _element_images(tilde: TrivialExtensionAlgebra, window: WindowedAlgebra, x: SparseElement) -> SparseElement:
    """Image in the path basis of C̄ of an element of C̃ given in structure coordinates."""
    base = tilde.base
    index = {label: k for k, label in enumerate(window.structure.labels)}
    zero = base.field.zero
    image: SparseElement = {}
    for k, c in x.items():
        if k < base.dim:
            label = base.basis[k].label()
            add_scaled(image, {index[window_label(label, 0)]: c, index[window_label(label, 1)]: c}, base.field.one, zero)
        else:
            label = tilde.bimodule.labels[k - base.dim]
            add_scaled(image, {index[window_label(label, 1)]: c}, base.field.one, zero)
    return window.algebra.realization.from_source(image)


def zeta_restrict(dup: ClusterDuplicatedAlgebra, tilde: TrivialExtensionAlgebra, m: Representation) -> Representation:
    """Restriction of scalars along C̃ -> C̄; ζM(ℓ) = M(ℓ,0) ⊕ M(ℓ,1)."""
    window = dup.window
    if m.algebra is not window.algebra:
        raise InputError("module is not over the cluster duplicated algebra")
    field = m.field
    dims = {ell: m.dims[window.vertex(ell, 0)] + m.dims[window.vertex(ell, 1)] for ell in window.base.vertices}
    maps = {}
    for x in tilde.algebra.quiver.arrows:
        y = _element_images(tilde, window, tilde.algebra.realization.arrow_lifts[x.name])
        row_blocks = []
        for i in (0, 1):
            s = window.vertex(x.source, i)
            row_blocks.append(hstack(field, m.dims[s], [m.act(y, s, window.vertex(x.target, j)) for j in (0, 1)]))
        maps[x.name] = vstack(field, dims[x.target], row_blocks)
    return Representation(tilde.algebra, dims, maps)


def triple_from_module(dup: ClusterDuplicatedAlgebra, m: Representation) -> Triple:
    window = dup.window
    bimodule = window.connector
    u = restrict_to_level(window, m, 1)
    v = restrict_to_level(window, m, 0)
    mu = {}
    for j, (label, (a, b)) in enumerate(zip(bimodule.labels, bimodule.blocks_of)):
        x = window.structure_element(label, 1)
        mu[j] = m.act(x, window.vertex(a, 1), window.vertex(b, 0))
    return Triple(u, v, mu)


def check_balanced(tilde: TrivialExtensionAlgebra, triple: Triple) -> None:
    """μ(uc ⊗ x) = μ(u ⊗ cx) and μ(u ⊗ xc) = μ(u ⊗ x)c for every arrow c."""
    bimodule = tilde.bimodule
    base = tilde.base
    u, v, mu = triple.u, triple.v, triple.mu
    field = base.field
    for j, (a, b) in enumerate(bimodule.blocks_of):
        if mu[j].shape != (u.dims[a], v.dims[b]):
            raise UnbalancedTripleError(f"μ not C-balanced: μ for {bimodule.labels[j]} has shape {mu[j].shape}")
    for arrow in base.quiver.arrows:
        path = base.quiver.path([arrow.name])
        left = bimodule.left_path_matrix(path)
        right = bimodule.right_path_matrix(path)
        for j, (a, b) in enumerate(bimodule.blocks_of):
            if a == arrow.target:
                combined = Matrix.zeros(field, u.dims[arrow.source], v.dims[b])
                for i, c in enumerate(left.row(j)):
                    if c != field.zero:
                        combined = combined + mu[i].scale(c)
                if u.maps[arrow.name] @ mu[j] != combined:
                    raise UnbalancedTripleError(f"μ not C-balanced at {arrow.name}·{bimodule.labels[j]}")
            if b == arrow.source:
                combined = Matrix.zeros(field, u.dims[a], v.dims[arrow.target])
                for i, c in enumerate(right.row(j)):
                    if c != field.zero:
                        combined = combined + mu[i].scale(c)
                if mu[j] @ v.maps[arrow.name] != combined:
                    raise UnbalancedTripleError(f"μ not C-balanced at {bimodule.labels[j]}·{arrow.name}")


def xi_explicit(tilde: TrivialExtensionAlgebra, triple: Triple) -> Representation:
    """The C̃-module on U ⊕ V: C acts diagonally and x sends (u, v) to (0, μ(u ⊗ x))."""
    check_balanced(tilde, triple)
    base = tilde.base
    field = base.field
    u, v = triple.u, triple.v
    dims = {ell: u.dims[ell] + v.dims[ell] for ell in base.vertices}
    maps = {}
    for x in tilde.algebra.quiver.arrows:
        s, t = x.source, x.target
        total = Matrix.zeros(field, dims[s], dims[t])
        for k, c in tilde.algebra.realization.arrow_lifts[x.name].items():
            if k < base.dim:
                part = block_diagonal(field, [u.act({k: c}, s, t), v.act({k: c}, s, t)])
            else:
                j = k - base.dim
                upper = hstack(field, u.dims[s], [Matrix.zeros(field, u.dims[s], u.dims[t]), triple.mu[j].scale(c)])
                lower = Matrix.zeros(field, v.dims[s], dims[t])
                part = vstack(field, dims[t], [upper, lower])
            total = total + part
        maps[x.name] = total
    return Representation(tilde.algebra, dims, maps)


def xi_on_morphism(tilde: TrivialExtensionAlgebra, source: Triple, target: Triple,
                   g: ModuleMap, h: ModuleMap) -> ModuleMap:
    """(g, h) ↦ g ⊕ h, after checking h∘μ = μ'∘(g ⊗ 1)."""
    bimodule = tilde.bimodule
    for j, (a, b) in enumerate(bimodule.blocks_of):
        if source.mu[j] @ h.components[b] != g.components[a] @ target.mu[j]:
            raise NotAModuleMapError(f"(g, h) does not commute with μ at {bimodule.labels[j]}")
    field = tilde.base.field
    components = {ell: block_diagonal(field, [g.components[ell], h.components[ell]]) for ell in tilde.base.vertices}
    return ModuleMap(xi_explicit(tilde, source), xi_explicit(tilde, target), components, check=True)


def embed(dup: ClusterDuplicatedAlgebra, m: Representation, window: Optional[WindowedAlgebra] = None) -> Representation:
    """Extension by zero of a C̄-module into a wider window of Č."""
    return shift_twist(dup.window, m, 0, target=window or dup.window)
