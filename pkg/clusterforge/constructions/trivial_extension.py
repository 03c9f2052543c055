"""
Trivial extension C ⋉ E of an algebra by a bimodule.

The product on C ⊕ E is (c, x)(c', x') = (cc', cx' + xc'); the result is
presented as a bound quiver algebra whose extra arrows are named after the
bimodule basis elements they lift.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..algebra.presentation import StructureConstantAlgebra, present
from ..algebra.quiver import BoundQuiverAlgebra, SparseElement
from ..core.errors import BimoduleMismatchError
from ..modules.bimodule import Bimodule


def _sparse_row(row, offset: int, zero) -> SparseElement:
    return {offset + j: c for j, c in enumerate(row) if c != zero}


def extension_products(algebra: BoundQuiverAlgebra, bimodule: Bimodule,
                       c_offset: int, left_offset: int, right_offset: int,
                       target_offset: int) -> Dict[Tuple[int, int], SparseElement]:
    """
    c·x and x·c for basis paths c and bimodule basis elements x.

    The algebra copy at ``c_offset`` multiplies the bimodule copy at
    ``left_offset`` from the left, the copy at ``right_offset`` multiplies it
    from the right; results land in the bimodule copy at ``target_offset``.
    Pass None to skip a side.
    """
    zero = algebra.field.zero
    products: Dict[Tuple[int, int], SparseElement] = {}
    for i, p in enumerate(algebra.basis):
        if left_offset is not None:
            lm = bimodule.left_path_matrix(p)
            for j in range(bimodule.dim):
                prod = _sparse_row(lm.row(j), target_offset, zero)
                if prod:
                    products[(c_offset + i, left_offset + j)] = prod
        if right_offset is not None:
            rm = bimodule.right_path_matrix(p)
            for j in range(bimodule.dim):
                prod = _sparse_row(rm.row(j), target_offset, zero)
                if prod:
                    products[(right_offset + j, c_offset + i)] = prod
    return products


@dataclass
class TrivialExtensionAlgebra:
    base: BoundQuiverAlgebra
    bimodule: Bimodule
    structure: StructureConstantAlgebra
    algebra: BoundQuiverAlgebra

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def base_element(self, k: int) -> SparseElement:
        """Basis path k of C, in the path basis of C ⋉ E."""
        return self.algebra.realization.from_source({k: self.base.field.one})

    def bimodule_element(self, j: int) -> SparseElement:
        return self.algebra.realization.from_source({self.base.dim + j: self.base.field.one})

    def new_arrows(self) -> List[str]:
        names = set(self.bimodule.labels)
        return [a.name for a in self.algebra.quiver.arrows if a.name in names]


def trivial_extension(base: BoundQuiverAlgebra, bimodule: Bimodule, name: Optional[str] = None,
                      cap: Optional[int] = None) -> TrivialExtensionAlgebra:
    if bimodule.algebra is not base:
        raise BimoduleMismatchError("bimodule/algebra mismatch: bimodule is over another algebra")
    n = base.dim
    labels = [p.label() for p in base.basis] + list(bimodule.labels)
    blocks = [(p.source, p.target) for p in base.basis] + list(bimodule.blocks_of)
    products: Dict[Tuple[int, int], SparseElement] = {k: dict(v) for k, v in base.products.items()}
    products.update(extension_products(base, bimodule, 0, n, n, n))
    structure = StructureConstantAlgebra(
        field=base.field,
        vertices=base.vertices,
        labels=labels,
        blocks=blocks,
        products=products,
        idempotents={v: base.idempotent(v) for v in base.vertices},
    )
    algebra = present(structure, cap=cap, name=name or (f"{base.name}~" if base.name else None))
    return TrivialExtensionAlgebra(base, bimodule, structure, algebra)
