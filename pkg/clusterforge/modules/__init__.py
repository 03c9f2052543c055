"""Representations, module maps and homological algebra."""

from .representation import Representation, ModuleMap, simple, dual, hom, hom_dim, direct_sum
from .decomposition import decompose, is_indecomposable, is_isomorphic
from .projectives import projective, injective, projective_cover, injective_envelope
from .homology import HomologicalDimension, pd, injective_dimension, gldim, syzygy, cosyzygy, ext
from .bimodule import Bimodule, regular_bimodule, dual_bimodule, ext2_bimodule

__all__ = [
    "Representation",
    "ModuleMap",
    "simple",
    "dual",
    "hom",
    "hom_dim",
    "direct_sum",
    "decompose",
    "is_indecomposable",
    "is_isomorphic",
    "projective",
    "injective",
    "projective_cover",
    "injective_envelope",
    "HomologicalDimension",
    "pd",
    "injective_dimension",
    "gldim",
    "syzygy",
    "cosyzygy",
    "ext",
    "Bimodule",
    "regular_bimodule",
    "dual_bimodule",
    "ext2_bimodule",
]
