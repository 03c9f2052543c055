"""Exact linear algebra, quivers with relations and presentations of matrix algebras."""

from .linalg import FieldSpec, Matrix, Subspace, RATIONALS
from .quiver import Arrow, PathWord, Quiver, Relation, RelationSystem, BoundQuiverAlgebra, compute_basis
from .presentation import StructureConstantAlgebra, Realization, present

__all__ = [
    "FieldSpec",
    "Matrix",
    "Subspace",
    "RATIONALS",
    "Arrow",
    "PathWord",
    "Quiver",
    "Relation",
    "RelationSystem",
    "BoundQuiverAlgebra",
    "compute_basis",
    "StructureConstantAlgebra",
    "Realization",
    "present",
]
