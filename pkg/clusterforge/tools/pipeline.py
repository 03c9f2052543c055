"""
Shared steps of the CLI commands: loading the input algebra, building the
derived algebras and rendering quivers in the requested format.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from ..algebra.quiver import BoundQuiverAlgebra
from ..ar.knitting import TranslationQuiver, knit
from ..constructions.trivial_extension import TrivialExtensionAlgebra, trivial_extension
from ..constructions.windows import (
    ClusterDuplicatedAlgebra,
    WindowedAlgebra,
    cluster_duplicated,
    cluster_repetitive_window,
    repetitive_window,
)
from ..modules.bimodule import Bimodule, ext2_bimodule
from ..schemas.inputs import CommandInput, OutputFormat
from ..utils.dot import quiver_to_dot, translation_quiver_to_dot
from ..utils.serialization import algebra_to_json, dumps, load_algebra


@dataclass
class Pipeline:
    """The input algebra C and everything built from it, computed on first use."""

    base: BoundQuiverAlgebra

    @classmethod
    def from_input(cls, params: CommandInput) -> "Pipeline":
        return cls(load_algebra(params.path, field=params.field))

    @cached_property
    def bimodule(self) -> Bimodule:
        return ext2_bimodule(self.base)

    @cached_property
    def tilde(self) -> TrivialExtensionAlgebra:
        return trivial_extension(self.base, self.bimodule)

    @cached_property
    def duplicated(self) -> ClusterDuplicatedAlgebra:
        return cluster_duplicated(self.base, self.bimodule)

    def cluster_window(self, a: int, b: int) -> WindowedAlgebra:
        return cluster_repetitive_window(self.base, self.bimodule, a, b)

    def repetitive_window(self, a: int, b: int) -> WindowedAlgebra:
        return repetitive_window(self.base, a, b)

    @cached_property
    def gamma_tilde(self) -> TranslationQuiver:
        return knit(self.tilde.algebra)


def translation_quiver_to_json(quiver: TranslationQuiver) -> dict:
    return {
        "algebra": quiver.algebra.name,
        "complete": quiver.complete,
        "vertices": [
            {
                "index": v.index,
                "dim_vector": list(v.dim_vector),
                "projective": v.projective,
                "injective": v.injective,
                "markers": sorted(v.markers),
            }
            for v in quiver.vertices
        ],
        "arrows": [[i, j, m] for (i, j), m in sorted(quiver.arrows.items())],
        "tau": [[j, i] for j, i in sorted(quiver.tau.items())],
    }


def render_algebra(algebra: BoundQuiverAlgebra, fmt: OutputFormat, name: Optional[str] = None) -> str:
    if fmt is OutputFormat.DOT:
        return quiver_to_dot(algebra, name)
    return dumps(algebra_to_json(algebra))


def render_translation_quiver(quiver: TranslationQuiver, fmt: OutputFormat, name: str = "AR") -> str:
    if fmt is OutputFormat.DOT:
        return translation_quiver_to_dot(quiver, name)
    return dumps(translation_quiver_to_json(quiver))
