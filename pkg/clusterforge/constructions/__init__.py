"""Trivial extensions and windows of the (cluster) repetitive algebra."""

from .trivial_extension import TrivialExtensionAlgebra, trivial_extension
from .windows import (
    WindowKind,
    WindowedAlgebra,
    ClusterDuplicatedAlgebra,
    cluster_repetitive_window,
    repetitive_window,
    cluster_duplicated,
    shift_twist,
    nakayama_shift,
    level_copy,
)

__all__ = [
    "TrivialExtensionAlgebra",
    "trivial_extension",
    "WindowKind",
    "WindowedAlgebra",
    "ClusterDuplicatedAlgebra",
    "cluster_repetitive_window",
    "repetitive_window",
    "cluster_duplicated",
    "shift_twist",
    "nakayama_shift",
    "level_copy",
]
