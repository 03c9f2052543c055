"""Utility functions: file formats and DOT views."""

from .serialization import (
    load_json,
    load_algebra,
    load_module,
    load_slice,
    read_quiver_file,
    quiver_from_model,
    algebra_to_json,
    module_to_json,
    module_from_model,
    dumps,
)
from .dot import quiver_to_dot, translation_quiver_to_dot

__all__ = [
    "load_json",
    "load_algebra",
    "load_module",
    "load_slice",
    "read_quiver_file",
    "quiver_from_model",
    "algebra_to_json",
    "module_to_json",
    "module_from_model",
    "dumps",
    "quiver_to_dot",
    "translation_quiver_to_dot",
]
