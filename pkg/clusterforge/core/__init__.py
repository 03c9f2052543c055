"""Core modules: config, errors, logging, safe writes."""

from .config import Config, config
from .errors import (
    ClusterForgeError,
    InputError,
    FieldError,
    DimensionMismatchError,
    InconsistentRelationError,
    NotAdmissibleError,
    NotBasicError,
    UnknownVertexError,
    RelationViolatedError,
    NotAModuleMapError,
    ZeroModuleError,
    ResolutionTooLongError,
    BimoduleMismatchError,
    BimoduleError,
    ProjectiveHasNoTranslateError,
    InjectiveHasNoInverseTranslateError,
    CapExceededError,
    QuiverIncompleteError,
    SupportLeavesWindowError,
    WindowTooNarrowError,
    UnbalancedTripleError,
    FileLockError,
)
from .logging import StructuredLogger, structured_logger, log_activity, log_progress
from .security import ArtifactWriter, WriteResult, artifact_writer, file_lock

__all__ = [
    "Config",
    "config",
    "ClusterForgeError",
    "InputError",
    "FieldError",
    "DimensionMismatchError",
    "InconsistentRelationError",
    "NotAdmissibleError",
    "NotBasicError",
    "UnknownVertexError",
    "RelationViolatedError",
    "NotAModuleMapError",
    "ZeroModuleError",
    "ResolutionTooLongError",
    "BimoduleMismatchError",
    "BimoduleError",
    "ProjectiveHasNoTranslateError",
    "InjectiveHasNoInverseTranslateError",
    "CapExceededError",
    "QuiverIncompleteError",
    "SupportLeavesWindowError",
    "WindowTooNarrowError",
    "UnbalancedTripleError",
    "StructuredLogger",
    "structured_logger",
    "log_activity",
    "log_progress",
    "ArtifactWriter",
    "WriteResult",
    "artifact_writer",
    "file_lock",
    "FileLockError",
]
