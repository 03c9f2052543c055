"""
Exception hierarchy for clusterforge.

Every failure mode named by the library has its own class so that the CLI
can map it to an exit code and tests can match on it.
"""

from typing import Optional


class ClusterForgeError(Exception):
    """Base class of all clusterforge errors."""


class InputError(ClusterForgeError):
    """Malformed input file or argument."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class FieldError(ClusterForgeError):
    """Characteristic is neither 0 nor a prime."""


class DimensionMismatchError(ClusterForgeError):
    """Operands live in incompatible spaces."""


# Quivers and algebras

class InconsistentRelationError(ClusterForgeError):
    """A relation mixes (source, target) pairs or uses short paths."""


class NotAdmissibleError(ClusterForgeError):
    """Path enumeration does not terminate below the length cap."""


class NotBasicError(ClusterForgeError):
    """Some corner algebra e_i A e_i is not local."""


class UnknownVertexError(ClusterForgeError):
    """Vertex not in the quiver."""


class RelationViolatedError(ClusterForgeError):
    """Arrow matrices do not satisfy a relation of the algebra."""


# Modules and homology

class NotAModuleMapError(ClusterForgeError):
    """Per-vertex matrices do not commute with the arrow maps."""


class ZeroModuleError(ClusterForgeError):
    """Operation needs a nonzero module."""


class ResolutionTooLongError(ClusterForgeError):
    """A resolution does not terminate within the configured cap."""


class BimoduleMismatchError(ClusterForgeError):
    """Bimodule is defined over a different algebra."""


class BimoduleError(ClusterForgeError):
    """Bimodule actions fail the module laws."""


# Auslander-Reiten theory

class ProjectiveHasNoTranslateError(ClusterForgeError):
    """Translate requested for a projective module."""

    def __init__(self, message: str = "projective has no translate"):
        super().__init__(message)


class InjectiveHasNoInverseTranslateError(ClusterForgeError):
    """Inverse translate requested for an injective module."""

    def __init__(self, message: str = "injective has no inverse translate"):
        super().__init__(message)


class CapExceededError(ClusterForgeError):
    """Knitting produced more vertices than allowed."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class QuiverIncompleteError(ClusterForgeError):
    """Translation quiver was not knitted to completion."""


# Windows and coverings

class SupportLeavesWindowError(ClusterForgeError):
    """Shifted module would live outside the window."""

    def __init__(self, message: str = "support leaves window"):
        super().__init__(message)


class WindowTooNarrowError(ClusterForgeError):
    """Window has no interior strip of the required width."""

    def __init__(self, message: str = "window too narrow"):
        super().__init__(message)


class UnbalancedTripleError(ClusterForgeError):
    """The map mu of a (U, V, mu) triple is not C-balanced."""

    def __init__(self, message: str = "μ not C-balanced"):
        super().__init__(message)


class FileLockError(ClusterForgeError):
    """An artifact's lock could not be acquired in time."""

    def __init__(self, message: str = "file locked"):
        super().__init__(message)
