"""Pydantic schemas for file and command validation."""

from .files import (
    FieldModel,
    ArrowModel,
    TermModel,
    RelationModel,
    QuiverFileModel,
    ModuleFileModel,
    SliceFileModel,
)
from .inputs import (
    OutputFormat,
    CheckKind,
    Construction,
    CommandInput,
    LevelsInput,
    KnitInput,
    PushDownInput,
    SurgeryInput,
    DomainInput,
    CheckInput,
    ReproduceInput,
)

__all__ = [
    "FieldModel",
    "ArrowModel",
    "TermModel",
    "RelationModel",
    "QuiverFileModel",
    "ModuleFileModel",
    "SliceFileModel",
    "OutputFormat",
    "CheckKind",
    "Construction",
    "CommandInput",
    "LevelsInput",
    "KnitInput",
    "PushDownInput",
    "SurgeryInput",
    "DomainInput",
    "CheckInput",
    "ReproduceInput",
]
