"""
Pydantic input schemas for CLI command validation.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import isprime


class OutputFormat(str, Enum):
    """Artifact format."""
    JSON = "json"
    DOT = "dot"


class CheckKind(str, Enum):
    """Homological check to run."""
    GORENSTEIN = "gorenstein"
    GLDIM = "gldim"


class Construction(str, Enum):
    """Algebra built from the input before a check runs."""
    NONE = "none"
    TRIVIAL_EXTENSION = "tilde"
    DUPLICATED = "bar"


# =============================================================================
# INPUT SCHEMAS
# =============================================================================

class CommandInput(BaseModel):
    """Options shared by every command that reads a quiver file."""

    path: str = Field(..., min_length=1, description="Quiver file (JSON)")
    field: Optional[int] = Field(
        default=None,
        description="Override the characteristic of the file: 0 or a prime"
    )
    cap: Optional[int] = Field(
        default=None,
        ge=1,
        description="Override the cap of the main computation"
    )
    format: OutputFormat = Field(default=OutputFormat.JSON)
    out: Optional[str] = Field(
        default=None,
        description="Write the artifact here instead of stdout"
    )

    @field_validator("field")
    @classmethod
    def prime_or_zero(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and (v < 0 or (v != 0 and not isprime(v))):
            raise ValueError(f"--field must be 0 or a prime, got {v}")
        return v


class LevelsInput(CommandInput):
    """Schema for commands acting on a window of levels."""

    levels: Tuple[int, int] = Field(
        default=(0, 1),
        description="Lowest and highest level of the window"
    )
    margin: Optional[int] = Field(default=None, ge=0, description="Interior margin in levels")

    @field_validator("levels", mode="before")
    @classmethod
    def handle_list(cls, v):
        """argparse hands nargs=2 over as a list."""
        return tuple(v) if isinstance(v, list) else v

    @model_validator(mode="after")
    def ordered(self) -> "LevelsInput":
        a, b = self.levels
        if a > b:
            raise ValueError(f"--levels needs a <= b, got {a} {b}")
        return self


class KnitInput(CommandInput):
    """Schema for the knit command."""


class PushDownInput(LevelsInput):
    """Schema for the pushdown command."""

    module: Optional[str] = Field(
        default=None,
        description="Module file over the window; default: every interior indecomposable"
    )


class SurgeryInput(LevelsInput):
    """Schema for the surgery command."""

    strip: Optional[Tuple[int, int]] = Field(
        default=None,
        description="Levels of the strip compared after surgery"
    )
    compare_levels: Optional[Tuple[int, int]] = Field(
        default=None,
        description="Window of the cluster repetitive algebra to compare against"
    )

    @field_validator("strip", "compare_levels", mode="before")
    @classmethod
    def handle_list(cls, v):
        return tuple(v) if isinstance(v, list) else v


class DomainInput(CommandInput):
    """Schema for the domain command."""

    slice: str = Field(..., min_length=1, description="Slice file (JSON)")
    faithful: bool = Field(default=False, description="Also run the Hom-dimension faithfulness check")


class CheckInput(CommandInput):
    """Schema for the check command."""

    model_config = ConfigDict(populate_by_name=True)

    kind: CheckKind
    construction: Construction = Field(default=Construction.NONE, alias="construct",
                                       description="Build C̃ or C̄ from the input first")
    vertices: Optional[List[str]] = Field(
        default=None,
        description="Restrict the Gorenstein check to these vertices"
    )


class ReproduceInput(BaseModel):
    """Schema for the reproduce command."""

    path: Optional[str] = Field(default=None, description="Quiver file; default: the shipped example")
    levels: Tuple[int, int] = Field(default=(-1, 3), description="Window of the repetitive algebra")
    strip: Tuple[int, int] = Field(default=(0, 2))
    compare_levels: Tuple[int, int] = Field(default=(-1, 2))
    out: str = Field(default=".", description="Directory receiving the two DOT files")
    field: Optional[int] = None

    @field_validator("levels", "strip", "compare_levels", mode="before")
    @classmethod
    def handle_list(cls, v):
        return tuple(v) if isinstance(v, list) else v

    @model_validator(mode="after")
    def strip_inside(self) -> "ReproduceInput":
        (a, b), (lo, hi) = self.levels, self.strip
        if a > b or lo > hi:
            raise ValueError("levels must be given as a <= b")
        if lo < a or hi > b:
            raise ValueError(f"strip [{lo},{hi}] is not inside the window [{a},{b}]")
        return self
