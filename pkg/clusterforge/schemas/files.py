"""
Pydantic models for the JSON files the CLI reads: quivers with relations,
modules and slices. They are validated before any algebra is built.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Union

from sympy import isprime

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, field_validator, model_validator

# Strict: lax mode would read a JSON true as 1.
Scalar = Union[StrictInt, StrictStr]


def _check_scalar(value: Scalar) -> Scalar:
    if isinstance(value, str):
        try:
            Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational literal: {value!r}")
    return value


class FieldModel(BaseModel):
    """Ground field: 0 for the rationals, a prime p for GF(p)."""

    char: int = Field(default=0, ge=0, description="Characteristic (0 or a prime)")

    @field_validator("char")
    @classmethod
    def prime_or_zero(cls, v: int) -> int:
        if v != 0 and not isprime(v):
            raise ValueError(f"characteristic must be 0 or a prime, got {v}")
        return v


class ArrowModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str = Field(..., min_length=1)
    source: str = Field(..., alias="from")
    target: str = Field(..., alias="to")

    @field_validator("source", "target", mode="before")
    @classmethod
    def vertex_as_string(cls, v):
        return str(v)


class TermModel(BaseModel):
    coeff: Scalar = Field(default="1", description="Rational string or integer")
    path: List[str] = Field(..., min_length=1, description="Arrow names in traversal order")

    @field_validator("coeff")
    @classmethod
    def rational(cls, v: Scalar) -> Scalar:
        return _check_scalar(v)


class RelationModel(BaseModel):
    terms: List[TermModel] = Field(..., min_length=1)


class QuiverFileModel(BaseModel):
    """A bound quiver: vertices, arrows and a system of relations."""

    name: Optional[str] = None
    field: FieldModel = Field(default_factory=FieldModel)
    vertices: List[str] = Field(..., min_length=1)
    arrows: List[ArrowModel] = Field(default_factory=list)
    relations: List[RelationModel] = Field(default_factory=list)

    @field_validator("vertices", mode="before")
    @classmethod
    def vertices_as_strings(cls, v):
        return [str(x) for x in v] if isinstance(v, list) else v

    @model_validator(mode="after")
    def consistent(self) -> "QuiverFileModel":
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex ids must be unique")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        known = set(self.vertices)
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in known:
                    raise ValueError(f"arrow {a.name!r} uses unknown vertex {end!r}")
        arrows = set(names)
        for r in self.relations:
            for t in r.terms:
                missing = [x for x in t.path if x not in arrows]
                if missing:
                    raise ValueError(f"relation uses unknown arrows {missing}")
        return self


class ModuleFileModel(BaseModel):
    """A representation: vertex dimensions and one matrix per arrow."""

    algebra: Optional[str] = Field(default=None, description="Quiver file the module lives over")
    dim_vector: Dict[str, int]
    maps: Dict[str, List[List[Scalar]]] = Field(default_factory=dict)

    @field_validator("dim_vector")
    @classmethod
    def non_negative(cls, v: Dict[str, int]) -> Dict[str, int]:
        bad = [k for k, d in v.items() if d < 0]
        if bad:
            raise ValueError(f"negative dimensions at {bad}")
        return v

    @field_validator("maps")
    @classmethod
    def rectangular(cls, v: Dict[str, List[List[Scalar]]]) -> Dict[str, List[List[Scalar]]]:
        for name, rows in v.items():
            widths = {len(r) for r in rows}
            if len(widths) > 1:
                raise ValueError(f"matrix of {name!r} is not rectangular")
            for r in rows:
                for x in r:
                    _check_scalar(x)
        return v


class SliceFileModel(BaseModel):
    """A slice given by positions in a knitted AR quiver or by dimension vectors."""

    vertices: List[int] = Field(default_factory=list)
    dim_vectors: List[List[int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def non_empty(self) -> "SliceFileModel":
        if not self.vertices and not self.dim_vectors:
            raise ValueError("a slice needs vertices or dimension vectors")
        return self
