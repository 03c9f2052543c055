"""
JSON reading and writing of quiver files, module files and slice files.

Every file passes through its pydantic model first; decoding and
validation failures surface as InputError carrying line and column when
the JSON itself is malformed.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ValidationError

from ..algebra.linalg import FieldSpec, Matrix
from ..algebra.quiver import Arrow, BoundQuiverAlgebra, Quiver, Relation, RelationSystem, compute_basis
from ..ar.knitting import TranslationQuiver
from ..core.errors import InputError
from ..modules.representation import Representation
from ..schemas.files import ModuleFileModel, QuiverFileModel, SliceFileModel

PathLike = Union[str, Path]


def load_json(path: PathLike) -> Any:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {p}: {e.strerror or e}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON in {p}: {e.msg}", line=e.lineno, column=e.colno)


def _validate(model: type, data: Any, source: str) -> BaseModel:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(x) for x in first.get("loc", ()))
        raise InputError(f"invalid {source}: {where + ': ' if where else ''}{first.get('msg')}")


# =============================================================================
# QUIVER FILES
# =============================================================================

def quiver_from_model(model: QuiverFileModel, field: Optional[FieldSpec] = None):
    """(Quiver, RelationSystem, FieldSpec) of a validated quiver file."""
    field = field or FieldSpec(model.field.char)
    quiver = Quiver(model.vertices, [Arrow(a.name, a.source, a.target) for a in model.arrows])
    relations = []
    for r in model.relations:
        relations.append(Relation(tuple((field.element(t.coeff), quiver.path(t.path)) for t in r.terms)))
    return quiver, RelationSystem(tuple(relations)), field


def read_quiver_file(path: PathLike) -> QuiverFileModel:
    return _validate(QuiverFileModel, load_json(path), f"quiver file {path}")


def load_algebra(path: PathLike, field: Optional[int] = None, cap: Optional[int] = None) -> BoundQuiverAlgebra:
    """The bound quiver algebra of a quiver file; ``field`` overrides its characteristic."""
    model = read_quiver_file(path)
    spec = FieldSpec(field) if field is not None else None
    quiver, relations, spec = quiver_from_model(model, spec)
    return compute_basis(quiver, relations, spec, cap=cap, name=model.name or Path(path).stem)


def algebra_to_json(algebra: BoundQuiverAlgebra) -> Dict[str, Any]:
    field = algebra.field
    out: Dict[str, Any] = {}
    if algebra.name:
        out["name"] = algebra.name
    out["field"] = {"char": field.characteristic}
    out["vertices"] = list(algebra.quiver.vertices)
    out["arrows"] = [{"name": a.name, "from": a.source, "to": a.target} for a in algebra.quiver.arrows]
    out["relations"] = [
        {"terms": [{"coeff": field.format(c), "path": list(p.arrows)} for c, p in r.terms]}
        for r in algebra.relations
    ]
    return out


# =============================================================================
# MODULE FILES
# =============================================================================

def module_from_model(model: ModuleFileModel, algebra: BoundQuiverAlgebra) -> Representation:
    quiver = algebra.quiver
    for v in model.dim_vector:
        if not quiver.has_vertex(v):
            raise InputError(f"module file names unknown vertex {v!r}")
    maps = {}
    for name, rows in model.maps.items():
        if not quiver.has_arrow(name):
            raise InputError(f"module file names unknown arrow {name!r}")
        a = quiver.arrow(name)
        ncols = model.dim_vector.get(a.target, 0)
        maps[name] = Matrix.from_values(algebra.field, rows, ncols)
    return Representation(algebra, model.dim_vector, maps)


def load_module(path: PathLike, algebra: BoundQuiverAlgebra) -> Representation:
    model = _validate(ModuleFileModel, load_json(path), f"module file {path}")
    return module_from_model(model, algebra)


def module_to_json(m: Representation) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    if m.algebra.name:
        out["algebra"] = m.algebra.name
    out["dim_vector"] = {v: m.dims[v] for v in m.algebra.vertices}
    out["maps"] = {a.name: m.maps[a.name].to_strings() for a in m.algebra.quiver.arrows
                   if not m.maps[a.name].is_zero()}
    return out


# =============================================================================
# SLICES AND REPORTS
# =============================================================================

def load_slice(path: PathLike, quiver: TranslationQuiver) -> List[int]:
    """Vertex indices of a slice file, dimension vectors resolved against ``quiver``."""
    model = _validate(SliceFileModel, load_json(path), f"slice file {path}")
    found = list(model.vertices)
    for i in found:
        if not 0 <= i < len(quiver.vertices):
            raise InputError(f"slice vertex {i} is not in the quiver")
    for dv in model.dim_vectors:
        matches = [v.index for v in quiver.vertices if list(v.dim_vector) == dv]
        if len(matches) != 1:
            raise InputError(f"dimension vector {dv} matches {len(matches)} vertices, expected exactly one")
        found.append(matches[0])
    return found


def dumps(data: Any) -> str:
    """Deterministic JSON text of an artifact."""
    return json.dumps(data, indent=2, ensure_ascii=False, sort_keys=False) + "\n"
