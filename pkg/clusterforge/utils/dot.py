"""
Graphviz DOT views of quivers and translation quivers.

View-only output with deterministic node and edge order. In AR quivers,
projective-injective vertices removed by surgery are drawn as diamonds and
the translates τ^{1-i}Ω^{-i}C as circles; τ is a dashed back-arrow.
"""

from typing import List, Optional

from ..algebra.quiver import BoundQuiverAlgebra
from ..ar.knitting import TranslationQuiver


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def quiver_to_dot(algebra: BoundQuiverAlgebra, name: Optional[str] = None) -> str:
    lines: List[str] = [f"digraph {_quote(name or algebra.name or 'quiver')} {{"]
    if len(algebra.relations):
        lines.append("  /* relations")
        for r in algebra.relations:
            lines.append(f"     {r.format(algebra.field)}")
        lines.append("  */")
    for v in algebra.quiver.vertices:
        lines.append(f"  {_quote(v)};")
    for a in algebra.quiver.arrows:
        lines.append(f"  {_quote(a.source)} -> {_quote(a.target)} [label={_quote(a.name)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _shape(markers) -> str:
    if "diamond" in markers:
        return "diamond"
    if "circle" in markers:
        return "circle"
    return "plaintext"


def translation_quiver_to_dot(quiver: TranslationQuiver, name: str = "AR") -> str:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;"]
    for v in quiver.vertices:
        attrs = [f"label={_quote(v.label())}", f"shape={_shape(v.markers)}"]
        lines.append(f"  n{v.index} [{', '.join(attrs)}];")
    for (i, j), m in sorted(quiver.arrows.items()):
        label = f" [label={m}]" if m > 1 else ""
        lines.append(f"  n{i} -> n{j}{label};")
    for j, i in sorted(quiver.tau.items()):
        lines.append(f"  n{j} -> n{i} [style=dashed, constraint=false];")
    if not quiver.complete:
        lines.append("  /* partial: cap exceeded */")
    lines.append("}")
    return "\n".join(lines) + "\n"
