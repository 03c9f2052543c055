"""
clusterforge v1.0.0
Computational toolkit for cluster repetitive algebras and their coverings.

Features:
- Bound quiver algebras over QQ and GF(p) with exact linear algebra
- Trivial extensions, repetitive and cluster repetitive windows
- Auslander-Reiten translates, almost split sequences and knitting
- Push-down, orbit quotients, removal surgery and fundamental domains
"""

__version__ = "1.0.0"

from .cli import main, run

__all__ = ["__version__", "main", "run"]
