"""Push-down to the trivial extension and the results built on it."""

from .push_down import CoveringMap, push_down, push_down_sequence
from .duplicated import Triple, zeta_restrict, xi_explicit, triple_from_module, embed
from .quotient import quotient_ar_quiver, compare
from .surgery import RemovalSet, compute_removal_set, surgery_quiver, compare_strips
from .domain import FundamentalDomain, fundamental_domain
from .gorenstein import GorensteinVerdict, gorenstein_check, gldim_report

__all__ = [
    "CoveringMap",
    "push_down",
    "push_down_sequence",
    "Triple",
    "zeta_restrict",
    "xi_explicit",
    "triple_from_module",
    "embed",
    "quotient_ar_quiver",
    "compare",
    "RemovalSet",
    "compute_removal_set",
    "surgery_quiver",
    "compare_strips",
    "FundamentalDomain",
    "fundamental_domain",
    "GorensteinVerdict",
    "gorenstein_check",
    "gldim_report",
]
