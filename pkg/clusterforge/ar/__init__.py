"""Auslander-Reiten theory: translates, almost split sequences, knitting, slices."""

from .translate import AlmostSplitSequence, ar_translate, inverse_ar_translate, almost_split_sequence
from .knitting import ARVertex, TranslationQuiver, knit
from .ordering import Reading, Reachability, validate_slice

__all__ = [
    "AlmostSplitSequence",
    "ar_translate",
    "inverse_ar_translate",
    "almost_split_sequence",
    "ARVertex",
    "TranslationQuiver",
    "knit",
    "Reading",
    "Reachability",
    "validate_slice",
]
