"""Finite, exhaustively checked lens categories.

Lenses are built as Grothendieck constructions of indexed categories over
finite bases.  Every construction is tabulated, so category laws and
isomorphisms can be checked by brute force.
"""

__version__ = "0.1.0"

from .catkit import FinCategory, LawReport, check_category_laws, finset_category, twisted_arrow
from .dynamics import MooreMachine, run, toggle, wire
from .errors import GlensError
from .finset import FinFn
from .indexed import IndexedCat, check_tfae_iso, lens_category
from .instances import ClassicLensMor, PrismMor, compose_classic, slice_indexed

__all__ = [
    "ClassicLensMor",
    "FinCategory",
    "FinFn",
    "GlensError",
    "IndexedCat",
    "LawReport",
    "MooreMachine",
    "PrismMor",
    "check_category_laws",
    "check_tfae_iso",
    "compose_classic",
    "finset_category",
    "lens_category",
    "run",
    "slice_indexed",
    "toggle",
    "twisted_arrow",
    "wire",
]
