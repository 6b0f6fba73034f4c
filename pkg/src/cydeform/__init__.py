"""Exact intersection and cohomology checks on projective bundles over P^1."""

from .bundles import SplitBundle, h0_bundle, h1_bundle, sym_pow, twist
from .projbundle import P1, P2, DivisorClass, PBundle, special_bundle
from .report import run_range, run_suite

__version__ = "0.1.0"

__all__ = [
    "SplitBundle",
    "h0_bundle",
    "h1_bundle",
    "sym_pow",
    "twist",
    "DivisorClass",
    "PBundle",
    "P1",
    "P2",
    "special_bundle",
    "run_suite",
    "run_range",
]
