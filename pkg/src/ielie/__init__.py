"""Exact computations in the insertion-elimination Lie algebra on rooted trees."""

from ._kernel import BACKEND
from .algebra import D, Basis, Element, Minus, Plus, bracket, sigma, tau_zero, tau_zeta
from .trees import RootedTree, enumerate_trees, parse, sym_count

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "D",
    "Basis",
    "Element",
    "Minus",
    "Plus",
    "RootedTree",
    "bracket",
    "enumerate_trees",
    "parse",
    "sigma",
    "sym_count",
    "tau_zero",
    "tau_zeta",
]
