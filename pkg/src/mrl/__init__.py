"""Finite relations and multirelations: kernels, modal operators, law checking."""

from .relcore import Relation, Test, Universe, powerset, universe
from .cdl import kleene_star

__all__ = ["Relation", "Test", "Universe", "powerset", "universe", "kleene_star"]
__version__ = "0.1.0"
