"""Order complexes, exact homology and the acyclicity screen."""

from .complex import SimplicialComplexAbstract, order_complex
from .homology import BettiVector, ChainComplexQ, chain_complex, is_t_acyclic, reduced_betti
from .screen import ScreenCheck, ScreenReport, realizability_screen

__all__ = [
    "BettiVector",
    "ChainComplexQ",
    "ScreenCheck",
    "ScreenReport",
    "SimplicialComplexAbstract",
    "chain_complex",
    "is_t_acyclic",
    "order_complex",
    "realizability_screen",
    "reduced_betti",
]
