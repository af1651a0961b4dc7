"""Exact computations with lambda-rings, Witt vectors, necklace rings,
graded logarithms of Lie superalgebras and replicable functions."""

from .coeff import (Binomial, Elem, FreeLambda, IntegralityError, Integers, MultiPoly,
                    Rationals, Ring, RingSpec, TruncationError, parse_ring)
from .lambda1 import Series1
from .necklace import NecklaceVector, m_value, m_vector, s_tilde, tau, tau_inverse
from .witt import WittVector, from_ghost, ghost_map, teichmuller

__all__ = [
    "Binomial", "Elem", "FreeLambda", "IntegralityError", "Integers", "MultiPoly",
    "Rationals", "Ring", "RingSpec", "TruncationError", "parse_ring",
    "Series1", "NecklaceVector", "m_value", "m_vector", "s_tilde", "tau", "tau_inverse",
    "WittVector", "from_ghost", "ghost_map", "teichmuller",
]
