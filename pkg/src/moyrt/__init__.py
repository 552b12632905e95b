"""Colored sl(N) MOY state sums, RT polynomials of colored links, and the
symmetric-function and graded-dimension identities behind them."""

__version__ = "0.1.0"

from .links import bracket_link, rt_polynomial
from .moy import LayeredDiagram, bracket, bracket_naive
from .qalg import LaurentPoly, TauPoly, quantum_binomial, quantum_int

__all__ = [
    "LaurentPoly",
    "TauPoly",
    "quantum_int",
    "quantum_binomial",
    "LayeredDiagram",
    "bracket",
    "bracket_naive",
    "bracket_link",
    "rt_polynomial",
]
