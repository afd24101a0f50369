"""Exact sl(2) dynamical Yang-Baxter objects at q = 1.

Intertwining operators, fusion and exchange matrices, the universal fusion
matrix, the Q operator and weighted trace functions, all computed over
exact rational-function fields.
"""
from .polykernel import BACKEND
from .ratfield import QQ, FractionField, Poly, RatFunc
from .scalars import Rat, factorial, pochhammer

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "QQ", "FractionField", "Poly", "RatFunc", "Rat",
    "factorial", "pochhammer",
]
