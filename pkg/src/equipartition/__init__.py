"""Obstruction invariants for mass equipartitions by hyperplanes.

Decides admissibility of triples (d, j, k) -- every j measures in R^d admit an
equipartition by k hyperplanes -- through circular-word counts, D8-orbit analysis
of moment-curve solution cycles, Jacobian signs and Dickson polynomials over F2.
"""

__version__ = "0.1.0"

from .errors import InconsistencyError, ResourceLimitError

__all__ = ["__version__", "InconsistencyError", "ResourceLimitError"]
