"""7/4-approximation for the Matching Augmentation Problem.

Given a 2-edge-connected multigraph whose zero-cost edges form a matching
and whose other edges cost one, find a cheap 2-edge-connected spanning
subgraph. Exact oracles, instance families and a credit auditor ship
alongside the solver.
"""

from .errors import (AuditFailure, CapExceeded, CreditError, ImpossibleCase,
                     InternalError, InvalidInstance, MapError, ParseError)
from .multigraph import Edge, MapInstance, validate

__version__ = "0.1.0"

__all__ = [
    "AuditFailure", "CapExceeded", "CreditError", "Edge", "ImpossibleCase",
    "InternalError", "InvalidInstance", "MapError", "MapInstance", "ParseError",
    "validate", "__version__",
]
