"""
Central registry of the algebraic solvers, keyed by mode name.
"""

from typing import Optional

from exceptions import ParameterError
from helpers.field_helpers import FieldContext
from services.kapc_service import KapcService
from services.kapvc_service import KapvcService
from services.solver_base import ConnectivitySolver


SOLVER_REGISTRY = {
    "edge": KapcService,
    "vertex": KapvcService,
}

# oracle run modes map to the connectivity they measure
ORACLE_MODES = {
    "oracle-edge": "edge",
    "oracle-vertex": "vertex",
}


def get_solver(mode: str, ctx: Optional[FieldContext] = None) -> ConnectivitySolver:
    """
    Instantiate the solver for a mode

    Args:
        mode: "edge" or "vertex"
        ctx: Field to compute in (default prime when omitted)

    Returns:
        A fresh solver instance
    """
    solver_class = SOLVER_REGISTRY.get(mode.lower())
    if solver_class is None:
        raise ParameterError(f"unknown solver mode {mode!r}; expected one of {sorted(SOLVER_REGISTRY)}")
    return solver_class(ctx)
