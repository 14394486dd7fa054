"""Services package: the algebraic connectivity solvers."""

from .kapc_service import KapcService
from .kapvc_service import KapvcService

__all__ = ["KapcService", "KapvcService"]
