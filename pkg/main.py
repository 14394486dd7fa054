"""
Connectivity Server - FastAPI Application
Exposes k-APC / k-APVC solving, the max-flow oracle and the verification sweep over HTTP
"""

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, ValidationError
from typing import Any, Dict, List, Literal, Optional
import logging
from datetime import datetime, timezone

from config import RunConfig, VerifyConfig, configure_logging, load_settings
from helpers.field_helpers import DEFAULT_PRIME
from orchestrator import EXIT_USAGE, ConnectivityOrchestrator
from services.verify_service import VerifyReport
from solver_registry import SOLVER_REGISTRY

settings = load_settings()

configure_logging(settings.log_level)
logger = logging.getLogger(__name__)

app = FastAPI(
    title="Connectivity Server",
    description="k-bounded all-pairs edge and vertex connectivity",
    version="1.0.0",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.allowed_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

orchestrator = ConnectivityOrchestrator()


# Request/Response Models
class SolveRequest(BaseModel):
    graph: str  # edge-list document
    mode: Literal["edge", "vertex"] = "edge"
    k: int
    seed: int = settings.seed
    prime: int = settings.prime
    trials: int = settings.trials


class OracleRequest(BaseModel):
    graph: str
    mode: Literal["edge", "vertex"] = "edge"
    k: int


class ConnectivityResponse(BaseModel):
    n: int
    k: int
    values: List[List[Optional[int]]]
    output: str
    message: str


class VerifyRequest(BaseModel):
    mode: Literal["edge", "vertex"] = "edge"
    instances: int = 20
    min_n: int = 2
    max_n: int = 8
    max_m: int = 20
    max_k: int = 4
    seed: int = settings.seed
    prime: int = DEFAULT_PRIME
    trials: int = 1
    threshold: float = settings.verify_threshold


def _raise_for(result: Dict[str, Any]) -> None:
    status = 400 if result["exit_code"] == EXIT_USAGE else 500
    raise HTTPException(status_code=status, detail=result.get("error", "request failed"))


def _run(config_kwargs: Dict[str, Any], graph: str) -> ConnectivityResponse:
    try:
        config = RunConfig(**config_kwargs)
    except ValidationError as e:
        raise HTTPException(status_code=400, detail=str(e))

    result = orchestrator.run_solve(config, graph)
    if not result["success"]:
        _raise_for(result)

    matrix = result["matrix"]
    return ConnectivityResponse(
        n=matrix.n,
        k=matrix.k,
        values=matrix.values,
        output=result["output"],
        message=f"Computed {config.mode} connectivities for {matrix.n} vertices",
    )


@app.get("/")
async def root():
    """Health check endpoint"""
    return {
        "service": "Connectivity Server",
        "status": "running",
        "version": "1.0.0",
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


@app.get("/health")
async def health_check():
    """Detailed health check"""
    return {
        "status": "healthy",
        "solvers": sorted(SOLVER_REGISTRY),
        "prime": settings.prime,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


@app.post("/api/solve", response_model=ConnectivityResponse)
def solve(request: SolveRequest):
    """
    Solve k-APC (mode=edge) or k-APVC (mode=vertex)

    Flow:
    1. Validate the run configuration
    2. Parse the edge list
    3. Encode with fresh randomness per trial and decode all pairs
    """
    logger.info(f"Solve request: mode={request.mode}, k={request.k}, seed={request.seed}")
    return _run(
        {
            "mode": request.mode,
            "k": request.k,
            "seed": request.seed,
            "prime": request.prime,
            "trials": request.trials,
        },
        request.graph,
    )


@app.post("/api/oracle", response_model=ConnectivityResponse)
def oracle(request: OracleRequest):
    """Max-flow ground truth for every ordered pair"""
    logger.info(f"Oracle request: mode={request.mode}, k={request.k}")
    return _run({"mode": f"oracle-{request.mode}", "k": request.k}, request.graph)


@app.post("/api/verify", response_model=VerifyReport)
def verify(request: VerifyRequest):
    """Run a verification sweep; 409 when the mismatch threshold is breached"""
    try:
        config = VerifyConfig(**request.model_dump())
    except ValidationError as e:
        raise HTTPException(status_code=400, detail=str(e))

    result = orchestrator.run_verify(config)
    if "report" not in result:
        _raise_for(result)
    report = result["report"]
    if not report.passed:
        raise HTTPException(
            status_code=409,
            detail=f"mismatch rate {report.mismatch_rate:.3g} exceeds {report.threshold}",
        )
    return report


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=8000)
