"""
Connectivity Orchestrator
Central coordinator: parses input, picks the solver or oracle for a mode,
and reports results as dicts carrying an exit code.
"""

import logging
from typing import Any, Dict

from config import RunConfig, VerifyConfig
from exceptions import EncodingExhaustedError, KapcError, ParameterError, ParseError
from helpers.field_helpers import FieldContext, FieldHelpers
from helpers.flow_helpers import OracleHelpers
from helpers.graph_helpers import Digraph, GraphHelpers
from services.verify_service import VerifyService
from solver_registry import ORACLE_MODES, SOLVER_REGISTRY, get_solver
from utils.seed_utils import TrialConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ENCODING = 2
EXIT_VERIFY_BREACH = 3


class ConnectivityOrchestrator:
    """Orchestrates solve, oracle and verify runs."""

    def __init__(self):
        logger.info(
            f"Orchestrator initialized with {len(SOLVER_REGISTRY)} solvers "
            f"and {len(ORACLE_MODES)} oracle modes"
        )

    @staticmethod
    def warn_prime_bound(g: Digraph, k: int, mode: str, prime: int) -> bool:
        """
        Warn when p is below the Schwartz-Zippel threshold for this input

        Returns:
            True if a warning was emitted
        """
        if mode == "edge":
            capped = GraphHelpers.cap_parallel_edges(g, k)
            count, label = capped.m + 2 * k * g.n, "m_new"
        else:
            count, label = g.n, "n"
        if FieldHelpers.prime_bound_ok(prime, count):
            return False
        logger.warning(
            f"Prime {prime} is below 2*{label}^5 for {label}={count}; "
            f"the failure-probability bound degrades"
        )
        return True

    def run_solve(self, config: RunConfig, text: str) -> Dict[str, Any]:
        """
        Solve (or run the oracle) on one edge-list document

        Args:
            config: Validated run configuration
            text: Edge-list document

        Returns:
            Dict with success, matrix, output text and exit_code
        """
        try:
            g = GraphHelpers.parse_graph(text)
            logger.info(f"Parsed graph with n={g.n}, m={g.m}; mode={config.mode}, k={config.k}")

            if config.mode in ORACLE_MODES:
                matrix = OracleHelpers.all_pairs_oracle(g, config.k, ORACLE_MODES[config.mode])
            else:
                self.warn_prime_bound(g, config.k, config.mode, config.prime)
                solver = get_solver(config.mode, FieldContext(p=config.prime))
                trial_config = TrialConfig(
                    seed=config.seed, trials=config.trials, max_retries=config.max_retries
                )
                matrix = solver.solve_all_pairs(g, config.k, trial_config)
                logger.info(
                    f"Solved {config.mode} mode: {solver.draws} draws, "
                    f"{solver.singular_draws} singular"
                )

            return {
                "success": True,
                "matrix": matrix,
                "output": matrix.to_text(),
                "exit_code": EXIT_OK,
            }

        except (ParseError, ParameterError) as e:
            logger.error(f"Invalid input: {e}")
            return {"success": False, "error": str(e), "exit_code": EXIT_USAGE}
        except EncodingExhaustedError as e:
            logger.error(f"Encoding failed: {e}")
            return {"success": False, "error": str(e), "exit_code": EXIT_ENCODING}
        except KapcError as e:
            logger.error(f"Error in run_solve: {e}", exc_info=True)
            return {"success": False, "error": str(e), "exit_code": EXIT_ENCODING}

    def run_verify(self, config: VerifyConfig) -> Dict[str, Any]:
        """
        Sweep random instances against the oracle

        Returns:
            Dict with success, report and exit_code (3 when the threshold is breached)
        """
        try:
            service = VerifyService(FieldContext(p=config.prime))
            report = service.run(config)
            return {
                "success": report.passed,
                "report": report,
                "output": report.model_dump_json(indent=2) + "\n",
                "exit_code": EXIT_OK if report.passed else EXIT_VERIFY_BREACH,
            }
        except ParameterError as e:
            logger.error(f"Invalid verify configuration: {e}")
            return {"success": False, "error": str(e), "exit_code": EXIT_USAGE}
        except KapcError as e:
            logger.error(f"Error in run_verify: {e}", exc_info=True)
            return {"success": False, "error": str(e), "exit_code": EXIT_ENCODING}
