"""
Verification harness: algebraic solvers against the max-flow oracle on
random instances, with per-instance seeds for replay.
"""

import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel

from config import VerifyConfig
from exceptions import EncodingExhaustedError, ParameterError
from helpers.field_helpers import FieldContext
from helpers.flow_helpers import OracleHelpers
from helpers.graph_helpers import GraphHelpers
from solver_registry import get_solver
from utils.connectivity_utils import ConnectivityMatrix
from utils.seed_utils import TrialConfig, derive_rng, derive_seed

logger = logging.getLogger(__name__)


class InstanceReport(BaseModel):
    index: int
    seed: int
    n: int
    m: int
    k: int
    pairs: int
    mismatches: List[Tuple[int, int, int, int]] = []
    error: Optional[str] = None


class VerifyReport(BaseModel):
    mode: str
    prime: int
    instances: int
    pairs_checked: int
    mismatched_pairs: int
    mismatch_rate: float
    threshold: float
    passed: bool
    draws: int
    singular_draws: int
    instance_reports: List[InstanceReport]


class VerifyService:
    """Service that sweeps random instances and tallies disagreements"""

    def __init__(self, ctx: Optional[FieldContext] = None):
        self.ctx = ctx or FieldContext()

    @staticmethod
    def _inject_fault(answer: ConnectivityMatrix) -> None:
        # test-only: corrupt the first off-diagonal value
        s, t = answer.pairs()[0]
        answer.values[s][t] = (answer.values[s][t] + 1) % (answer.k + 1)

    def run(self, config: VerifyConfig) -> VerifyReport:
        """
        Run config.instances random instances

        Args:
            config: Sweep shape, seed, threshold

        Returns:
            VerifyReport with per-instance seeds and mismatches
        """
        if config.max_n < config.min_n or config.max_k < 1 or config.max_m < 0:
            raise ParameterError(
                f"bad sweep ranges n=[{config.min_n}, {config.max_n}], m<={config.max_m}, k<={config.max_k}"
            )
        solver = get_solver(config.mode, self.ctx)
        reports: List[InstanceReport] = []
        pairs_checked = 0
        mismatched = 0

        for index in range(config.instances):
            seed = derive_seed(config.seed, index)
            rng = derive_rng(seed)
            n = int(rng.integers(config.min_n, config.max_n + 1))
            m = int(rng.integers(0, config.max_m + 1))
            k = int(rng.integers(1, config.max_k + 1))
            g = GraphHelpers.random_digraph(rng, n, m, allow_parallel=config.mode == "edge")
            pairs = n * (n - 1)
            report = InstanceReport(index=index, seed=seed, n=n, m=g.m, k=k, pairs=pairs)

            truth = OracleHelpers.all_pairs_oracle(g, k, config.mode)
            trial_config = TrialConfig(seed=seed, trials=config.trials, max_retries=config.max_retries)
            try:
                answer = solver.solve_all_pairs(g, k, trial_config)
                if config.fault_inject and index == 0:
                    self._inject_fault(answer)
                report.mismatches = answer.mismatches(truth)
            except EncodingExhaustedError as e:
                logger.error(f"Instance {index} (seed={seed}) exhausted retries: {e}")
                report.error = str(e)
                report.mismatches = [(s, t, -1, truth.get(s, t)) for s, t in truth.pairs()]

            if report.mismatches:
                logger.warning(
                    f"Instance {index} (seed={seed}, n={n}, m={g.m}, k={k}): "
                    f"{len(report.mismatches)} mismatched pairs"
                )
            pairs_checked += pairs
            mismatched += len(report.mismatches)
            reports.append(report)

        rate = mismatched / pairs_checked if pairs_checked else 0.0
        passed = rate <= config.threshold
        logger.info(
            f"Verify {config.mode}: {config.instances} instances, {pairs_checked} pairs, "
            f"{mismatched} mismatches (rate {rate:.3g}), "
            f"{solver.singular_draws}/{solver.draws} singular draws"
        )
        return VerifyReport(
            mode=config.mode,
            prime=self.ctx.p,
            instances=config.instances,
            pairs_checked=pairs_checked,
            mismatched_pairs=mismatched,
            mismatch_rate=rate,
            threshold=config.threshold,
            passed=passed,
            draws=solver.draws,
            singular_draws=solver.singular_draws,
            instance_reports=reports,
        )
