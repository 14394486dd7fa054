"""
Shared trial loop for the algebraic solvers: fresh randomness per trial,
bounded re-draws on singular encodings, per-pair vote across trials.
"""

import logging
from typing import Any, List, Optional

import numpy as np

from exceptions import EncodingExhaustedError, EncodingFailure, ParameterError
from helpers.field_helpers import FieldContext
from helpers.graph_helpers import Digraph
from utils.connectivity_utils import ConnectivityMatrix
from utils.seed_utils import TrialConfig

logger = logging.getLogger(__name__)


class ConnectivitySolver:
    """Base class; subclasses provide encode() and decode_all()."""

    mode = "abstract"

    def __init__(self, ctx: Optional[FieldContext] = None):
        self.ctx = ctx or FieldContext()
        self.draws = 0
        self.singular_draws = 0

    def encode(self, g: Digraph, k: int, rng: np.random.Generator) -> Any:
        raise NotImplementedError

    def decode_all(self, enc: Any) -> ConnectivityMatrix:
        raise NotImplementedError

    def prepare(self, g: Digraph, k: int) -> Digraph:
        return g

    def encode_with_retries(self, g: Digraph, k: int, config: TrialConfig, trial: int) -> Any:
        """
        Encode, re-drawing randomness on singular draws

        Raises:
            EncodingExhaustedError after config.max_retries singular draws
        """
        for attempt in range(config.max_retries):
            self.draws += 1
            try:
                return self.encode(g, k, config.rng(trial, attempt))
            except EncodingFailure as e:
                self.singular_draws += 1
                logger.warning(
                    f"{self.mode} encoding singular (seed={config.seed}, trial={trial}, "
                    f"attempt={attempt}): {e}"
                )
        raise EncodingExhaustedError(
            f"{self.mode} encoding singular on all {config.max_retries} draws "
            f"(seed={config.seed}, trial={trial})",
            attempts=config.max_retries,
        )

    def solve_all_pairs(
        self, g: Digraph, k: int, config: Optional[TrialConfig] = None
    ) -> ConnectivityMatrix:
        """
        Run config.trials independent encodings and vote per pair

        Args:
            g: Input digraph
            k: Connectivity bound
            config: Seed, trial count and retry policy

        Returns:
            ConnectivityMatrix with min(k, connectivity) off the diagonal
        """
        if k < 1:
            raise ParameterError(f"k must be >= 1, got {k}")
        config = config or TrialConfig()
        prepared = self.prepare(g, k)
        if g.n < 2:
            return ConnectivityMatrix.empty(g.n, k)

        results: List[ConnectivityMatrix] = []
        for trial in range(config.trials):
            enc = self.encode_with_retries(prepared, k, config, trial)
            results.append(self.decode_all(enc))
            logger.debug(f"{self.mode} trial {trial + 1}/{config.trials} decoded")

        if len(results) == 1:
            return results[0]
        return ConnectivityMatrix.majority(results)
