"""Utils package: answer tables and seed derivation."""

from .connectivity_utils import ConnectivityMatrix
from .seed_utils import TrialConfig, derive_rng, derive_seed

__all__ = ["ConnectivityMatrix", "TrialConfig", "derive_rng", "derive_seed"]
