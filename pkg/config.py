"""
Runtime settings
Reads environment (optionally from .env) into validated pydantic models
"""

import os
import logging
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, field_validator

from helpers.field_helpers import DEFAULT_PRIME, FieldHelpers

logger = logging.getLogger(__name__)

Mode = Literal["edge", "vertex", "oracle-edge", "oracle-vertex"]

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Settings(BaseModel):
    """Process-wide defaults taken from the environment"""

    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 1
    max_retries: int = 20
    log_level: str = "INFO"
    verify_threshold: float = 0.0
    allowed_origins: list[str] = []


def load_settings() -> Settings:
    """
    Load settings from the environment

    Returns:
        Settings populated from KAPC_* variables, defaults otherwise
    """
    load_dotenv()

    origins = os.getenv("ALLOWED_ORIGINS", "")
    settings = Settings(
        prime=int(os.getenv("KAPC_PRIME", str(DEFAULT_PRIME))),
        seed=int(os.getenv("KAPC_SEED", "0")),
        trials=int(os.getenv("KAPC_TRIALS", "1")),
        max_retries=int(os.getenv("KAPC_MAX_RETRIES", "20")),
        log_level=os.getenv("KAPC_LOG_LEVEL", "INFO").upper(),
        verify_threshold=float(os.getenv("KAPC_VERIFY_THRESHOLD", "0.0")),
        allowed_origins=[o.strip() for o in origins.split(",") if o.strip()],
    )
    return settings


def configure_logging(level: str = "INFO") -> None:
    """Configure root logging once; logs go to stderr"""
    logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO), format=LOG_FORMAT)


class RunConfig(BaseModel):
    """Parameters of a single solve / oracle run"""

    mode: Mode = "edge"
    k: int
    seed: int = 0
    prime: int = DEFAULT_PRIME
    trials: int = 1
    max_retries: int = 20
    input_path: Optional[str] = None
    output_path: Optional[str] = None

    @field_validator("k")
    @classmethod
    def _k_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("k must be >= 1")
        return value

    @field_validator("seed")
    @classmethod
    def _seed_nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("seed must be >= 0")
        return value

    @field_validator("trials")
    @classmethod
    def _trials_odd(cls, value: int) -> int:
        if value < 1 or value % 2 == 0:
            raise ValueError("trials must be an odd integer >= 1")
        return value

    @field_validator("prime")
    @classmethod
    def _prime_is_prime(cls, value: int) -> int:
        FieldHelpers.check_prime(value)
        return value

    @field_validator("max_retries")
    @classmethod
    def _retries_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("max_retries must be >= 1")
        return value


class VerifyConfig(BaseModel):
    """Parameters of a randomized verification sweep"""

    mode: Literal["edge", "vertex"] = "edge"
    instances: int = 200
    min_n: int = 2
    max_n: int = 8
    max_m: int = 20
    max_k: int = 4
    seed: int = 0
    prime: int = DEFAULT_PRIME
    trials: int = 1
    max_retries: int = 20
    threshold: float = 0.0
    fault_inject: bool = False

    @field_validator("prime")
    @classmethod
    def _prime_is_prime(cls, value: int) -> int:
        FieldHelpers.check_prime(value)
        return value

    @field_validator("seed")
    @classmethod
    def _seed_nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("seed must be >= 0")
        return value

    @field_validator("trials")
    @classmethod
    def _trials_odd(cls, value: int) -> int:
        if value < 1 or value % 2 == 0:
            raise ValueError("trials must be an odd integer >= 1")
        return value

    @field_validator("min_n")
    @classmethod
    def _min_n(cls, value: int) -> int:
        if value < 2:
            raise ValueError("min_n must be >= 2")
        return value

    @field_validator("max_retries")
    @classmethod
    def _retries_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("max_retries must be >= 1")
        return value
