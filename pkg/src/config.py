# DESTRUCTIVE SHIFT BRIBERY
# ***
# Configuration
# Copy .env.example to .env and customize the settings.

import os
from fractions import Fraction
from functools import lru_cache

import dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator


class Settings(BaseModel):
    """Solver limits and defaults read from the environment."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    log_level: str = "WARNING"
    # Largest total score for which the score-deficit DP is used.
    score_bound: int = Field(default=1_000_000, ge=1)
    node_limit: int = Field(default=2_000_000, ge=1)
    oracle_node_cap: int = Field(default=5_000_000, ge=1)
    fpt_enumeration_limit: int = Field(default=1_000_000, ge=1)
    fpt_max_voters: int = Field(default=20, ge=1)
    copeland_alpha: Fraction = Fraction(1, 2)
    jobs: int = Field(default=1, ge=1)

    @field_validator("copeland_alpha", mode="before")
    @classmethod
    def _parse_alpha(cls, value):
        alpha = Fraction(value) if not isinstance(value, Fraction) else value
        if not 0 <= alpha <= 1:
            raise ValueError(f"Copeland alpha must lie in [0, 1], got {alpha}")
        return alpha

    @field_validator("log_level")
    @classmethod
    def _upper(cls, value: str) -> str:
        return value.upper()


_ENV_KEYS = {
    "log_level": "SHIFT_BRIBERY_LOG_LEVEL",
    "score_bound": "SHIFT_BRIBERY_SCORE_BOUND",
    "node_limit": "SHIFT_BRIBERY_NODE_LIMIT",
    "oracle_node_cap": "SHIFT_BRIBERY_ORACLE_NODE_CAP",
    "fpt_enumeration_limit": "SHIFT_BRIBERY_FPT_ENUMERATION_LIMIT",
    "fpt_max_voters": "SHIFT_BRIBERY_FPT_MAX_VOTERS",
    "copeland_alpha": "SHIFT_BRIBERY_COPELAND_ALPHA",
    "jobs": "SHIFT_BRIBERY_JOBS",
}


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    """
    Build the settings from ``SHIFT_BRIBERY_*`` environment variables.

    A ``.env`` file in the working directory is loaded first; variables
    already present in the environment take precedence.
    """
    dotenv.load_dotenv()
    values = {
        field: os.getenv(key)
        for field, key in _ENV_KEYS.items()
        if os.getenv(key) is not None
    }
    return Settings(**values)
