"""
Roman Domination Engine
Runtime configuration loaded from the environment (and an optional .env file).
"""

import os
from dataclasses import dataclass, replace

from dotenv import load_dotenv

from .exceptions import ParameterError

# Load environment variables
load_dotenv()

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        return int(raw)
    except ValueError as e:
        raise ParameterError(f"{name} must be an integer, got {raw!r}") from e


@dataclass(frozen=True)
class Settings:
    """Engine defaults; CLI flags override individual fields via `override`."""
    seed: int = 0
    jobs: int = 1
    time_budget_ms: int = 0  # 0 = unlimited
    witness_cap: int = 24
    log_level: str = "INFO"

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            seed=_int_env('ROMAN_SEED', 0),
            jobs=max(1, _int_env('ROMAN_JOBS', 1)),
            time_budget_ms=max(0, _int_env('ROMAN_TIME_BUDGET_MS', 0)),
            witness_cap=_int_env('ROMAN_WITNESS_CAP', 24),
            log_level=os.getenv('ROMAN_LOG_LEVEL', 'INFO').upper(),
        )

    def override(self, **changes) -> "Settings":
        """Return a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    @property
    def time_budget_s(self):
        return self.time_budget_ms / 1000.0 if self.time_budget_ms > 0 else None


def get_settings() -> Settings:
    return Settings.from_env()
