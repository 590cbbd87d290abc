from __future__ import annotations

import os
from dataclasses import dataclass
from dotenv import load_dotenv

load_dotenv()

LCM_MODES = ("auto", "presentation", "enumerate")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Settings:
    max_matrix_size: int
    rewrite_fuel: int
    validate_degree: int
    lcm_mode: str
    lcm_degree_slack: int
    ann_oracle: bool
    oracle_interval: int
    oracle_degree: int
    zerodivisor_sample_degree: int
    show_progress: bool
    log_level: str


def _bool_env(name: str, default: bool = True) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() not in {"0", "false", "no", "off"}


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def load_settings() -> Settings:
    lcm_mode = os.getenv("PASL_LCM_MODE", "auto").strip().lower()
    if lcm_mode not in LCM_MODES:
        raise ConfigError(f"PASL_LCM_MODE must be one of {LCM_MODES}, got {lcm_mode!r}")
    return Settings(
        max_matrix_size=_int_env("PASL_MAX_MATRIX_SIZE", 4, minimum=1),
        rewrite_fuel=_int_env("PASL_REWRITE_FUEL", 1_000_000, minimum=1),
        validate_degree=_int_env("PASL_VALIDATE_DEGREE", 3, minimum=2),
        lcm_mode=lcm_mode,
        lcm_degree_slack=_int_env("PASL_LCM_DEGREE_SLACK", 0),
        ann_oracle=_bool_env("PASL_ANN_ORACLE", True),
        oracle_interval=_int_env("PASL_ORACLE_INTERVAL", 64, minimum=1),
        oracle_degree=_int_env("PASL_ORACLE_DEGREE", 6, minimum=1),
        zerodivisor_sample_degree=_int_env("PASL_ZERODIVISOR_DEGREE", 3, minimum=1),
        show_progress=_bool_env("PASL_SHOW_PROGRESS", False),
        log_level=os.getenv("LOG_LEVEL", "INFO").upper(),
    )


SETTINGS = load_settings()

MAX_MATRIX_SIZE = SETTINGS.max_matrix_size
REWRITE_FUEL = SETTINGS.rewrite_fuel
VALIDATE_DEGREE = SETTINGS.validate_degree
LCM_MODE = SETTINGS.lcm_mode
LCM_DEGREE_SLACK = SETTINGS.lcm_degree_slack
ANN_ORACLE = SETTINGS.ann_oracle
ORACLE_INTERVAL = SETTINGS.oracle_interval
ORACLE_DEGREE = SETTINGS.oracle_degree
ZERODIVISOR_SAMPLE_DEGREE = SETTINGS.zerodivisor_sample_degree
SHOW_PROGRESS = SETTINGS.show_progress
LOG_LEVEL = SETTINGS.log_level
