#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Runtime settings read from the environment (optionally via a .env file).
"""

import os
import logging
from dataclasses import dataclass

from dotenv import load_dotenv

from src.errors import ConfigError

load_dotenv()

logger = logging.getLogger(__name__)


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from None


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Settings:
    eps: float = 1e-14
    max_terms: int = 10000
    guard: float = 1e-6
    quad_max_nodes: int = 65536
    log_level: str = "WARNING"
    progress: bool = True


def load_settings() -> Settings:
    """Read QCHGE_* variables, falling back to the documented defaults."""
    settings = Settings(
        eps=_env_float("QCHGE_EPS", 1e-14),
        max_terms=_env_int("QCHGE_MAX_TERMS", 10000),
        guard=_env_float("QCHGE_GUARD", 1e-6),
        quad_max_nodes=_env_int("QCHGE_QUAD_MAX_NODES", 65536),
        log_level=os.getenv("QCHGE_LOG_LEVEL", "WARNING").upper(),
        progress=os.getenv("QCHGE_PROGRESS", "1").strip() not in ("0", "false", "no"),
    )
    logger.debug(f"Loaded settings: {settings}")
    return settings


settings = load_settings()
