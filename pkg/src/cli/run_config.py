#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Parsed command-line request: which command, which target, which parameters.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.errors import ConfigError, ParameterError
from src.models import QParam

COMMANDS = ("eval", "verify", "scan")
FORMATS = ("json", "csv")
INTEGER_PARAMS = {"n", "k", "m", "l", "order", "swap", "nodes"}

DEFAULT_QS = (0.3, 0.5, 0.7)
DEFAULT_ALPHA = 0.3
DEFAULT_BETA = 0.7
DEFAULT_LAMBDA = 1.1
DEFAULT_MU = 1.3


def parse_number(raw: str) -> complex:
    """Accept '0.5', '1e-3', '1+2j' and '0.04i'."""
    text = raw.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(text)
    except ValueError:
        raise ConfigError(f"not a number: {raw!r}") from None


def parse_params(pairs: Sequence[str]) -> Dict[str, Any]:
    """key=value pairs; integer-valued keys stay ints, everything else is complex."""
    params: Dict[str, Any] = {}
    for pair in pairs:
        if "=" not in pair:
            raise ConfigError(f"--param expects key=value, got {pair!r}")
        key, raw = pair.split("=", 1)
        key = key.strip()
        if key in INTEGER_PARAMS:
            try:
                params[key] = int(raw)
            except ValueError:
                raise ConfigError(f"parameter {key} must be an integer, got {raw!r}") from None
        else:
            params[key] = parse_number(raw)
    return params


def parse_q_sequence(raw: Optional[str]) -> Optional[Tuple[float, ...]]:
    if raw is None:
        return None
    values = []
    for part in raw.split(","):
        value = parse_number(part)
        if value.imag != 0:
            raise ConfigError(f"--q-seq values must be real, got {part!r}")
        values.append(value.real)
    return tuple(values)


@dataclass
class RunConfig:
    command: str
    name: str
    params: Dict[str, Any] = field(default_factory=dict)
    q_sequence: Optional[Tuple[float, ...]] = None
    tolerance: Optional[float] = None
    output_format: str = "json"
    out: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}; expected one of {COMMANDS}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"unknown format {self.output_format!r}; expected one of {FORMATS}")
        if self.tolerance is not None and not self.tolerance > 0:
            raise ConfigError(f"--tol must be positive, got {self.tolerance}")

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(
            command=args.command,
            name=args.identity or "",
            params=parse_params(args.param or []),
            q_sequence=parse_q_sequence(args.q_seq),
            tolerance=args.tol,
            output_format=args.format,
            out=args.out,
        )

    def has(self, key: str) -> bool:
        return key in self.params

    def get(self, key: str, default: Any = None) -> Any:
        return self.params.get(key, default)

    def require(self, key: str) -> Any:
        if key not in self.params:
            raise ParameterError(f"missing parameter '{key}' for {self.command} {self.name}")
        return self.params[key]

    def qp(self) -> QParam:
        return QParam.from_env(self.require("q"))

    def qps(self) -> List[QParam]:
        """The given q, or the default suite set."""
        if self.has("q"):
            return [self.qp()]
        return [QParam.from_env(q) for q in DEFAULT_QS]

    def exponent_pair(self, qp: QParam, defaults: bool = False) -> Tuple[complex, complex]:
        """(a, b) from a/b or alpha/beta; suites fall back to alpha=0.3, beta=0.7."""
        def one(value_key: str, exponent_key: str, default: float) -> complex:
            if self.has(value_key):
                return complex(self.params[value_key])
            if self.has(exponent_key) or not defaults:
                return qp.power(self.require(exponent_key))
            return qp.power(default)
        return one("a", "alpha", DEFAULT_ALPHA), one("b", "beta", DEFAULT_BETA)

    def tolerance_kwargs(self) -> Dict[str, float]:
        return {} if self.tolerance is None else {"tolerance": self.tolerance}
