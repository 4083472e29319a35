#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
`eval`: one function value at the given parameters.
"""

import logging
from typing import Callable, Dict

from src.cli.run_config import DEFAULT_LAMBDA, RunConfig
from src.connection import C_mu, C_mu_lambda, ConnectionContext, S_mu
from src.errors import ParameterError
from src.qcore import q_exp_E, q_gamma, qpoch_inf, qpoch_n, theta
from src.qseries import phi21_continued, u2_solution, v1_solution, v2_solution
from src.resummation import f20, f21_residue_sum, g_closed_form

logger = logging.getLogger(__name__)


def _context(cfg: RunConfig) -> ConnectionContext:
    qp = cfg.qp()
    a, b = cfg.exponent_pair(qp)
    return ConnectionContext.build(qp.q, a=a, b=b, lam=cfg.get("lambda", DEFAULT_LAMBDA),
                                   mu=cfg.require("mu"), qp=qp)


def _swap(cfg: RunConfig) -> bool:
    return bool(cfg.get("swap", 0))


def _with_ab(fn: Callable) -> Callable[[RunConfig], complex]:
    def evaluate(cfg: RunConfig) -> complex:
        qp = cfg.qp()
        a, b = cfg.exponent_pair(qp)
        return fn(cfg, qp, a, b)
    return evaluate


FUNCTIONS: Dict[str, Callable[[RunConfig], complex]] = {
    "theta": lambda cfg: theta(cfg.qp(), cfg.require("x")),
    "qpoch": lambda cfg: qpoch_n(cfg.require("a"), cfg.qp(), cfg.require("n")),
    "qpoch_inf": lambda cfg: qpoch_inf(cfg.require("a"), cfg.qp()),
    "phi21": lambda cfg: phi21_continued(cfg.require("a"), cfg.require("b"), cfg.get("c", 0),
                                         cfg.qp(), cfg.require("x")),
    "u2": _with_ab(lambda cfg, qp, a, b: u2_solution(a, b, qp, cfg.require("x"))),
    "v1": _with_ab(lambda cfg, qp, a, b: v1_solution(a, b, cfg.require("mu"), qp, cfg.require("x"))),
    "v2": _with_ab(lambda cfg, qp, a, b: v2_solution(a, b, cfg.require("mu"), qp, cfg.require("x"))),
    "f20": _with_ab(lambda cfg, qp, a, b: f20(a, b, cfg.require("lambda"), qp, cfg.require("x"))),
    "f21": _with_ab(lambda cfg, qp, a, b: f21_residue_sum(a, b, qp, cfg.require("x"))),
    "g": _with_ab(lambda cfg, qp, a, b: g_closed_form(a, b, qp, cfg.require("xi"))),
    "S": lambda cfg: S_mu(_context(cfg), _swap(cfg), cfg.require("x")),
    "C": lambda cfg: C_mu(_context(cfg), _swap(cfg), cfg.require("x")),
    "Clambda": lambda cfg: C_mu_lambda(_context(cfg), _swap(cfg), cfg.require("x")),
    "gamma_q": lambda cfg: q_gamma(cfg.qp(), cfg.require("x")),
    "E_q": lambda cfg: q_exp_E(cfg.qp(), cfg.require("z")),
}


def cmd_eval(cfg: RunConfig) -> complex:
    """Evaluate cfg.name; raises ParameterError for an unknown name or a missing parameter."""
    if cfg.name not in FUNCTIONS:
        raise ParameterError(f"unknown function {cfg.name!r}; choose from {sorted(FUNCTIONS)}")
    if cfg.name == "Clambda" and not cfg.has("lambda"):
        raise ParameterError("missing parameter 'lambda' for eval Clambda")
    value = complex(FUNCTIONS[cfg.name](cfg))
    logger.info(f"{cfg.name}({cfg.params}) = {value}")
    return value
