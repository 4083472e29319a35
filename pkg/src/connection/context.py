#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Parameters of one connection problem and the spirals its formulas exclude.
"""

import math
import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Optional

import numpy as np
from scipy.stats import qmc

from src.errors import ParameterError
from src.models import QParam, SpiralSet, power_index
from src.qseries import terminating_order
from src.resummation import require_generic_exponents

logger = logging.getLogger(__name__)

ORIGIN = "[1;q]"
LAMBDA = "[-lambda;q]"
MU = "[-mu;q]"
MU_OVER_A = "[-mu/a;q]"
MU_OVER_B = "[-mu/b;q]"
THETA_MU = "[-1/mu;q]"
THETA_A_MU = "[-1/(a mu);q]"
THETA_B_MU = "[-1/(b mu);q]"
INFINITY_POLES = "[1/(ab);q]"


@dataclass(frozen=True)
class ConnectionContext:
    """a = q^alpha, b = q^beta, the directions lambda and mu, and the exclusion zones.

    The exclusion set holds the union named by the connection theorem
    ([1;q], [-mu/a;q], [-lambda;q], [-mu;q]) together with the zero spirals of
    every theta denominator that the coefficient functions divide by.
    """
    a: complex
    b: complex
    lam: complex
    mu: complex
    qp: QParam
    anchors: Dict[str, complex]

    @classmethod
    def build(cls, q: complex, a: Optional[complex] = None, b: Optional[complex] = None,
              alpha: Optional[complex] = None, beta: Optional[complex] = None,
              lam: complex = 1.1, mu: complex = 1.3, qp: Optional[QParam] = None,
              allow_terminating: bool = False) -> "ConnectionContext":
        """Validate the parameters and assemble the exclusion anchors.

        Exactly one of a/alpha and one of b/beta must be given.
        """
        qp = qp or QParam.from_env(q)
        a = _resolve(qp, "a", a, alpha)
        b = _resolve(qp, "b", b, beta)
        lam, mu = complex(lam), complex(mu)
        if lam == 0 or mu == 0:
            raise ParameterError("lambda and mu must be non-zero")
        require_generic_exponents(a, b, qp)
        if not allow_terminating:
            for name, value in (("a", a), ("b", b)):
                m = terminating_order(value, qp)
                if m is not None:
                    raise ParameterError(f"{name} = q^-{m} makes the solutions terminate")
        if power_index(qp, -lam) is not None:
            raise ParameterError(f"theta(lambda) vanishes for lambda={lam}")
        anchors = {
            ORIGIN: 1 + 0j,
            MU_OVER_A: -mu / a,
            MU_OVER_B: -mu / b,
            LAMBDA: -lam,
            MU: -mu,
            THETA_MU: -1 / mu,
            THETA_A_MU: -1 / (a * mu),
            THETA_B_MU: -1 / (b * mu),
            INFINITY_POLES: 1 / (a * b),
        }
        ctx = cls(a=a, b=b, lam=lam, mu=mu, qp=qp, anchors=anchors)
        logger.debug(f"Built connection context a={a} b={b} lambda={lam} mu={mu} q={qp.q}")
        return ctx

    @property
    def q(self) -> complex:
        return self.qp.q

    @property
    def alpha(self) -> complex:
        return self.qp.exponent_of(self.a)

    @property
    def beta(self) -> complex:
        return self.qp.exponent_of(self.b)

    @property
    def exclusions(self) -> SpiralSet:
        return self.spirals(*self.anchors)

    def spirals(self, *labels: str) -> SpiralSet:
        return SpiralSet.of(*(self.anchors[l] for l in labels), guard=self.qp.guard,
                            labels=list(labels))

    def require_clear(self, x: complex, *labels: str) -> None:
        """SpiralError naming the first listed spiral that x lies on (all when none listed)."""
        self.spirals(*(labels or tuple(self.anchors))).require_clear(self.qp, x)

    def with_mu(self, mu: complex) -> "ConnectionContext":
        return ConnectionContext.build(self.q, a=self.a, b=self.b, lam=self.lam, mu=mu,
                                       qp=self.qp, allow_terminating=True)

    def params(self) -> Dict[str, complex]:
        return {"q": self.q, "a": self.a, "b": self.b, "lambda": self.lam, "mu": self.mu}


def _resolve(qp: QParam, name: str, value: Optional[complex],
             exponent: Optional[complex]) -> complex:
    if (value is None) == (exponent is None):
        raise ParameterError(f"give exactly one of {name} and its exponent")
    if value is None:
        value = qp.power(exponent)
    value = complex(value)
    if value == 0:
        raise ParameterError(f"{name} must be non-zero")
    return value


def halton_points(n: int, ctx: ConnectionContext, r_min: float = 0.2, r_max: float = 5.0,
                  sample_guard: float = 1e-2) -> List[complex]:
    """n reproducible points in r_min <= |x| <= r_max away from every exclusion spiral.

    Modulus is log-uniform and argument uniform along an unscrambled 2-d Halton
    sequence; points closer than sample_guard (relative) to a spiral are skipped.
    """
    if n <= 0:
        return []
    if not 0 < r_min < r_max:
        raise ParameterError(f"need 0 < r_min < r_max, got {r_min}, {r_max}")
    sampler = qmc.Halton(d=2, scramble=False)
    sampler.fast_forward(1)  # skip the origin of the unit square
    spirals = replace(ctx.exclusions, guard=sample_guard)
    points: List[complex] = []
    draws = 0
    while len(points) < n:
        batch = sampler.random(max(2 * n, 16))
        draws += len(batch)
        radius = r_min * np.power(r_max / r_min, batch[:, 0])
        angle = 2 * math.pi * batch[:, 1]
        for x in radius * np.exp(1j * angle):
            x = complex(x)
            if not spirals.contains(ctx.qp, x):
                points.append(x)
                if len(points) == n:
                    break
        if draws > 1000 * n:
            raise ParameterError("exclusion spirals leave no admissible sample points")
    logger.debug(f"Sampled {n} admissible points from {draws} Halton draws")
    return points
