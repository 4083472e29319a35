#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Analytic continuation of 2_phi_1(a,b;c;q,y) beyond the unit disk.

The series is summed where |y| <= 0.5 and carried outward along the lattice
y q^j with the q-hypergeometric equation solved for u(x):

    u(x) = [{c + q - (a+b) q x} u(qx) - (c - abq x) u(q^2 x)] / (q (1 - x))

The denominator vanishes on [1;q], where the continuation has its poles.
"""

import math
import logging
from typing import Dict

from src.errors import SpiralError
from src.models import HypParams, QParam, SpiralSet
from src.qseries.basic import phi_rs, terminating_order

logger = logging.getLogger(__name__)

DIRECT_RADIUS = 0.5


class Phi21Lattice:
    """Values of 2_phi_1(a,b;c;q,.) on the lattice base * q^n, cached by n.

    Used both for single-point continuation and for the q-Laplace lattice sums,
    which visit consecutive lattice points.
    """

    def __init__(self, a: complex, b: complex, c: complex, qp: QParam, base: complex,
                 extra_steps: int = 0):
        self.params = HypParams(upper=(a, b), lower=(c,), qp=qp)
        self.a, self.b, self.c = complex(a), complex(b), complex(c)
        self.qp = qp
        self.base = complex(base)
        self.extra_steps = extra_steps
        self.terminating = any(terminating_order(p, qp) is not None for p in (a, b))
        self.poles = SpiralSet.of(1, guard=qp.guard, labels=["[1;q]"])
        self._cache: Dict[int, complex] = {}

    def point(self, n: int) -> complex:
        return self.base * self.qp.q ** n

    def _direct_index(self, n: int) -> int:
        """Smallest m >= n with |base q^m| <= DIRECT_RADIUS, plus extra steps."""
        size = abs(self.point(n))
        if size <= DIRECT_RADIUS:
            return n
        k = math.ceil(math.log(size / DIRECT_RADIUS) / -math.log(self.qp.abs_q))
        m = n + k
        while abs(self.point(m)) > DIRECT_RADIUS:
            m += 1
        return m + self.extra_steps

    def _direct(self, n: int) -> complex:
        if n not in self._cache:
            self._cache[n] = phi_rs(self.params, self.point(n))
        return self._cache[n]

    def _check_pole(self, x: complex) -> None:
        hit = self.poles.nearest(self.qp, x)
        if hit.k <= 0 and hit.distance < self.qp.guard:
            raise SpiralError("[1;q]", 1, x, hit.distance)

    def at(self, n: int) -> complex:
        """2_phi_1 continued to base * q^n."""
        if n in self._cache:
            return self._cache[n]
        if self.terminating:
            return self._direct(n)
        m = self._direct_index(n)
        if m == n:
            return self._direct(n)
        self._direct(m)
        self._direct(m + 1)
        a, b, c, q = self.a, self.b, self.c, self.qp.q
        steps = 0
        for j in range(m - 1, n - 1, -1):
            if j in self._cache:
                continue
            x = self.point(j)
            self._check_pole(x)
            u1, u2 = self._cache[j + 1], self._cache[j + 2]
            self._cache[j] = ((c + q - (a + b) * q * x) * u1 - (c - a * b * q * x) * u2) / (q * (1 - x))
            steps += 1
        if steps:
            logger.debug(f"2phi1 continuation to {self.point(n)}: {steps} recurrence steps")
        return self._cache[n]


def phi21_continued(a: complex, b: complex, c: complex, qp: QParam, y: complex,
                    extra_steps: int = 0) -> complex:
    """2_phi_1(a,b;c;q,y) for any y off the pole spiral [1;q].

    Args:
        extra_steps: additional reduction steps beyond the minimum (path-independence checks)
    """
    return Phi21Lattice(a, b, c, qp, y, extra_steps=extra_steps).at(0)


def phi21_c0_continued(a: complex, b: complex, qp: QParam, y: complex,
                       extra_steps: int = 0) -> complex:
    """Continuation of 2_phi_1(a,b;0;q,y), the series behind u2 and the Borel image of u1."""
    return phi21_continued(a, b, 0, qp, y, extra_steps=extra_steps)
