#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
The base q and the q-spiral exclusion zones.
"""

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from src.config import settings
from src.errors import DomainError, ParameterError, SpiralError


@dataclass(frozen=True)
class QParam:
    """The base q with 0 < |q| < 1 plus its truncation policy.

    Validated once on construction; instances are immutable and hashable so they
    can be shared freely between threads.
    """
    q: complex
    eps: float = settings.eps
    max_terms: int = settings.max_terms
    guard: float = settings.guard

    def __post_init__(self):
        q = complex(self.q)
        if not (0.0 < abs(q) < 1.0):
            raise ParameterError(f"base q must satisfy 0 < |q| < 1, got q={q}")
        if not self.eps > 0:
            raise ParameterError(f"eps must be positive, got {self.eps}")
        if self.max_terms < 16:
            raise ParameterError(f"max_terms must be at least 16, got {self.max_terms}")
        if not self.guard > 0:
            raise ParameterError(f"guard must be positive, got {self.guard}")
        object.__setattr__(self, "q", q)

    @classmethod
    def from_env(cls, q: complex) -> "QParam":
        return cls(q=q, eps=settings.eps, max_terms=settings.max_terms, guard=settings.guard)

    @property
    def log_q(self) -> complex:
        """Principal logarithm of q."""
        return cmath.log(self.q)

    @property
    def abs_q(self) -> float:
        return abs(self.q)

    @property
    def is_real(self) -> bool:
        return self.q.imag == 0.0 and 0.0 < self.q.real < 1.0

    def power(self, alpha: complex) -> complex:
        """q**alpha on the principal branch, exp(alpha * log q)."""
        return cmath.exp(alpha * self.log_q)

    def exponent_of(self, a: complex) -> complex:
        """alpha with q**alpha = a (principal logarithms)."""
        if a == 0:
            raise DomainError("exponent of 0 is undefined")
        return cmath.log(a) / self.log_q

    def with_q(self, q: complex) -> "QParam":
        return QParam(q=q, eps=self.eps, max_terms=self.max_terms, guard=self.guard)


@dataclass(frozen=True)
class SpiralHit:
    anchor: complex
    label: str
    k: int
    distance: float


@dataclass(frozen=True)
class SpiralSet:
    """A finite union of q-spirals [lambda;q] = lambda * q^Z used as exclusion zones."""
    anchors: Tuple[complex, ...]
    guard: float = settings.guard
    labels: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        anchors = tuple(complex(a) for a in self.anchors)
        if any(a == 0 for a in anchors):
            raise ParameterError("spiral anchors must be non-zero")
        labels = tuple(self.labels) or tuple(f"[{a};q]" for a in anchors)
        if len(labels) != len(anchors):
            raise ParameterError("one label per spiral anchor is required")
        object.__setattr__(self, "anchors", anchors)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def of(cls, *anchors: complex, guard: float = settings.guard,
           labels: Optional[Sequence[str]] = None) -> "SpiralSet":
        return cls(anchors=tuple(anchors), guard=guard, labels=tuple(labels or ()))

    def nearest(self, qp: QParam, x: complex) -> Optional[SpiralHit]:
        """Closest spiral point to x, measured relative to |x|."""
        if x == 0:
            raise DomainError("spiral distance is undefined at x=0")
        log_abs_q = math.log(qp.abs_q)
        best = None
        for anchor, label in zip(self.anchors, self.labels):
            k0 = round(math.log(abs(x / anchor)) / log_abs_q)
            for k in (k0 - 1, k0, k0 + 1):
                point = anchor * qp.q ** k
                distance = abs(x - point) / abs(x)
                if best is None or distance < best.distance:
                    best = SpiralHit(anchor=anchor, label=label, k=k, distance=distance)
        return best

    def contains(self, qp: QParam, x: complex) -> bool:
        hit = self.nearest(qp, x)
        return hit is not None and hit.distance < self.guard

    def require_clear(self, qp: QParam, x: complex) -> None:
        """Raise SpiralError when x is within guard of any member spiral."""
        hit = self.nearest(qp, x)
        if hit is not None and hit.distance < self.guard:
            raise SpiralError(hit.label, hit.anchor, x, hit.distance)


def power_index(qp: QParam, a: complex) -> Optional[int]:
    """m in Z with a == q**m to within the guard, else None."""
    if a == 0:
        return None
    m = round(math.log(abs(a)) / math.log(qp.abs_q))
    if abs(a / qp.q ** m - 1.0) < qp.guard:
        return m
    return None


def negative_power_index(qp: QParam, a: complex) -> Optional[int]:
    """m >= 0 with a == q**(-m) to within the guard, else None."""
    m = power_index(qp, a)
    if m is not None and m <= 0:
        return -m
    return None
