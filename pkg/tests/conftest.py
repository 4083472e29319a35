"""Shared parameter sets: q in {0.3, 0.5, 0.7}, a = q^0.3, b = q^0.7, lambda = 1.1, mu = 1.3."""

import os

import pytest

os.environ.setdefault("QCHGE_PROGRESS", "0")

from src.connection import ConnectionContext  # noqa: E402
from src.models import QParam  # noqa: E402

SUITE_QS = (0.3, 0.5, 0.7)
ALPHA, BETA = 0.3, 0.7
LAMBDA, MU = 1.1, 1.3


@pytest.fixture(params=SUITE_QS, ids=lambda q: f"q={q}")
def qp(request):
    return QParam(request.param)


@pytest.fixture
def half():
    return QParam(0.5)


@pytest.fixture
def ab(half):
    return half.power(ALPHA), half.power(BETA)


@pytest.fixture
def ctx(qp):
    return ConnectionContext.build(qp.q, alpha=ALPHA, beta=BETA, lam=LAMBDA, mu=MU, qp=qp)


@pytest.fixture
def ctx_half(half):
    return ConnectionContext.build(half.q, alpha=ALPHA, beta=BETA, lam=LAMBDA, mu=MU, qp=half)
