"""Connection coefficients, the connection matrix and point-level verification."""

import pytest

from src.connection import (
    C_mu, C_mu_lambda, ConnectionContext, S_mu, chge_residual, connection_matrix,
    ellipticity_check, equation_residual_report, halton_points, verify_theorem29,
    verify_three_way, verify_zhang, wronskian_check,
)
from src.errors import DegeneracyError, ParameterError, SpiralError
from src.models import QParam
from src.models.report import relative_difference
from src.qseries import v2_solution

X_COMPLEX = 2.6 + 0.4j


def test_build_requires_one_form_of_each_exponent(half):
    with pytest.raises(ParameterError):
        ConnectionContext.build(0.5, beta=0.7, qp=half)
    with pytest.raises(ParameterError):
        ConnectionContext.build(0.5, a=0.8, alpha=0.3, beta=0.7, qp=half)


def test_build_rejects_degenerate_parameters(half):
    with pytest.raises(DegeneracyError):
        ConnectionContext.build(0.5, alpha=0.3, beta=1.3, qp=half)
    with pytest.raises(ParameterError, match="terminate"):
        ConnectionContext.build(0.5, alpha=-2, beta=0.7, qp=half)
    with pytest.raises(ParameterError, match="theta"):
        ConnectionContext.build(0.5, alpha=0.3, beta=0.7, lam=-0.5, qp=half)
    with pytest.raises(ParameterError):
        ConnectionContext.build(0.5, alpha=0.3, beta=0.7, mu=0, qp=half)


def test_context_exponents_and_exclusions(ctx_half):
    assert ctx_half.alpha.real == pytest.approx(0.3)
    assert ctx_half.beta.real == pytest.approx(0.7)
    assert len(ctx_half.exclusions.anchors) == 9
    with pytest.raises(SpiralError, match="mu"):
        ctx_half.require_clear(-1.3 * 0.25)


def test_equation_residual_separates_solutions(ctx_half):
    assert chge_residual(lambda t: 0j, ctx_half, 1.5) == 0
    assert chge_residual(lambda t: 1, ctx_half, 1.5) > 1e-3


def test_solutions_at_infinity(ctx):
    for swap in (False, True):
        assert chge_residual(lambda t: S_mu(ctx, swap, t), ctx, 3.7) < 1e-10


def test_swapped_solution_is_v2(ctx_half):
    c = ctx_half
    assert S_mu(c, True, X_COMPLEX) == v2_solution(c.a, c.b, c.mu, c.qp, X_COMPLEX)


def test_coefficients_are_q_elliptic(ctx):
    for swap in (False, True):
        report = ellipticity_check(ctx, X_COMPLEX, swap)
        assert report.passed, (swap, report.notes, report.rel_diff)


def test_coefficient_times_solution_is_independent_of_mu(ctx_half):
    other = ctx_half.with_mu(0.9 * ctx_half.mu)
    for swap in (False, True):
        for coefficient in (C_mu, C_mu_lambda):
            lhs = coefficient(ctx_half, swap, X_COMPLEX) * S_mu(ctx_half, swap, X_COMPLEX)
            rhs = coefficient(other, swap, X_COMPLEX) * S_mu(other, swap, X_COMPLEX)
            assert relative_difference(lhs, rhs) < 1e-12


def test_connection_matrix_rows(ctx):
    matrix = connection_matrix(ctx, 2.6)
    assert matrix.passed, (matrix.row1.rel_diff, matrix.row2.rel_diff)
    assert matrix.entries.shape == (2, 2)


def test_connection_matrix_does_not_depend_on_mu(ctx_half):
    base = connection_matrix(ctx_half, 2.6)
    moved = connection_matrix(ctx_half.with_mu(0.9 * ctx_half.mu), 2.6)
    assert moved.passed
    for row in (0, 1):
        lhs = base.entries[row] @ base.solutions
        rhs = moved.entries[row] @ moved.solutions
        assert relative_difference(lhs, rhs) < 1e-9


def test_verify_zhang(ctx_half):
    report = verify_zhang(ctx_half, 0.8)
    assert report.passed, report.rel_diff
    with pytest.raises(SpiralError, match="lambda"):
        verify_zhang(ctx_half, -ctx_half.lam * ctx_half.q)


def test_u2_equals_residue_sum_at_sampled_points(ctx):
    for x in halton_points(5, ctx):
        report = verify_theorem29(ctx, x)
        assert report.passed, (x, report.rel_diff)


def test_three_way_agreement(ctx):
    for x in halton_points(5, ctx, r_max=3.0):
        report = verify_three_way(ctx, x)
        assert report.passed, (x, report.notes)


def test_solutions_at_infinity_are_independent(ctx):
    assert wronskian_check(ctx, X_COMPLEX).passed


@pytest.mark.parametrize("name", ["u2", "f20", "f21", "S_ab", "S_ba"])
def test_named_solution_residuals(ctx_half, name):
    report = equation_residual_report(ctx_half, name, 0.9 + 1.1j)
    assert report.passed, report.rel_diff


def test_halton_points_are_reproducible(ctx_half):
    first = halton_points(12, ctx_half)
    assert first == halton_points(12, ctx_half)
    assert all(0.2 <= abs(x) <= 5.0 for x in first)
    assert not any(ctx_half.exclusions.contains(ctx_half.qp, x) for x in first)
    assert halton_points(0, ctx_half) == []
    with pytest.raises(ParameterError):
        halton_points(3, ctx_half, r_min=2.0, r_max=1.0)


def test_context_with_complex_base():
    qp = QParam(0.5 * 1j ** 0.2)
    ctx = ConnectionContext.build(qp.q, alpha=0.3, beta=0.7, qp=qp)
    assert verify_theorem29(ctx, 0.6 + 0.2j).passed
