from .context import ConnectionContext, halton_points
from .coefficients import (
    chge_residual, S_mu, C_mu_lambda, C_mu, ConnectionMatrix, connection_matrix,
)
from .verify import (
    verify_zhang, verify_theorem29, verify_three_way, wronskian_check, ellipticity_check,
    equation_residual_report,
)

__all__ = [
    'ConnectionContext', 'halton_points',
    'chge_residual', 'S_mu', 'C_mu_lambda', 'C_mu', 'ConnectionMatrix', 'connection_matrix',
    'verify_zhang', 'verify_theorem29', 'verify_three_way', 'wronskian_check',
    'ellipticity_check', 'equation_residual_report',
]
