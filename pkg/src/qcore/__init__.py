from .products import (
    truncated_sum, qpoch_n, log_qpoch_inf, qpoch_inf, log_qpoch_multi, qpoch_multi,
)
from .theta import theta, log_theta, theta_parts, theta_product, theta_ratio, theta_zeros
from .functions import q_gamma, q_exp_E, q_exp_E_series, q_exp_e, q_derivative, spiral_guard

__all__ = [
    'truncated_sum', 'qpoch_n', 'log_qpoch_inf', 'qpoch_inf', 'log_qpoch_multi', 'qpoch_multi',
    'theta', 'log_theta', 'theta_parts', 'theta_product', 'theta_ratio', 'theta_zeros',
    'q_gamma', 'q_exp_E', 'q_exp_E_series', 'q_exp_e', 'q_derivative', 'spiral_guard',
]
