from .special import (
    gamma_classical, hyp1f1, hyp1f1_residual, hyp2f0_asymptotic, AsymptoticValue,
)
from .scans import (
    LimitScanConfig, ConnectionLimitScan, limit_qparam, w_normalization, log_w_normalization,
    theta_ratio_limit_scan, gamma_q_limit_scan, exp_q_limit_scan, limit_scan_zhang,
    limit_scan_thm33, zhang_classical, connection_classical, asymptotic_classical,
)

__all__ = [
    'gamma_classical', 'hyp1f1', 'hyp1f1_residual', 'hyp2f0_asymptotic', 'AsymptoticValue',
    'LimitScanConfig', 'ConnectionLimitScan', 'limit_qparam', 'w_normalization',
    'log_w_normalization', 'theta_ratio_limit_scan', 'gamma_q_limit_scan', 'exp_q_limit_scan',
    'limit_scan_zhang', 'limit_scan_thm33', 'zhang_classical', 'connection_classical',
    'asymptotic_classical',
]
