from .qparam import QParam, SpiralSet, SpiralHit, power_index, negative_power_index
from .series import FormalSeries, HypParams
from .report import (
    VerificationReport, ScanTable, ScanRow, encode_value, decode_value, fmt_float,
)

__all__ = [
    'QParam', 'SpiralSet', 'SpiralHit', 'power_index', 'negative_power_index',
    'FormalSeries', 'HypParams',
    'VerificationReport', 'ScanTable', 'ScanRow', 'encode_value', 'decode_value', 'fmt_float',
]
