from .run_config import RunConfig, parse_params, parse_q_sequence, parse_number
from .evaluate import cmd_eval, FUNCTIONS
from .suites import SUITES
from .commands import (
    cmd_verify, cmd_scan, run, render_reports, render_scan, render_value,
    EXIT_OK, EXIT_FAILED, EXIT_ERROR,
)

__all__ = [
    'RunConfig', 'parse_params', 'parse_q_sequence', 'parse_number',
    'cmd_eval', 'FUNCTIONS', 'SUITES',
    'cmd_verify', 'cmd_scan', 'run', 'render_reports', 'render_scan', 'render_value',
    'EXIT_OK', 'EXIT_FAILED', 'EXIT_ERROR',
]
