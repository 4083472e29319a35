#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
CLI entry point for evaluating q-confluent hypergeometric functions,
verifying their connection identities and scanning q -> 1-0 limits.

Examples:
    python qverify.py --command eval --identity theta --param q=0.5 --param x=1
    python qverify.py --command verify --identity thm2_9 --format csv
    python qverify.py --command scan --identity gamma_q --param x=0.5
"""

import sys
import logging
import argparse

from dotenv import load_dotenv

load_dotenv()

from src.config import settings  # noqa: E402
from src.errors import ConfigError  # noqa: E402
from src.cli import RunConfig, run, EXIT_ERROR  # noqa: E402
from src.cli.evaluate import FUNCTIONS  # noqa: E402
from src.cli.suites import SUITES  # noqa: E402

logging.basicConfig(
    level=getattr(logging, settings.log_level, logging.WARNING),
    format='%(asctime)s [%(levelname)s] %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
)
logger = logging.getLogger(__name__)

SCANS = ('gamma_q', 'E_q', 'theta_ratio', 'zhang', 'thm33')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Evaluate, verify and scan the q-confluent hypergeometric connection formulas'
    )
    parser.add_argument('--command', '-c', required=True, choices=['eval', 'verify', 'scan'],
                        help='What to run')
    parser.add_argument('--identity', '-n', required=True,
                        help=f"Function (eval: {', '.join(sorted(FUNCTIONS))}), "
                             f"identity (verify: {', '.join(SUITES)}) "
                             f"or scan ({', '.join(SCANS)})")
    parser.add_argument('--param', '-p', action='append', default=[],
                        help='Parameter as key=value (repeatable), e.g. q=0.5, alpha=0.3, x=1+2j')
    parser.add_argument('--q-seq', default=None,
                        help='Comma-separated increasing q values for scans (default 0.5,0.9,0.95,0.99)')
    parser.add_argument('--tol', type=float, default=None,
                        help='Override the identity or scan tolerance')
    parser.add_argument('--format', choices=['json', 'csv'], default='json',
                        help='Output format (default: json)')
    parser.add_argument('--out', '-o', default=None, help='Write output to this path instead of stdout')
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
    except ConfigError as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_ERROR
    logger.info(f"Running {cfg.command} {cfg.name} with {cfg.params}")
    return run(cfg)


if __name__ == '__main__':
    sys.exit(main())
