#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command dispatch and deterministic rendering of results.

run() is the single place where library errors become exit codes:
0 when everything passes, 1 on a tolerance failure, 2 on any QSeriesError.
"""

import csv
import io
import json
import logging
from typing import Any, Dict, List, Tuple

from src.classical_limit import (
    LimitScanConfig, exp_q_limit_scan, gamma_q_limit_scan, limit_scan_thm33,
    limit_scan_zhang, theta_ratio_limit_scan,
)
from src.cli.evaluate import cmd_eval
from src.cli.run_config import RunConfig
from src.cli.suites import SUITES
from src.errors import ParameterError, QSeriesError
from src.models import ScanTable, VerificationReport, encode_value, fmt_float

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

REPORT_COLUMNS = ["identity", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
                  "abs_diff", "rel_diff", "tolerance", "pass", "notes"]


def cmd_verify(cfg: RunConfig) -> List[VerificationReport]:
    if cfg.name not in SUITES:
        raise ParameterError(f"unknown identity {cfg.name!r}; choose from {sorted(SUITES)}")
    reports = SUITES[cfg.name](cfg)
    failed = sum(not r.passed for r in reports)
    logger.info(f"verify {cfg.name}: {len(reports) - failed}/{len(reports)} passed")
    return reports


def _scan_config(cfg: RunConfig, asymptotic: bool = False,
                 with_point: bool = True) -> LimitScanConfig:
    """LimitScanConfig from the request; scans with their own point skip z, alpha and beta."""
    overrides: Dict[str, Any] = {}
    for key, field_name in (("alpha", "alpha"), ("beta", "beta"), ("z", "z"), ("lambda", "lam"),
                            ("z2", "z_convergent")):
        if with_point and cfg.has(key):
            overrides[field_name] = cfg.params[key]
    if cfg.q_sequence is not None:
        overrides["q_sequence"] = cfg.q_sequence
    if cfg.tolerance is not None:
        overrides["tolerance"] = cfg.tolerance
    if asymptotic:
        return LimitScanConfig.for_asymptotics(**overrides)
    return LimitScanConfig(**overrides)


def cmd_scan(cfg: RunConfig) -> Tuple[List[ScanTable], List[VerificationReport]]:
    """Run one limit scan; returns its tables and any extra reports."""
    name = cfg.name
    if name == "gamma_q":
        return [gamma_q_limit_scan(cfg.get("x", 0.5), _scan_config(cfg, with_point=False))], []
    if name == "E_q":
        return [exp_q_limit_scan(cfg.get("z", 1.0), _scan_config(cfg, with_point=False))], []
    if name == "theta_ratio":
        return [theta_ratio_limit_scan(cfg.get("gamma", 0.3), cfg.get("u", 2.0),
                                       _scan_config(cfg, with_point=False))], []
    if name == "zhang":
        return [limit_scan_zhang(_scan_config(cfg))], []
    if name == "thm33":
        scan = limit_scan_thm33(_scan_config(cfg, asymptotic=True))
        return list(scan.tables), [scan.consistency]
    raise ParameterError(f"unknown scan {name!r}; choose from gamma_q, E_q, theta_ratio, zhang, thm33")


def _report_row(report: VerificationReport) -> List[str]:
    return [report.identity, json.dumps(encode_value(report.params), sort_keys=True),
            fmt_float(report.lhs.real), fmt_float(report.lhs.imag),
            fmt_float(report.rhs.real), fmt_float(report.rhs.imag),
            fmt_float(report.abs_diff), fmt_float(report.rel_diff),
            fmt_float(report.tolerance), str(report.passed), report.notes]


def render_reports(reports: List[VerificationReport], fmt: str, header: Dict[str, Any]) -> str:
    if fmt == "json":
        payload = {**header, "reports": [r.to_dict() for r in reports],
                   "summary": {"count": len(reports), "passed": sum(r.passed for r in reports)}}
        return json.dumps(payload, indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    writer.writerows(_report_row(r) for r in reports)
    return buffer.getvalue()


def render_scan(tables: List[ScanTable], reports: List[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        payload = {"tables": [t.to_dict() for t in tables],
                   "reports": [r.to_dict() for r in reports]}
        return json.dumps(payload, indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for table in tables:
        writer.writerow([f"# scan {table.name}"])
        writer.writerows(table.csv_rows())
    if reports:
        writer.writerow(REPORT_COLUMNS)
        writer.writerows(_report_row(r) for r in reports)
    return buffer.getvalue()


def render_value(cfg: RunConfig, value: complex) -> str:
    if cfg.output_format == "json":
        payload = {"function": cfg.name, "params": encode_value(cfg.params),
                   "value": encode_value(value)}
        return json.dumps(payload, indent=2) + "\n"
    return f"function,re,im\n{cfg.name},{fmt_float(value.real)},{fmt_float(value.imag)}\n"


def emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"Wrote {cfg.command} output to {cfg.out}")
    else:
        print(text, end="")


def run(cfg: RunConfig) -> int:
    """Execute the request and return the process exit code."""
    try:
        if cfg.command == "eval":
            emit(cfg, render_value(cfg, cmd_eval(cfg)))
            return EXIT_OK
        if cfg.command == "verify":
            reports = cmd_verify(cfg)
            header = {"command": "verify", "identity": cfg.name, "params": encode_value(cfg.params)}
            emit(cfg, render_reports(reports, cfg.output_format, header))
            return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
        tables, reports = cmd_scan(cfg)
        emit(cfg, render_scan(tables, reports, cfg.output_format))
        passed = all(t.passed for t in tables) and all(r.passed for r in reports)
        return EXIT_OK if passed else EXIT_FAILED
    except QSeriesError as e:
        logger.error(f"{cfg.command} {cfg.name} failed: {e}")
        return EXIT_ERROR
