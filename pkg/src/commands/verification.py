import logging
import sys

import arguably

from src import gfcatalog
from src.config import DEFAULT_COLORS, DEFAULT_ELLS, EXIT_OK, EXIT_VIOLATION
from src.ui.formats import render_report, render_reports
from src.utils import check_limit, command_status, parse_format, parse_oracle, parse_spec

logger = logging.getLogger("Commands")


@command_status
def cmd_verify(
    variant: str,
    *,
    ell=None,
    colors=None,
    limit: int = 40,
    oracle: str = "both",
    fmt: str = "plain",
    out=None,
) -> int:
    out = out or sys.stdout
    output_format = parse_format(fmt)
    mode = parse_oracle(oracle)
    check_limit(limit)
    spec = parse_spec(variant, limit, ell=ell, colors=colors)
    report = gfcatalog.verify(spec, mode)
    out.write(render_report(report, output_format))
    return EXIT_OK if report.ok else EXIT_VIOLATION


@command_status
def cmd_verify_all(
    *,
    limit: int = 60,
    ells=None,
    colors=None,
    oracle: str = "both",
    workers: int = 1,
    fmt: str = "plain",
    out=None,
) -> int:
    out = out or sys.stdout
    output_format = parse_format(fmt)
    mode = parse_oracle(oracle)
    check_limit(limit)
    ells = tuple(ells) if ells else DEFAULT_ELLS
    colors = tuple(colors) if colors else DEFAULT_COLORS
    reports = gfcatalog.verify_all(limit, ells, colors, oracle=mode, workers=max(1, workers))
    out.write(render_reports(reports, output_format))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


@arguably.command
def verify(
    *,
    variant: str = "rho",
    ell: int | None = None,
    colors: int | None = None,
    limit: int = 40,
    oracle: str = "both",
    format: str = "plain",
) -> None:
    """Check one generating-function identity coefficient by coefficient.

    Args:
        variant: rho variant name, as for `table`
        ell: ell for the ell-regular variants (>= 2)
        colors: number of colours k for rho-kcolored (>= 1)
        limit: truncation order N; coefficients 0..N are compared
        oracle: combinator, direct-enumeration or both
        format: plain, csv or json
    """
    raise SystemExit(cmd_verify(variant, ell=ell, colors=colors, limit=limit, oracle=oracle, fmt=format))


@arguably.command
def verify_all(
    *,
    limit: int = 60,
    ell: list[int] | None = None,
    colors: list[int] | None = None,
    oracle: str = "both",
    workers: int = 1,
    format: str = "plain",
) -> None:
    """Check every identity, sweeping ell and the number of colours.

    Args:
        limit: truncation order N
        ell: comma-separated ell values for the ell-regular variants (default 2,3,4,5,7)
        colors: comma-separated colour counts for rho-kcolored (default 1,2,3,5)
        oracle: combinator, direct-enumeration or both
        workers: number of processes checking identities in parallel
        format: plain, csv or json
    """
    raise SystemExit(
        cmd_verify_all(limit=limit, ells=ell, colors=colors, oracle=oracle, workers=workers, fmt=format)
    )
