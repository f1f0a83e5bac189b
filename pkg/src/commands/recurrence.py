import logging
import sys

import arguably

from src.config import EXIT_OK, EXIT_VIOLATION
from src.rho import recurrence_row
from src.ui.formats import render_recurrence
from src.utils import check_limit, command_status, parse_format

logger = logging.getLogger("Commands")


@command_status
def cmd_recurrence(*, limit: int = 80, fmt: str = "plain", out=None) -> int:
    out = out or sys.stdout
    output_format = parse_format(fmt)
    check_limit(limit, minimum=2)
    rows = [recurrence_row(n) for n in range(2, limit + 1, 2)]
    out.write(render_recurrence(rows, output_format))
    failed = [r.n for r in rows if not r.holds]
    if failed:
        logger.warning(f"Recurrence fails at n = {failed}")
        return EXIT_VIOLATION
    return EXIT_OK


@arguably.command
def recurrence(*, limit: int = 80, format: str = "plain") -> None:
    """Check 2*rho_a(n) = n*(rho(n) - 1) + 2*a(n/2) for every even n up to limit.

    Args:
        limit: largest n checked (>= 2)
        format: plain, csv or json
    """
    raise SystemExit(cmd_recurrence(limit=limit, fmt=format))
