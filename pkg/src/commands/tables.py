import logging
import sys

import arguably

from src.config import EXIT_OK, LISTING_BUDGET
from src.gfcatalog import family_of
from src.rho import rho_partitions, rho_value
from src.ui.formats import render_partitions, render_table
from src.utils import check_limit, command_status, parse_format, parse_spec

logger = logging.getLogger("Commands")


@command_status
def cmd_table(variant: str, *, ell=None, colors=None, limit: int = 20, fmt: str = "plain", out=None) -> int:
    out = out or sys.stdout
    output_format = parse_format(fmt)
    check_limit(limit)
    spec = parse_spec(variant, limit, ell=ell, colors=colors)
    family = family_of(spec)
    counts = [rho_value(family, n) for n in range(limit + 1)]
    out.write(render_table(counts, output_format))
    return EXIT_OK


@command_status
def cmd_partitions(variant: str, *, ell=None, colors=None, size: int = 12, fmt: str = "plain", out=None) -> int:
    out = out or sys.stdout
    output_format = parse_format(fmt)
    check_limit(size, maximum=LISTING_BUDGET)
    spec = parse_spec(variant, size, ell=ell, colors=colors)
    rendered = [d.render() for d in rho_partitions(family_of(spec), size)]
    out.write(render_partitions(spec.label, size, rendered, output_format))
    return EXIT_OK


@arguably.command
def table(
    *,
    variant: str = "rho",
    ell: int | None = None,
    colors: int | None = None,
    limit: int = 20,
    format: str = "plain",
) -> None:
    """Print n and rho_variant(n) for n = 0..limit.

    Args:
        variant: rho, rho-lregular, rho-over, rho-over-odd, rho-over-even, rho-over-lregular, rho-kcolored, rho-cubic, rho-pod, rho-ped or rho-epsilon
        ell: ell for the ell-regular variants (>= 2)
        colors: number of colours k for rho-kcolored (>= 1)
        limit: largest n in the table
        format: plain, csv or json
    """
    raise SystemExit(cmd_table(variant, ell=ell, colors=colors, limit=limit, fmt=format))


@arguably.command
def partitions(
    *,
    variant: str = "rho",
    ell: int | None = None,
    colors: int | None = None,
    size: int = 12,
    format: str = "plain",
) -> None:
    """List every partition counted by rho_variant(size), overlines and colours included.

    Args:
        variant: rho variant name, as for `table`
        ell: ell for the ell-regular variants (>= 2)
        colors: number of colours k for rho-kcolored (>= 1)
        size: the n whose partitions are listed
        format: plain, csv or json
    """
    raise SystemExit(cmd_partitions(variant, ell=ell, colors=colors, size=size, fmt=format))
