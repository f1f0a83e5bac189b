import functools
import logging
import sys

from src.config import COMBINATOR_BUDGET, EXIT_USAGE
from src.errors import RhoError, UsageError
from src.gfcatalog import Oracle, VariantSpec
from src.ui.formats import OutputFormat

logger = logging.getLogger("Commands")


# --- ARGUMENT CHECKS ---
def parse_spec(variant: str, order: int, ell: int | None = None, colors: int | None = None) -> VariantSpec:
    try:
        return VariantSpec.parse(variant, order, ell=ell, k=colors)
    except RhoError as e:
        raise UsageError(str(e)) from None


def parse_format(fmt: str) -> OutputFormat:
    try:
        return OutputFormat(fmt)
    except ValueError:
        raise UsageError(f"Unknown format '{fmt}'. Use plain, csv or json.") from None


def parse_oracle(oracle: str) -> Oracle:
    # "direct" is accepted as shorthand for direct-enumeration
    if oracle == "direct":
        return Oracle.DIRECT
    try:
        return Oracle(oracle)
    except ValueError:
        raise UsageError(f"Unknown oracle '{oracle}'. Use combinator, direct-enumeration or both.") from None


def check_limit(limit: int, minimum: int = 0, maximum: int = COMBINATOR_BUDGET):
    if not minimum <= limit <= maximum:
        raise UsageError(f"--limit must be between {minimum} and {maximum}, got {limit}.")


# --- EXIT STATUS ---
def command_status(func):
    """Turn usage problems raised by a command into exit status 2 with a one-line message."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except RhoError as e:
            logger.error(f"Command Error: {e}")
            print(f"❌ {e}", file=sys.stderr)
            return EXIT_USAGE
    return wrapper
