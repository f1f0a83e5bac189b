"""
The rho construction: partitions of n = 2*lam whose largest part lam occurs exactly once
while the remaining parts form a family-f partition of lam.

"Occurs exactly once" is numeric: the remainder may not use the size lam under any
overline or colour. Odd n and n = 0 have no such partitions.
"""
import logging
from dataclasses import dataclass
from itertools import groupby

from src.combinatorics import (
    UNRESTRICTED,
    DecoratedPartition,
    Family,
    Partition,
    count,
    decorated_count,
    decoration_weight,
    decorations,
    merca_a,
    part_tuples,
)
from src.errors import InvalidParameter, OddArgument

logger = logging.getLogger("Rho")


@dataclass(frozen=True)
class RhoCount:
    family: Family
    n: int
    value: int


@dataclass(frozen=True)
class RecurrenceRow:
    n: int
    rho: int
    rho_a: int
    a_half: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _half(n: int) -> int | None:
    if n < 0:
        raise InvalidParameter(f"n must be non-negative, got {n}.")
    if n == 0 or n % 2:
        return None
    return n // 2


def single_part_count(f: Family, lam: int) -> int:
    """Decorated single-part partitions [lam] in family f."""
    if lam < 1:
        raise InvalidParameter(f"Largest part must be positive, got {lam}.")
    return decoration_weight(f, Partition((lam,)))


def rho_count(f: Family, n: int) -> int:
    lam = _half(n)
    if lam is None:
        return 0
    return count(f, lam) - single_part_count(f, lam)


def rho_value(f: Family, n: int) -> RhoCount:
    return RhoCount(f, n, rho_count(f, n))


def is_rho_partition(parts) -> bool:
    """Largest part occurs once and the rest sum to it."""
    parts = tuple(parts)
    if not parts:
        return False
    lam = parts[0]
    return sum(parts) == 2 * lam and (len(parts) == 1 or parts[1] < lam)


def rho_direct(f: Family, n: int) -> int:
    """Count rho_f(n) over the partitions of lam with every part below lam, listing each run's marks."""
    lam = _half(n)
    if lam is None:
        return 0
    return sum(decorated_count(f, Partition(rest)) for rest in part_tuples(lam, max_part=lam - 1))


def rho_partitions(f: Family, n: int):
    """Yield every object counted by rho_f(n), largest part first."""
    lam = _half(n)
    if lam is None:
        return
    for rest in part_tuples(lam, max_part=lam - 1):
        full = Partition((lam,) + rest)
        for d in decorations(f, Partition(rest)):
            yield DecoratedPartition(full, (0,) + d.marks, f)


# --- DISTINCT-PART SUMS ---
def _require_even(n: int):
    if n % 2:
        raise OddArgument(f"Only defined for even n, got {n}.")
    if n < 2:
        raise InvalidParameter(f"n must be at least 2, got {n}.")


def rho_a(n: int) -> int:
    """Sum of the distinct part sizes over all partitions counted by rho(n)."""
    _require_even(n)
    lam = n // 2
    return sum(
        sum(size for size, _ in groupby((lam,) + rest))
        for rest in part_tuples(lam, max_part=lam - 1)
    )


def recurrence_row(n: int) -> RecurrenceRow:
    _require_even(n)
    rho = rho_count(UNRESTRICTED, n)
    ra = rho_a(n)
    a_half = merca_a(n // 2)
    row = RecurrenceRow(n=n, rho=rho, rho_a=ra, a_half=a_half, lhs=2 * ra, rhs=n * (rho - 1) + 2 * a_half)
    if not row.holds:
        logger.warning(f"Recurrence fails at n={n}: 2*rho_a={row.lhs}, n*(rho-1)+2a(n/2)={row.rhs}")
    return row


def check_recurrence(n: int) -> bool:
    """2*rho_a(n) == n*(rho(n) - 1) + 2*a(n/2)."""
    return recurrence_row(n).holds
