from dataclasses import dataclass

# --- ENUMERATION BUDGETS ---
# Largest truncation order N each check is allowed to reach.
SERIES_BUDGET = 200
COMBINATOR_BUDGET = 120
DIRECT_BUDGET = 60

# Largest n for which `partitions` lists the decorated objects one by one.
LISTING_BUDGET = 40

# --- DEFAULT SWEEPS ---
DEFAULT_ELLS = (2, 3, 4, 5, 7)
DEFAULT_COLORS = (1, 2, 3, 5)

# --- EXIT STATUSES ---
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class Budget:
    series: int = SERIES_BUDGET
    combinator: int = COMBINATOR_BUDGET
    direct: int = DIRECT_BUDGET


DEFAULT_BUDGET = Budget()
