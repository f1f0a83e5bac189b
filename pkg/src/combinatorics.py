"""
Brute-force partition enumeration and the restricted/decorated families built on it.

Every counter here sums over the partitions of n directly, either one at a time or one
part size at a time, so the numbers are independent of the eta-quotient machinery in
src.series. That independence is what makes them usable as oracles.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import chain, combinations_with_replacement, groupby, product
from math import comb, prod

from src.errors import InvalidParameter, NoSeriesForm, NotAPredicateFamily
from src.series import Series, eta_quotient, geometric, inverse, monomial, mul, pochhammer

logger = logging.getLogger("Combinatorics")

OVERLINE = "\u0305"


# --- FAMILIES ---
class Kind(Enum):
    UNRESTRICTED = "unrestricted"
    LREGULAR = "lregular"
    OVERPARTITION = "overpartition"
    OVERPARTITION_ODD = "overpartition-odd"
    OVERPARTITION_EVEN = "overpartition-even"
    OVERPARTITION_LREGULAR = "overpartition-lregular"
    KCOLORED = "kcolored"
    CUBIC = "cubic"
    POD = "pod"
    PED = "ped"
    EVEN_LESS_THAN_ODD = "even-less-than-odd"


_ELL_KINDS = {Kind.LREGULAR, Kind.OVERPARTITION_LREGULAR}
_OVERLINED_KINDS = {
    Kind.OVERPARTITION,
    Kind.OVERPARTITION_ODD,
    Kind.OVERPARTITION_EVEN,
    Kind.OVERPARTITION_LREGULAR,
}
_DECORATED_KINDS = _OVERLINED_KINDS | {Kind.KCOLORED, Kind.CUBIC}


@dataclass(frozen=True)
class Family:
    """One restricted or decorated partition family; `param` is ell or k where the kind needs it."""
    kind: Kind
    param: int | None = None

    def __post_init__(self):
        if self.kind in _ELL_KINDS:
            if self.param is None or self.param < 2:
                raise InvalidParameter(f"{self.kind.value} needs ell >= 2, got {self.param}.")
        elif self.kind is Kind.KCOLORED:
            if self.param is None or self.param < 1:
                raise InvalidParameter(f"kcolored needs k >= 1, got {self.param}.")
        elif self.param is not None:
            raise InvalidParameter(f"{self.kind.value} takes no parameter, got {self.param}.")

    @classmethod
    def lregular(cls, ell: int) -> "Family":
        return cls(Kind.LREGULAR, ell)

    @classmethod
    def overpartition_lregular(cls, ell: int) -> "Family":
        return cls(Kind.OVERPARTITION_LREGULAR, ell)

    @classmethod
    def kcolored(cls, k: int) -> "Family":
        return cls(Kind.KCOLORED, k)

    @classmethod
    def parse(cls, label: str) -> "Family":
        """Inverse of `label`: 'cubic', 'lregular(3)', 'kcolored(2)'."""
        name, _, rest = label.partition("(")
        try:
            kind = Kind(name.strip())
        except ValueError:
            raise InvalidParameter(f"Unknown family '{label}'.") from None
        try:
            param = int(rest.rstrip(")")) if rest else None
        except ValueError:
            raise InvalidParameter(f"Bad family parameter in '{label}'.") from None
        return cls(kind, param)

    @property
    def ell(self) -> int | None:
        return self.param if self.kind in _ELL_KINDS else None

    @property
    def k(self) -> int | None:
        return self.param if self.kind is Kind.KCOLORED else None

    @property
    def decorated(self) -> bool:
        return self.kind in _DECORATED_KINDS

    @property
    def label(self) -> str:
        if self.param is None:
            return self.kind.value
        return f"{self.kind.value}({self.param})"


UNRESTRICTED = Family(Kind.UNRESTRICTED)
OVERPARTITION = Family(Kind.OVERPARTITION)
OVERPARTITION_ODD = Family(Kind.OVERPARTITION_ODD)
OVERPARTITION_EVEN = Family(Kind.OVERPARTITION_EVEN)
CUBIC = Family(Kind.CUBIC)
POD = Family(Kind.POD)
PED = Family(Kind.PED)
EVEN_LESS_THAN_ODD = Family(Kind.EVEN_LESS_THAN_ODD)


# --- PARTITIONS ---
@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    total: int = field(init=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise InvalidParameter(f"Parts must be positive: {parts}.")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidParameter(f"Parts must be non-increasing: {parts}.")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "total", sum(parts))

    @property
    def multiplicities(self) -> tuple[tuple[int, int], ...]:
        """(size, count) pairs, largest size first."""
        return tuple((size, len(list(run))) for size, run in groupby(self.parts))

    def __str__(self):
        return "+".join(map(str, self.parts)) if self.parts else "0"


@dataclass(frozen=True)
class DecoratedPartition:
    """A plain partition plus one mark per part: overline flag or colour index (0 = none)."""
    partition: Partition
    marks: tuple[int, ...]
    family: Family

    def render(self) -> str:
        if not self.partition.parts:
            return "0"
        overlined = self.family.kind in _OVERLINED_KINDS
        pieces = []
        for part, mark in zip(self.partition.parts, self.marks):
            if not mark:
                pieces.append(str(part))
            elif overlined:
                pieces.append("".join(ch + OVERLINE for ch in str(part)))
            else:
                pieces.append(f"{part}_{mark}")
        return "+".join(pieces)

    def __str__(self):
        return self.render()


def part_tuples(n: int, max_part: int | None = None):
    """Raw part tuples of n, descending lexicographic, every part <= max_part."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    if top < 1:
        return
    q, r = divmod(n, top)
    a = [top] * q + ([r] if r else [])
    while True:
        yield tuple(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        x = a.pop() - 1
        a.append(x)
        q, r = divmod(ones + 1, x)
        a.extend([x] * q)
        if r:
            a.append(r)


def enumerate_partitions(n: int, max_part: int | None = None):
    """Every partition of n exactly once, in descending lexicographic order."""
    if n < 0:
        raise InvalidParameter(f"Cannot partition a negative number ({n}).")
    for parts in part_tuples(n, max_part):
        yield Partition(parts)


# --- FAMILY MEMBERSHIP AND WEIGHTS ---
def _runs(parts: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(size, len(list(run))) for size, run in groupby(parts)]


def _run_allowed(f: Family, size: int, m: int) -> bool:
    """Whether m copies of `size` may appear in a family-f partition at all."""
    kind = f.kind
    if kind in _ELL_KINDS:
        return size % f.param != 0
    if kind is Kind.POD:
        return size % 2 == 0 or m == 1
    if kind is Kind.PED:
        return size % 2 == 1 or m == 1
    if kind is Kind.OVERPARTITION_ODD:
        return size % 2 == 1
    if kind is Kind.OVERPARTITION_EVEN:
        return size % 2 == 0
    return True


def _ordered(f: Family, runs) -> bool:
    if f.kind is not Kind.EVEN_LESS_THAN_ODD:
        return True
    evens = [size for size, _ in runs if size % 2 == 0]
    odds = [size for size, _ in runs if size % 2]
    return not (evens and odds and max(evens) >= min(odds))


def _admitted(f: Family, runs) -> bool:
    return _ordered(f, runs) and all(_run_allowed(f, size, m) for size, m in runs)


def _run_weight(f: Family, size: int, m: int) -> int:
    """Decorated ways to write a run of m copies of `size`, in closed form."""
    if not _run_allowed(f, size, m):
        return 0
    if f.kind in _OVERLINED_KINDS:
        return 2
    if f.kind is Kind.KCOLORED:
        return comb(m + f.param - 1, f.param - 1)
    if f.kind is Kind.CUBIC and size % 2 == 0:
        return m + 1
    return 1


def _weight(f: Family, parts: tuple[int, ...]) -> int:
    runs = _runs(parts)
    if not _ordered(f, runs):
        return 0
    return prod(_run_weight(f, size, m) for size, m in runs)


def satisfies(f: Family, p: Partition) -> bool:
    if f.decorated:
        raise NotAPredicateFamily(f"{f.label} carries decorations; use decoration_weight.")
    return _weight(f, p.parts) == 1


def decoration_weight(f: Family, p: Partition) -> int:
    """Number of decorated family-f objects whose underlying plain partition is p."""
    return _weight(f, p.parts)


def _run_marks(f: Family, size: int, m: int) -> list[tuple[int, ...]]:
    if f.kind in _OVERLINED_KINDS:
        # only the first occurrence of a size may carry the overline
        return [(0,) * m, (1,) + (0,) * (m - 1)]
    if f.kind is Kind.KCOLORED:
        return list(combinations_with_replacement(range(1, f.param + 1), m))
    if f.kind is Kind.CUBIC and size % 2 == 0:
        return list(combinations_with_replacement((1, 2), m))
    return [(0,) * m]


@lru_cache(maxsize=None)
def _mark_choices(f: Family, size: int, m: int) -> int:
    return len(_run_marks(f, size, m))


def decorated_count(f: Family, p: Partition) -> int:
    """Like decoration_weight, but counts the listed marks of each run instead of using closed forms."""
    runs = p.multiplicities
    if not _admitted(f, runs):
        return 0
    return prod(_mark_choices(f, size, m) for size, m in runs)


def decorations(f: Family, p: Partition):
    """Yield each decorated object over p explicitly; there are decoration_weight(f, p) of them."""
    runs = p.multiplicities
    if not _admitted(f, runs):
        return
    options = [_run_marks(f, size, m) for size, m in runs]
    for choice in product(*options):
        yield DecoratedPartition(p, tuple(chain.from_iterable(choice)), f)


# --- COUNTERS ---
def enumerated_count(f: Family, n: int) -> int:
    """Sum of decoration_weight over every partition of n, one partition at a time."""
    if n < 0:
        raise InvalidParameter(f"Cannot count partitions of a negative number ({n}).")
    return sum(_weight(f, parts) for parts in part_tuples(n))


@lru_cache(maxsize=None)
def count(f: Family, n: int) -> int:
    """Same sum as enumerated_count, walked one part size at a time.

    A partition is a choice of multiplicity for each size 1..n, so summing the run
    weights size by size visits every partition exactly once without listing them.
    """
    if n < 0:
        raise InvalidParameter(f"Cannot count partitions of a negative number ({n}).")
    # before[r]: no odd size used yet; after[r]: some odd size used
    before = [1] + [0] * n
    after = [0] * (n + 1)
    even_after_odd = f.kind is not Kind.EVEN_LESS_THAN_ODD
    for size in range(1, n + 1):
        runs = [(m * size, w) for m in range(1, n // size + 1) if (w := _run_weight(f, size, m))]
        next_before, next_after = before[:], after[:]
        for r in range(size, n + 1):
            for step, w in runs:
                if step > r:
                    break
                if size % 2:
                    next_after[r] += w * (before[r - step] + after[r - step])
                else:
                    next_before[r] += w * before[r - step]
                    if even_after_odd:
                        next_after[r] += w * after[r - step]
        before, after = next_before, next_after
    total = before[n] + after[n]
    logger.debug(f"count({f.label}, {n}) = {total}")
    return total


def family_factors(f: Family) -> list[tuple[int, int]]:
    """(m, e) pairs with prod (q^m;q^m)_inf^e the generating function of f."""
    kind, x = f.kind, f.param
    table = {
        Kind.UNRESTRICTED: lambda: [(1, -1)],
        Kind.LREGULAR: lambda: [(x, 1), (1, -1)],
        Kind.OVERPARTITION: lambda: [(2, 1), (1, -2)],
        Kind.OVERPARTITION_ODD: lambda: [(2, 3), (1, -2), (4, -1)],
        Kind.OVERPARTITION_EVEN: lambda: [(4, 1), (2, -2)],
        Kind.OVERPARTITION_LREGULAR: lambda: [(x, 2), (2, 1), (1, -2), (2 * x, -1)],
        # 1/(q;q)^k: the printed 1/(q^k;q^k) contradicts p_2(3) = 10
        Kind.KCOLORED: lambda: [(1, -x)],
        Kind.CUBIC: lambda: [(1, -1), (2, -1)],
        Kind.POD: lambda: [(2, 1), (1, -1), (4, -1)],
        Kind.PED: lambda: [(4, 1), (1, -1)],
    }
    if kind not in table:
        raise NoSeriesForm(f"{f.label} has no eta-quotient generating function.")
    return table[kind]()


def count_via_series(f: Family, N: int) -> list[int]:
    return list(eta_quotient(family_factors(f), N).coeffs)


# --- MERCA'S a(n) ---
def merca_a(n: int) -> int:
    """Sum over the partitions of n of the sum of their distinct part sizes."""
    if n < 1:
        raise InvalidParameter(f"a(n) is defined for n >= 1, got {n}.")
    return sum(sum(size for size, _ in groupby(parts)) for parts in part_tuples(n))


def merca_a_series(N: int) -> Series:
    """q/(1-q)^2 * 1/(q;q)_inf."""
    ones = geometric(1, N)
    return mul(mul(monomial(1, 1, N), mul(ones, ones)), inverse(pochhammer(1, 1, N)))
