"""
Truncated formal power series in q with exact integer coefficients.

A Series of order N stores c_0..c_N and stands for every power series that agrees
with it modulo q^(N+1). Arithmetic between series of different orders truncates to
the smaller order, so products of infinite q-Pochhammer symbols and rational terms
compose without ceremony.
"""
import logging
import operator
from dataclasses import dataclass

from src.errors import IndexBeyondOrder, InvalidParameter, NotAUnit

logger = logging.getLogger("Series")


@dataclass(frozen=True)
class Series:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        # operator.index rejects floats and Fractions instead of truncating them
        coeffs = tuple(operator.index(c) for c in self.coeffs)
        if not coeffs:
            raise InvalidParameter("A series needs at least its constant coefficient.")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return coeff(self, n)

    def __add__(self, other):
        if isinstance(other, int):
            other = constant(other, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return combine(self, other, +1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = constant(other, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return combine(self, other, -1)

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return combine(constant(other, self.order), self, -1)

    def __neg__(self):
        return Series(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return Series(tuple(other * c for c in self.coeffs))
        if not isinstance(other, Series):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return power(self, e)

    def __repr__(self):
        return f"Series({list(self.coeffs)}, order={self.order})"


def _check_order(N: int):
    if N < 0:
        raise InvalidParameter(f"Truncation order must be non-negative, got {N}.")


# --- CONSTRUCTORS ---
def constant(c: int, N: int) -> Series:
    _check_order(N)
    return Series((c,) + (0,) * N)


def monomial(c: int, d: int, N: int) -> Series:
    """c*q^d truncated at N; the zero series when d > N."""
    _check_order(N)
    if d < 0:
        raise InvalidParameter(f"Monomial degree must be non-negative, got {d}.")
    coeffs = [0] * (N + 1)
    if d <= N:
        coeffs[d] = c
    return Series(tuple(coeffs))


def geometric(m: int, N: int) -> Series:
    """1/(1 - q^m): ones at every multiple of m."""
    _check_order(N)
    if m < 1:
        raise InvalidParameter(f"Geometric period must be positive, got {m}.")
    return Series(tuple(1 if n % m == 0 else 0 for n in range(N + 1)))


def pochhammer(a: int, b: int, N: int) -> Series:
    """(q^a; q^b)_inf = prod_{k>=0} (1 - q^(a+bk)), truncated at N."""
    _check_order(N)
    if a < 1 or b < 1:
        raise InvalidParameter(f"Pochhammer needs a >= 1 and b >= 1, got a={a}, b={b}.")
    coeffs = [1] + [0] * N
    for e in range(a, N + 1, b):
        # multiply by (1 - q^e) in place; walk downwards so each c[i-e] is still old
        for i in range(N, e - 1, -1):
            coeffs[i] -= coeffs[i - e]
    return Series(tuple(coeffs))


# --- ARITHMETIC ---
def combine(a: Series, b: Series, sign: int) -> Series:
    """a + sign*b at the smaller of the two orders."""
    if sign not in (1, -1):
        raise InvalidParameter(f"combine sign must be +1 or -1, got {sign}.")
    N = min(a.order, b.order)
    return Series(tuple(a.coeffs[n] + sign * b.coeffs[n] for n in range(N + 1)))


def mul(a: Series, b: Series) -> Series:
    N = min(a.order, b.order)
    out = [0] * (N + 1)
    bc = b.coeffs
    for i in range(N + 1):
        ai = a.coeffs[i]
        if not ai:
            continue
        for j in range(N + 1 - i):
            out[i + j] += ai * bc[j]
    return Series(tuple(out))


def inverse(a: Series) -> Series:
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NotAUnit(f"Constant term must be +1 or -1 to invert over the integers, got {a0}.")
    N = a.order
    support = [i for i in range(1, N + 1) if a.coeffs[i]]
    out = [a0] + [0] * N
    # 1/a0 == a0 for a unit
    for n in range(1, N + 1):
        acc = 0
        for i in support:
            if i > n:
                break
            acc += a.coeffs[i] * out[n - i]
        out[n] = -a0 * acc
    return Series(tuple(out))


def power(a: Series, e: int) -> Series:
    base = a if e >= 0 else inverse(a)
    result = constant(1, a.order)
    for _ in range(abs(e)):
        result = mul(result, base)
    return result


def truncate(s: Series, N: int) -> Series:
    _check_order(N)
    if N > s.order:
        raise IndexBeyondOrder(f"Cannot extend a series of order {s.order} to order {N}.")
    return Series(s.coeffs[: N + 1])


def coeff(s: Series, n: int) -> int:
    if n < 0:
        raise InvalidParameter(f"Coefficient index must be non-negative, got {n}.")
    if n > s.order:
        raise IndexBeyondOrder(f"Coefficient of q^{n} is unknown: series is truncated at order {s.order}.")
    return s.coeffs[n]


# --- PARTITION NUMBERS ---
def _pentagonal_offsets(N: int):
    """Yield (sign, offset) for the generalized pentagonal numbers up to N."""
    k = 1
    while True:
        first = k * (3 * k - 1) // 2
        if first > N:
            return
        sign = 1 if k % 2 else -1
        yield sign, first
        second = k * (3 * k + 1) // 2
        if second <= N:
            yield sign, second
        k += 1


def _strided_partition_numbers(m: int, N: int) -> Series:
    """1/(q^m; q^m)_inf: p(n/m) at multiples of m, zero elsewhere."""
    top = N // m
    offsets = list(_pentagonal_offsets(top))
    p = [1] + [0] * top
    for n in range(1, top + 1):
        acc = 0
        for sign, off in offsets:
            if off > n:
                break
            acc += sign * p[n - off]
        p[n] = acc
    coeffs = [0] * (N + 1)
    for j, value in enumerate(p):
        coeffs[j * m] = value
    return Series(tuple(coeffs))


def partition_series(N: int) -> Series:
    """1/(q;q)_inf via Euler's pentagonal recurrence; equals inverse(pochhammer(1, 1, N))."""
    _check_order(N)
    return _strided_partition_numbers(1, N)


def eta_quotient(factors, N: int) -> Series:
    """prod over (m, e) of (q^m; q^m)_inf^e, truncated at N."""
    _check_order(N)
    result = constant(1, N)
    for m, e in factors:
        if m < 1:
            raise InvalidParameter(f"Eta factor base must be positive, got q^{m}.")
        if e == 0:
            raise InvalidParameter(f"Eta factor (q^{m};q^{m}) has exponent 0.")
        base = pochhammer(m, m, N) if e > 0 else _strided_partition_numbers(m, N)
        for _ in range(abs(e)):
            result = mul(result, base)
    return result


# --- SHAPE CHECKS ---
def negative_indices(s: Series) -> list[int]:
    return [n for n, c in enumerate(s.coeffs) if c < 0]


def odd_indices(s: Series) -> list[int]:
    return [n for n in range(1, s.order + 1, 2) if s.coeffs[n]]


def is_even_supported(s: Series) -> bool:
    return not odd_indices(s)
