"""
Generating functions for every rho variant, and the verifier that checks them.

Each builder spells out one stated identity term by term with the constructors from
src.series. `verify` compares the coefficients against the enumeration counters in
src.rho and records every disagreement with both values.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import partial

from src.combinatorics import (
    CUBIC,
    EVEN_LESS_THAN_ODD,
    OVERPARTITION,
    OVERPARTITION_EVEN,
    OVERPARTITION_ODD,
    PED,
    POD,
    UNRESTRICTED,
    Family,
)
from src.config import DEFAULT_BUDGET, DEFAULT_COLORS, DEFAULT_ELLS, Budget
from src.errors import BudgetExceeded, InvalidParameter
from src.rho import rho_count, rho_direct
from src.series import (
    Series,
    constant,
    eta_quotient,
    geometric,
    is_even_supported,
    monomial,
    negative_indices,
    odd_indices,
)

logger = logging.getLogger("Verify")


class Variant(Enum):
    RHO = "rho"
    RHO_LREGULAR = "rho-lregular"
    RHO_OVER = "rho-over"
    RHO_OVER_ODD = "rho-over-odd"
    RHO_OVER_EVEN = "rho-over-even"
    RHO_OVER_LREGULAR = "rho-over-lregular"
    RHO_KCOLORED = "rho-kcolored"
    RHO_CUBIC = "rho-cubic"
    RHO_POD = "rho-pod"
    RHO_PED = "rho-ped"
    RHO_EPSILON = "rho-epsilon"

    @property
    def needs_ell(self) -> bool:
        return self in (Variant.RHO_LREGULAR, Variant.RHO_OVER_LREGULAR)

    @property
    def needs_k(self) -> bool:
        return self is Variant.RHO_KCOLORED


class Oracle(Enum):
    COMBINATOR = "combinator"
    DIRECT = "direct-enumeration"
    BOTH = "both"


@dataclass(frozen=True)
class VariantSpec:
    variant: Variant
    order: int
    ell: int | None = None
    k: int | None = None

    def __post_init__(self):
        if self.order < 0:
            raise InvalidParameter(f"Truncation order must be non-negative, got {self.order}.")
        if self.variant.needs_ell:
            if self.ell is None or self.ell < 2:
                raise InvalidParameter(f"{self.variant.value} needs ell >= 2, got {self.ell}.")
        elif self.ell is not None:
            raise InvalidParameter(f"{self.variant.value} takes no ell.")
        if self.variant.needs_k:
            if self.k is None or self.k < 1:
                raise InvalidParameter(f"{self.variant.value} needs k >= 1, got {self.k}.")
        elif self.k is not None:
            raise InvalidParameter(f"{self.variant.value} takes no k.")

    @classmethod
    def parse(cls, name: str, order: int, ell: int | None = None, k: int | None = None) -> "VariantSpec":
        try:
            variant = Variant(name)
        except ValueError:
            known = ", ".join(v.value for v in Variant)
            raise InvalidParameter(f"Unknown variant '{name}'. Known variants: {known}.") from None
        return cls(variant, order, ell if variant.needs_ell else None, k if variant.needs_k else None)

    @property
    def params(self) -> dict:
        params = {}
        if self.ell is not None:
            params["ell"] = self.ell
        if self.k is not None:
            params["k"] = self.k
        return params

    @property
    def label(self) -> str:
        extra = ",".join(f"{key}={value}" for key, value in self.params.items())
        return f"{self.variant.value}({extra})" if extra else self.variant.value


@dataclass(frozen=True)
class Mismatch:
    n: int
    series: int
    oracle: int


@dataclass(frozen=True)
class VerificationReport:
    spec: VariantSpec
    oracle: Oracle
    mismatches: tuple[Mismatch, ...] = ()
    elapsed_ms: int = field(default=0, compare=False)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def checked_range(self) -> range:
        return range(self.spec.order + 1)

    @property
    def first_mismatch(self) -> Mismatch | None:
        return self.mismatches[0] if self.mismatches else None

    def to_dict(self) -> dict:
        return {
            "variant": self.spec.variant.value,
            "params": self.spec.params,
            "order": self.spec.order,
            "oracle": self.oracle.value,
            "mismatches": [{"n": m.n, "series": m.series, "oracle": m.oracle} for m in self.mismatches],
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        params = data.get("params", {})
        spec = VariantSpec(Variant(data["variant"]), data["order"], params.get("ell"), params.get("k"))
        mismatches = tuple(Mismatch(m["n"], m["series"], m["oracle"]) for m in data["mismatches"])
        return cls(spec, Oracle(data["oracle"]), mismatches, data.get("elapsed_ms", 0))


# --- GENERATING FUNCTIONS ---
def _q(d: int, N: int) -> Series:
    return monomial(1, d, N)


def _rho(spec: VariantSpec) -> Series:
    # 1/(q^2;q^2) - 1/(1-q^2)
    N = spec.order
    return eta_quotient([(2, -1)], N) - geometric(2, N)


def _rho_lregular(spec: VariantSpec) -> Series:
    # (q^2l;q^2l)/(q^2;q^2) - 1/(1-q^2) + q^2l/(1-q^2l)
    N, ell = spec.order, spec.ell
    return (
        eta_quotient([(2 * ell, 1), (2, -1)], N)
        - geometric(2, N)
        + _q(2 * ell, N) * geometric(2 * ell, N)
    )


def _rho_over(spec: VariantSpec) -> Series:
    # (q^4;q^4)/(q^2;q^2)^2 - 2/(1-q^2) + 1
    N = spec.order
    return eta_quotient([(4, 1), (2, -2)], N) - 2 * geometric(2, N) + constant(1, N)


def _rho_over_odd(spec: VariantSpec) -> Series:
    # (q^4;q^4)^3/((q^2;q^2)^2 (q^8;q^8)) - 2q^2/(1-q^4) - 1
    N = spec.order
    return eta_quotient([(4, 3), (2, -2), (8, -1)], N) - 2 * _q(2, N) * geometric(4, N) - constant(1, N)


def _rho_over_even(spec: VariantSpec) -> Series:
    # (q^8;q^8)/(q^4;q^4)^2 - 2q^4/(1-q^4) - 1
    N = spec.order
    return eta_quotient([(8, 1), (4, -2)], N) - 2 * _q(4, N) * geometric(4, N) - constant(1, N)


def _rho_over_lregular(spec: VariantSpec) -> Series:
    # (q^2l;q^2l)^2 (q^4;q^4) / ((q^2;q^2)^2 (q^4l;q^4l)) - 2/(1-q^2) + 2q^2l/(1-q^2l) + 1
    N, ell = spec.order, spec.ell
    return (
        eta_quotient([(2 * ell, 2), (4, 1), (2, -2), (4 * ell, -1)], N)
        - 2 * geometric(2, N)
        + 2 * _q(2 * ell, N) * geometric(2 * ell, N)
        + constant(1, N)
    )


def _rho_kcolored(spec: VariantSpec) -> Series:
    # 1/(q^2;q^2)^k - k q^2/(1-q^2) - 1
    N, k = spec.order, spec.k
    return eta_quotient([(2, -k)], N) - k * _q(2, N) * geometric(2, N) - constant(1, N)


def _rho_cubic(spec: VariantSpec) -> Series:
    # 1/((q^2;q^2)(q^4;q^4)) - 2/(1-q^2) + q^6/(1-q^4) + 1 + q^2
    N = spec.order
    return (
        eta_quotient([(2, -1), (4, -1)], N)
        - 2 * geometric(2, N)
        + _q(6, N) * geometric(4, N)
        + constant(1, N)
        + _q(2, N)
    )


def _rho_pod(spec: VariantSpec) -> Series:
    # (q^4;q^4)/((q^2;q^2)(q^8;q^8)) - 1/(1-q^2)
    N = spec.order
    return eta_quotient([(4, 1), (2, -1), (8, -1)], N) - geometric(2, N)


def _rho_ped(spec: VariantSpec) -> Series:
    # (q^8;q^8)/(q^2;q^2) - 1/(1-q^2)
    N = spec.order
    return eta_quotient([(8, 1), (2, -1)], N) - geometric(2, N)


def _rho_epsilon(spec: VariantSpec) -> Series:
    # 1/(1-q^2) * [1/(q^4;q^4) - 1]
    N = spec.order
    return geometric(2, N) * (eta_quotient([(4, -1)], N) - constant(1, N))


_BUILDERS = {
    Variant.RHO: _rho,
    Variant.RHO_LREGULAR: _rho_lregular,
    Variant.RHO_OVER: _rho_over,
    Variant.RHO_OVER_ODD: _rho_over_odd,
    Variant.RHO_OVER_EVEN: _rho_over_even,
    Variant.RHO_OVER_LREGULAR: _rho_over_lregular,
    Variant.RHO_KCOLORED: _rho_kcolored,
    Variant.RHO_CUBIC: _rho_cubic,
    Variant.RHO_POD: _rho_pod,
    Variant.RHO_PED: _rho_ped,
    Variant.RHO_EPSILON: _rho_epsilon,
}


def build_gf(spec: VariantSpec, budget: Budget = DEFAULT_BUDGET) -> Series:
    if spec.order > budget.series:
        raise BudgetExceeded(f"Series are limited to N <= {budget.series}, asked for {spec.order} ({spec.label}).")
    return _BUILDERS[spec.variant](spec)


def literal_kcolored_gf(spec: VariantSpec) -> Series:
    """The k-coloured identity with 1/(q^k;q^k) as printed for p_{-k}, doubled to 1/(q^2k;q^2k).

    Only agrees with the counts at k = 1; kept to show the verifier catches it.
    """
    N, k = spec.order, spec.k
    return eta_quotient([(2 * k, -1)], N) - k * _q(2, N) * geometric(2, N) - constant(1, N)


def family_of(spec: VariantSpec) -> Family:
    table = {
        Variant.RHO: lambda: UNRESTRICTED,
        Variant.RHO_LREGULAR: lambda: Family.lregular(spec.ell),
        Variant.RHO_OVER: lambda: OVERPARTITION,
        Variant.RHO_OVER_ODD: lambda: OVERPARTITION_ODD,
        Variant.RHO_OVER_EVEN: lambda: OVERPARTITION_EVEN,
        Variant.RHO_OVER_LREGULAR: lambda: Family.overpartition_lregular(spec.ell),
        Variant.RHO_KCOLORED: lambda: Family.kcolored(spec.k),
        Variant.RHO_CUBIC: lambda: CUBIC,
        Variant.RHO_POD: lambda: POD,
        Variant.RHO_PED: lambda: PED,
        Variant.RHO_EPSILON: lambda: EVEN_LESS_THAN_ODD,
    }
    return table[spec.variant]()


def shape_violations(spec: VariantSpec, builder=build_gf) -> list[int]:
    """Indices where the series is negative or has a nonzero odd-degree term."""
    series = builder(spec)
    return sorted(set(odd_indices(series)) | set(negative_indices(series)))


# --- VERIFICATION ---
def _check_budget(spec: VariantSpec, oracle: Oracle, budget: Budget):
    N = spec.order
    if oracle in (Oracle.DIRECT, Oracle.BOTH) and N > budget.direct:
        raise BudgetExceeded(f"Direct enumeration is limited to N <= {budget.direct}, asked for {N} ({spec.label}).")
    if oracle in (Oracle.COMBINATOR, Oracle.BOTH) and N > budget.combinator:
        raise BudgetExceeded(f"Combinator checks are limited to N <= {budget.combinator}, asked for {N} ({spec.label}).")


def verify(spec: VariantSpec, oracle=Oracle.BOTH, *, builder=build_gf, budget: Budget = DEFAULT_BUDGET) -> VerificationReport:
    oracle = Oracle(oracle)
    _check_budget(spec, oracle, budget)

    start = time.perf_counter()
    series = builder(spec)
    family = family_of(spec)
    mismatches = []
    if not is_even_supported(series):
        logger.warning(f"{spec.label}: series has odd-degree terms")

    for n in range(spec.order + 1):
        value = series[n]
        expected = []
        if oracle is not Oracle.DIRECT:
            expected.append(rho_count(family, n))
        if oracle is not Oracle.COMBINATOR:
            expected.append(rho_direct(family, n))
        for truth in expected:
            if truth != value:
                logger.warning(f"{spec.label}: coefficient of q^{n} is {value}, enumeration gives {truth}")
                mismatches.append(Mismatch(n, value, truth))
                break
        logger.debug(f"{spec.label}: q^{n} checked")

    elapsed_ms = int((time.perf_counter() - start) * 1000)
    report = VerificationReport(spec, oracle, tuple(mismatches), elapsed_ms)
    if report.ok:
        logger.info(f"{spec.label} verified on 0..{spec.order} ({oracle.value}, {elapsed_ms} ms)")
    else:
        logger.warning(f"{spec.label} has {len(mismatches)} mismatches on 0..{spec.order}")
    return report


def all_specs(N: int, ells=DEFAULT_ELLS, colors=DEFAULT_COLORS) -> list[VariantSpec]:
    """Every variant at order N, parameterized ones swept over ells/colors, in Variant order."""
    specs = []
    for variant in Variant:
        if variant.needs_ell:
            specs.extend(VariantSpec(variant, N, ell=ell) for ell in ells)
        elif variant.needs_k:
            specs.extend(VariantSpec(variant, N, k=k) for k in colors)
        else:
            specs.append(VariantSpec(variant, N))
    return specs


def verify_all(
    N: int,
    ells=DEFAULT_ELLS,
    colors=DEFAULT_COLORS,
    *,
    oracle=Oracle.BOTH,
    builder=build_gf,
    budget: Budget = DEFAULT_BUDGET,
    workers: int = 1,
) -> list[VerificationReport]:
    oracle = Oracle(oracle)
    specs = all_specs(N, ells, colors)
    for spec in specs:
        _check_budget(spec, oracle, budget)

    check = partial(verify, oracle=oracle, builder=builder, budget=budget)
    if workers > 1:
        # map keeps submission order, so the result list does not depend on completion order
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(check, specs))
    else:
        reports = [check(spec) for spec in specs]

    failed = sum(not r.ok for r in reports)
    logger.info(f"verify_all N={N}: {len(reports) - failed}/{len(reports)} identities verified")
    return reports
