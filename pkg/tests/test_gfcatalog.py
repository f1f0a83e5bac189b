import json
from functools import partial

import pytest

from src.combinatorics import CUBIC, Family, count
from src.config import Budget
from src.errors import BudgetExceeded, InvalidParameter
from src.gfcatalog import (
    Mismatch,
    Oracle,
    Variant,
    VariantSpec,
    VerificationReport,
    all_specs,
    build_gf,
    family_of,
    literal_kcolored_gf,
    shape_violations,
    verify,
    verify_all,
)
from src.rho import rho_count
from src.series import monomial

ELLS = (2, 3, 4, 5, 7)
COLORS = (1, 2, 3, 5)


def perturbed_at_ten(spec):
    return build_gf(spec) + monomial(1, 10, spec.order)


def wrong_pod_formula(spec):
    if spec.variant is Variant.RHO_POD:
        return build_gf(spec) + monomial(1, 6, spec.order)
    return build_gf(spec)


# --- SPECS ---
def test_spec_parameters_are_checked():
    with pytest.raises(InvalidParameter):
        VariantSpec(Variant.RHO_LREGULAR, 10, ell=1)
    with pytest.raises(InvalidParameter):
        VariantSpec(Variant.RHO_KCOLORED, 10)
    with pytest.raises(InvalidParameter):
        VariantSpec(Variant.RHO, -1)
    with pytest.raises(InvalidParameter):
        VariantSpec.parse("nonsuch", 10)


def test_parse_drops_unused_parameters():
    spec = VariantSpec.parse("rho", 10, ell=3, k=2)
    assert spec == VariantSpec(Variant.RHO, 10)
    assert spec.params == {}
    assert VariantSpec.parse("rho-lregular", 10, ell=3).params == {"ell": 3}


def test_all_specs_order():
    specs = all_specs(10, (2, 3), (1,))
    assert [s.label for s in specs] == [
        "rho", "rho-lregular(ell=2)", "rho-lregular(ell=3)", "rho-over", "rho-over-odd", "rho-over-even",
        "rho-over-lregular(ell=2)", "rho-over-lregular(ell=3)", "rho-kcolored(k=1)", "rho-cubic", "rho-pod",
        "rho-ped", "rho-epsilon",
    ]


def test_family_of():
    assert family_of(VariantSpec(Variant.RHO_CUBIC, 5)) == CUBIC
    assert family_of(VariantSpec(Variant.RHO_LREGULAR, 5, ell=5)) == Family.lregular(5)
    assert family_of(VariantSpec(Variant.RHO_KCOLORED, 5, k=3)) == Family.kcolored(3)


# --- GENERATING FUNCTIONS ---
def test_build_gf_examples():
    assert build_gf(VariantSpec(Variant.RHO, 12))[12] == 10
    assert build_gf(VariantSpec(Variant.RHO_EPSILON, 10))[10] == 3
    assert build_gf(VariantSpec(Variant.RHO_OVER, 8))[8] == 12


@pytest.mark.parametrize("spec", all_specs(200, ELLS, COLORS), ids=lambda s: s.label)
def test_build_gf_shape(spec):
    series = build_gf(spec)
    assert series.order == 200
    assert series[0] == 0
    assert shape_violations(spec) == []


def test_shape_violations_flag_odd_and_negative_terms():
    spec = VariantSpec(Variant.RHO, 20)
    assert shape_violations(spec, builder=lambda s: build_gf(s) + monomial(1, 7, s.order)) == [7]
    assert shape_violations(spec, builder=lambda s: build_gf(s) - monomial(5, 4, s.order)) == [4]


@pytest.mark.parametrize("spec", all_specs(40, ELLS, COLORS), ids=lambda s: s.label)
def test_build_gf_matches_combinator(spec):
    series = build_gf(spec)
    family = family_of(spec)
    assert [series[n] for n in range(41)] == [rho_count(family, n) for n in range(41)]


# --- VERIFICATION ---
def test_verify_rho_both():
    report = verify(VariantSpec(Variant.RHO, 40), Oracle.BOTH)
    assert report.ok
    assert report.mismatches == ()
    assert report.checked_range == range(41)


def test_verify_reports_perturbed_coefficient():
    report = verify(VariantSpec(Variant.RHO, 20), Oracle.BOTH, builder=perturbed_at_ten)
    oracle = rho_count(family_of(report.spec), 10)
    assert report.mismatches == (Mismatch(10, oracle + 1, oracle),)
    assert report.first_mismatch.n == 10


def test_verify_kcolored_combinator():
    assert verify(VariantSpec(Variant.RHO_KCOLORED, 30, k=2), "combinator").ok


def test_literal_kcolored_formula_is_caught():
    report = verify(VariantSpec(Variant.RHO_KCOLORED, 30, k=2), Oracle.COMBINATOR, builder=literal_kcolored_gf)
    assert not report.ok
    assert report.first_mismatch.n <= 6
    assert verify(VariantSpec(Variant.RHO_KCOLORED, 30, k=1), Oracle.COMBINATOR, builder=literal_kcolored_gf).ok


def test_verify_is_deterministic():
    spec = VariantSpec(Variant.RHO_CUBIC, 30)
    first = verify(spec, Oracle.BOTH, builder=perturbed_at_ten)
    second = verify(spec, Oracle.BOTH, builder=perturbed_at_ten)
    assert first.mismatches == second.mismatches


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        build_gf(VariantSpec(Variant.RHO, 201))
    with pytest.raises(BudgetExceeded):
        shape_violations(VariantSpec(Variant.RHO_CUBIC, 40), builder=partial(build_gf, budget=Budget(series=30)))
    with pytest.raises(BudgetExceeded):
        verify(VariantSpec(Variant.RHO, 61), Oracle.DIRECT)
    with pytest.raises(BudgetExceeded):
        verify(VariantSpec(Variant.RHO, 121), Oracle.COMBINATOR)
    with pytest.raises(BudgetExceeded):
        verify(VariantSpec(Variant.RHO, 12), Oracle.BOTH, budget=Budget(direct=10))
    with pytest.raises(BudgetExceeded):
        verify_all(70)


def test_verify_all_full_suite():
    reports = verify_all(60, ELLS, COLORS)
    assert len(reports) == 22
    assert all(r.ok for r in reports)
    assert [r.spec for r in reports] == all_specs(60, ELLS, COLORS)


def test_verify_all_at_order_zero():
    reports = verify_all(0, (2,), (1,))
    assert len(reports) == len(Variant)
    assert all(r.ok for r in reports)


def test_verify_all_isolates_wrong_formula():
    reports = verify_all(20, (2, 3), (1, 2), builder=wrong_pod_formula)
    failing = [r.spec.variant for r in reports if not r.ok]
    assert failing == [Variant.RHO_POD]


def test_verify_all_in_parallel_keeps_order():
    serial = verify_all(24, (2, 3), (1, 2))
    parallel = verify_all(24, (2, 3), (1, 2), workers=2)
    assert [(r.spec, r.mismatches) for r in parallel] == [(r.spec, r.mismatches) for r in serial]


def test_report_json_round_trip():
    report = verify(VariantSpec(Variant.RHO_LREGULAR, 20, ell=3), Oracle.BOTH, builder=perturbed_at_ten)
    data = json.loads(json.dumps(report.to_dict()))
    assert data["params"] == {"ell": 3}
    assert data["mismatches"][0]["n"] == 10
    restored = VerificationReport.from_dict(data)
    assert restored == report
    assert restored.to_dict() == report.to_dict()


@pytest.mark.parametrize("spec", all_specs(120, ELLS, COLORS), ids=lambda s: s.label)
def test_combinator_to_one_twenty(spec):
    assert verify(spec, Oracle.COMBINATOR).ok


def test_combinator_at_full_budget_is_quick():
    count.cache_clear()
    report = verify(VariantSpec(Variant.RHO_KCOLORED, 120, k=5), Oracle.COMBINATOR)
    assert report.ok
    assert report.elapsed_ms < 10_000
