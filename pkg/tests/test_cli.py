import io
import json

import pytest

from src.commands.recurrence import cmd_recurrence
from src.commands.tables import cmd_partitions, cmd_table
from src.commands.verification import cmd_verify, cmd_verify_all
from src.gfcatalog import VerificationReport


def run(command, *args, **kwargs):
    out = io.StringIO()
    status = command(*args, out=out, **kwargs)
    return status, out.getvalue()


# --- TABLE ---
def test_table_rho_csv():
    status, text = run(cmd_table, "rho", limit=12, fmt="csv")
    lines = text.splitlines()
    assert status == 0
    assert lines[0] == "n,value"
    assert lines[-1] == "12,10"
    assert len(lines) == 14


def test_table_rho_epsilon_plain():
    status, text = run(cmd_table, "rho-epsilon", limit=10)
    assert status == 0
    assert text.splitlines()[-1].split() == ["10", "3"]


def test_table_json():
    status, text = run(cmd_table, "rho-kcolored", colors=2, limit=6, fmt="json")
    assert status == 0
    assert json.loads(text)[-1] == {"n": 6, "value": 8}


@pytest.mark.parametrize(
    "kwargs",
    [
        {"variant": "rho-lregular", "ell": 1, "limit": 10},
        {"variant": "rho-lregular", "limit": 10},
        {"variant": "nonsuch", "limit": 10},
        {"variant": "rho", "limit": 10, "fmt": "xml"},
        {"variant": "rho", "limit": -1},
    ],
)
def test_table_usage_errors(kwargs, capsys):
    kwargs = dict(kwargs)
    variant = kwargs.pop("variant")
    status, text = run(cmd_table, variant, **kwargs)
    assert status == 2
    assert text == ""
    assert capsys.readouterr().err.startswith("❌")


# --- PARTITIONS ---
def test_partitions_rho_epsilon():
    status, text = run(cmd_partitions, "rho-epsilon", size=10, fmt="json")
    assert status == 0
    assert json.loads(text)["partitions"] == ["5+3+2", "5+3+1+1", "5+1+1+1+1+1"]


def test_partitions_plain_counts():
    status, text = run(cmd_partitions, "rho", size=12)
    lines = text.splitlines()
    assert status == 0
    assert "= 10" in lines[0]
    assert lines[1] == "• 6+5+1"
    assert len(lines) == 11


def test_partitions_listing_budget():
    status, _ = run(cmd_partitions, "rho", size=100)
    assert status == 2


# --- VERIFY ---
def test_verify_rho_both():
    status, text = run(cmd_verify, "rho", limit=40, oracle="both")
    assert status == 0
    assert text.startswith("✅")


def test_verify_kcolored_json():
    status, text = run(cmd_verify, "rho-kcolored", colors=2, limit=30, fmt="json")
    document = json.loads(text)
    assert status == 0
    assert document["mismatches"] == []
    assert document["params"] == {"k": 2}
    assert set(document) == {"variant", "params", "order", "oracle", "mismatches", "elapsed_ms"}


def test_verify_json_round_trips():
    _, text = run(cmd_verify, "rho-over-lregular", ell=3, limit=20, fmt="json")
    document = json.loads(text)
    assert VerificationReport.from_dict(document).to_dict() == document


def test_verify_unknown_variant():
    status, _ = run(cmd_verify, "nonsuch")
    assert status == 2


def test_verify_beyond_direct_budget():
    status, _ = run(cmd_verify, "rho", limit=80, oracle="direct-enumeration")
    assert status == 2


def test_verify_bad_oracle():
    status, _ = run(cmd_verify, "rho", limit=10, oracle="psychic")
    assert status == 2


# --- VERIFY-ALL ---
def test_verify_all_csv():
    status, text = run(cmd_verify_all, limit=60, fmt="csv")
    lines = text.splitlines()
    assert status == 0
    assert lines[0] == "variant,ell,k,order,oracle,mismatch_count,first_mismatch_n"
    assert len(lines) == 1 + 22
    assert lines[1] == "rho,,,60,both,0,"


def test_verify_all_restricted_sweep():
    status, text = run(cmd_verify_all, limit=30, ells=[2, 3], colors=[1, 2], fmt="json")
    reports = json.loads(text)
    assert status == 0
    assert len(reports) == 14
    assert {r["params"].get("ell") for r in reports if r["variant"] == "rho-lregular"} == {2, 3}
    assert {r["params"]["k"] for r in reports if r["variant"] == "rho-kcolored"} == {1, 2}


def test_verify_all_rejects_bad_ell():
    status, _ = run(cmd_verify_all, limit=10, ells=[1])
    assert status == 2


# --- RECURRENCE ---
def test_recurrence_row_twelve():
    status, text = run(cmd_recurrence, limit=12, fmt="json")
    rows = json.loads(text)
    assert status == 0
    assert rows[-1] == {"n": 12, "rho": 10, "rho_a": 99, "a_half": 45, "lhs": 198, "rhs": 198, "holds": True}


def test_recurrence_single_row():
    status, text = run(cmd_recurrence, limit=2, fmt="csv")
    assert status == 0
    assert text.splitlines() == ["n,rho,rho_a,a_half,lhs,rhs,holds", "2,0,0,1,0,0,true"]


def test_recurrence_to_eighty():
    status, _ = run(cmd_recurrence, limit=80)
    assert status == 0


def test_recurrence_needs_limit_two():
    status, _ = run(cmd_recurrence, limit=1)
    assert status == 2


def test_output_is_deterministic():
    assert run(cmd_table, "rho-cubic", limit=30, fmt="csv") == run(cmd_table, "rho-cubic", limit=30, fmt="csv")
