import csv
import io
import json
from enum import Enum

from src.gfcatalog import VerificationReport
from src.rho import RecurrenceRow, RhoCount


class OutputFormat(Enum):
    PLAIN = "plain"
    CSV = "csv"
    JSON = "json"


def _csv(header, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json(document) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


# --- SEQUENCE TABLES ---
def render_table(counts: list[RhoCount], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV:
        return _csv(("n", "value"), [(c.n, c.value) for c in counts])
    if fmt is OutputFormat.JSON:
        return _json([{"n": c.n, "value": c.value} for c in counts])
    return "".join(f"{c.n:>4}  {c.value}\n" for c in counts)


# --- VERIFICATION REPORTS ---
def _report_line(report: VerificationReport) -> str:
    spec = report.spec
    head = f"{spec.label} on 0..{spec.order} [{report.oracle.value}]"
    if report.ok:
        return f"✅ {head}: verified ({report.elapsed_ms} ms)"
    first = report.first_mismatch
    return (
        f"❌ {head}: {len(report.mismatches)} mismatches, first at n={first.n} "
        f"(series {first.series}, oracle {first.oracle})"
    )


def _report_row(report: VerificationReport) -> tuple:
    spec = report.spec
    first = report.first_mismatch
    return (
        spec.variant.value,
        "" if spec.ell is None else spec.ell,
        "" if spec.k is None else spec.k,
        spec.order,
        report.oracle.value,
        len(report.mismatches),
        "" if first is None else first.n,
    )


REPORT_COLUMNS = ("variant", "ell", "k", "order", "oracle", "mismatch_count", "first_mismatch_n")


def render_report(report: VerificationReport, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV:
        return _csv(REPORT_COLUMNS, [_report_row(report)])
    if fmt is OutputFormat.JSON:
        return _json(report.to_dict())
    lines = [_report_line(report)]
    lines += [f"    n={m.n}: series {m.series}, oracle {m.oracle}" for m in report.mismatches]
    return "\n".join(lines) + "\n"


def render_reports(reports: list[VerificationReport], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV:
        return _csv(REPORT_COLUMNS, [_report_row(r) for r in reports])
    if fmt is OutputFormat.JSON:
        return _json([r.to_dict() for r in reports])
    passed = sum(r.ok for r in reports)
    lines = [_report_line(r) for r in reports]
    lines.append(f"📊 {passed}/{len(reports)} identities verified")
    return "\n".join(lines) + "\n"


# --- RECURRENCE ---
RECURRENCE_COLUMNS = ("n", "rho", "rho_a", "a_half", "lhs", "rhs", "holds")


def render_recurrence(rows: list[RecurrenceRow], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV:
        return _csv(RECURRENCE_COLUMNS, [(r.n, r.rho, r.rho_a, r.a_half, r.lhs, r.rhs, str(r.holds).lower()) for r in rows])
    if fmt is OutputFormat.JSON:
        return _json([
            {"n": r.n, "rho": r.rho, "rho_a": r.rho_a, "a_half": r.a_half, "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds}
            for r in rows
        ])
    out = f"{'n':>4}  {'rho_a':>12}  {'2*rho_a':>12}  {'n(rho-1)+2a(n/2)':>18}\n"
    for r in rows:
        mark = "✅" if r.holds else "❌"
        out += f"{r.n:>4}  {r.rho_a:>12}  {r.lhs:>12}  {r.rhs:>18}  {mark}\n"
    return out


# --- PARTITION LISTINGS ---
def render_partitions(label: str, n: int, rendered: list[str], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV:
        return _csv(("index", "partition"), list(enumerate(rendered, start=1)))
    if fmt is OutputFormat.JSON:
        return _json({"variant": label, "n": n, "count": len(rendered), "partitions": rendered})
    out = f"📋 {label}({n}) = {len(rendered)}\n"
    out += "".join(f"• {text}\n" for text in rendered)
    return out
