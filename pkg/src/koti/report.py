"""Text, JSON and CSV renderings of run results.

Every renderer is a pure function of its input, so output is byte-identical
across runs and worker counts.
"""
from __future__ import annotations

import csv
import io
import json
from importlib import resources

from .dsl.interpreter import Report
from .tetralemma import CensusReport, Corner

FORMATS = ("table", "json", "csv")
CENSUS_COLUMNS = ("space_size", "event_mask", "scheme", "c1", "c2", "c3", "c4", "total")


def load_schema(name: str) -> dict:
    """One of ``report``, ``census`` or ``nagarjuna``."""
    text = resources.files("koti").joinpath("schemas", f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def to_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _compact(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def render_report(report: Report, fmt: str) -> str:
    if fmt == "json":
        return to_json(report.as_dict())
    if fmt == "csv":
        rows = [(a.line, a.column, "assert", a.statement, "pass" if a.passed else "fail")
                for a in report.assertions]
        rows += [(q.line, q.column, q.kind, q.statement, _compact(q.result)) for q in report.queries]
        rows.sort(key=lambda r: (r[0], r[1]))
        return _csv(rows, ("line", "column", "kind", "statement", "result"))
    return _report_table(report)


def _report_table(report: Report) -> str:
    out = []
    if report.space is not None:
        out.append(f"space {report.space_name} = {{{', '.join(report.space.outcomes)}}}")
    for p in report.propositions:
        out.append(f"prop {p['name']} = {p['expr']}  (unasserted)")
    items = [((a.line, a.column), a) for a in report.assertions]
    items += [((q.line, q.column), q) for q in report.queries]
    for (line, col), item in sorted(items, key=lambda t: t[0]):
        if hasattr(item, "passed"):
            out.append(f"{'PASS' if item.passed else 'FAIL'}  {line}:{col}  {item.statement}")
            continue
        out.append(f"{line}:{col}  {item.statement}")
        r = item.result
        if item.kind == "census":
            out.extend(_corner_rows(tuple(r["corners"][f"c{i}"] for i in range(1, 5)), r["total"]))
        elif item.kind == "corner":
            out.append(f"    corner {r['corner']}: {r['reading']}")
        elif item.kind == "classify":
            flags = [k for k in ("is_zero", "is_unital", "is_proper", "is_multiplicative", "is_homomorphic") if r[k]]
            out.append(f"    flags: {', '.join(flags) or '-'}; schemes: {', '.join(r['schemes'])}")
        elif item.kind == "causation":
            for scheme, count in r["denial_census"].items():
                out.append(f"    deny all four causes, {scheme}: {count}")
        elif item.kind == "deny_all":
            out.append(f"    denies all: {str(r['denies_all']).lower()}")
        else:
            out.append(f"    count: {r['count']}")
    failed = sum(not a.passed for a in report.assertions)
    out.append(f"{len(report.assertions)} assertions, {failed} failed, {len(report.queries)} queries")
    return "\n".join(out) + "\n"


def _corner_rows(counts, total):
    width = max(len(str(c)) for c in (*counts, total))
    rows = [f"    ({c.value}) {c.reading:<26} {counts[c.value - 1]:>{width}}" for c in Corner]
    rows.append(f"    {'total':<30} {total:>{width}}")
    return rows


def render_census(rep: CensusReport, fmt: str) -> str:
    if fmt == "json":
        return to_json(rep.as_dict())
    if fmt == "csv":
        row = (rep.space.n, rep.event.mask, rep.scheme.value, *rep.counts, rep.total)
        return _csv([row], CENSUS_COLUMNS)
    head = (f"space {{{', '.join(rep.space.outcomes)}}}  event {{{', '.join(rep.event.members)}}}"
            f"  scheme {rep.scheme.value}")
    return "\n".join([head, *_corner_rows(rep.counts, rep.total)]) + "\n"


def render_nagarjuna(data: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(data)
    if fmt == "csv":
        keys = ("space_size", "event_mask", "universe", "scheme2", "outcomes", "count")
        row = (len(data["space"]), data["event_mask"], data["universe"], data["scheme2"],
               data["outcomes"], data["count"])
        return _csv([row], keys)
    return (f"space {{{', '.join(data['space'])}}}  event {{{', '.join(data['event'])}}}\n"
            f"    universe {data['universe']} ({data['outcomes']} outcomes), scheme2 {data['scheme2']}\n"
            f"    coevents denying all four corners: {data['count']}\n")
