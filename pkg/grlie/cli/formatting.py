"""
Rendering of reports as tables, JSON or CSV.

JSON output wraps the report in SuccessResponse. Every renderer returns the
full text including the trailing newline.
"""

import csv
import io
from typing import Iterable, List, Sequence

from pydantic import BaseModel

from grlie.schemas.responses import (
    RankTableReport,
    ResonanceReport,
    SeriesReport,
    SuccessResponse,
    VerdictReport,
    VerifyReport,
)

FORMATS = ("table", "json", "csv")


def _csv(header: Sequence, rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _table(header: Sequence, rows: Iterable[Sequence]) -> str:
    rows = [[str(v) for v in row] for row in rows]
    header = [str(h) for h in header]
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() for row in [header] + rows]
    return "\n".join(lines) + "\n"


def _series(report: SeriesReport, fmt: str) -> str:
    if fmt == "csv":
        return _csv(["k", report.variable], report.pairs())
    if report.rendered is not None:
        return f"{report.rendered}\n"
    return _table(["k", report.variable], report.pairs())


def _ranks(report: RankTableReport, fmt: str) -> str:
    names = list(report.methods)
    K = max((len(v) for v in report.methods.values()), default=0)
    rows = [[k] + [report.methods[name][k - 1] for name in names] for k in range(1, K + 1)]
    if fmt == "csv":
        return _csv(["k"] + names, rows)
    footer = "methods agree\n" if report.agree else "methods DISAGREE\n"
    return _table(["k"] + names, rows) + footer


def _resonance(report: ResonanceReport, fmt: str) -> str:
    rows: List[List] = [["depth", report.depth], ["dimension", report.dimension]]
    rows += [["generator", g] for g in report.ideal_generators]
    rows += [["component", c] for c in report.verified_components]
    if fmt == "csv":
        return _csv(["field", "value"], rows)
    lines = [
        f"R^1_{report.depth}({report.label})" if report.label else f"R^1_{report.depth}",
        f"dimension: {report.dimension if report.dimension is not None else 'not computed'}",
        f"ideal generators: {len(report.ideal_generators)}",
    ]
    lines += [f"  {g}" for g in report.ideal_generators]
    lines.append(f"verified components: {len(report.verified_components)}")
    lines += [f"  {c}" for c in report.verified_components]
    return "\n".join(lines) + "\n"


def _verdict(report: VerdictReport, fmt: str) -> str:
    if fmt == "csv":
        rows = [[name, i, v] for name, values in report.details.items() for i, v in enumerate(values)]
        return _csv(["series", "index", "value"], rows)
    lines = [f"{report.label}: {report.description}"]
    lines += [f"  {name}: {', '.join(map(str, values))}" for name, values in report.details.items()]
    return "\n".join(lines) + "\n"


def _verify(report: VerifyReport, fmt: str) -> str:
    if fmt == "csv":
        rows = [[i.name, "PASS" if i.passed else "FAIL", f"{i.seconds:.2f}", i.detail] for i in report.items]
        return _csv(["item", "status", "seconds", "detail"], rows)
    lines = [
        f"{'PASS' if i.passed else 'FAIL'}  {i.name}  ({i.seconds:.2f}s)" + (f"  {i.detail}" if i.detail else "")
        for i in report.items
    ]
    passed = sum(i.passed for i in report.items)
    lines.append(f"{passed}/{len(report.items)} items passed")
    return "\n".join(lines) + "\n"


_RENDERERS = {
    SeriesReport: _series,
    RankTableReport: _ranks,
    ResonanceReport: _resonance,
    VerdictReport: _verdict,
    VerifyReport: _verify,
}


def render(report: BaseModel, fmt: str = "table") -> str:
    """
    Text for a report in one of the output formats.

    Raises:
        ValueError: for an unknown format or report type
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if fmt == "json":
        return SuccessResponse(data=report).model_dump_json() + "\n"
    renderer = _RENDERERS.get(type(report))
    if renderer is None:
        raise ValueError(f"no renderer for {type(report).__name__}")
    return renderer(report, fmt)
