"""Census records and their JSON, CSV and Markdown renderings.

Supports dumping CensusReport to:
- dict (via model_dump)
- JSON string
- CSV (one line per row)
- Markdown (one table per group)
- File path, in any of the above
"""

from __future__ import annotations

import csv
import io
import json
from enum import Enum
from os import PathLike
from pathlib import Path
from typing import Any, Literal

from pydantic import model_validator

from gencayley._base import GCModel

ReportFormat = Literal["json", "csv", "md"]

CSV_COLUMNS = (
    "group",
    "order",
    "alpha_class",
    "subset",
    "connected",
    "bipartite",
    "integral",
    "branch",
)


class GroupVerdict(str, Enum):
    ALL_CONNECTED_INTEGRAL = "AllConnectedIntegral"
    NO_CUBIC = "NoCubicGCS"
    EXCLUDED = "Excluded"


class CensusRow(GCModel):
    """One graph of the census.

    Attributes:
        group: Group name
        order: |G|
        alpha_class: Index of the involution class (0 for Cayley sum rows)
        alpha: Generator images of the automorphism used
        subset: The connection set, "{x, y, z}"
        connected: Connectivity verdict
        bipartite: Bipartiteness verdict
        integral: Integral spectrum, only decided for connected graphs
        roots: Eigenvalues when integral
        branch: Clause of the connectivity criterion that decided
    """

    group: str
    order: int
    alpha_class: int
    alpha: str
    subset: str
    connected: bool
    bipartite: bool
    integral: bool | None = None
    roots: tuple[int, ...] = ()
    branch: str | None = None

    @property
    def passes(self) -> bool:
        return self.connected and bool(self.integral)

    def describe(self) -> str:
        status = "connected" if self.connected else f"disconnected ({self.branch})"
        if self.connected:
            status += ", integral" if self.integral else ", not integral"
        return f"{self.group} alpha[{self.alpha_class}]=({self.alpha}) S={self.subset}: {status}"


class GroupRecord(GCModel):
    """Per-group outcome of a census."""

    name: str
    order: int
    abelian: bool
    involution_classes: int
    rows: tuple[CensusRow, ...] = ()
    verdict: GroupVerdict
    witness: CensusRow | None = None

    @model_validator(mode="after")
    def _check_verdict(self) -> GroupRecord:
        if self.verdict == GroupVerdict.NO_CUBIC:
            if self.rows:
                raise ValueError("NoCubicGCS records carry no rows")
        elif self.verdict == GroupVerdict.ALL_CONNECTED_INTEGRAL:
            if not self.rows or not all(row.passes for row in self.rows):
                raise ValueError("AllConnectedIntegral needs rows that all pass")
        else:
            if self.witness is None or self.witness.passes or self.witness not in self.rows:
                raise ValueError("Excluded records carry one of their failing rows")
        if self.verdict != GroupVerdict.EXCLUDED and self.witness is not None:
            raise ValueError("Only excluded records carry a witness")
        return self

    @classmethod
    def from_rows(
        cls, name: str, order: int, abelian: bool, classes: int, rows: list[CensusRow]
    ) -> GroupRecord:
        failing = next((row for row in rows if not row.passes), None)
        if not rows:
            verdict = GroupVerdict.NO_CUBIC
        elif failing is None:
            verdict = GroupVerdict.ALL_CONNECTED_INTEGRAL
        else:
            verdict = GroupVerdict.EXCLUDED
        return cls(
            name=name,
            order=order,
            abelian=abelian,
            involution_classes=classes,
            rows=tuple(rows),
            verdict=verdict,
            witness=failing,
        )


class CensusReport(GCModel):
    """Records for every group swept, in catalog order."""

    kind: str
    subset_size: int = 3
    records: tuple[GroupRecord, ...] = ()

    @property
    def survivors(self) -> list[str]:
        """Groups whose graphs are all connected and integral, by (order, name)."""
        alive = [r for r in self.records if r.verdict == GroupVerdict.ALL_CONNECTED_INTEGRAL]
        return [r.name for r in sorted(alive, key=lambda r: (r.order, r.name))]

    def survivor_line(self) -> str:
        return ", ".join(self.survivors)

    def record(self, name: str) -> GroupRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def rows(self) -> list[CensusRow]:
        return [row for r in self.records for row in r.rows]


def report_to_dict(report: CensusReport) -> dict[str, Any]:
    data = report.model_dump(mode="json")
    data["survivors"] = report.survivors
    return data


def report_to_json(report: CensusReport, *, indent: int | None = 2) -> str:
    """Serialize a report to JSON, with the survivor list appended."""
    return json.dumps(report_to_dict(report), indent=indent, ensure_ascii=False)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def report_to_csv(report: CensusReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        writer.writerow(
            [
                row.group,
                row.order,
                row.alpha_class,
                row.subset,
                _cell(row.connected),
                _cell(row.bipartite),
                _cell(row.integral),
                _cell(row.branch),
            ]
        )
    return buffer.getvalue()


def report_to_markdown(report: CensusReport) -> str:
    """One section per group with its verdict and a table of rows."""
    lines = [f"# Census ({report.kind}, k={report.subset_size})", ""]
    for r in report.records:
        lines.append(f"## {r.name} (order {r.order}): {r.verdict.value}")
        lines.append("")
        if not r.rows:
            lines.append("No valid subsets.")
            lines.append("")
            continue
        lines.append("| alpha class | alpha | subset | connected | bipartite | integral | branch |")
        lines.append("|---|---|---|---|---|---|---|")
        for row in r.rows:
            cells = [
                str(row.alpha_class),
                row.alpha,
                row.subset,
                _cell(row.connected),
                _cell(row.bipartite),
                _cell(row.integral),
                _cell(row.branch),
            ]
            lines.append("| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |")
        lines.append("")
    lines.append(f"Survivors: {report.survivor_line()}")
    return "\n".join(lines) + "\n"


def export_report(report: CensusReport, format: ReportFormat = "json") -> str:
    """Render a report.

    Raises:
        ValueError: For an unknown format name
    """
    if format == "json":
        return report_to_json(report)
    if format == "csv":
        return report_to_csv(report)
    if format == "md":
        return report_to_markdown(report)
    raise ValueError(f"Unknown report format: {format!r}")


def save_report(
    report: CensusReport, path: str | PathLike[str], format: ReportFormat = "json"
) -> None:
    """Write a report to a file in the given format."""
    Path(path).write_text(export_report(report, format), encoding="utf-8")
