"""Tests for census records and their renderings."""

from __future__ import annotations

import csv
import io
import json

import pytest
from pydantic import ValidationError

from gencayley.census import (
    CSV_COLUMNS,
    CensusReport,
    GroupRecord,
    GroupVerdict,
    export_report,
    report_to_csv,
    report_to_dict,
    report_to_json,
    report_to_markdown,
    save_report,
)

from ..conftest import make_row


def failing_row(**kwargs):
    values = {"connected": False, "integral": None, "roots": (), "branch": "FailsGeneration"}
    values.update(kwargs)
    return make_row(**values)


def make_report() -> CensusReport:
    z8_rows = [make_row(group="Z8", order=8, subset="{1, 3, 5}"), failing_row(group="Z8", order=8)]
    return CensusReport(
        kind="abelian",
        records=(
            GroupRecord.from_rows("Z4", 4, True, 1, []),
            GroupRecord.from_rows("Z6", 6, True, 1, [make_row()]),
            GroupRecord.from_rows("Z8", 8, True, 2, z8_rows),
            GroupRecord.from_rows(
                "Z2^3", 8, True, 1, [make_row(group="Z2^3", order=8, subset="{(1,0,0)}")]
            ),
        ),
    )


class TestCensusRow:
    def test_passes(self):
        assert make_row().passes
        assert not failing_row().passes
        assert not make_row(integral=False, roots=()).passes

    def test_describe(self):
        assert make_row().describe() == "Z6 alpha[0]=(g->5) S={1, 3, 5}: connected, integral"
        assert failing_row().describe().endswith(": disconnected (FailsGeneration)")
        assert make_row(integral=False).describe().endswith(": connected, not integral")


class TestGroupRecord:
    """Test the verdict derivation and its consistency checks."""

    def test_no_rows(self):
        record = GroupRecord.from_rows("Z4", 4, True, 1, [])
        assert record.verdict == GroupVerdict.NO_CUBIC
        assert record.witness is None

    def test_all_pass(self):
        record = GroupRecord.from_rows("Z6", 6, True, 1, [make_row(), make_row(alpha_class=1)])
        assert record.verdict == GroupVerdict.ALL_CONNECTED_INTEGRAL
        assert record.witness is None

    def test_first_failure_is_witness(self):
        first = failing_row(subset="{1, 2, 3}")
        record = GroupRecord.from_rows("Z6", 6, True, 1, [make_row(), first, failing_row()])
        assert record.verdict == GroupVerdict.EXCLUDED
        assert record.witness == first

    def test_inconsistent_verdicts(self):
        with pytest.raises(ValidationError):
            GroupRecord(
                name="Z6", order=6, abelian=True, involution_classes=1,
                rows=(make_row(),), verdict=GroupVerdict.NO_CUBIC,
            )
        with pytest.raises(ValidationError):
            GroupRecord(
                name="Z6", order=6, abelian=True, involution_classes=1,
                rows=(failing_row(),), verdict=GroupVerdict.ALL_CONNECTED_INTEGRAL,
            )
        with pytest.raises(ValidationError):
            GroupRecord(
                name="Z6", order=6, abelian=True, involution_classes=1,
                rows=(failing_row(),), verdict=GroupVerdict.EXCLUDED,
            )

    def test_witness_only_when_excluded(self):
        row = make_row()
        with pytest.raises(ValidationError):
            GroupRecord(
                name="Z6", order=6, abelian=True, involution_classes=1,
                rows=(row,), verdict=GroupVerdict.ALL_CONNECTED_INTEGRAL, witness=row,
            )


class TestCensusReport:
    def test_survivors_by_order_then_name(self):
        assert make_report().survivors == ["Z6", "Z2^3"]
        assert make_report().survivor_line() == "Z6, Z2^3"

    def test_record_lookup(self):
        report = make_report()
        assert report.record("Z8").verdict == GroupVerdict.EXCLUDED
        with pytest.raises(KeyError):
            report.record("Q8")

    def test_rows_flattened(self):
        assert len(make_report().rows) == 4


class TestJson:
    def test_survivors_included(self):
        data = json.loads(report_to_json(make_report()))
        assert data["survivors"] == ["Z6", "Z2^3"]
        assert data["records"][0]["verdict"] == "NoCubicGCS"

    def test_reload(self):
        report = make_report()
        data = report_to_dict(report)
        data.pop("survivors")
        assert CensusReport.model_validate(json.loads(json.dumps(data))) == report


class TestCsv:
    def test_header_and_rows(self):
        rows = list(csv.reader(io.StringIO(report_to_csv(make_report()))))
        assert tuple(rows[0]) == CSV_COLUMNS
        assert rows[1] == ["Z6", "6", "0", "{1, 3, 5}", "true", "true", "true", "IndexTwoCoset"]
        assert len(rows) == 5

    def test_undecided_integral_is_blank(self):
        rows = list(csv.reader(io.StringIO(report_to_csv(make_report()))))
        assert rows[3][6] == ""
        assert rows[3][4] == "false"


class TestMarkdown:
    def test_sections(self):
        text = report_to_markdown(make_report())
        assert text.startswith("# Census (abelian, k=3)\n")
        assert "## Z4 (order 4): NoCubicGCS\n\nNo valid subsets." in text
        assert "## Z8 (order 8): Excluded" in text
        assert "| 0 | g->5 | {1, 3, 5} | true | true | true | IndexTwoCoset |" in text

    def test_ends_with_survivors(self):
        assert report_to_markdown(make_report()).endswith("Survivors: Z6, Z2^3\n")

    def test_escapes_pipes(self):
        report = CensusReport(
            kind="abelian",
            records=(GroupRecord.from_rows("Z6", 6, True, 1, [make_row(alpha="x|y")]),),
        )
        assert "x\\|y" in report_to_markdown(report)


class TestExportReport:
    def test_dispatch(self):
        report = make_report()
        assert export_report(report, "md") == report_to_markdown(report)
        assert export_report(report, "csv") == report_to_csv(report)
        assert export_report(report) == report_to_json(report)

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            export_report(make_report(), "xlsx")  # type: ignore[arg-type]

    def test_save(self, tmp_path):
        path = tmp_path / "census.csv"
        save_report(make_report(), path, format="csv")
        assert path.read_text(encoding="utf-8") == report_to_csv(make_report())
