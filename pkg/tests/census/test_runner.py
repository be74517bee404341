"""Tests for the census runner."""

from __future__ import annotations

import pytest

from gencayley.catalog import build_group
from gencayley.census import (
    CensusReport,
    CensusSettings,
    GroupRecord,
    GroupVerdict,
    cayley_sum_census,
    cayley_sum_rows,
    classify_group,
    compare_survivors,
    evaluate_row,
    isomorphism_families,
    run_census,
)
from gencayley.gcs import GCSubset

from ..conftest import make_gcs, make_row


class TestEvaluateRow:
    def test_connected_integral(self, d6):
        S = make_gcs(d6, "a->a^-1, b->b", "b, a b, a^2 b")
        row = evaluate_row(S, 1, "D6")
        assert row.group == "D6"
        assert row.order == 6
        assert row.alpha_class == 1
        assert row.subset == "{b, a b, a^2 b}"
        assert row.connected and row.bipartite and row.integral
        assert row.roots == (3, 0, 0, 0, 0, -3)
        assert row.branch == "IndexTwoCoset"

    def test_disconnected_skips_spectrum(self):
        row = evaluate_row(make_gcs("D8", "a->a^3, b->b", "a, a^3"), 0, "D8")
        assert not row.connected
        assert row.integral is None
        assert row.roots == ()
        assert row.branch == "FailsGeneration"

    def test_not_integral(self):
        row = evaluate_row(make_gcs("D10", "a->a^-1, b->b", "b, a b, a^4 b"), 0, "D10")
        assert row.connected
        assert row.integral is False
        assert not row.passes

    def test_default_name_is_label(self, z14_bipartite: GCSubset):
        assert evaluate_row(z14_bipartite, 0).group == z14_bipartite.group.label


class TestClassifyGroup:
    """Test per-group verdicts on small groups."""

    def test_no_cubic(self):
        record = classify_group(build_group("Z4"), name="Z4")
        assert record.verdict == GroupVerdict.NO_CUBIC
        assert record.involution_classes == 1
        assert record.rows == ()

    def test_survivor(self):
        record = classify_group(build_group("Q8"), name="Q8")
        assert record.verdict == GroupVerdict.ALL_CONNECTED_INTEGRAL
        assert not record.abelian
        assert record.involution_classes == 2
        assert len(record.rows) == 8

    def test_excluded_carries_witness(self):
        record = classify_group(build_group("D10"), name="D10")
        assert record.verdict == GroupVerdict.EXCLUDED
        assert record.witness is not None
        assert not record.witness.passes

    def test_reduction_keeps_verdict(self, d6):
        reduced = classify_group(d6)
        full = classify_group(d6, use_conjugacy_reduction=False)
        assert reduced.verdict == full.verdict == GroupVerdict.ALL_CONNECTED_INTEGRAL
        assert len(full.rows) >= len(reduced.rows)
        assert {row.alpha_class for row in full.rows} == {row.alpha_class for row in reduced.rows}

    def test_include_identity(self):
        """alpha = id becomes class 0 and adds {1, 3, 5} and {2, 3, 4}."""
        record = classify_group(build_group("Z6"), include_identity=True, name="Z6")
        assert record.involution_classes == 2
        identity_rows = [row.subset for row in record.rows if row.alpha_class == 0]
        assert identity_rows == ["{1, 3, 5}", "{2, 3, 4}"]
        assert len(record.rows) == 3


class TestSurvivorSpectra:
    """Spectra of every cubic graph of the surviving groups."""

    @pytest.mark.parametrize("name", ["Z6", "Z8", "Z2^3", "D6", "D8", "Q8"])
    def test_roots_are_consistent(self, name):
        record = classify_group(build_group(name), name=name)
        assert record.verdict == GroupVerdict.ALL_CONNECTED_INTEGRAL
        for row in record.rows:
            assert len(row.roots) == row.order
            assert all(-3 <= r <= 3 for r in row.roots)
            assert row.roots[0] == 3
            assert sum(row.roots) == 0
            assert sum(r * r for r in row.roots) == 3 * row.order


class TestCayleySum:
    def test_z6_rows(self):
        rows = cayley_sum_rows(build_group("Z6"), name="Z6")
        assert len(rows) == 1
        assert rows[0].subset == "{1, 3, 5}"
        assert rows[0].alpha == "sum"
        assert rows[0].roots == (3, 0, 0, 0, 0, -3)

    def test_squares_leave_too_few_elements(self):
        assert cayley_sum_rows(build_group("Z4")) == []

    def test_small_orders(self):
        report = cayley_sum_census(CensusSettings(orders=(4, 6)))
        assert report.kind == "cayley-sum"
        assert report.survivors == ["Z2^2", "Z6"]

    def test_disconnected_sum_graphs_are_skipped(self):
        """The 7 lines {x, y, x + y} of Z2^3 give disconnected graphs; 28 triples remain."""
        rows = cayley_sum_rows(build_group("Z2^3"), require_generating=False)
        assert len(rows) == 28
        assert all(row.connected and row.integral for row in rows)

    def test_all_subsets_keeps_survivors(self):
        settings = CensusSettings(orders=(4, 6, 8), require_generating=False)
        assert cayley_sum_census(settings).survivors == ["Z2^2", "Z6", "Z2^3", "Z8"]


class TestCompareSurvivors:
    def make_report(self) -> CensusReport:
        failing = make_row(group="Z8", order=8, connected=False, integral=None, roots=(),
                           branch="FailsGeneration")
        return CensusReport(
            kind="abelian",
            records=(
                GroupRecord.from_rows("Z6", 6, True, 1, [make_row()]),
                GroupRecord.from_rows("Z8", 8, True, 1, [failing]),
            ),
        )

    def test_match(self):
        assert compare_survivors(self.make_report(), ["Z6"]) == []

    def test_missing_and_extra(self):
        lines = compare_survivors(self.make_report(), ["Z8", "D6"])
        assert lines[0] == "missing: D6 (not in the census)"
        assert lines[1].startswith("missing: Z8 (Excluded, first counterexample: Z8 alpha[0]")
        assert lines[2] == "extra: Z6"


class TestIsomorphismFamilies:
    def test_all_isomorphic(self):
        families = isomorphism_families()
        assert [len(f.members) for f in families] == [12, 3]
        assert all(f.all_isomorphic for f in families)


@pytest.mark.slow
class TestFullCensus:
    """Sweep every catalog order."""

    def test_abelian(self):
        assert run_census(CensusSettings(kind="abelian")).survivors == ["Z6", "Z2^3", "Z8"]

    def test_nonabelian(self):
        report = run_census(CensusSettings(kind="nonabelian", workers=2))
        assert report.survivors == ["D6", "D8", "Q8"]
        assert compare_survivors(report, ["D6", "D8", "Q8"]) == []

    def test_cayley_sum_all_square_free(self):
        report = cayley_sum_census(CensusSettings(require_generating=False))
        assert report.survivors == ["Z2^2", "Z6", "Z2^3", "Z8"]
