"""Censuses over the catalog, regression fixtures and the D8 involution table.

    >>> from gencayley.census import CensusSettings, run_census
    >>> run_census(CensusSettings(orders=(6, 8))).survivor_line()
    'Z6, Z2^3, Z8'
"""

from gencayley.census.fixtures import (
    Expectation,
    Fixture,
    FixtureFactor,
    FixtureResult,
    get_fixture,
    list_fixtures,
    run_fixture,
    run_fixtures,
)
from gencayley.census.report import (
    CSV_COLUMNS,
    CensusReport,
    CensusRow,
    GroupRecord,
    GroupVerdict,
    ReportFormat,
    export_report,
    report_to_csv,
    report_to_dict,
    report_to_json,
    report_to_markdown,
    save_report,
)
from gencayley.census.runner import (
    IsomorphismFamily,
    cayley_sum_census,
    cayley_sum_rows,
    classify_group,
    compare_survivors,
    evaluate_row,
    isomorphism_families,
    run_census,
)
from gencayley.census.settings import MAX_CENSUS_ORDER, CensusSettings
from gencayley.census.table1 import check_table1, d8_involutions, golden_table1, render_table1

__all__ = [
    "CSV_COLUMNS",
    "MAX_CENSUS_ORDER",
    "CensusReport",
    "CensusRow",
    "CensusSettings",
    "Expectation",
    "Fixture",
    "FixtureFactor",
    "FixtureResult",
    "GroupRecord",
    "GroupVerdict",
    "IsomorphismFamily",
    "ReportFormat",
    "cayley_sum_census",
    "cayley_sum_rows",
    "check_table1",
    "classify_group",
    "compare_survivors",
    "d8_involutions",
    "evaluate_row",
    "export_report",
    "get_fixture",
    "golden_table1",
    "isomorphism_families",
    "list_fixtures",
    "render_table1",
    "report_to_csv",
    "report_to_dict",
    "report_to_json",
    "report_to_markdown",
    "run_census",
    "run_fixture",
    "run_fixtures",
    "save_report",
]
