"""Command line interface.

    gencayley group info "D8 x Z3"
    gencayley aut Q8 --classes
    gencayley gcs enumerate Z2^3 --alpha "(0,0,1)->(0,1,1), (1,0,0)->(1,0,0), (0,1,0)->(0,1,0)"
    gencayley graph build D6 --alpha "a->a^-1, b->b" --set "b, a b, a^2 b" --format dot
    gencayley check Z14 --alpha inverse --set "g, g^3, g^5"
    gencayley census --orders 4,6,8 --kind abelian --format md
    gencayley fixtures run
    gencayley table1

Exit codes: 0 on success, 1 when two verdicts disagree or a fixture,
golden comparison or survivor check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence

from pydantic import ValidationError

from gencayley.catalog.build import build_group
from gencayley.census.fixtures import list_fixtures, run_fixtures
from gencayley.census.report import CensusReport, export_report
from gencayley.census.runner import (
    cayley_sum_census,
    compare_survivors,
    isomorphism_families,
    run_census,
)
from gencayley.census.settings import CensusSettings
from gencayley.census.table1 import check_table1
from gencayley.criteria.bipartite import bipartite_algebraic
from gencayley.criteria.connectivity import connected_algebraic, connected_coset_criterion
from gencayley.errors import CriteriaDisagreement, GencayleyError, MismatchAgainstGolden
from gencayley.gcs.subsets import GCSubset, enumerate_gcs, validate_gcs
from gencayley.graphs.export import export_graph
from gencayley.graphs.graph import build_gc_graph
from gencayley.graphs.spectrum import MAX_SPECTRUM_VERTICES, integral_spectrum
from gencayley.graphs.structure import is_bipartite, is_connected
from gencayley.groups.automorphisms import (
    automorphism_group,
    involution_conjugacy_classes,
    involutory_automorphisms,
)
from gencayley.groups.group import center, is_abelian, order_histogram
from gencayley.parsers.elements import parse_alpha, parse_subset

logger = logging.getLogger("gencayley")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _orders(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected comma-separated orders, got {text!r}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"Expected a positive integer, got {value}")
    return value


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        output.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", output)


def _instance(args: argparse.Namespace) -> GCSubset:
    G = build_group(args.group)
    alpha = parse_alpha(G, args.alpha)
    return validate_gcs(G, alpha, parse_subset(G, args.set))


def cmd_group_info(args: argparse.Namespace) -> int:
    G = build_group(args.group)
    print(f"group: {G}")
    print(f"order: {G.order}")
    print(f"abelian: {str(is_abelian(G)).lower()}")
    print(f"center: {G.format_set(center(G))}")
    histogram = ", ".join(f"{k}: {v}" for k, v in order_histogram(G).items())
    print(f"element orders: {histogram}")
    if G.generators:
        print("generators: " + ", ".join(name for name, _ in G.generators))
    if args.elements:
        print("elements: " + ", ".join(G.names))
    return EXIT_OK


def cmd_aut(args: argparse.Namespace) -> int:
    G = build_group(args.group)
    print(f"|Aut({G})| = {len(automorphism_group(G))}")
    if args.involutions:
        involutions = involutory_automorphisms(G)
        print(f"involutory automorphisms: {len(involutions)}")
        for alpha in involutions:
            print(f"  {alpha.describe()}")
    if args.classes:
        classes = involution_conjugacy_classes(G)
        print(f"conjugacy classes of involutions: {len(classes)}")
        for i, cls in enumerate(classes, start=1):
            print(f"  [{i}] {cls[0].describe()} (class size {len(cls)})")
    return EXIT_OK


def cmd_gcs_enumerate(args: argparse.Namespace) -> int:
    G = build_group(args.group)
    alpha = parse_alpha(G, args.alpha)
    subsets = enumerate_gcs(G, alpha, args.size, allow_identity=args.include_identity_alpha)
    for S in subsets:
        print(S.describe())
    print(f"{len(subsets)} subsets of size {args.size}")
    return EXIT_OK


def cmd_graph_build(args: argparse.Namespace) -> int:
    X = build_gc_graph(_instance(args))
    _emit(export_graph(X, args.format), args.output)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    """Print both the algebraic and the graph verdicts; 1 if they differ."""
    S = _instance(args)
    X = build_gc_graph(S)
    agree = True

    by_generation = connected_algebraic(S)
    by_coset = connected_coset_criterion(S)
    by_search = is_connected(X)
    print(
        f"connected: search={str(by_search).lower()} "
        f"criterion={str(by_generation.connected).lower()} ({by_generation.branch.value}) "
        f"coset={str(by_coset.connected).lower()} ({by_coset.branch.value})"
    )
    agree &= by_search == by_generation.connected == by_coset.connected

    coloring = is_bipartite(X)
    line = f"bipartite: search={str(coloring.bipartite).lower()}"
    if is_abelian(S.group):
        verdict = bipartite_algebraic(S)
        line += f" criterion={str(verdict.bipartite).lower()}"
        agree &= verdict.bipartite == coloring.bipartite
    print(line)

    if X.n <= MAX_SPECTRUM_VERTICES:
        spectrum = integral_spectrum(X)
        print(f"integral: {str(spectrum.integral).lower()}")
        print(f"characteristic polynomial: {spectrum.char_poly}")
    if not agree:
        logger.warning("Verdicts disagree for %s", S.describe())
        return EXIT_FAILED
    return EXIT_OK


def _settings(args: argparse.Namespace) -> CensusSettings:
    return CensusSettings(
        orders=args.orders,
        kind=getattr(args, "kind", "abelian"),
        subset_size=args.size,
        conjugacy_reduction=not getattr(args, "no_conjugacy_reduction", False),
        include_identity=getattr(args, "include_identity_alpha", False),
        workers=getattr(args, "workers", 1),
        require_generating=not getattr(args, "all_subsets", False),
    )


def _finish_census(report: CensusReport, args: argparse.Namespace) -> int:
    _emit(export_report(report, args.format), args.output)
    if args.expect is None:
        print(f"Survivors: {report.survivor_line()}", file=sys.stderr)
        return EXIT_OK
    lines = compare_survivors(report, [n.strip() for n in args.expect.split(",") if n.strip()])
    for line in lines:
        print(line, file=sys.stderr)
    return EXIT_FAILED if lines else EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    return _finish_census(run_census(_settings(args)), args)


def cmd_cayley_sum(args: argparse.Namespace) -> int:
    return _finish_census(cayley_sum_census(_settings(args)), args)


def cmd_fixtures_run(args: argparse.Namespace) -> int:
    results = run_fixtures(args.ids or None)
    for result in results:
        print(result.describe())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed} passed, {failed} failed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_fixtures_list(args: argparse.Namespace) -> int:
    for fixture_id in list_fixtures():
        print(fixture_id)
    return EXIT_OK


def cmd_table1(args: argparse.Namespace) -> int:
    try:
        rendered = check_table1()
    except MismatchAgainstGolden as exc:
        print(str(exc), file=sys.stderr)
        for line in exc.diff:
            print(line, file=sys.stderr)
        return EXIT_FAILED
    sys.stdout.write(rendered)
    return EXIT_OK


def cmd_families(args: argparse.Namespace) -> int:
    families = isomorphism_families()
    for fam in families:
        status = "isomorphic" if fam.all_isomorphic else "NOT isomorphic"
        print(f"{fam.name}: {len(fam.members)} graphs, {status}")
    return EXIT_OK if all(f.all_isomorphic for f in families) else EXIT_FAILED


def _add_instance_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("group", help='Group expression, e.g. "D8 x Z3"')
    parser.add_argument("--alpha", required=True, help='Automorphism, e.g. "a->a^-1, b->b"')
    parser.add_argument("--set", required=True, help='Connection set, e.g. "b, a b, a^2 b"')


def _add_census_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--orders", type=_orders, default=CensusSettings().orders, help="e.g. 4,6,8,10"
    )
    parser.add_argument("--size", type=_positive, default=3, help="Connection set size")
    parser.add_argument("--format", choices=["json", "csv", "md"], default="json")
    parser.add_argument("--output", type=Path, help="Write the report to a file")
    parser.add_argument(
        "--expect", help="Comma-separated expected survivors; exit 1 when they differ"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gencayley",
        description="Generalized Cayley graphs of small groups",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    group = commands.add_parser("group", help="Group tables").add_subparsers(
        dest="group_command", required=True
    )
    info = group.add_parser("info", help="Order, center and element orders")
    info.add_argument("group")
    info.add_argument("--elements", action="store_true", help="List element names")
    info.set_defaults(handler=cmd_group_info)

    aut = commands.add_parser("aut", help="Automorphisms of a group")
    aut.add_argument("group")
    aut.add_argument("--involutions", action="store_true")
    aut.add_argument("--classes", action="store_true")
    aut.set_defaults(handler=cmd_aut)

    gcs = commands.add_parser("gcs", help="Generalized Cayley subsets").add_subparsers(
        dest="gcs_command", required=True
    )
    enumerate_ = gcs.add_parser("enumerate", help="All valid subsets of a size")
    enumerate_.add_argument("group")
    enumerate_.add_argument("--alpha", required=True)
    enumerate_.add_argument("--size", type=_positive, default=3)
    enumerate_.add_argument("--include-identity-alpha", action="store_true")
    enumerate_.set_defaults(handler=cmd_gcs_enumerate)

    graph = commands.add_parser("graph", help="Graph construction").add_subparsers(
        dest="graph_command", required=True
    )
    build = graph.add_parser("build", help="Build GC(G, S, alpha) and export it")
    _add_instance_options(build)
    build.add_argument("--format", choices=["dot", "json", "graphml"], default="dot")
    build.add_argument("--output", type=Path)
    build.set_defaults(handler=cmd_graph_build)

    check = commands.add_parser("check", help="Compare algebraic and graph verdicts")
    _add_instance_options(check)
    check.set_defaults(handler=cmd_check)

    census = commands.add_parser("census", help="Classify catalog groups")
    _add_census_options(census)
    census.add_argument(
        "--kind", choices=["abelian", "nonabelian", "all"], default="abelian"
    )
    census.add_argument("--include-identity-alpha", action="store_true")
    census.add_argument("--no-conjugacy-reduction", action="store_true")
    census.add_argument("--workers", type=_positive, default=1)
    census.set_defaults(handler=cmd_census)

    cayley_sum = commands.add_parser("cayley-sum", help="Census of Cayley sum graphs")
    _add_census_options(cayley_sum)
    cayley_sum.add_argument(
        "--all-subsets", action="store_true", help="Keep square-free S that do not generate G"
    )
    cayley_sum.set_defaults(handler=cmd_cayley_sum)

    fixtures = commands.add_parser("fixtures", help="Regression fixtures").add_subparsers(
        dest="fixtures_command", required=True
    )
    run = fixtures.add_parser("run", help="Run fixtures, all by default")
    run.add_argument("ids", nargs="*")
    run.set_defaults(handler=cmd_fixtures_run)
    listing = fixtures.add_parser("list", help="List fixture ids")
    listing.set_defaults(handler=cmd_fixtures_list)

    table1 = commands.add_parser("table1", help="Involutions of D8 against the golden copy")
    table1.set_defaults(handler=cmd_table1)

    families = commands.add_parser("families", help="Check claimed isomorphic families")
    families.set_defaults(handler=cmd_families)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    _configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except CriteriaDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (GencayleyError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
