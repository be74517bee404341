"""Exhaustive classification of small groups by their generalized Cayley graphs.

For every group of a catalog order, every involutory automorphism (one
per Aut(G)-conjugacy class by default) and every valid connection set of
the requested size, the graph is built and checked for connectivity,
bipartiteness and an integral spectrum. A group survives when it has at
least one such graph and all of them are connected and integral.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Iterable

from gencayley._base import GCModel
from gencayley.catalog.build import build_group
from gencayley.catalog.catalog import catalog_of_order
from gencayley.census.report import CensusReport, CensusRow, GroupRecord
from gencayley.census.settings import CensusSettings
from gencayley.criteria.connectivity import connected_algebraic
from gencayley.errors import CriteriaDisagreement
from gencayley.gcs.subsets import GCSubset, enumerate_gcs
from gencayley.graphs.graph import SimpleGraph, build_cayley_sum_graph, build_gc_graph
from gencayley.graphs.isomorphism import are_isomorphic
from gencayley.graphs.spectrum import integral_spectrum
from gencayley.graphs.structure import is_bipartite, is_connected
from gencayley.groups.automorphisms import (
    GroupMap,
    identity_map,
    involution_conjugacy_classes,
    involutory_automorphisms,
)
from gencayley.groups.group import (
    FiniteGroup,
    generated_subgroup,
    is_abelian,
    squares,
)
from gencayley.parsers.elements import parse_alpha, parse_subset

logger = logging.getLogger(__name__)


def evaluate_row(S: GCSubset, alpha_class: int, name: str | None = None) -> CensusRow:
    """Build GC(G, S, alpha) and decide its properties.

    Connectivity is decided by the subgroup criterion and by breadth-first
    search; the spectrum is only examined for connected graphs.

    Raises:
        CriteriaDisagreement: If the criterion and the search disagree
    """
    G = S.group
    X = build_gc_graph(S)
    verdict = connected_algebraic(S)
    by_search = is_connected(X)
    if verdict.connected != by_search:
        logger.warning("Connectivity disagreement for %r", S)
        raise CriteriaDisagreement(
            f"Criterion says connected={verdict.connected}, search says {by_search} "
            f"for {S.describe()} in {G}",
            witness=S.members.members,
        )
    row = CensusRow(
        group=name or G.label,
        order=G.order,
        alpha_class=alpha_class,
        alpha=S.alpha.describe(),
        subset=S.describe(),
        connected=by_search,
        bipartite=is_bipartite(X).bipartite,
        branch=verdict.branch.value,
    )
    if by_search:
        spectrum = integral_spectrum(X)
        row = row.model_copy(update={"integral": spectrum.integral, "roots": spectrum.roots})
    logger.debug("%s", row.describe())
    return row


def _alphas(
    G: FiniteGroup, use_conjugacy_reduction: bool, include_identity: bool
) -> tuple[list[tuple[int, GroupMap]], int]:
    classes = involution_conjugacy_classes(G)
    offset = 0
    alphas: list[tuple[int, GroupMap]] = []
    if include_identity:
        alphas.append((0, identity_map(G)))
        offset = 1
    if use_conjugacy_reduction:
        alphas.extend((i + offset, cls[0]) for i, cls in enumerate(classes))
    else:
        class_of = {a.image: i for i, cls in enumerate(classes) for a in cls}
        alphas.extend(
            (class_of[a.image] + offset, a) for a in involutory_automorphisms(G)
        )
    return alphas, len(classes) + offset


def classify_group(
    G: FiniteGroup,
    *,
    use_conjugacy_reduction: bool = True,
    subset_size: int = 3,
    include_identity: bool = False,
    name: str | None = None,
) -> GroupRecord:
    """Census record of one group.

    Args:
        G: The group, of order at most 30
        use_conjugacy_reduction: One involution per conjugacy class; the
            group verdict is the same without the reduction
        subset_size: Size of the connection sets
        include_identity: Add alpha = id as class 0
        name: Name to report; defaults to the group label
    """
    name = name or G.label
    alphas, class_count = _alphas(G, use_conjugacy_reduction, include_identity)
    rows = []
    for index, alpha in alphas:
        for S in enumerate_gcs(G, alpha, subset_size, allow_identity=include_identity):
            rows.append(evaluate_row(S, index, name))
    record = GroupRecord.from_rows(name, G.order, is_abelian(G), class_count, rows)
    logger.info("%s: %s (%d graphs)", name, record.verdict.value, len(rows))
    return record


def _classify_named(args: tuple[str, bool, int, bool]) -> GroupRecord:
    name, reduction, size, include_identity = args
    return classify_group(
        build_group(name),
        use_conjugacy_reduction=reduction,
        subset_size=size,
        include_identity=include_identity,
        name=name,
    )


def run_census(settings: CensusSettings | None = None) -> CensusReport:
    """Classify every catalog group of the requested orders and kind.

    With more than one worker the groups are classified in a process pool;
    records are assembled in catalog order either way.
    """
    settings = settings or CensusSettings()
    jobs = [
        (name, settings.conjugacy_reduction, settings.subset_size, settings.include_identity)
        for n in settings.orders
        for name, _ in catalog_of_order(n, settings.kind)
    ]
    logger.info("Census over %d groups", len(jobs))
    if settings.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            records = list(pool.map(_classify_named, jobs))
    else:
        records = [_classify_named(job) for job in jobs]
    return CensusReport(
        kind=settings.kind, subset_size=settings.subset_size, records=tuple(records)
    )


def cayley_sum_rows(
    G: FiniteGroup, k: int = 3, require_generating: bool = True, name: str | None = None
) -> list[CensusRow]:
    """Rows for the connected Cay+(G, S) over square-free k-subsets S of an abelian group.

    Disconnected sum graphs are skipped, so a group is judged on its
    connected cubic Cayley sum graphs only.
    """
    name = name or G.label
    sq = squares(G)
    allowed = [g for g in range(G.order) if g not in sq]
    rows = []
    skipped = 0
    for members in combinations(allowed, k):
        S = G.subset(members)
        if require_generating and len(generated_subgroup(G, S)) != G.order:
            continue
        X = build_cayley_sum_graph(G, S)
        if not is_connected(X):
            skipped += 1
            continue
        spectrum = integral_spectrum(X)
        rows.append(
            CensusRow(
                group=name,
                order=G.order,
                alpha_class=0,
                alpha="sum",
                subset=G.format_set(S),
                connected=True,
                bipartite=is_bipartite(X).bipartite,
                integral=spectrum.integral,
                roots=spectrum.roots,
            )
        )
    if skipped:
        logger.debug("%s: skipped %d disconnected sum graphs", name, skipped)
    return rows


def cayley_sum_census(settings: CensusSettings | None = None) -> CensusReport:
    """Cayley sum graphs Cay+(G, S) of the abelian catalog groups.

    Each group is judged on its connected sum graphs. By default only
    square-free S that generate G are tried (see
    `CensusSettings.require_generating`); either way the survivors are
    Z2^2, Z6, Z2^3 and Z8.
    """
    settings = settings or CensusSettings()
    records = []
    for n in settings.orders:
        for name, G in catalog_of_order(n, "abelian"):
            rows = cayley_sum_rows(G, settings.subset_size, settings.require_generating, name)
            record = GroupRecord.from_rows(name, G.order, True, 0, rows)
            logger.info("%s: %s (%d sum graphs)", name, record.verdict.value, len(rows))
            records.append(record)
    return CensusReport(
        kind="cayley-sum", subset_size=settings.subset_size, records=tuple(records)
    )


def compare_survivors(report: CensusReport, expected: Iterable[str]) -> list[str]:
    """Lines describing missing and extra survivors; empty when they match.

    A missing survivor is reported with its verdict and first failing row.
    """
    actual = set(report.survivors)
    wanted = set(expected)
    lines = []
    for name in sorted(wanted - actual):
        try:
            record = report.record(name)
        except KeyError:
            lines.append(f"missing: {name} (not in the census)")
            continue
        detail = record.verdict.value
        if record.witness is not None:
            detail += f", first counterexample: {record.witness.describe()}"
        lines.append(f"missing: {name} ({detail})")
    for name in sorted(actual - wanted):
        lines.append(f"extra: {name}")
    return lines


class IsomorphismFamily(GCModel):
    """Graphs claimed to be pairwise isomorphic, with bijections onto the first."""

    name: str
    members: tuple[str, ...]
    mappings: tuple[tuple[int, ...] | None, ...]

    @property
    def all_isomorphic(self) -> bool:
        return all(m is not None for m in self.mappings)


_Z2_CUBED_ALPHA = "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)"
_Z2_CUBED_SETS = (
    "(1,0,0), (0,0,1), (0,1,1)",
    "(1,0,0), (1,0,1), (1,1,1)",
    "(1,1,0), (0,0,1), (0,1,1)",
    "(1,1,0), (1,0,1), (1,1,1)",
)


def _family(name: str, graphs: list[tuple[str, SimpleGraph]]) -> IsomorphismFamily:
    base = graphs[0][1]
    return IsomorphismFamily(
        name=name,
        members=tuple(label for label, _ in graphs),
        mappings=tuple(are_isomorphic(base, X) for _, X in graphs),
    )


def isomorphism_families() -> list[IsomorphismFamily]:
    """Check the families of constructed graphs claimed to be isomorphic.

    - the four cubic graphs of Z2^3 together with every cubic graph of Q8
    - the three cubic graphs GC(D6, {b, ab, a^2 b}, a->a^-1, b->a^j b)
    """
    z2 = build_group("Z2^3")
    alpha = parse_alpha(z2, _Z2_CUBED_ALPHA)
    cube_family = []
    for spec in _Z2_CUBED_SETS:
        S = GCSubset(group=z2, alpha=alpha, members=parse_subset(z2, spec))
        cube_family.append((f"Z2^3 {spec}", build_gc_graph(S)))
    q8 = build_group("Q8")
    for cls in involution_conjugacy_classes(q8):
        for S in enumerate_gcs(q8, cls[0], 3):
            cube_family.append((f"Q8 {cls[0].describe()} {S.describe()}", build_gc_graph(S)))

    d6 = build_group("D6")
    triple = []
    for j in range(3):
        spec = f"a->a^-1, b->a^{j} b"
        beta = parse_alpha(d6, spec)
        S = GCSubset(group=d6, alpha=beta, members=parse_subset(d6, "b, a b, a^2 b"))
        triple.append((f"D6 {spec}", build_gc_graph(S)))

    families = [
        _family("Z2^3 and Q8 cubic graphs", cube_family),
        _family("D6 cubic graphs", triple),
    ]
    for fam in families:
        logger.info("%s: all isomorphic = %s", fam.name, fam.all_isomorphic)
    return families
