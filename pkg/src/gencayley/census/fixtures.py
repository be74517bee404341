"""Registry of named instances with machine-checkable expected facts.

Each fixture names a group expression, an automorphism and a connection
set as text, and the facts that must hold for them:

    >>> from gencayley.census.fixtures import get_fixture, run_fixture
    >>> run_fixture(get_fixture("z14-bipartite")).passed
    True

Three shapes are supported:

- instance: `alpha` and `subset` given; the subset is validated and the
  graph's verdicts are compared with the expectation, using both the
  algebraic criteria and the built graph;
- enumeration: `subset` omitted; counts the valid subsets of `size`
  under `alpha`, or under one involution per conjugacy class when
  `alpha` is omitted too;
- product: `factors` given; the product data is assembled with
  `product_subset` and the product graph identity is checked as well.
"""

from __future__ import annotations

import logging

from gencayley._base import GCModel
from gencayley.catalog.build import build_group
from gencayley.criteria.bipartite import bipartite_algebraic
from gencayley.criteria.connectivity import connected_algebraic, connected_coset_criterion
from gencayley.criteria.verdicts import ConnectivityBranch
from gencayley.errors import GencayleyError, MeetsOmega, NotAlphaSymmetric, UnknownFixture
from gencayley.gcs.subsets import GCSubset, enumerate_gcs, product_subset, validate_gcs
from gencayley.graphs.graph import build_gc_graph, direct_product_graph
from gencayley.graphs.spectrum import integral_spectrum
from gencayley.graphs.structure import is_bipartite, is_connected
from gencayley.groups.automorphisms import involution_conjugacy_classes
from gencayley.groups.group import is_abelian
from gencayley.parsers.elements import parse_alpha, parse_subset

logger = logging.getLogger(__name__)


class FixtureFactor(GCModel):
    """One factor (G_i, alpha_i, S_i) of a product fixture."""

    group: str
    alpha: str
    subset: str


class Expectation(GCModel):
    """Facts a fixture must satisfy; None means not checked."""

    valid: bool = True
    connected: bool | None = None
    branch: ConnectivityBranch | None = None
    bipartite: bool | None = None
    integral: bool | None = None
    subset_count: int | None = None
    involution_classes: int | None = None


class Fixture(GCModel):
    """A named instance and what must hold for it.

    Attributes:
        id: Registry key
        group: Group expression
        alpha: Automorphism specification, or None for all classes
        subset: Connection set, or None for an enumeration fixture
        size: Subset size counted by enumeration fixtures
        factors: Factors of a product fixture
        expect: Expected facts
        anchor: Where the instance comes from, quoted in failures
    """

    id: str
    group: str
    alpha: str | None = None
    subset: str | None = None
    size: int = 3
    factors: tuple[FixtureFactor, ...] = ()
    expect: Expectation = Expectation()
    anchor: str = ""


class FixtureResult(GCModel):
    fixture_id: str
    passed: bool
    failures: tuple[str, ...] = ()
    anchor: str = ""

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.fixture_id}"
        if self.failures:
            line += ": " + "; ".join(self.failures) + f" [{self.anchor}]"
        return line


_Z2_CUBED_ALPHA = "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)"
_NOT_GENERATED = ConnectivityBranch.FAILS_GENERATION
_DISCONNECTED = Expectation(connected=False, branch=_NOT_GENERATED)


def _fx(id: str, group: str, alpha: str | None, subset: str | None, anchor: str, **expect) -> Fixture:
    return Fixture(
        id=id, group=group, alpha=alpha, subset=subset, expect=Expectation(**expect), anchor=anchor
    )


_FIXTURE_LIST: list[Fixture] = [
    # Bipartiteness examples
    _fx("z14-bipartite", "Z14", "g->g^-1", "g, g^3, g^5", "Z14 example, bipartite",
        connected=True, branch=ConnectivityBranch.INDEX_TWO_COSET, bipartite=True),
    _fx("z2sq-z6-not-bipartite", "Z2^2 x Z6",
        "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)",
        "(1,0,0), (0,0,2), (0,0,4)", "Z2^2 x Z6 example, (0,0,2)^3 in omega",
        bipartite=False, connected=False, branch=_NOT_GENERATED),
    # Elementary abelian groups
    _fx("z2sq-no-cubic", "Z2^2", None, None, "no cubic graph of Z2^2",
        subset_count=0, involution_classes=1),
    _fx("z2cubed-s1", "Z2^3", _Z2_CUBED_ALPHA, "(1,0,0), (0,0,1), (0,1,1)",
        "Z2^3 case, S1", connected=True, branch=ConnectivityBranch.INDEX_TWO_COSET,
        bipartite=True, integral=True),
    _fx("z2cubed-s2", "Z2^3", _Z2_CUBED_ALPHA, "(1,0,0), (1,0,1), (1,1,1)",
        "Z2^3 case, S2", connected=True, integral=True),
    _fx("z2cubed-s3", "Z2^3", _Z2_CUBED_ALPHA, "(1,1,0), (0,0,1), (0,1,1)",
        "Z2^3 case, S3", connected=True, integral=True),
    _fx("z2cubed-s4", "Z2^3", _Z2_CUBED_ALPHA, "(1,1,0), (1,0,1), (1,1,1)",
        "Z2^3 case, S4", connected=True, integral=True),
    _fx("z2cubed-count", "Z2^3", None, None, "one involution class of Z2^3",
        subset_count=4, involution_classes=1),
    # Cyclic groups
    _fx("z4-no-cubic", "Z4", None, None, "no cubic graph of Z4", subset_count=0),
    _fx("z6-inverse", "Z6", "inverse", "g, g^3, g^5", "Z6 graphs are Cayley sum graphs",
        connected=True, bipartite=True, integral=True),
    _fx("z8-cube-map", "Z8", "g->g^3", None, "Omega empty for g->g^3", subset_count=0),
    _fx("z8-fifth-power-map", "Z8", "g->g^5", None, "Omega empty for g->g^5", subset_count=0),
    # Order 6 and 8
    _fx("d6-alpha0", "D6", "a->a^-1, b->b", "b, a b, a^2 b", "D6 case, j = 0",
        connected=True, branch=ConnectivityBranch.INDEX_TWO_COSET, bipartite=True, integral=True),
    _fx("d6-alpha1", "D6", "a->a^-1, b->a b", "b, a b, a^2 b", "D6 case, j = 1",
        connected=True, bipartite=True, integral=True),
    _fx("d6-alpha2", "D6", "a->a^-1, b->a^2 b", "b, a b, a^2 b", "D6 case, j = 2",
        connected=True, bipartite=True, integral=True),
    _fx("q8-alpha-no-cubic", "Q8", "a->a^-1, b->a b", None, "Q8 case, omega = <a>",
        subset_count=0),
    _fx("q8-beta-cubic", "Q8", "a->a^-1, b->b", None, "Q8 case, cubic graphs under beta",
        subset_count=8),
    _fx("q8-classes", "Q8", None, None, "Aut(Q8) has two involution classes",
        involution_classes=2, subset_count=8),
    _fx("t8-collapsed", "T8", "a->a, b->a^2 b", "b, a^2 b",
        "dicyclic family T4n, n = 2, a^4 b = b", connected=False),
    # Order 10 and 12
    _fx("d10-not-integral", "D10", "a->a^-1, b->b", "b, a b, a^4 b",
        "order 10 case, connected but not integral",
        connected=True, branch=ConnectivityBranch.INDEX_TWO_COSET, integral=False),
    _fx("t12-index", "T12", "a->a, b->a^3 b", "b, a^2 b, a^4 b", "dicyclic family T4n, n = 3",
        connected=False, branch=ConnectivityBranch.FAILS_INDEX),
    _fx("d12-rotated-reflections", "D12", "a->a^-1, b->a^2 b", "a^3 b, a^-1 b, a b",
        "dihedral family D4n, n = 3", connected=False, branch=_NOT_GENERATED),
    _fx("a4-inner", "A4", "inner (12)(34)", "(123), (124), (12)(34)",
        "order 12 case, |<SS^-1>| = 3", connected=False, branch=ConnectivityBranch.FAILS_INDEX),
    # Order 20
    _fx("d20-rotated-reflections", "D20", "a->a^-1, b->a^2 b", "a^3 b, a^-1 b, a b",
        "dihedral family D4n, n = 5", connected=False, branch=_NOT_GENERATED),
    _fx("t20-index", "T20", "a->a, b->a^5 b", "b, a^2 b, a^4 b", "dicyclic family T4n, n = 5",
        connected=False, branch=ConnectivityBranch.FAILS_INDEX),
    _fx("f54-not-generated", "F54", "a->a^-1, b->b", "b, b^2, b^3", "order 20 case, <S> != F54",
        connected=False, branch=_NOT_GENERATED),
    # Order 24
    _fx("q8xz3-s1", "Q8 x Z3", "(e,1)->(e,1), (a,0)->(a^-1,0), (b,0)->(b,0)",
        "(a,0), (a,1), (a,2)", "order 24 case, S1", **_DISCONNECTED.model_dump()),
    _fx("d24-s2", "D24", "a->a^5, b->b", "a^2, a^6, a^10", "order 24 case, S2",
        **_DISCONNECTED.model_dump()),
    _fx("t24-even-shift", "T24", "a->a, b->a^6 b", "b, a^2 b, a^4 b",
        "dicyclic family T4n, n = 6", connected=False, branch=_NOT_GENERATED),
    _fx("s4-s3", "S4", "inner (12)", "(12), (13), (23)", "order 24 case, S3",
        **_DISCONNECTED.model_dump()),
    _fx("d8xz3-s4", "D8 x Z3", "(e,1)->(e,1), (a,0)->(a^-1,0), (b,0)->(a^2 b,0)",
        "(a,0), (a,1), (a,2)", "order 24 case, S4", **_DISCONNECTED.model_dump()),
    _fx("u24-s5", "U24", "a->a, b->b^-1", "a, a^7, a^4", "order 24 case, S5",
        **_DISCONNECTED.model_dump()),
    _fx("v24-s6", "V24", "a->a, b->b^-1", "a, a^5, a^3", "order 24 case, S6",
        **_DISCONNECTED.model_dump()),
    _fx("sl23-alpha7", "SL23", "A->[[0,2],[1,0]], B->[[0,1],[2,2]]", None,
        "SL(2,3), first involution class", subset_count=0),
    _fx("sl23-alpha8", "SL23", "A->[[2,1],[1,1]], B->[[1,2],[0,1]]", None,
        "SL(2,3), second involution class", subset_count=0),
    _fx("sl23-no-cubic", "SL23", None, None, "no cubic graph of SL(2,3)",
        subset_count=0, involution_classes=2),
    # Order 30
    _fx("d30-s9", "D30", "a->a^4, b->b", "b, a^5 b, a^10 b", "order 30 case, S9",
        **_DISCONNECTED.model_dump()),
    _fx("u30-s10", "U30", "a->a, b->b^-1", "a, a^-1, a^5", "order 30 case, S10",
        **_DISCONNECTED.model_dump()),
    _fx("d10xz3-s11", "D10 x Z3", "(e,1)->(e,1), (a,0)->(a^-1,0), (b,0)->(a^2 b,0)",
        "(a,0), (a,1), (a,2)", "order 30 case, S11 meets omega since <a^2> = <a>",
        valid=False),
    # Products
    Fixture(
        id="d6xz4-product",
        group="D6 x Z4",
        factors=(
            FixtureFactor(group="D6", alpha="a->a^-1, b->a^2 b", subset="b, a b, a^2 b"),
            FixtureFactor(group="Z4", alpha="inverse", subset="g"),
        ),
        expect=Expectation(connected=False),
        anchor="disconnected factor, D6 x Z4",
    ),
    Fixture(
        id="d12xz2-product",
        group="D12 x Z2",
        factors=(
            FixtureFactor(group="D12", alpha="a->a^-1, b->a^2 b", subset="a^3 b, a^-1 b, a b"),
            FixtureFactor(group="Z2", alpha="id", subset="g"),
        ),
        expect=Expectation(connected=False),
        anchor="disconnected factor, D12 x Z2",
    ),
    Fixture(
        id="t12xz2-product",
        group="T12 x Z2",
        factors=(
            FixtureFactor(group="T12", alpha="a->a, b->a^3 b", subset="b, a^2 b, a^4 b"),
            FixtureFactor(group="Z2", alpha="id", subset="g"),
        ),
        expect=Expectation(connected=False),
        anchor="disconnected factor, T12 x Z2",
    ),
    Fixture(
        id="a4xz2-product",
        group="A4 x Z2",
        factors=(
            FixtureFactor(group="A4", alpha="inner (12)(34)", subset="(123), (124), (12)(34)"),
            FixtureFactor(group="Z2", alpha="id", subset="g"),
        ),
        expect=Expectation(connected=False),
        anchor="order 24 case, A4 x Z2",
    ),
]

# Registry of all fixtures (by id)
_FIXTURES: dict[str, Fixture] = {f.id: f for f in _FIXTURE_LIST}


def get_fixture(fixture_id: str) -> Fixture:
    """Look up a fixture by id.

    Raises:
        UnknownFixture: If no fixture has that id
    """
    try:
        return _FIXTURES[fixture_id]
    except KeyError:
        raise UnknownFixture(
            f"Unknown fixture '{fixture_id}'", [f"Available: {', '.join(_FIXTURES)}"]
        ) from None


def list_fixtures() -> list[str]:
    """Fixture ids in registry order."""
    return list(_FIXTURES)


def _compare(label: str, expected: object, actual: object, failures: list[str]) -> None:
    if expected is not None and expected != actual:
        failures.append(f"{label}: expected {expected}, got {actual}")


def _check_enumeration(fixture: Fixture, failures: list[str]) -> None:
    G = build_group(fixture.group)
    expect = fixture.expect
    if fixture.alpha is not None:
        alphas = [parse_alpha(G, fixture.alpha)]
    else:
        classes = involution_conjugacy_classes(G)
        _compare("involution classes", expect.involution_classes, len(classes), failures)
        alphas = [cls[0] for cls in classes]
    count = sum(len(enumerate_gcs(G, alpha, fixture.size)) for alpha in alphas)
    _compare("subset count", expect.subset_count, count, failures)


def _check_instance(S: GCSubset, expect: Expectation, failures: list[str]) -> None:
    X = build_gc_graph(S)
    by_criterion = connected_algebraic(S)
    by_coset = connected_coset_criterion(S)
    by_search = is_connected(X)
    if not by_criterion.connected == by_coset.connected == by_search:
        failures.append(
            f"connectivity criteria disagree: generation={by_criterion.connected}, "
            f"coset={by_coset.connected}, search={by_search}"
        )
    _compare("connected", expect.connected, by_search, failures)
    _compare("branch", expect.branch, by_criterion.branch, failures)

    bipartite = is_bipartite(X).bipartite
    if is_abelian(S.group):
        algebraic = bipartite_algebraic(S).bipartite
        if algebraic != bipartite:
            failures.append(f"bipartite criteria disagree: product={algebraic}, graph={bipartite}")
    _compare("bipartite", expect.bipartite, bipartite, failures)

    if expect.integral is not None:
        _compare("integral", expect.integral, integral_spectrum(X).integral, failures)


def _product_instance(fixture: Fixture, failures: list[str]) -> GCSubset:
    parts = []
    for factor in fixture.factors:
        G = build_group(factor.group)
        parts.append(
            validate_gcs(G, parse_alpha(G, factor.alpha), parse_subset(G, factor.subset))
        )
    S = parts[0]
    graph = build_gc_graph(S)
    for T in parts[1:]:
        graph = direct_product_graph(graph, build_gc_graph(T))
        S = product_subset(S, T)
    if graph.adjacency != build_gc_graph(S).adjacency:
        failures.append("product graph differs from the graph of the product data")
    if is_connected(graph) and not all(is_connected(build_gc_graph(T)) for T in parts):
        failures.append("connected product with a disconnected factor")
    return S


def run_fixture(fixture: Fixture) -> FixtureResult:
    """Check one fixture; every violated expectation becomes a failure line."""
    failures: list[str] = []
    expect = fixture.expect
    try:
        if fixture.factors:
            _check_instance(_product_instance(fixture, failures), expect, failures)
        elif fixture.subset is None:
            _check_enumeration(fixture, failures)
        else:
            G = build_group(fixture.group)
            alpha = parse_alpha(G, fixture.alpha or "id")
            members = parse_subset(G, fixture.subset)
            try:
                S = validate_gcs(G, alpha, members)
            except (MeetsOmega, NotAlphaSymmetric) as exc:
                if expect.valid:
                    failures.append(f"subset rejected: {exc}")
            else:
                if not expect.valid:
                    failures.append("subset accepted but expected to be invalid")
                else:
                    _check_instance(S, expect, failures)
    except GencayleyError as exc:
        failures.append(f"{type(exc).__name__}: {exc}")
    result = FixtureResult(
        fixture_id=fixture.id,
        passed=not failures,
        failures=tuple(failures),
        anchor=fixture.anchor,
    )
    if not result.passed:
        logger.warning("%s", result.describe())
    return result


def run_fixtures(fixture_ids: list[str] | None = None) -> list[FixtureResult]:
    """Run the named fixtures, or all of them in registry order."""
    ids = fixture_ids if fixture_ids is not None else list_fixtures()
    return [run_fixture(get_fixture(i)) for i in ids]
