"""Bipartiteness of generalized Cayley graphs without 2-colouring them.

For abelian G, GC(G, S, alpha) fails to be bipartite exactly when some
product of members of S with an odd total exponent lands in omega. The
search runs over (element, parity) states, so it stops after at most
2|G| states.
"""

from __future__ import annotations

import logging
from collections import Counter, deque

from gencayley.criteria.connectivity import connected_algebraic, right_product_subgroup
from gencayley.criteria.verdicts import BipartiteEquivalence, BipartiteVerdict
from gencayley.errors import CriteriaDisagreement, NotAbelian, NotConnected
from gencayley.gcs.partition import alpha_partition
from gencayley.gcs.subsets import GCSubset
from gencayley.graphs.graph import build_gc_graph
from gencayley.graphs.structure import is_bipartite
from gencayley.groups.group import is_abelian

logger = logging.getLogger(__name__)


def bipartite_algebraic(S: GCSubset) -> BipartiteVerdict:
    """Search for an odd-length product of members of S inside omega.

    States (g, parity) start at (e, even); each step multiplies by a member
    of S in ascending index order and flips the parity. The first odd state
    found in omega is traced back through its parents into exponents k_s.

    Raises:
        NotAbelian: If G is not abelian
    """
    G = S.group
    if not is_abelian(G):
        raise NotAbelian(f"The product criterion needs an abelian group, got {G}", witness=G.label)
    omega = alpha_partition(G, S.alpha, allow_identity=True).omega
    members = S.members.members
    start = (0, 0)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        g, parity = state
        for s in members:
            nxt = (G.table[g][s], 1 - parity)
            if nxt in parent:
                continue
            parent[nxt] = (state, s)
            if nxt[1] == 1 and nxt[0] in omega:
                verdict = _witness_verdict(parent, nxt)
                check_bipartite_witness(S, verdict)
                return verdict
            queue.append(nxt)
    return BipartiteVerdict(bipartite=True)


def _witness_verdict(
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None],
    end: tuple[int, int],
) -> BipartiteVerdict:
    counts: Counter[int] = Counter()
    state = end
    while (link := parent[state]) is not None:
        state, s = link
        counts[s] += 1
    return BipartiteVerdict(
        bipartite=False, witness=tuple(sorted(counts.items())), product=end[0]
    )


def check_bipartite_witness(S: GCSubset, verdict: BipartiteVerdict) -> None:
    """Re-multiply a non-bipartite witness and check it lands in omega.

    Raises:
        CriteriaDisagreement: If the product differs or lies outside omega
    """
    if verdict.bipartite or verdict.witness is None:
        return
    G = S.group
    product = 0
    for s, k in verdict.witness:
        if s not in S.members:
            raise CriteriaDisagreement(f"Witness uses {G.names[s]}, not in S", witness=s)
        product = G.table[product][G.power(s, k)]
    omega = alpha_partition(G, S.alpha, allow_identity=True).omega
    if product != verdict.product or product not in omega:
        raise CriteriaDisagreement(
            f"Witness multiplies to {G.names[product]}, outside omega", witness=verdict.witness
        )


def bipartite_when_connected(S: GCSubset) -> BipartiteEquivalence:
    """Evaluate the three equivalent conditions for a connected graph.

    The graph is bipartite, |<SS^-1>| = |G|/2, and S misses <SS^-1>.

    Raises:
        NotConnected: If the connectivity criterion says disconnected
        CriteriaDisagreement: If the three conditions do not agree
    """
    G = S.group
    verdict = connected_algebraic(S)
    if not verdict.connected:
        raise NotConnected(
            f"GC({G}, {S.describe()}) is disconnected ({verdict.branch.value})"
        )
    H = right_product_subgroup(S)
    by_graph = is_bipartite(build_gc_graph(S)).bipartite
    by_half_index = 2 * len(H) == G.order
    by_disjointness = S.members.isdisjoint(H)
    if not by_graph == by_half_index == by_disjointness:
        logger.warning("Bipartite conditions disagree for %r", S)
        raise CriteriaDisagreement(
            "Bipartite conditions disagree: "
            f"graph={by_graph}, half index={by_half_index}, disjoint={by_disjointness}",
            witness=(by_graph, by_half_index, by_disjointness),
        )
    return BipartiteEquivalence(
        bipartite=by_graph,
        by_graph=by_graph,
        by_half_index=by_half_index,
        by_disjointness=by_disjointness,
    )
