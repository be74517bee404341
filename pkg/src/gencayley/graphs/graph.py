"""Undirected graphs on indexed vertices and the Cayley-type constructions.

Generalized Cayley graph GC(G, S, alpha): g ~ h iff alpha(g^-1) h in S,
so the neighbours of g are alpha(g) S. Cayley graph Cay(G, T): g ~ gt.
Cayley sum graph Cay+(G, S): g ~ h iff gh in S.
"""

from __future__ import annotations

import logging
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from pydantic import model_validator

from gencayley._base import GCModel
from gencayley.errors import InternalAsymmetry, NotAbelian, NotSquareFree, NotSymmetricSet
from gencayley.gcs.subsets import GCSubset
from gencayley.groups.group import ElementSet, FiniteGroup, is_abelian

logger = logging.getLogger(__name__)


class SimpleGraph(GCModel):
    """Undirected graph with a symmetric 0/1 adjacency matrix.

    Attributes:
        n: Number of vertices
        adjacency: Symmetric 0/1 matrix; diagonal entries only with loops
        loops_allowed: Whether diagonal entries may be 1
        labels: Vertex names
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    loops_allowed: bool = False
    labels: tuple[str, ...]

    @model_validator(mode="after")
    def _check_adjacency(self) -> SimpleGraph:
        n = self.n
        if len(self.adjacency) != n or any(len(row) != n for row in self.adjacency):
            raise ValueError(f"Adjacency matrix must be {n}x{n}")
        if len(self.labels) != n:
            raise ValueError(f"Expected {n} labels, got {len(self.labels)}")
        A = self.adjacency
        for i in range(n):
            for j in range(i, n):
                if A[i][j] not in (0, 1):
                    raise ValueError(f"Adjacency entry ({i}, {j}) is {A[i][j]}")
                if A[i][j] != A[j][i]:
                    raise InternalAsymmetry(
                        f"Adjacency is not symmetric at ({i}, {j})", witness=(i, j)
                    )
            if A[i][i] and not self.loops_allowed:
                raise ValueError(f"Loop at vertex {i} but loops are not allowed")
        return self

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edge_count})"

    @classmethod
    def from_neighbors(
        cls,
        neighbors: Sequence[Iterable[int]],
        labels: Sequence[str],
        loops_allowed: bool = False,
    ) -> SimpleGraph:
        n = len(neighbors)
        rows = [[0] * n for _ in range(n)]
        for i, nbrs in enumerate(neighbors):
            for j in nbrs:
                rows[i][j] = 1
        return cls(
            n=n,
            adjacency=tuple(tuple(r) for r in rows),
            loops_allowed=loops_allowed,
            labels=tuple(labels),
        )

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
        loops_allowed: bool = False,
    ) -> SimpleGraph:
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for i, j in edges:
            neighbors[i].add(j)
            neighbors[j].add(i)
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls.from_neighbors(neighbors, labels, loops_allowed)

    @classmethod
    def from_matrix(
        cls, matrix: np.ndarray, labels: Sequence[str], loops_allowed: bool = False
    ) -> SimpleGraph:
        return cls(
            n=int(matrix.shape[0]),
            adjacency=tuple(tuple(int(x) for x in row) for row in matrix),
            loops_allowed=loops_allowed,
            labels=tuple(labels),
        )

    def to_numpy(self) -> np.ndarray:
        return np.array(self.adjacency, dtype=np.int64).reshape(self.n, self.n)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(j for j, a in enumerate(row) if a) for row in self.adjacency
        )

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges (i, j) with i <= j, sorted."""
        return [(i, j) for i in range(self.n) for j in self.neighbors[i] if i <= j]

    @property
    def edge_count(self) -> int:
        return len(self.edges())

    @property
    def has_loops(self) -> bool:
        return any(self.adjacency[i][i] for i in range(self.n))

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        degrees = {len(nbrs) for nbrs in self.neighbors}
        return degrees.pop() if len(degrees) == 1 else None

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.neighbors), default=0)

    def relabel(self, labels: Sequence[str]) -> SimpleGraph:
        return self.model_copy(update={"labels": tuple(labels)})


def build_gc_graph(S: GCSubset) -> SimpleGraph:
    """GC(G, S, alpha).

    Raises:
        InternalAsymmetry: If the relation is not symmetric or has a loop,
            which a validated subset rules out
    """
    G, image = S.group, S.alpha.image
    members = S.members.members
    neighbors = [{G.table[image[g]][s] for s in members} for g in range(G.order)]
    for g, nbrs in enumerate(neighbors):
        if g in nbrs:
            raise InternalAsymmetry(f"Loop at {G.names[g]}", witness=(g, g))
        for h in nbrs:
            if g not in neighbors[h]:
                raise InternalAsymmetry(
                    f"{G.names[g]} ~ {G.names[h]} but not conversely", witness=(g, h)
                )
    return SimpleGraph.from_neighbors(neighbors, G.names)


def build_cayley_graph(G: FiniteGroup, T: ElementSet) -> SimpleGraph:
    """Cay(G, T) with h adjacent to g iff h = g t; a loop everywhere when e is in T.

    Raises:
        NotSymmetricSet: If T != T^-1
    """
    for t in T.members:
        if G.inv(t) not in T:
            raise NotSymmetricSet(
                f"{G.names[t]} is in T but its inverse is not", witness=t
            )
    members = T.members
    neighbors = [{G.table[g][t] for t in members} for g in range(G.order)]
    return SimpleGraph.from_neighbors(neighbors, G.names, loops_allowed=True)


def build_cayley_sum_graph(G: FiniteGroup, S: ElementSet) -> SimpleGraph:
    """Cay+(G, S) for abelian G and square-free S.

    Raises:
        NotAbelian: If G is not abelian
        NotSquareFree: With the first s in S that is a square
    """
    if not is_abelian(G):
        raise NotAbelian(f"{G} is not abelian", witness=G.label)
    for g in range(G.order):
        sq = G.table[g][g]
        if sq in S:
            raise NotSquareFree(
                f"{G.names[sq]} = {G.names[g]}^2 is in S", witness=(g, sq)
            )
    members = S.members
    neighbors = [{G.table[G.inv(g)][s] for s in members} for g in range(G.order)]
    return SimpleGraph.from_neighbors(neighbors, G.names)


def direct_product_graph(X: SimpleGraph, Y: SimpleGraph) -> SimpleGraph:
    """Tensor product X x Y; vertex (i, j) gets index i*|Y| + j."""
    matrix = np.kron(X.to_numpy(), Y.to_numpy())
    labels = [f"({x},{y})" for x in X.labels for y in Y.labels]
    return SimpleGraph.from_matrix(
        matrix, labels, loops_allowed=X.loops_allowed or Y.loops_allowed
    )


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def two_walk_graph(X: SimpleGraph) -> SimpleGraph:
    """Graph joining x and y whenever a walk of length 2 runs from x to y."""
    square = X.to_numpy() @ X.to_numpy()
    return SimpleGraph.from_matrix((square > 0).astype(np.int64), X.labels, loops_allowed=True)
