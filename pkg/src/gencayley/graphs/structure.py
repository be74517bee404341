"""Breadth-first structure checks: components and bipartiteness certificates."""

from __future__ import annotations

from collections import deque

from pydantic import model_validator

from gencayley._base import GCModel
from gencayley.graphs.graph import SimpleGraph


class BipartiteCheck(GCModel):
    """Outcome of a 2-colouring attempt.

    Exactly one certificate is present: a colouring (0/1 per vertex) when
    the graph is bipartite, otherwise a closed walk of odd length given as
    its vertex sequence (the closing edge runs from the last vertex back
    to the first).
    """

    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    @model_validator(mode="after")
    def _check_certificate(self) -> BipartiteCheck:
        if self.bipartite and (self.coloring is None or self.odd_cycle is not None):
            raise ValueError("A bipartite result carries a colouring and no cycle")
        if not self.bipartite:
            if self.odd_cycle is None or self.coloring is not None:
                raise ValueError("A non-bipartite result carries an odd cycle only")
            if len(self.odd_cycle) % 2 == 0:
                raise ValueError(f"Cycle of even length {len(self.odd_cycle)}")
        return self

    def __bool__(self) -> bool:
        return self.bipartite


def _bfs(X: SimpleGraph, root: int, seen: list[bool]) -> list[int]:
    order = [root]
    seen[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in X.neighbors[v]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


def connected_components(X: SimpleGraph) -> list[tuple[int, ...]]:
    """Components in order of their least vertex, each sorted."""
    seen = [False] * X.n
    components = []
    for v in range(X.n):
        if not seen[v]:
            components.append(tuple(sorted(_bfs(X, v, seen))))
    return components


def component_of(X: SimpleGraph, v: int) -> tuple[int, ...]:
    return tuple(sorted(_bfs(X, v, [False] * X.n)))


def is_connected(X: SimpleGraph) -> bool:
    return X.n == 0 or len(component_of(X, 0)) == X.n


def _tree_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[v] != v:
        v = parent[v]
        path.append(v)
    return path


def is_bipartite(X: SimpleGraph) -> BipartiteCheck:
    """2-colour X by BFS, or return an odd cycle built from the BFS tree.

    When an edge joins two vertices of equal colour, both tree paths are
    walked up to their lowest common ancestor; the two paths plus the edge
    close a cycle of odd length. A loop is an odd cycle of length one.
    """
    color = [-1] * X.n
    parent = list(range(X.n))
    for root in range(X.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in X.neighbors[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteCheck(bipartite=False, odd_cycle=_odd_cycle(parent, v, w))
    return BipartiteCheck(bipartite=True, coloring=tuple(color))


def _odd_cycle(parent: list[int], v: int, w: int) -> tuple[int, ...]:
    if v == w:
        return (v,)
    up_v = _tree_path(parent, v)
    up_w = _tree_path(parent, w)
    on_w = set(up_w)
    lca = next(u for u in up_v if u in on_w)
    left = up_v[: up_v.index(lca) + 1]
    right = up_w[: up_w.index(lca)]
    return tuple(left + right[::-1])
