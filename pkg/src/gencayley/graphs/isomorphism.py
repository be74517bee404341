"""Backtracking isomorphism search for small graphs."""

from __future__ import annotations

import logging
from collections import deque

from gencayley.errors import SizeLimitExceeded
from gencayley.graphs.graph import SimpleGraph

logger = logging.getLogger(__name__)

MAX_ISOMORPHISM_VERTICES = 32

VertexKey = tuple[int, int, tuple[int, ...], tuple[int, ...]]


def _distance_profile(X: SimpleGraph, v: int) -> tuple[int, ...]:
    dist = [-1] * X.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in X.neighbors[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                queue.append(w)
    depth = max(dist)
    counts = [0] * (depth + 2)
    for d in dist:
        counts[d] += 1  # index -1 collects unreachable vertices
    return tuple(counts)


def _vertex_keys(X: SimpleGraph) -> list[VertexKey]:
    return [
        (
            X.degree(v),
            X.adjacency[v][v],
            tuple(sorted(X.degree(w) for w in X.neighbors[v])),
            _distance_profile(X, v),
        )
        for v in range(X.n)
    ]


def _is_isomorphism(X: SimpleGraph, Y: SimpleGraph, f: tuple[int, ...]) -> bool:
    if sorted(f) != list(range(Y.n)):
        return False
    return all(
        X.adjacency[i][j] == Y.adjacency[f[i]][f[j]]
        for i in range(X.n)
        for j in range(i, X.n)
    )


def are_isomorphic(X: SimpleGraph, Y: SimpleGraph) -> tuple[int, ...] | None:
    """Find a bijection f with i ~ j in X iff f(i) ~ f(j) in Y.

    Vertices are matched only against vertices with the same degree,
    loop, neighbour-degree and distance profile. The order of assignment
    grows from the most constrained vertex so that each new vertex is
    checked against already mapped neighbours.

    Returns:
        f as a tuple indexed by the vertices of X, or None

    Raises:
        SizeLimitExceeded: If either graph has more than 32 vertices
    """
    for Z in (X, Y):
        if Z.n > MAX_ISOMORPHISM_VERTICES:
            raise SizeLimitExceeded(
                f"Isomorphism search is limited to {MAX_ISOMORPHISM_VERTICES} "
                f"vertices, got {Z.n}"
            )
    if X.n != Y.n or X.edge_count != Y.edge_count:
        return None
    keys_x, keys_y = _vertex_keys(X), _vertex_keys(Y)
    if sorted(keys_x) != sorted(keys_y):
        return None
    n = X.n
    if n == 0:
        return ()

    candidates = [[y for y in range(n) if keys_y[y] == keys_x[x]] for x in range(n)]
    order: list[int] = []
    placed = [False] * n
    links = [0] * n
    for _ in range(n):
        x = min(
            (v for v in range(n) if not placed[v]),
            key=lambda v: (-links[v], len(candidates[v]), v),
        )
        order.append(x)
        placed[x] = True
        for w in X.neighbors[x]:
            links[w] += 1

    f = [-1] * n
    used = [False] * n

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        x = order[depth]
        for y in candidates[x]:
            if used[y]:
                continue
            if any(
                X.adjacency[x][order[i]] != Y.adjacency[y][f[order[i]]]
                for i in range(depth)
            ):
                continue
            f[x], used[y] = y, True
            if extend(depth + 1):
                return True
            f[x], used[y] = -1, False
        return False

    if not extend(0):
        return None
    mapping = tuple(f)
    if not _is_isomorphism(X, Y, mapping):
        raise AssertionError("Isomorphism search produced a map that is not edge-preserving")
    logger.debug("Isomorphism %r -> %r found", X, Y)
    return mapping
