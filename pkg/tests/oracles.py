"""Slow, obviously-correct reference implementations used by the tests.

None of these share code with the package beyond the plain data types.
"""

from __future__ import annotations

from collections import deque
from itertools import product

import networkx as nx

from paritycolor.graph_core import EdgeColoring, Graph


def all_simple_paths(g: Graph):
    """Every simple path with at least one edge, as a vertex tuple (both directions)."""
    nxg = nx.DiGraph() if g.directed else nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    for s in range(g.n):
        for t in range(g.n):
            if s != t:
                yield from (tuple(p) for p in nx.all_simple_paths(nxg, s, t))


def usage(f: EdgeColoring, vertices) -> dict[int, int]:
    counts: dict[int, int] = {}
    g = f.graph
    for a, b in zip(vertices, vertices[1:]):
        e = g.edge_index(a, b)
        assert e is not None
        c = f.color_of[e]
        counts[c] = counts.get(c, 0) + 1
    return counts


def has_parity_path(f: EdgeColoring) -> bool:
    return any(all(x % 2 == 0 for x in usage(f, p).values()) for p in all_simple_paths(f.graph))


def is_conflict_free(f: EdgeColoring) -> bool:
    return all(1 in usage(f, p).values() for p in all_simple_paths(f.graph))


def open_parity_walk_length(f: EdgeColoring, cutoff: int | None = None) -> int | None:
    """Length of a shortest open walk with all-even usage, searching walks of
    length <= cutoff (default 2|E|) by BFS over (start, vertex, parity) states."""
    g = f.graph
    if cutoff is None:
        cutoff = 2 * g.m
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for (u, v), c in zip(g.edges, f.color_of):
        adj[u].append((v, c))
        adj[v].append((u, c))
    best = None
    for s in range(g.n):
        seen = {(s, 0)}
        queue = deque([(s, 0, 0)])
        while queue:
            v, mask, d = queue.popleft()
            if d == cutoff:
                continue
            for w, c in adj[v]:
                state = (w, mask ^ 1 << c)
                if state in seen:
                    continue
                seen.add(state)
                if state[1] == 0 and w != s:
                    if best is None or d + 1 < best:
                        best = d + 1
                queue.append((w, state[1], d + 1))
    return best


def span(vectors: list[int]) -> set[int]:
    out = {0}
    for v in vectors:
        out |= {x ^ v for x in out}
    return out


def min_colors_bruteforce(g: Graph, accept, max_k: int) -> int | None:
    """Smallest k <= max_k with a coloring in range(k)^|E| accepted by ``accept``."""
    for k in range(1, max_k + 1):
        for colors in product(range(k), repeat=g.m):
            if accept(EdgeColoring(g, colors, k)):
                return k
    return None


def graphs_up_to(n_max: int) -> list[Graph]:
    """All graphs with 2..n_max vertices and at least one edge, up to isomorphism."""
    out = []
    for h in nx.graph_atlas_g():
        if 2 <= h.number_of_nodes() <= n_max and h.number_of_edges() > 0:
            out.append(Graph.from_edges(h.number_of_nodes(), [tuple(sorted(e)) for e in h.edges()]))
    return out
