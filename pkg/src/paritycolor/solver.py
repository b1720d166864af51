"""Exact p(G), strong p(G) and conflict-free c(G) by backtracking.

Edges are colored one at a time in BFS order from a maximum-degree vertex.
A new color may only be the next unused index, so the first edge always gets
color 0. After each assignment, the paths through the new edge that use only
colored edges are enumerated and the branch dies if one is bad (a parity
path, or a path with no color used exactly once). Color counts are tried
upward from the best lower bound, so the first success is optimal.
The node budget is a count of assignments tried, not wall time.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .constructions import ceil_lg, distinct_coloring
from .graph_core import EdgeColoring, Graph
from .verify import check_conflict_free, check_parity_coloring, check_spec


class Status(str, Enum):
    EXACT = "exact"
    TIMEOUT = "timeout"
    OVERSIZE = "oversize"


@dataclass(frozen=True)
class SolveLimits:
    max_edges: int = 12
    max_nodes: int = 20_000_000


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: EdgeColoring
    lower_bound_trace: list[tuple[str, int]] = field(default_factory=list)
    nodes_explored: int = 0
    status: Status = Status.EXACT


def lower_bounds(G: Graph) -> list[tuple[str, int]]:
    """Max degree (a lower bound on the chromatic index) and ceil(lg order) of each component."""
    out = [("max_degree", G.max_degree())]
    for i, comp in enumerate(G.components()):
        if len(comp) > 1:
            out.append((f"log_order[{i}]", ceil_lg(len(comp))))
    return out


def knn_spec_lower_bound(n: int) -> int:
    """max over r of min(2^ceil(lg n) - C(r,2), ceil(n^2 / (n-r-1))) for K_{n,n}."""
    if n < 2:
        raise ValueError("need n >= 2")
    top = 1 << ceil_lg(n)
    best = 0
    for r in range(0, n - 1):
        by_clique = top - r * (r - 1) // 2
        by_count = -(-n * n // (n - r - 1))
        best = max(best, min(by_clique, by_count))
    return best


class _OutOfBudget(Exception):
    pass


def search_order(G: Graph) -> list[int]:
    """Edge indices in BFS order, each component started at a maximum-degree vertex."""
    order: list[int] = []
    taken = [False] * G.m
    seen = [False] * G.n
    for comp in sorted(G.components(), key=lambda c: (-len(c), c[0])):
        root = max(comp, key=lambda v: (G.degree(v), -v))
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, e in G.adjacency[x]:
                if not taken[e]:
                    taken[e] = True
                    order.append(e)
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


class _Search:
    """One backtracking run for a fixed color count."""

    def __init__(self, G: Graph, k: int, mode: str, budget: int):
        self.G = G
        self.k = k
        self.mode = mode
        self.budget = budget
        self.nodes = 0
        self.order = search_order(G)
        self.colors: list[int | None] = [None] * G.m
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(G.n)]

    # -- path checks through a freshly colored edge a-b of color c

    def _parity_bad(self, a: int, b: int, c: int) -> bool:
        adj = self.adj
        lefts: list[tuple[int, int]] = []

        def left(v, visited, odd):
            lefts.append((visited, odd))
            for w, col in adj[v]:
                if not visited >> w & 1:
                    left(w, visited | 1 << w, odd ^ 1 << col)

        left(a, 1 << a | 1 << b, 0)

        def right(v, visited, odd):
            if odd == 0:
                return True
            for w, col in adj[v]:
                if not visited >> w & 1 and right(w, visited | 1 << w, odd ^ 1 << col):
                    return True
            return False

        for visited, odd in lefts:
            if right(b, visited, odd ^ 1 << c):
                return True
        return False

    def _cf_bad(self, a: int, b: int, c: int) -> bool:
        adj = self.adj
        lefts: list[tuple[int, int, int]] = []

        def step(once, multi, bit):
            if multi & bit:
                return once, multi
            if once & bit:
                return once ^ bit, multi | bit
            return once | bit, multi

        def left(v, visited, once, multi):
            lefts.append((visited, once, multi))
            for w, col in adj[v]:
                if not visited >> w & 1:
                    left(w, visited | 1 << w, *step(once, multi, 1 << col))

        left(a, 1 << a | 1 << b, 0, 0)

        def right(v, visited, once, multi):
            if once == 0:
                return True
            for w, col in adj[v]:
                if not visited >> w & 1 and right(w, visited | 1 << w,
                                                  *step(once, multi, 1 << col)):
                    return True
            return False

        for visited, once, multi in lefts:
            if right(b, visited, *step(once, multi, 1 << c)):
                return True
        return False

    def _leaf_ok(self) -> bool:
        if self.mode != "spec":
            return True
        f = EdgeColoring(self.G, tuple(self.colors), self.k)  # type: ignore[arg-type]
        return check_spec(self.G, f).valid

    def run(self) -> EdgeColoring | None:
        bad = self._cf_bad if self.mode == "cf" else self._parity_bad
        order = self.order
        G = self.G

        def rec(pos: int, used: int) -> bool:
            if pos == len(order):
                return self._leaf_ok()
            e = order[pos]
            a, b = G.edges[e]
            for c in range(min(self.k, used + 1)):
                self.nodes += 1
                if self.nodes > self.budget:
                    raise _OutOfBudget
                self.colors[e] = c
                if not bad(a, b, c):
                    self.adj[a].append((b, c))
                    self.adj[b].append((a, c))
                    found = rec(pos + 1, max(used, c + 1))
                    self.adj[a].pop()
                    self.adj[b].pop()
                    if found:
                        return True
                self.colors[e] = None
            return False

        if rec(0, 0):
            return EdgeColoring(G, tuple(self.colors), self.k)  # type: ignore[arg-type]
        return None


_VERIFY = {
    "p": lambda g, f: check_parity_coloring(g, f, edge_limit=max(40, g.m)),
    "spec": check_spec,
    "cf": lambda g, f: check_conflict_free(g, f, edge_limit=max(40, g.m)),
}


def _solve(G: Graph, mode: str, limits: SolveLimits) -> SolveResult:
    if G.directed:
        raise ValueError("the solver handles undirected graphs only")
    trace = lower_bounds(G)
    fallback = distinct_coloring(G)
    if G.m == 0:
        return SolveResult(0, fallback, trace, 0, Status.EXACT)
    if G.m > limits.max_edges:
        return SolveResult(G.m, fallback, trace, 0, Status.OVERSIZE)
    lb = max(v for _, v in trace)
    nodes = 0
    for k in range(max(lb, 1), G.m + 1):
        search = _Search(G, k, "spec" if mode == "spec" else mode, limits.max_nodes - nodes)
        try:
            witness = search.run()
        except _OutOfBudget:
            nodes += search.nodes
            trace.append(("search", k))
            return SolveResult(G.m, fallback, trace, nodes, Status.TIMEOUT)
        nodes += search.nodes
        if witness is not None:
            mode_check = "p" if mode == "p" else mode
            assert _VERIFY[mode_check](G, witness).valid
            if k > lb:
                trace.append(("search", k))
            return SolveResult(k, witness, trace, nodes, Status.EXACT)
    raise AssertionError("distinct colors always succeed")


def solve_p(G: Graph, limits: SolveLimits = SolveLimits()) -> SolveResult:
    """Minimum number of colors in an edge-coloring with no parity path."""
    return _solve(G, "p", limits)


def solve_spec(G: Graph, limits: SolveLimits = SolveLimits()) -> SolveResult:
    """Minimum number of colors in an edge-coloring where every parity walk is closed."""
    return _solve(G, "spec", limits)


def solve_conflict_free(G: Graph, limits: SolveLimits = SolveLimits()) -> SolveResult:
    """Minimum number of colors such that every path has a color used exactly once."""
    return _solve(G, "cf", limits)


def enumerate_parity_colorings(G: Graph, k: int, limits: SolveLimits = SolveLimits()):
    """Every parity edge-coloring of G with colors 0..k-1 (no symmetry breaking)."""
    from itertools import product

    if G.m > limits.max_edges:
        raise ValueError("graph too large for enumeration")
    for colors in product(range(k), repeat=G.m):
        f = EdgeColoring(G, colors, k)
        if f.is_proper() and check_parity_coloring(G, f).valid:
            yield f
