"""Parity r-set edge-colorings: every choice of one color per edge must be a
parity edge-coloring.

Includes the linked-partition / bipartite-matching machinery for paths and
the contraction of a near-perfect color class in a clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .constructions import ceil_lg
from .graph_core import EdgeColoring, Graph, ParseError, Walk, complete_graph
from .solver import SolveLimits, SolveResult, Status, _OutOfBudget, lower_bounds, search_order
from .verify import (DEFAULT_EDGE_LIMIT, Certificate, CertificateKind, InconclusiveError,
                     Method, Verdict, check_parity_coloring)


@dataclass(frozen=True)
class RSetColoring:
    graph: Graph
    sets: tuple[frozenset[int], ...]
    r: int
    color_labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        if len(self.sets) != self.graph.m:
            raise ValueError("need one color set per edge")
        for s in self.sets:
            if len(s) != self.r:
                raise ValueError(f"color set {sorted(s)} does not have size {self.r}")
        top = max((max(s) for s in self.sets if s), default=-1)
        if not self.color_labels:
            object.__setattr__(self, "color_labels", tuple(str(i + 1) for i in range(top + 1)))
        if top >= len(self.color_labels):
            raise ValueError("color index without a label")

    @property
    def palette(self) -> frozenset[int]:
        return frozenset().union(*self.sets) if self.sets else frozenset()

    @property
    def palette_size(self) -> int:
        return len(self.palette)

    def select(self, choice: tuple[int, ...]) -> EdgeColoring:
        """The ordinary coloring picking color ``choice[i]`` on edge i."""
        return EdgeColoring(self.graph, choice, len(self.color_labels), self.color_labels)

    @classmethod
    def from_coloring(cls, f: EdgeColoring) -> "RSetColoring":
        return cls(f.graph, tuple(frozenset([c]) for c in f.color_of), 1, f.color_labels)


def double_coloring(f: EdgeColoring, r: int = 2) -> RSetColoring:
    """r disjoint copies of f: color c becomes {c, c', c'', ...}."""
    labels = tuple(lab + "'" * j for j in range(r) for lab in f.color_labels)
    sets = tuple(frozenset(c + j * f.k for j in range(r)) for c in f.color_of)
    return RSetColoring(f.graph, sets, r, labels)


def verify_rset(G: Graph, a: RSetColoring, edge_limit: int = DEFAULT_EDGE_LIMIT) -> Verdict:
    """Valid iff no selection admits a parity path.

    For each simple path, the set of parity vectors reachable by choosing one
    color per edge is propagated along the path; a parity path under some
    selection exists iff zero is reachable on some path of positive length.
    On failure ``info["selection"]`` is the lexicographically smallest bad
    selection (edges in index order, colors by index), fixed greedily one
    edge at a time, and the certificate is a shortest parity path under it.
    """
    if G.m > edge_limit:
        raise InconclusiveError(f"{G.m} edges > limit {edge_limit}")
    sets = [tuple(sorted(s)) for s in a.sets]
    if _shortest_bad_path(G, sets) is None:
        return Verdict(True, method=Method.EXHAUSTIVE)
    for e in range(G.m):
        for c in sets[e]:
            trial = sets[:e] + [(c,)] + sets[e + 1:]
            if _shortest_bad_path(G, trial) is not None:
                sets = trial
                break
    choice = tuple(s[0] for s in sets)
    path = _shortest_bad_path(G, sets)
    picks = tuple(choice[e] for e in Walk(path).edge_indices(G))
    cert = Certificate(CertificateKind.PARITY_PATH, Walk(path), tuple(sorted(set(picks))))
    return Verdict(False, cert, Method.EXHAUSTIVE, {"selection": choice})


def _shortest_bad_path(G: Graph, sets: list[tuple[int, ...]]) -> tuple[int, ...] | None:
    """Shortest path (lexicographic among equals) with zero reachable, or None."""
    n = G.n
    best: list = [None, n]

    def dfs(v, visited, path, states):
        if len(path) >= best[1]:
            return
        for w, e in G.adjacency[v]:
            if visited >> w & 1:
                continue
            nxt = {mask ^ 1 << c for mask in states for c in sets[e]}
            path.append(w)
            if 0 in nxt:
                if len(path) - 1 < best[1]:
                    best[0] = tuple(path)
                    best[1] = len(path) - 1
            else:
                dfs(w, visited | 1 << w, path, nxt)
            path.pop()

    for s in range(n):
        dfs(s, 1 << s, [s], {0})
    return best[0]


def _rset_bad_through(adj, a: int, b: int, cset: frozenset[int]) -> bool:
    lefts: list[tuple[int, frozenset[int]]] = []

    def left(v, visited, states):
        lefts.append((visited, states))
        for w, s in adj[v]:
            if not visited >> w & 1:
                left(w, visited | 1 << w, frozenset(m ^ 1 << c for m in states for c in s))

    left(a, 1 << a | 1 << b, frozenset([0]))

    def right(v, visited, states):
        if 0 in states:
            return True
        for w, s in adj[v]:
            if not visited >> w & 1 and right(
                    w, visited | 1 << w, frozenset(m ^ 1 << c for m in states for c in s)):
                return True
        return False

    return any(right(b, visited, frozenset(m ^ 1 << c for m in states for c in cset))
               for visited, states in lefts)


def solve_p_r(G: Graph, r: int, limits: SolveLimits = SolveLimits(max_edges=6)) -> SolveResult:
    """Exact p_r(G): smallest palette admitting a parity r-set edge-coloring.

    Palettes grow from max(r * max degree, ordinary lower bounds); within a palette
    the assignment is searched edge by edge with canonical introduction of new
    colors, and each complete candidate is confirmed by :func:`verify_rset`.
    The witness picks the smallest color of each set; use
    :func:`solve_p_r_sets` for the full sets.
    """
    res, _ = solve_p_r_sets(G, r, limits)
    return res


def solve_p_r_sets(G: Graph, r: int, limits: SolveLimits = SolveLimits(max_edges=6)
                   ) -> tuple[SolveResult, RSetColoring]:
    if r < 1:
        raise ValueError("r must be positive")

    trace = lower_bounds(G)
    trivial = RSetColoring(G, tuple(frozenset(range(r * i, r * i + r)) for i in range(G.m)), r)

    def result(value, sets, nodes, status):
        wit = EdgeColoring(G, tuple(min(s) for s in sets.sets), r * G.m)
        return SolveResult(value, wit, trace, nodes, status), sets

    if G.m == 0:
        return result(0, trivial, 0, Status.EXACT)
    if G.m > limits.max_edges:
        return result(r * G.m, trivial, 0, Status.OVERSIZE)
    # sets at a common vertex are disjoint; any selection is itself a parity coloring
    lb = max(r * G.max_degree(), max(v for _, v in trace))
    order = search_order(G)
    nodes = [0]
    for size in range(max(lb, r), r * G.m + 1):
        sets: list[frozenset[int] | None] = [None] * G.m
        adj: list[list[tuple[int, frozenset[int]]]] = [[] for _ in range(G.n)]

        def candidates(used: int):
            for fresh in range(0, r + 1):
                if used + fresh > size:
                    break
                new = tuple(range(used, used + fresh))
                for old in combinations(range(used), r - fresh):
                    yield frozenset(old + new), used + fresh

        def rec(pos: int, used: int) -> bool:
            if pos == len(order):
                cand = RSetColoring(G, tuple(sets), r)  # type: ignore[arg-type]
                return verify_rset(G, cand, edge_limit=max(DEFAULT_EDGE_LIMIT, G.m)).valid
            e = order[pos]
            a, b = G.edges[e]
            for s, used2 in candidates(used):
                nodes[0] += 1
                if nodes[0] > limits.max_nodes:
                    raise _OutOfBudget
                if _rset_bad_through(adj, a, b, s):
                    continue
                sets[e] = s
                adj[a].append((b, s))
                adj[b].append((a, s))
                ok = rec(pos + 1, used2)
                adj[a].pop()
                adj[b].pop()
                if ok:
                    return True
                sets[e] = None
            return False

        try:
            found = rec(0, 0)
        except _OutOfBudget:
            trace.append(("search", size))
            return result(r * G.m, trivial, nodes[0], Status.TIMEOUT)
        if found:
            if size > lb:
                trace.append(("search", size))
            return result(size, RSetColoring(G, tuple(sets), r), nodes[0], Status.EXACT)  # type: ignore[arg-type]
    raise AssertionError("disjoint sets always succeed")


# ---------- paths: linked partitions and disjoint color sets

def path_edge_order(G: Graph) -> list[int]:
    """Edge indices of a path graph in order from its smaller-index end."""
    if G.directed or not G.is_tree() or G.max_degree() > 2:
        raise ValueError("input graph is not a path")
    if G.m == 0:
        return []
    end = min(v for v in range(G.n) if G.degree(v) == 1)
    order, prev, v = [], -1, end
    while True:
        nxt = [(w, e) for w, e in G.adjacency[v] if w != prev]
        if not nxt:
            return order
        w, e = nxt[0]
        order.append(e)
        prev, v = v, w


def _linked_graph(a: RSetColoring, order: list[int]) -> list[list[int]]:
    """H as adjacency lists: left i -> right j when i < j and the sets meet."""
    s = [a.sets[e] for e in order]
    return [[j for j in range(i + 1, len(s)) if s[i] & s[j]] for i in range(len(s))]


def max_bipartite_matching(adj: list[list[int]], n_right: int) -> list[int | None]:
    """Augmenting paths; returns ``match_right[j]`` = matched left vertex or None."""
    match_right: list[int | None] = [None] * n_right

    def augment(i: int, seen: list[bool]) -> bool:
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                if match_right[j] is None or augment(match_right[j], seen):  # type: ignore[arg-type]
                    match_right[j] = i
                    return True
        return False

    for i in range(len(adj)):
        augment(i, [False] * n_right)
    return match_right


def min_vertex_cover(adj: list[list[int]], n_right: int,
                     match_right: list[int | None]) -> tuple[set[int], set[int]]:
    """Koenig: with Z the vertices reachable by alternating paths from unmatched
    left vertices, (L - Z) + (R & Z) is a minimum cover."""
    match_left: dict[int, int] = {i: j for j, i in enumerate(match_right) if i is not None}
    zl = {i for i in range(len(adj)) if i not in match_left}
    zr: set[int] = set()
    stack = list(zl)
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if j not in zr and match_right[j] != i:
                zr.add(j)
                k = match_right[j]
                if k is not None and k not in zl:
                    zl.add(k)
                    stack.append(k)
    return set(range(len(adj))) - zl, zr


def min_linked_partition(a: RSetColoring) -> tuple[list[list[int]], int]:
    """Partition the path's edges into the fewest linked sets.

    A maximum matching of H (v_i w_j for i < j with meeting sets) links e_j
    right after e_i; following the links gives n-1-|M| chains.
    Returns the parts (edge indices in path order) and their number.
    """
    order = path_edge_order(a.graph)
    q = len(order)
    adj = _linked_graph(a, order)
    match_right = max_bipartite_matching(adj, q)
    nxt = {i: j for j, i in enumerate(match_right) if i is not None}
    starts = [j for j in range(q) if match_right[j] is None]
    parts = []
    for s in starts:
        chain = [s]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        parts.append([order[i] for i in chain])
    assert sum(len(p) for p in parts) == q
    return parts, len(parts)


def partition_to_matching(a: RSetColoring, parts: list[list[int]]) -> list[tuple[int, int]]:
    """Inverse direction: successive members of each part give matching edges (positions)."""
    pos = {e: i for i, e in enumerate(path_edge_order(a.graph))}
    out = []
    for part in parts:
        idx = sorted(pos[e] for e in part)
        out.extend(zip(idx, idx[1:]))
    return out


def is_linked(a: RSetColoring, part: list[int]) -> bool:
    pos = {e: i for i, e in enumerate(path_edge_order(a.graph))}
    idx = sorted(part, key=pos.__getitem__)
    return all(a.sets[x] & a.sets[y] for x, y in zip(idx, idx[1:]))


def extract_disjoint_edges(a: RSetColoring, edge_limit: int = DEFAULT_EDGE_LIMIT) -> list[int]:
    """Edges with pairwise disjoint color sets, at least as many as the minimum
    linked partition has parts.

    The complement of a minimum vertex cover of H is independent; every i with
    both v_i and w_i in it contributes e_i.
    """
    if not verify_rset(a.graph, a, edge_limit).valid:
        raise ValueError("input is not a parity r-set edge-coloring")
    order = path_edge_order(a.graph)
    q = len(order)
    adj = _linked_graph(a, order)
    match_right = max_bipartite_matching(adj, q)
    cover_left, cover_right = min_vertex_cover(adj, q, match_right)
    matched = sum(1 for x in match_right if x is not None)
    assert len(cover_left) + len(cover_right) == matched
    picked = [order[i] for i in range(q) if i not in cover_left and i not in cover_right]
    assert len(picked) >= q - matched
    for x, y in combinations(picked, 2):
        assert not a.sets[x] & a.sets[y]
    return picked


# ---------- clique contraction

def contract_reduction(f: EdgeColoring, c: int,
                       edge_limit: int = DEFAULT_EDGE_LIMIT) -> RSetColoring:
    """Contract the color class c (of size floor(n/2)) of a parity coloring of
    K_n into a 2-set coloring of K_{ceil(n/2)} that avoids c.

    Pairs u_i v_i (u_i the smaller endpoint) are ordered by u_i; for odd n the
    vertex missed by c comes last. w_i w_j (i < j) gets {f(u_i u_j), f(v_i u_j)}.
    """
    g = f.graph
    n = g.n
    if not g.is_complete():
        raise ValueError("input must color a complete graph")
    cls = f.classes()[c]
    if len(cls) != n // 2:
        raise ValueError(f"color class has {len(cls)} edges, need {n // 2}")
    if not check_parity_coloring(g, f, edge_limit).valid:
        raise ValueError("input is not a parity edge-coloring")
    pairs = sorted(g.edges[e] for e in cls)
    us = [u for u, _ in pairs]
    vs: list[int | None] = [v for _, v in pairs]
    if n % 2:
        covered = {x for p in pairs for x in p}
        us.append(next(x for x in range(n) if x not in covered))
        vs.append(None)
    m = len(us)
    h = complete_graph(m, [f"w{i + 1}" for i in range(m)])
    raw = []
    for i, j in h.edges:
        v_i = vs[i]
        assert v_i is not None
        raw.append((f.color(us[i], us[j]), f.color(v_i, us[j])))
    used = sorted({x for pr in raw for x in pr})
    assert c not in used
    remap = {x: t for t, x in enumerate(used)}
    out = RSetColoring(h, tuple(frozenset((remap[x], remap[y])) for x, y in raw), 2,
                       tuple(f.color_labels[x] for x in used))
    return out


# ---------- text format

def parse_rset(graph: Graph, text: str) -> RSetColoring:
    """Lines ``u v c1,c2,...,cr``; every edge exactly once, all sets the same size."""
    index = {lab: i for i, lab in enumerate(graph.labels)}
    colors: dict[str, int] = {}
    sets: list[frozenset[int] | None] = [None] * graph.m
    r = None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 3:
            raise ParseError(f"expected 'u v c1,...,cr', got {line!r}", no)
        x, y, cs = toks
        if x not in index or y not in index or graph.edge_index(index[x], index[y]) is None:
            raise ParseError(f"unknown edge {x} {y}", no)
        e = graph.edge_index(index[x], index[y])
        if sets[e] is not None:
            raise ParseError(f"repeated edge {x} {y}", no)
        names = cs.split(",")
        if len(set(names)) != len(names):
            raise ParseError("repeated color in a set", no)
        if r is None:
            r = len(names)
        elif len(names) != r:
            raise ParseError(f"set size {len(names)} differs from {r}", no)
        sets[e] = frozenset(colors.setdefault(nm, len(colors)) for nm in names)
    missing = [i for i, s in enumerate(sets) if s is None]
    if missing:
        u, v = graph.edges[missing[0]]
        raise ParseError(f"uncolored edge {graph.labels[u]} {graph.labels[v]}")
    return RSetColoring(graph, tuple(sets), r or 1, tuple(colors))  # type: ignore[arg-type]


def serialize_rset(a: RSetColoring) -> str:
    g = a.graph
    return "".join(
        f"{g.labels[u]} {g.labels[v]} {','.join(a.color_labels[c] for c in sorted(s))}\n"
        for (u, v), s in zip(g.edges, a.sets))


def p_r_path_value(n: int, r: int) -> int:
    """r * ceil(lg n), the known value of p_r on the n-vertex path."""
    return r * ceil_lg(n)
