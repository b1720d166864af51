"""Verifiers for parity-type edge-colorings, each returning a re-checkable certificate.

The parity and conflict-free checks enumerate simple paths and are
exponential; they refuse graphs above ``edge_limit`` edges with
:class:`InconclusiveError`. The strong-parity check is polynomial: it completes each
component to a clique with fresh colors and looks for a unit vector in the
span of the triangle parity vectors at one vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .gf2 import Gf2Basis
from .graph_core import EdgeColoring, Graph, Walk, parity_vector

DEFAULT_EDGE_LIMIT = 40


class InconclusiveError(RuntimeError):
    """An exhaustive check was refused because the input is over its size limit."""


class Method(str, Enum):
    ALGEBRAIC = "algebraic"
    EXHAUSTIVE = "exhaustive"


class CertificateKind(str, Enum):
    PARITY_PATH = "parity_path"
    OPEN_PARITY_WALK = "open_parity_walk"
    BAD_CYCLE = "bad_cycle"
    CONFLICT_PATH = "conflict_path"
    FOUR_CONSTRAINT_VIOLATION = "four_constraint_violation"


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    walk: Walk
    detail: tuple[int, ...] = ()

    def to_json(self, f: EdgeColoring) -> dict:
        g = f.graph
        out = {
            "kind": self.kind.value,
            "walk": [g.labels[v] for v in self.walk.vertices],
        }
        if self.kind is CertificateKind.FOUR_CONSTRAINT_VIOLATION:
            out["vertices"] = [g.labels[v] for v in self.detail]
        else:
            out["colors"] = [f.color_labels[c] for c in self.detail]
        return out


@dataclass(frozen=True)
class Verdict:
    valid: bool
    certificate: Certificate | None = None
    method: Method = Method.EXHAUSTIVE
    info: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.valid


def _guard(g: Graph, edge_limit: int) -> None:
    if g.m > edge_limit:
        raise InconclusiveError(
            f"exhaustive path search refused: {g.m} edges > limit {edge_limit}")


def _color_adjacency(f: EdgeColoring) -> list[list[tuple[int, int]]]:
    return [[(w, f.color_of[e]) for w, e in nbrs] for nbrs in f.graph.adjacency]


def _shortest_bad_path(f: EdgeColoring, bad, need) -> tuple[int, ...] | None:
    """Shortest path (first in lexicographic DFS order among the shortest)
    whose color state satisfies ``bad``.

    The state is ``(odd, once, multi)`` bitmasks over colors: odd usage,
    used exactly once, used at least twice. ``need(odd, once)`` is a lower
    bound on the edges still required to reach a bad state; branches that
    cannot reach one within the unvisited vertices, or not more briefly than
    the best path so far, are cut.
    """
    adj = _color_adjacency(f)
    n = f.graph.n
    best: list = [None]
    best_len = [n]  # a path has at most n-1 edges

    def dfs(v, visited, path, odd, once, multi):
        depth = len(path)  # vertices so far; next edge makes length == depth
        if depth >= best_len[0]:
            return
        for w, c in adj[v]:
            if visited >> w & 1:
                continue
            bit = 1 << c
            if multi & bit:
                o2, m2 = once, multi
            elif once & bit:
                o2, m2 = once ^ bit, multi | bit
            else:
                o2, m2 = once | bit, multi
            path.append(w)
            if bad(odd ^ bit, o2, m2):
                if len(path) - 1 < best_len[0]:
                    best_len[0] = len(path) - 1
                    best[0] = tuple(path)
            else:
                more = need(odd ^ bit, o2)
                if more <= n - len(path) and len(path) - 1 + more < best_len[0]:
                    dfs(w, visited | 1 << w, path, odd ^ bit, o2, m2)
            path.pop()

    for s in range(n):
        dfs(s, 1 << s, [s], 0, 0, 0)
    return best[0]


def check_parity_coloring(G: Graph, f: EdgeColoring,
                          edge_limit: int = DEFAULT_EDGE_LIMIT) -> Verdict:
    """Valid iff no path (directed path, for digraphs) has every color with even usage."""
    _guard(G, edge_limit)
    path = _shortest_bad_path(f, lambda odd, once, multi: odd == 0,
                              lambda odd, once: odd.bit_count())
    if path is None:
        return Verdict(True, method=Method.EXHAUSTIVE)
    walk = Walk(path)
    colors = tuple(sorted({f.color_of[e] for e in walk.edge_indices(G)}))
    return Verdict(False, Certificate(CertificateKind.PARITY_PATH, walk, colors),
                   Method.EXHAUSTIVE)


def check_conflict_free(G: Graph, f: EdgeColoring,
                        edge_limit: int = DEFAULT_EDGE_LIMIT) -> Verdict:
    """Valid iff every path has some color used exactly once."""
    _guard(G, edge_limit)
    path = _shortest_bad_path(f, lambda odd, once, multi: once == 0,
                              lambda odd, once: once.bit_count())
    if path is None:
        return Verdict(True, method=Method.EXHAUSTIVE)
    walk = Walk(path)
    colors = tuple(sorted({f.color_of[e] for e in walk.edge_indices(G)}))
    return Verdict(False, Certificate(CertificateKind.CONFLICT_PATH, walk, colors),
                   Method.EXHAUSTIVE)


# ---------- cycle space

def spanning_forest(G: Graph) -> tuple[dict[int, int | None], list[int]]:
    """BFS forest: parent map (roots map to None) and the non-tree edge indices."""
    parent: dict[int, int | None] = {}
    tree_edges = set()
    for comp in G.components():
        root = comp[0]
        parent[root] = None
        queue = [root]
        for x in queue:
            for y in G.undirected_neighbors(x):
                if y not in parent:
                    parent[y] = x
                    e = G.edge_index(x, y)
                    tree_edges.add(e if e is not None else G.edge_index(y, x))
                    queue.append(y)
    non_tree = [i for i in range(G.m) if i not in tree_edges]
    return parent, non_tree


def _root_path(parent: dict[int, int | None], v: int) -> list[int]:
    out = [v]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])  # type: ignore[arg-type]
    return out


def tree_path(parent: dict[int, int | None], x: int, y: int) -> list[int]:
    """The x,y-path in the forest given by ``parent``."""
    px, py = _root_path(parent, x), _root_path(parent, y)
    on_y = {v: i for i, v in enumerate(py)}
    for i, v in enumerate(px):
        if v in on_y:
            return px[:i + 1] + py[:on_y[v]][::-1]
    raise ValueError("vertices in different trees")


def check_cycles_parity(G: Graph, f: EdgeColoring) -> Verdict:
    """Valid iff every cycle uses each color an even number of times.

    Usage parity is additive over the cycle space, so fundamental cycles of a
    spanning forest decide it.
    """
    if G.directed:
        raise ValueError("cycle parity is defined for undirected graphs")
    parent, non_tree = spanning_forest(G)
    for i in non_tree:
        x, y = G.edges[i]
        cyc = Walk(tuple(tree_path(parent, y, x)) + (y,))
        pv = parity_vector(f, cyc)
        if pv:
            return Verdict(False, Certificate(CertificateKind.BAD_CYCLE, cyc,
                                              tuple(pv.odd_colors())), Method.ALGEBRAIC)
    return Verdict(True, method=Method.ALGEBRAIC)


# ---------- strong parity edge-colorings

@dataclass(frozen=True)
class _Completion:
    """A connected component completed to a clique with one fresh color per added edge."""
    vertices: tuple[int, ...]
    width: int
    color: dict[tuple[int, int], int]
    virtual: dict[int, tuple[int, int]]
    triangles: tuple[tuple[int, int], ...]
    basis: Gf2Basis


def _complete(G: Graph, f: EdgeColoring, comp: list[int]) -> _Completion:
    color: dict[tuple[int, int], int] = {}
    virtual: dict[int, tuple[int, int]] = {}
    width = f.k
    for i, u in enumerate(comp):
        for v in comp[i + 1:]:
            e = G.edge_index(u, v)
            if e is None:
                color[(u, v)] = width
                virtual[width] = (u, v)
                width += 1
            else:
                color[(u, v)] = f.color_of[e]

    def col(a, b):
        return color[(a, b) if a < b else (b, a)]

    hub = comp[0]
    rest = comp[1:]
    triangles = []
    basis = Gf2Basis(width)
    for i, a in enumerate(rest):
        for b in rest[i + 1:]:
            triangles.append((a, b))
            basis = basis.insert((1 << col(hub, a)) ^ (1 << col(a, b)) ^ (1 << col(hub, b)))
    return _Completion(tuple(comp), width, color, virtual, tuple(triangles), basis)


def parity_space(G: Graph, f: EdgeColoring) -> Gf2Basis:
    """Basis of the closed-walk parity space of the clique completion of a connected G.

    Missing edges get fresh colors ``f.k, f.k+1, ...`` in lexicographic
    order of their endpoint pairs.
    """
    if G.directed or not G.is_connected():
        raise ValueError("parity_space needs a connected undirected graph")
    return _complete(G, f, list(range(G.n))).basis


def _cancel_backtracks(vertices: list[int]) -> list[int]:
    out: list[int] = []
    for v in vertices:
        if len(out) >= 2 and out[-2] == v:
            out.pop()
        else:
            out.append(v)
    return out


def _open_walk_from_unit(G: Graph, f: EdgeColoring, c: _Completion, j: int) -> Walk:
    tag = c.basis.combination(1 << j)
    assert tag is not None
    hub = c.vertices[0]
    closed = [hub]
    for t, (a, b) in enumerate(c.triangles):
        if tag >> t & 1:
            closed += [a, b, hub]

    def col(a, b):
        return c.color[(a, b) if a < b else (b, a)]

    # pick an edge of color j with odd traversal count, rotate it to the front, drop it
    counts: dict[tuple[int, int], int] = {}
    for a, b in zip(closed, closed[1:]):
        if col(a, b) == j:
            key = (min(a, b), max(a, b))
            counts[key] = counts.get(key, 0) + 1
    odd = {e for e, n in counts.items() if n % 2}
    for p, (a, b) in enumerate(zip(closed, closed[1:])):
        if (min(a, b), max(a, b)) in odd:
            break
    body = closed[:-1]
    rotated = body[p:] + body[:p] + [body[p]]
    walk = rotated[1:]

    # replace each virtual edge by a path in G
    allowed = set(c.vertices)
    expanded = [walk[0]]
    for a, b in zip(walk, walk[1:]):
        if col(a, b) in c.virtual:
            expanded += G.bfs_path(a, b, allowed)[1:]
        else:
            expanded.append(b)
    return Walk(tuple(_cancel_backtracks(expanded)))


def check_spec(G: Graph, f: EdgeColoring) -> Verdict:
    """Polynomial-time recognition of strong parity edge-colorings.

    Invalid verdicts carry an open parity walk of G.
    """
    if G.directed:
        if not G.is_acyclic():
            raise ValueError("spec recognition for digraphs with directed cycles is not supported")
        # in an acyclic digraph every walk is a path
        v = check_parity_coloring(G, f)
        if v.valid:
            return v
        cert = Certificate(CertificateKind.OPEN_PARITY_WALK, v.certificate.walk,
                           v.certificate.detail)
        return Verdict(False, cert, Method.EXHAUSTIVE)
    for comp in G.components():
        if len(comp) < 2:
            continue
        c = _complete(G, f, comp)
        j = c.basis.weight1_in_span()
        if j is not None:
            walk = _open_walk_from_unit(G, f, c, j)
            pv = parity_vector(f, walk)
            assert not pv and not walk.is_closed(), "certificate reconstruction failed"
            colors = tuple(sorted({f.color_of[e] for e in walk.edge_indices(G)}))
            return Verdict(False, Certificate(CertificateKind.OPEN_PARITY_WALK, walk, colors),
                           Method.ALGEBRAIC, {"unit_color": j})
    return Verdict(True, method=Method.ALGEBRAIC)


# ---------- 4-constraints

def check_four_constraint(G: Graph, f: EdgeColoring, weak: bool = False) -> Verdict:
    """Strong: if f(uv)=f(xy) and vx is an edge, then uy is an edge with f(uy)=f(vx).
    Weak: only when both vx and yu are edges, require f(vx)=f(yu).

    Pairs of same-colored edges sharing a vertex are not 4-vertex
    configurations and are skipped.
    """
    if G.directed:
        raise ValueError("4-constraints are defined for undirected graphs")
    for cls in f.classes():
        for e1 in cls:
            for e2 in cls:
                if e2 == e1:
                    continue
                a, b = G.edges[e1]
                p, q = G.edges[e2]
                if len({a, b, p, q}) < 4:
                    continue
                for u, v in ((a, b), (b, a)):
                    for x, y in ((p, q), (q, p)):
                        vx = G.edge_index(v, x)
                        if vx is None:
                            continue
                        uy = G.edge_index(u, y)
                        if weak:
                            ok = uy is None or f.color_of[uy] == f.color_of[vx]
                        else:
                            ok = uy is not None and f.color_of[uy] == f.color_of[vx]
                        if not ok:
                            cert = Certificate(CertificateKind.FOUR_CONSTRAINT_VIOLATION,
                                               Walk((u, v, x, y)), (u, v, x, y))
                            return Verdict(False, cert, Method.EXHAUSTIVE)
    return Verdict(True, method=Method.EXHAUSTIVE)


def certificate_is_sound(f: EdgeColoring, cert: Certificate) -> bool:
    """Independent re-check of a certificate against the coloring."""
    g = f.graph
    w = cert.walk
    try:
        pv = parity_vector(f, w)
    except ValueError:
        return False
    if cert.kind is CertificateKind.PARITY_PATH:
        return w.length > 0 and w.is_path() and not pv
    if cert.kind is CertificateKind.OPEN_PARITY_WALK:
        return not w.is_closed() and not pv
    if cert.kind is CertificateKind.BAD_CYCLE:
        return w.is_closed() and w.length >= 3 and bool(pv)
    if cert.kind is CertificateKind.CONFLICT_PATH:
        counts: dict[int, int] = {}
        for e in w.edge_indices(g):
            counts[f.color_of[e]] = counts.get(f.color_of[e], 0) + 1
        return w.is_path() and w.length > 0 and 1 not in counts.values()
    if cert.kind is CertificateKind.FOUR_CONSTRAINT_VIOLATION:
        u, v, x, y = cert.detail
        if f.color(u, v) != f.color(x, y):
            return False
        return not g.has_edge(u, y) or f.color(u, y) != f.color(v, x)
    return False
