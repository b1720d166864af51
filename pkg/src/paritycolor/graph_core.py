"""Graphs, walks, edge-colorings and parity vectors.

Vertices and colors are dense integer indices; string labels are kept only
for I/O. An undirected edge is stored as ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class ParseError(ValueError):
    """Malformed edge-list, coloring, or related input document."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()
    directed: bool = False

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        if len(self.labels) != self.n:
            raise ValueError("need one label per vertex")
        if len(set(self.labels)) != self.n:
            raise ValueError("vertex labels must be distinct")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if not self.directed and u > v:
                raise ValueError(f"undirected edge ({u}, {v}) not in canonical order")
            key = (u, v) if self.directed else (min(u, v), max(u, v))
            if key in seen or (self.directed and (v, u) in seen):
                raise ValueError(f"parallel edge ({u}, {v})")
            seen.add(key)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]],
                   labels: Sequence[str] = (), directed: bool = False) -> "Graph":
        """Build a graph, canonicalising undirected pairs."""
        if directed:
            edges = tuple((u, v) for u, v in pairs)
        else:
            edges = tuple((min(u, v), max(u, v)) for u, v in pairs)
        return cls(n, edges, tuple(labels), directed)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_index(self, u: int, v: int) -> int | None:
        """Index of the edge joining u to v (u -> v when directed), or None."""
        if not self.directed and u > v:
            u, v = v, u
        return self._index.get((u, v))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_index(u, v) is not None

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, sorted ``(neighbor, edge index)`` pairs (out-neighbors if directed)."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            if not self.directed:
                adj[v].append((u, i))
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def degree(self, v: int) -> int:
        if not self.directed:
            return len(self.adjacency[v])
        return sum(1 for e in self.edges if v in e)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    @cached_property
    def _undirected_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def undirected_neighbors(self, v: int) -> tuple[int, ...]:
        return self._undirected_adj[v]

    def components(self) -> list[list[int]]:
        """Connected components (ignoring direction), each sorted, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._undirected_adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return not self.directed and self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_complete(self) -> bool:
        return not self.directed and self.m == self.n * (self.n - 1) // 2

    def bfs_path(self, s: int, t: int, allowed: set[int] | None = None) -> list[int]:
        """Shortest s,t-path (undirected sense), smallest-index tie-break."""
        prev = {s: s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if x == t:
                break
            for y in self._undirected_adj[x]:
                if y not in prev and (allowed is None or y in allowed):
                    prev[y] = x
                    queue.append(y)
        if t not in prev:
            raise ValueError(f"no path from {s} to {t}")
        path = [t]
        while path[-1] != s:
            path.append(prev[path[-1]])
        return path[::-1]

    def is_acyclic(self) -> bool:
        """For directed graphs: no directed cycle."""
        return self.topological_order() is not None

    def topological_order(self) -> list[int] | None:
        indeg = [0] * self.n
        for _, v in self.edges:
            indeg[v] += 1
        ready = [v for v in range(self.n) if indeg[v] == 0]
        order = []
        while ready:
            x = ready.pop(0)
            order.append(x)
            for y, _ in self.adjacency[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
        return order if len(order) == self.n else None

    def subgraph_edges(self, keep: Iterable[int]) -> "Graph":
        """Spanning subgraph on the given edge indices (same vertices and labels)."""
        keep = sorted(set(keep))
        return Graph(self.n, tuple(self.edges[i] for i in keep), self.labels, self.directed)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        pos = {v: i for i, v in enumerate(vertices)}
        pairs = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph.from_edges(len(vertices), pairs,
                                [self.labels[v] for v in vertices], self.directed)


@dataclass(frozen=True)
class Walk:
    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a walk has at least one vertex")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def is_path(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def steps(self) -> Iterable[tuple[int, int]]:
        return zip(self.vertices, self.vertices[1:])

    def edge_indices(self, graph: Graph) -> list[int]:
        out = []
        for u, v in self.steps():
            i = graph.edge_index(u, v)
            if i is None:
                raise ValueError(f"walk steps along non-edge ({graph.labels[u]}, {graph.labels[v]})")
            out.append(i)
        return out

    def then(self, other: "Walk") -> "Walk":
        if self.end != other.start:
            raise ValueError("walks do not share an endpoint")
        return Walk(self.vertices + other.vertices[1:])

    def reversed(self) -> "Walk":
        return Walk(self.vertices[::-1])


@dataclass(frozen=True)
class EdgeColoring:
    graph: Graph
    color_of: tuple[int, ...]
    k: int
    color_labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "color_of", tuple(self.color_of))
        if not self.color_labels:
            object.__setattr__(self, "color_labels", tuple(str(i + 1) for i in range(self.k)))
        if len(self.color_of) != self.graph.m:
            raise ValueError("coloring must assign a color to every edge")
        if len(self.color_labels) != self.k:
            raise ValueError("need one label per color")
        for c in self.color_of:
            if not 0 <= c < self.k:
                raise ValueError(f"color index {c} outside 0..{self.k - 1}")

    @classmethod
    def from_colors(cls, graph: Graph, colors: Sequence, labels: Sequence[str] | None = None
                    ) -> "EdgeColoring":
        """Color edge i with ``colors[i]``; arbitrary hashable color names are
        densified in first-appearance order."""
        index: dict = {}
        out = []
        for c in colors:
            if c not in index:
                index[c] = len(index)
            out.append(index[c])
        names = tuple(str(c) for c in index) if labels is None else tuple(labels)
        return cls(graph, tuple(out), len(index), names)

    @property
    def used_colors(self) -> int:
        return len(set(self.color_of))

    def color(self, u: int, v: int) -> int:
        i = self.graph.edge_index(u, v)
        if i is None:
            raise KeyError((u, v))
        return self.color_of[i]

    def classes(self) -> list[list[int]]:
        """Edge indices of each color class."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for i, c in enumerate(self.color_of):
            out[c].append(i)
        return out

    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes()]

    def is_proper(self) -> bool:
        seen = set()
        for (u, v), c in zip(self.graph.edges, self.color_of):
            for x in (u, v):
                if (x, c) in seen:
                    return False
                seen.add((x, c))
        return True

    def restrict(self, vertices: Sequence[int]) -> "EdgeColoring":
        """Coloring induced on a vertex subset (colors keep their indices and labels)."""
        sub = self.graph.induced(vertices)
        colors = [self.color(vertices[u], vertices[v]) for u, v in sub.edges]
        return EdgeColoring(sub, tuple(colors), self.k, self.color_labels)

    def compact(self) -> "EdgeColoring":
        """Drop unused colors, renumbering the rest in order."""
        used = sorted(set(self.color_of))
        remap = {c: i for i, c in enumerate(used)}
        return EdgeColoring(self.graph, tuple(remap[c] for c in self.color_of), len(used),
                            tuple(self.color_labels[c] for c in used))


@dataclass(frozen=True)
class ParityVector:
    """Usage parity per color; bit i of ``bits`` is color i.

    The string form writes color 0 first, so ``"110"`` has colors 0 and 1 odd.
    """
    width: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError("bits exceed width")

    @classmethod
    def from_string(cls, s: str) -> "ParityVector":
        return cls(len(s), sum(1 << i for i, ch in enumerate(s) if ch == "1"))

    @classmethod
    def unit(cls, width: int, i: int) -> "ParityVector":
        return cls(width, 1 << i)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.width))

    def __xor__(self, other: "ParityVector") -> "ParityVector":
        if other.width != self.width:
            raise ValueError("width mismatch")
        return ParityVector(self.width, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def weight(self) -> int:
        return self.bits.bit_count()

    def odd_colors(self) -> list[int]:
        return [i for i in range(self.width) if self.bits >> i & 1]


def parity_vector(coloring: EdgeColoring, walk: Walk) -> ParityVector:
    """Parity vector of a walk: bit i flips on each traversal of a color-i edge."""
    bits = 0
    for i in walk.edge_indices(coloring.graph):
        bits ^= 1 << coloring.color_of[i]
    return ParityVector(coloring.k, bits)


# ---------- standard graphs

def complete_graph(n: int, labels: Sequence[str] = ()) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)], labels)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with the small side on vertices 0..m-1 labelled x*, the other y*."""
    labels = [f"x{i}" for i in range(m)] + [f"y{j}" for j in range(n)]
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)], labels)


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def hypercube_graph(k: int) -> Graph:
    """Q_k; vertex v has label with character i equal to bit i of v."""
    labels = ["".join(str(v >> i & 1) for i in range(k)) for v in range(1 << k)]
    pairs = [(v, v ^ (1 << i)) for v in range(1 << k) for i in range(k) if not v >> i & 1]
    return Graph.from_edges(1 << k, sorted(pairs), labels)


def hypercube_coloring(k: int) -> EdgeColoring:
    """Q_k with each edge colored by the coordinate its endpoints differ in."""
    g = hypercube_graph(k)
    colors = [((u ^ v).bit_length() - 1) for u, v in g.edges]
    return EdgeColoring(g, tuple(colors), k, tuple(str(i + 1) for i in range(k)))


# ---------- text formats

def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_graph(text: str) -> Graph:
    """Parse an edge list: one ``u v`` per line, ``#`` comments, optional
    leading ``directed`` line. A line holding a single label declares an
    isolated vertex."""
    labels: dict[str, int] = {}
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    directed = False
    first = True
    for no, line in _content_lines(text):
        toks = line.split()
        if first and toks == ["directed"]:
            directed = True
            first = False
            continue
        first = False
        if len(toks) not in (1, 2):
            raise ParseError(f"expected 'u v', got {line!r}", no)
        for t in toks:
            labels.setdefault(t, len(labels))
        if len(toks) == 1:
            continue
        a, b = toks
        if a == b:
            raise ParseError(f"loop at {a!r}", no)
        u, v = labels[a], labels[b]
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen or (directed and (v, u) in seen):
            raise ParseError(f"duplicate edge {a} {b}", no)
        seen.add(key)
        pairs.append((u, v))
    return Graph.from_edges(len(labels), pairs, list(labels), directed)


def serialize_graph(g: Graph) -> str:
    lines = ["directed"] if g.directed else []
    touched = set()
    for u, v in g.edges:
        lines.append(f"{g.labels[u]} {g.labels[v]}")
        touched.update((u, v))
    lines.extend(g.labels[v] for v in range(g.n) if v not in touched)
    return "\n".join(lines) + "\n"


def _lookup_edge(g: Graph, a: str, b: str, no: int, index: dict[str, int]) -> int:
    if a not in index or b not in index:
        raise ParseError(f"unknown edge {a} {b} (unknown vertex)", no)
    e = g.edge_index(index[a], index[b])
    if e is None:
        raise ParseError(f"unknown edge {a} {b}", no)
    return e


def parse_coloring(graph: Graph, text: str) -> EdgeColoring:
    """Parse ``u v c`` lines; colors get dense indices by first appearance."""
    index = {lab: i for i, lab in enumerate(graph.labels)}
    colors: dict[str, int] = {}
    assigned: list[int | None] = [None] * graph.m
    for no, line in _content_lines(text):
        toks = line.split()
        if len(toks) != 3:
            raise ParseError(f"expected 'u v c', got {line!r}", no)
        a, b, c = toks
        e = _lookup_edge(graph, a, b, no, index)
        if assigned[e] is not None:
            raise ParseError(f"repeated edge {a} {b}", no)
        assigned[e] = colors.setdefault(c, len(colors))
    missing = [i for i, c in enumerate(assigned) if c is None]
    if missing:
        u, v = graph.edges[missing[0]]
        raise ParseError(f"uncolored edge {graph.labels[u]} {graph.labels[v]}")
    return EdgeColoring(graph, tuple(assigned), len(colors), tuple(colors))  # type: ignore[arg-type]


def serialize_coloring(f: EdgeColoring) -> str:
    g = f.graph
    return "".join(f"{g.labels[u]} {g.labels[v]} {f.color_labels[c]}\n"
                   for (u, v), c in zip(g.edges, f.color_of))


def parse_walk(graph: Graph, text: str) -> Walk:
    """Whitespace-separated vertex labels."""
    index = {lab: i for i, lab in enumerate(graph.labels)}
    toks = text.split()
    try:
        return Walk(tuple(index[t] for t in toks))
    except KeyError as exc:
        raise ParseError(f"unknown vertex {exc.args[0]!r}") from None
