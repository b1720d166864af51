"""Explicit parity and strong parity edge-colorings.

Every public constructor re-verifies its output with :func:`check_spec`
(polynomial) before returning and raises ``AssertionError`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

from .graph_core import (EdgeColoring, Graph, complete_graph, cycle_graph, path_graph)
from .verify import check_spec, parity_space


def ceil_lg(n: int) -> int:
    """Smallest k with 2**k >= n."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n - 1).bit_length()


def bits(x: int, k: int) -> str:
    """k-character bit string of x, coordinate 0 first."""
    return "".join(str(x >> i & 1) for i in range(k))


def _verified(g: Graph, f: EdgeColoring) -> tuple[Graph, EdgeColoring]:
    v = check_spec(g, f)
    assert v.valid, f"construction is not a spec: {v.certificate}"
    return g, f


def canonical(k: int) -> tuple[Graph, EdgeColoring]:
    """K_{2^k} on k-bit labels with f(uv) = u XOR v; color index c names the vector c+1."""
    if k < 1:
        raise ValueError("canonical coloring needs k >= 1")
    return canonical_induced(k, 1 << k)


def canonical_induced(k: int, n: int) -> tuple[Graph, EdgeColoring]:
    """Restriction of the canonical coloring of K_{2^k} to its first n labels."""
    if k < 0 or not 1 <= n <= 1 << k:
        raise ValueError(f"need 1 <= n <= 2^k, got n={n}, k={k}")
    g = complete_graph(n, [bits(v, k) for v in range(n)])
    names = tuple(bits(c, k) for c in range(1, 1 << k))
    f = EdgeColoring(g, tuple((u ^ v) - 1 for u, v in g.edges), len(names), names)
    return _verified(g, f)


def bicanonical(k: int) -> tuple[Graph, EdgeColoring]:
    """K_{2^k,2^k}, both sides on k-bit labels, f(uv) = u XOR v (2^k colors)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return biclique_product(k, 1)


def biclique_product(k: int, r: int) -> tuple[Graph, EdgeColoring]:
    """K_{2^k, r 2^k} as r edge-disjoint bicanonical copies; colors are pairs (z, j)."""
    if k < 0 or r < 1:
        raise ValueError("need k >= 0 and r >= 1")
    m = 1 << k
    small = [f"a{bits(u, k)}" for u in range(m)]
    large = [f"b{bits(v, k)}.{j}" if r > 1 else f"b{bits(v, k)}"
             for j in range(1, r + 1) for v in range(m)]
    pairs, colors = [], []
    for u in range(m):
        for j in range(r):
            for v in range(m):
                pairs.append((u, m + j * m + v))
                colors.append(j * m + (u ^ v))
    names = tuple(f"{bits(z, k)}.{j}" if r > 1 else bits(z, k) or "e"
                  for j in range(1, r + 1) for z in range(m))
    g = Graph.from_edges(m + r * m, pairs, small + large)
    return _verified(g, EdgeColoring(g, tuple(colors), r * m, names))


def gray_flips(length: int) -> list[int]:
    """Coordinate flipped at each step of the reflected Gray code (the ruler sequence)."""
    return [((i + 1) & -(i + 1)).bit_length() - 1 for i in range(length)]


def gray_code(k: int) -> list[int]:
    return [i ^ (i >> 1) for i in range(1 << k)]


def gray_path(n: int) -> tuple[Graph, EdgeColoring]:
    """P_n colored by Gray-code flip positions: ceil(lg n) colors, labels "1", "2", ..."""
    if n < 2:
        raise ValueError("a path needs n >= 2")
    g = path_graph(n)
    flips = gray_flips(n - 1)
    k = max(flips) + 1
    return _verified(g, EdgeColoring(g, tuple(flips), k, tuple(str(i + 1) for i in range(k))))


def even_cycle(n: int) -> tuple[Graph, EdgeColoring]:
    """C_n for even n as a ladder in Q_{ceil(lg n)}: a Gray path on n/2 vertices
    traversed out in one subcube and back in the other."""
    if n < 4 or n % 2:
        raise ValueError("even_cycle needs even n >= 4")
    half = n // 2
    flips = gray_flips(half - 1)
    rung = max(flips) + 1
    colors = flips + [rung] + flips[::-1] + [rung]
    return _cycle_from_colors(n, colors)


def odd_cycle(n: int) -> tuple[Graph, EdgeColoring]:
    """C_n for odd n: Gray path on n vertices plus a fresh color on the closing edge."""
    if n < 3 or n % 2 == 0:
        raise ValueError("odd_cycle needs odd n >= 3")
    flips = gray_flips(n - 1)
    return _cycle_from_colors(n, flips + [max(flips) + 1])


def cycle(n: int) -> tuple[Graph, EdgeColoring]:
    return even_cycle(n) if n % 2 == 0 else odd_cycle(n)


def _cycle_from_colors(n: int, colors: list[int]) -> tuple[Graph, EdgeColoring]:
    # colors[i] is on edge (i, i+1 mod n); cycle_graph stores the closing edge last as (0, n-1)
    g = cycle_graph(n)
    k = max(colors) + 1
    return _verified(g, EdgeColoring(g, tuple(colors), k, tuple(str(i + 1) for i in range(k))))


# ---------- set families

@dataclass(frozen=True)
class SetFamily:
    members: tuple[frozenset[str], ...]

    def __post_init__(self):
        if len(set(self.members)) != len(self.members):
            raise ValueError("set family members must be distinct")

    @classmethod
    def of(cls, sets: Iterable[Iterable[str]]) -> "SetFamily":
        return cls(tuple(frozenset(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)


def set_name(s: frozenset[str]) -> str:
    return "{" + ",".join(sorted(s)) + "}"


def parse_set_family(text: str) -> SetFamily:
    """One set per line, whitespace-separated elements; an empty line is the empty set."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return SetFamily.of(line.split() for line in lines)


def setfam_coloring(S: SetFamily) -> tuple[Graph, EdgeColoring, int]:
    """K_n on the members with edge uv colored by the symmetric difference u ^ v.

    Returns the graph, the coloring, and the number of distinct differences
    ``u ^ v`` over all ordered pairs including u = v (so the empty set counts).
    """
    n = len(S)
    if n < 2:
        raise ValueError("need at least two sets")
    g = complete_graph(n, [set_name(s) for s in S.members])
    diffs = [S.members[u] ^ S.members[v] for u, v in g.edges]
    f = EdgeColoring.from_colors(g, [set_name(d) for d in diffs])
    count = len(set(diffs) | {frozenset()})
    g, f = _verified(g, f)
    return g, f, count


# ---------- acyclic digraphs

def dag_coloring(D: Graph) -> EdgeColoring:
    """Color uv by the first (most significant) bit where the longest-path labels differ.

    l(x) is one less than the maximum number of vertices on a directed path
    ending at x, written with ceil(lg m) bits where m is the longest path's
    vertex count. Color label ``i`` means bit i from the most significant end.
    """
    if not D.directed:
        raise ValueError("dag_coloring needs a directed graph")
    order = D.topological_order()
    if order is None:
        raise ValueError("directed cycle detected")
    label = [0] * D.n
    for x in order:
        for y, _ in D.adjacency[x]:
            label[y] = max(label[y], label[x] + 1)
    m = max(label, default=0) + 1
    width = ceil_lg(m)
    positions = []
    for u, v in D.edges:
        assert label[v] > label[u]
        diff = label[u] ^ label[v]
        positions.append(width - diff.bit_length())
    used = sorted(set(positions))
    remap = {p: i for i, p in enumerate(used)}
    return EdgeColoring(D, tuple(remap[p] for p in positions), len(used),
                        tuple(str(p + 1) for p in used))


def transitive_tournament(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)],
                            directed=True)


def directed_path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], directed=True)


# ---------- transformations

def clique_to_biclique(f: EdgeColoring) -> tuple[Graph, EdgeColoring]:
    """Spec of K_n -> spec of K_{n,n} with one extra color on the matching v_i w_i."""
    g = f.graph
    if not g.is_complete():
        raise ValueError("input must color a complete graph")
    if not check_spec(g, f).valid:
        raise ValueError("input coloring is not a spec")
    n = g.n
    labels = [f"v{lab}" for lab in g.labels] + [f"w{lab}" for lab in g.labels]
    pairs, colors = [], []
    fresh = f.k
    for i in range(n):
        for j in range(n):
            pairs.append((i, n + j))
            colors.append(fresh if i == j else f.color(i, j))
    name = "new"
    while name in f.color_labels:
        name += "'"
    h = Graph.from_edges(2 * n, pairs, labels)
    return _verified(h, EdgeColoring(h, tuple(colors), f.k + 1, f.color_labels + (name,)))


def absorb_vertex(f: EdgeColoring) -> EdgeColoring:
    """Extend a spec of K_n that uses some color a on less than a perfect
    matching to a spec of K_{n+1} with the same colors.

    The new vertex u gets color a towards a vertex v missed by a, and color c
    towards each other w, where e_a + e_b + e_c is in the parity space for
    b = f(vw). Fails with ``ValueError`` when no such c exists.
    """
    g = f.graph
    if not g.is_complete():
        raise ValueError("input must color a complete graph")
    n = g.n
    missed = None
    for a in range(f.k):
        present = {x for e in f.classes()[a] for x in g.edges[e]}
        absent = [v for v in range(n) if v not in present]
        if absent and f.classes()[a]:
            missed = (a, absent[0])
            break
    if missed is None:
        raise ValueError("every color class is a perfect matching; nothing to absorb")
    a, v = missed
    basis = parity_space(g, f)
    new_colors = {}
    for w in range(n):
        if w == v:
            continue
        b = f.color(v, w)
        for c in range(f.k):
            if c in (a, b):
                continue
            if basis.in_span((1 << a) | (1 << b) | (1 << c)):
                new_colors[w] = c
                break
        else:
            raise ValueError(
                f"no third color for a={f.color_labels[a]}, b={f.color_labels[b]}: "
                "input is not an optimal spec")
    label = str(n)
    while label in g.labels:
        label += "'"
    h = complete_graph(n + 1, g.labels + (label,))
    colors = []
    for x, y in h.edges:
        if y == n:
            colors.append(a if x == v else new_colors[x])
        else:
            colors.append(f.color(x, y))
    out = EdgeColoring(h, tuple(colors), f.k, f.color_labels)
    verdict = check_spec(h, out)
    if not verdict.valid:
        raise ValueError("absorbed coloring is not a spec: input is not an optimal spec")
    return out


def distinct_coloring(g: Graph) -> EdgeColoring:
    """Every edge its own color: always a spec."""
    return EdgeColoring(g, tuple(range(g.m)), g.m, tuple(str(i + 1) for i in range(g.m)))


def relabel_isomorphic(f1: EdgeColoring, f2: EdgeColoring) -> bool:
    """Brute-force test for isomorphism of two colorings of small complete graphs
    up to vertex permutation and color renaming."""
    g1, g2 = f1.graph, f2.graph
    if g1.n != g2.n or g1.m != g2.m or f1.used_colors != f2.used_colors:
        return False
    for perm in permutations(range(g2.n)):
        mapping: dict[int, int] = {}
        back: dict[int, int] = {}
        ok = True
        for (u, v), c in zip(g1.edges, f1.color_of):
            e = g2.edge_index(perm[u], perm[v])
            if e is None:
                ok = False
                break
            d = f2.color_of[e]
            if mapping.setdefault(c, d) != d or back.setdefault(d, c) != c:
                ok = False
                break
        if ok:
            return True
    return False

