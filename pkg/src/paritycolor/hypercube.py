"""Embeddings into hypercubes Q_k.

A hypercube vertex is an int whose bit i is coordinate i; its string form
lists coordinate 0 first, matching :class:`ParityVector`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import bits, gray_code, gray_flips
from .graph_core import EdgeColoring, Graph, ParseError, Walk
from .verify import (Certificate, CertificateKind, Method, Verdict, check_cycles_parity,
                     spanning_forest, tree_path)


class EmbeddingError(ValueError):
    """The coloring does not induce a hypercube embedding; carries a certificate."""

    def __init__(self, message: str, certificate: Certificate | None = None):
        super().__init__(message)
        self.certificate = certificate


@dataclass(frozen=True)
class Embedding:
    k: int
    map: tuple[int, ...]

    def image(self, v: int) -> str:
        return bits(self.map[v], self.k)


def verify_embedding(G: Graph, e: Embedding) -> Verdict:
    """Valid iff injective and every edge maps to a pair at Hamming distance 1."""
    if len(e.map) != G.n:
        return Verdict(False, method=Method.EXHAUSTIVE, info={"reason": "size"})
    seen: dict[int, int] = {}
    for v, x in enumerate(e.map):
        if x < 0 or x >> e.k:
            return Verdict(False, method=Method.EXHAUSTIVE, info={"reason": "range", "vertex": v})
        if x in seen:
            return Verdict(False, method=Method.EXHAUSTIVE,
                           info={"reason": "not injective", "vertices": (seen[x], v)})
        seen[x] = v
    for u, v in G.edges:
        if (e.map[u] ^ e.map[v]).bit_count() != 1:
            return Verdict(False, method=Method.EXHAUSTIVE,
                           info={"reason": "edge not preserved", "edge": (u, v)})
    return Verdict(True, method=Method.EXHAUSTIVE)


def _labels_from_tree(G: Graph, f: EdgeColoring, parent: dict[int, int | None]) -> list[int]:
    # parent is filled in BFS order, so each parent precedes its children
    phi = [0] * G.n
    for v, p in parent.items():
        if p is not None:
            phi[v] = phi[p] ^ (1 << f.color(p, v))
    return phi


def _injective_or_raise(G: Graph, f: EdgeColoring, parent, phi: list[int]) -> None:
    first: dict[int, int] = {}
    for v, x in enumerate(phi):
        if x in first:
            path = Walk(tuple(tree_path(parent, first[x], v)))
            cols = tuple(sorted({f.color_of[e] for e in path.edge_indices(G)}))
            raise EmbeddingError(
                "not a parity edge-coloring",
                Certificate(CertificateKind.PARITY_PATH, path, cols))
        first[x] = v


def embed_tree(T: Graph, f: EdgeColoring) -> Embedding:
    """phi(v) = parity vector of the path from vertex 0 to v.

    Two vertices collide exactly when the tree path between them is a parity
    path, which is then reported in the raised :class:`EmbeddingError`.
    """
    if not T.is_tree():
        raise ValueError("embed_tree needs a tree")
    parent, _ = spanning_forest(T)
    phi = _labels_from_tree(T, f, parent)
    _injective_or_raise(T, f, parent, phi)
    return Embedding(f.k, tuple(phi))


def embed_graph(G: Graph, f: EdgeColoring) -> Embedding:
    """Embed a connected graph whose coloring has no parity path and only parity cycles."""
    if G.directed or not G.is_connected():
        raise ValueError("embed_graph needs a connected undirected graph")
    cyc = check_cycles_parity(G, f)
    if not cyc.valid:
        raise EmbeddingError("some cycle is not a parity walk", cyc.certificate)
    parent, non_tree = spanning_forest(G)
    phi = _labels_from_tree(G, f, parent)
    _injective_or_raise(G, f, parent, phi)
    for i in non_tree:
        x, y = G.edges[i]
        assert (phi[x] ^ phi[y]).bit_count() == 1
    return Embedding(f.k, tuple(phi))


def pullback_coloring(G: Graph, e: Embedding) -> EdgeColoring:
    """Color each edge by the coordinate its endpoint images differ in."""
    colors = [((e.map[u] ^ e.map[v]).bit_length() - 1) for u, v in G.edges]
    return EdgeColoring(G, tuple(colors), e.k, tuple(str(i + 1) for i in range(e.k)))


# ---------- paths in subcubes

def hamiltonian_path(start: int, dims: list[int], end_dim: int) -> list[int]:
    """Spanning path of the subcube through ``start`` on coordinates ``dims``,
    ending at ``start`` with coordinate ``end_dim`` flipped.

    Reflected Gray code with ``end_dim`` as its top coordinate, translated to start.
    """
    order = [d for d in dims if d != end_dim] + [end_dim]
    path = []
    for g in gray_code(len(order)):
        x = start
        for j, d in enumerate(order):
            if g >> j & 1:
                x ^= 1 << d
        path.append(x)
    return path


def _avoiding(x: int, y: int, dims: list[int]) -> list[int]:
    if len(dims) == 2:
        step = x ^ (1 << dims[0])
        assert step != y
        return [x, step]
    differ = [d for d in dims if (x ^ y) >> d & 1]
    p, q = differ[0], differ[1]
    r = next(d for d in dims if d not in (p, q))
    sub = [d for d in dims if d != p]
    first = hamiltonian_path(x, sub, r)
    u = first[-1]
    v = u ^ (1 << p)
    return first + _avoiding(v, y, sub)


def path_avoiding(k: int, x: int, y: int) -> Walk:
    """Simple path of length 2^k - 3 in Q_k from x that never visits y
    (x != y, same weight parity)."""
    if k < 2:
        raise ValueError("need k >= 2")
    if x == y or (x.bit_count() - y.bit_count()) % 2:
        raise ValueError("x and y must be distinct with the same parity")
    if x >> k or y >> k:
        raise ValueError("vertex outside Q_k")
    return Walk(tuple(_avoiding(x, y, list(range(k)))))


# ---------- brooms

@dataclass(frozen=True)
class BroomParts:
    """Vertex roles in :func:`broom`: the center, the handle (starting at the
    shared star leaf), and the remaining star leaves."""
    center: int
    handle: tuple[int, ...]
    leaves: tuple[int, ...]


def broom_handle_order(k: int) -> int:
    """Vertex count of the handle path P_{2^k - 2k + 2}."""
    return (1 << k) - 2 * k + 2


def broom(k: int) -> Graph:
    """T_k: a star with k edges whose leaf h0 is an endpoint of P_{2^k-2k+2}.

    Vertices: 0 = center ``c``; 1..L = handle ``h0..h{L-1}``; then the other
    k-1 star leaves ``s1..s{k-1}``. Total 2^k - k + 2 vertices.
    """
    if k < 2:
        raise ValueError("broom needs k >= 2")
    L = broom_handle_order(k)
    labels = ["c"] + [f"h{i}" for i in range(L)] + [f"s{i}" for i in range(1, k)]
    pairs = [(0, 1)] + [(i, i + 1) for i in range(1, L)] + [(0, L + i) for i in range(1, k)]
    g = Graph.from_edges(1 + L + k - 1, pairs, labels)
    assert g.n == (1 << k) - k + 2 and g.is_tree()
    return g


def broom_parts(k: int) -> BroomParts:
    L = broom_handle_order(k)
    return BroomParts(0, tuple(range(1, L + 1)), tuple(range(L + 1, L + k)))


def _broom_images(k: int) -> tuple[int, list[int], list[int]]:
    if k == 2:
        # P_4 = s1 - c - h0 - h1 in Q_2
        return 0b00, [0b01, 0b11], [0b10]
    center, handle, leaves = _broom_images(k - 1)
    top = 1 << (k - 1)
    x, y = handle[-1] ^ top, center ^ top
    tail = _avoiding(x, y, list(range(k - 1)))
    return center, handle + tail, leaves + [y]


def embed_broom(k: int) -> Embedding:
    """Embedding of broom(k) into Q_k built by induction on k."""
    if k < 2:
        raise ValueError("broom needs k >= 2")
    center, handle, leaves = _broom_images(k)
    parts = broom_parts(k)
    phi = [0] * ((1 << k) - k + 2)
    phi[parts.center] = center
    for v, x in zip(parts.handle, handle, strict=True):
        phi[v] = x
    for v, x in zip(parts.leaves, leaves, strict=True):
        phi[v] = x
    e = Embedding(k, tuple(phi))
    assert verify_embedding(broom(k), e).valid
    return e


def broom_conflict_free(k: int) -> EdgeColoring:
    """Conflict-free (k+1)-coloring of T_k: color k+1 on the center-handle edge,
    distinct colors on the other star edges, ruler sequence on the handle."""
    g = broom(k)
    parts = broom_parts(k)
    colors = []
    flips = gray_flips(len(parts.handle) - 1)
    for u, v in g.edges:
        if u == parts.center and v == parts.handle[0]:
            colors.append(k)
        elif u == parts.center:
            colors.append(parts.leaves.index(v))
        else:
            colors.append(flips[parts.handle.index(u)])
    return EdgeColoring(g, tuple(colors), k + 1, tuple(str(i + 1) for i in range(k + 1)))


# ---------- text format

def serialize_embedding(G: Graph, e: Embedding) -> str:
    return "".join(f"{G.labels[v]} {e.image(v)}\n" for v in range(G.n))


def parse_embedding(G: Graph, text: str) -> Embedding:
    """Lines ``label bitstring``; every vertex exactly once, all strings the same length."""
    index = {lab: i for i, lab in enumerate(G.labels)}
    images: dict[int, int] = {}
    k = None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2 or set(toks[1]) - {"0", "1"}:
            raise ParseError(f"expected 'label bitstring', got {line!r}", no)
        lab, s = toks
        if lab not in index:
            raise ParseError(f"unknown vertex {lab!r}", no)
        if k is None:
            k = len(s)
        elif len(s) != k:
            raise ParseError("bit strings of different lengths", no)
        if index[lab] in images:
            raise ParseError(f"vertex {lab!r} listed twice", no)
        images[index[lab]] = sum(1 << i for i, ch in enumerate(s) if ch == "1")
    missing = [G.labels[v] for v in range(G.n) if v not in images]
    if missing:
        raise ParseError(f"no image for vertex {missing[0]!r}")
    return Embedding(k or 0, tuple(images[v] for v in range(G.n)))
