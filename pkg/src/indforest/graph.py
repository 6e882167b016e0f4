"""Immutable simple graphs stored as per-vertex neighbour bitsets.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means vertex ``v`` is a
member).  Every function that accepts a vertex set also takes any iterable of
vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Optional, Sequence, Union

from .errors import BadParams, EmptyGraph, IndexOutOfRange, OrderTooLarge, SelfLoop

MAX_ORDER = 128

Shape = Literal["forest", "linear_forest", "induced_path"]
SHAPES: tuple[Shape, ...] = ("forest", "linear_forest", "induced_path")

VertexSet = Union[int, Iterable[int]]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(s: VertexSet) -> int:
    if isinstance(s, int):
        return s
    mask = 0
    for v in s:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def min_degree(self) -> int:
        if self.n == 0:
            raise EmptyGraph("minimum degree of the empty graph")
        return min(a.bit_count() for a in self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise BadParams(f"negative order {n}")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds {MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@dataclass(frozen=True)
class GraphFamily:
    kind: Literal["path", "cycle", "complete", "complete_bipartite", "empty"]
    params: tuple[int, ...]


def standard(family: GraphFamily) -> Graph:
    kind, params = family.kind, family.params
    arity = 2 if kind == "complete_bipartite" else 1
    if len(params) != arity or any(p < 1 for p in params):
        raise BadParams(f"{kind} needs {arity} positive parameter(s), got {params}")
    if kind == "path":
        (n,) = params
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        (n,) = params
        if n < 3:
            raise BadParams("cycle needs at least 3 vertices")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        (n,) = params
        return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "complete_bipartite":
        a, b = params
        return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "empty":
        (n,) = params
        return make_graph(n, [])
    raise BadParams(f"unknown family {kind!r}")


def path(n: int) -> Graph:
    return standard(GraphFamily("path", (n,)))


def cycle(n: int) -> Graph:
    return standard(GraphFamily("cycle", (n,)))


def complete(n: int) -> Graph:
    return standard(GraphFamily("complete", (n,)))


def complete_bipartite(a: int, b: int) -> Graph:
    return standard(GraphFamily("complete_bipartite", (a, b)))


def empty(n: int) -> Graph:
    return standard(GraphFamily("empty", (n,)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def prism() -> Graph:
    """Triangular prism C_3 x K_2."""
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return make_graph(g.n + h.n, g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    return make_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Induced subgraph on ``s``, relabelled to 0..|s|-1 in increasing order."""
    verts = list(bits(to_mask(s)))
    index = {v: i for i, v in enumerate(verts)}
    return make_graph(len(verts), [(index[u], index[v]) for u, v in g.edges() if u in index and v in index])


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def degree_sequence(g: Graph) -> list[int]:
    return [a.bit_count() for a in g.adj]


def regularity(g: Graph) -> Optional[int]:
    if g.n == 0:
        raise EmptyGraph("regularity of the empty graph is undefined")
    degs = set(degree_sequence(g))
    return degs.pop() if len(degs) == 1 else None


def component_masks(g: Graph, s: int) -> list[int]:
    """Connected components of the subgraph induced on ``s``, by lowest vertex."""
    comps = []
    rest = s
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & s & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: Graph) -> list[int]:
    return component_masks(g, g.full)


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def shape_check(g: Graph, s: VertexSet, shape: Shape) -> bool:
    """Whether the subgraph induced on ``s`` has the given shape.

    The empty set is a forest and a linear forest but not an induced path.
    """
    mask = to_mask(s)
    if mask & ~g.full:
        raise IndexOutOfRange("vertex set not contained in the graph")
    size = mask.bit_count()
    degs = [(g.adj[v] & mask).bit_count() for v in bits(mask)]
    comps = len(component_masks(g, mask))
    if sum(degs) // 2 != size - comps:
        return False
    if shape == "forest":
        return True
    if any(d > 2 for d in degs):
        return False
    if shape == "linear_forest":
        return True
    if shape == "induced_path":
        return comps == 1
    raise BadParams(f"unknown shape {shape!r}")
