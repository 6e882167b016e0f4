"""Isomorphism classes of small connected graphs, plus random regular graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .errors import InfeasibleDegree, OrderTooLarge, RetriesExhausted, BadParams
from .graph import Graph, bits, is_connected, make_graph, regularity
from .graphio import decode_graph6, encode_graph6

CANON_MAX_ORDER = 8
_INF = 1 << 64


def refined_colors(g: Graph) -> list[int]:
    """Colour refinement started from degrees; colours are isomorphism-invariant ranks."""
    colors = [a.bit_count() for a in g.adj]
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return new
        colors, ncolors = new, len(ranking)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Vertex order giving the lexicographically smallest upper-triangle bit string.

    The minimum is taken over orders that list vertices by refined colour;
    twins (vertices with equal neighbourhoods apart from each other) are
    interchangeable, so only one of them is tried at each position.
    """
    n = g.n
    if n > CANON_MAX_ORDER:
        raise OrderTooLarge(f"canonical form is exhaustive only up to {CANON_MAX_ORDER} vertices")
    adj = g.adj
    colors = refined_colors(g)
    slot_color = sorted(colors)
    twin_of = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v:
                keep = ~(1 << u | 1 << v)
                if adj[u] & keep == adj[v] & keep:
                    twin_of[u] |= 1 << v

    best = [_INF] * n
    best_order: list[int] = []
    order: list[int] = []

    def rec(p: int, unplaced: int) -> None:
        nonlocal best_order
        if p == n:
            best_order = order[:]
            return
        cands = []
        for x in bits(unplaced):
            if colors[x] != slot_color[p]:
                continue
            if twin_of[x] & unplaced & ((1 << x) - 1):
                continue
            col = 0
            for y in order:
                col = col << 1 | (adj[y] >> x & 1)
            cands.append((col, x))
        low = min(c for c, _ in cands)
        if low > best[p]:
            return
        for col, x in cands:
            if col != low or col > best[p]:
                continue
            if col < best[p]:
                best[p] = col
                for q in range(p + 1, n):
                    best[q] = _INF
            order.append(x)
            rec(p + 1, unplaced & ~(1 << x))
            order.pop()

    rec(0, g.full)
    return tuple(best_order)


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    return make_graph(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonically relabelled graph; equal iff isomorphic."""
    return encode_graph6(canonical_graph(g))


@dataclass(frozen=True)
class GraphFilter:
    min_degree: Optional[int] = None
    regular_r: Optional[int] = None
    connected: bool = True

    def accepts(self, g: Graph) -> bool:
        if self.connected and not is_connected(g):
            return False
        if self.min_degree is not None and g.n and g.min_degree() < self.min_degree:
            return False
        if self.regular_r is not None and (g.n == 0 or regularity(g) != self.regular_r):
            return False
        return True


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[str, ...]:
    if n == 1:
        return (canonical_form(make_graph(1, [])),)
    seen: dict[str, None] = {}
    for code in _connected_classes(n - 1):
        h = decode_graph6(code)
        base = list(h.adj)
        for s in range(1, 1 << (n - 1)):
            adj = [a | (s >> v & 1) << (n - 1) for v, a in enumerate(base)]
            adj.append(s)
            seen.setdefault(canonical_form(Graph(n, tuple(adj))), None)
    return tuple(seen)


def enumerate_connected(n: int, filter: GraphFilter = GraphFilter()) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class of
    connected graphs on ``n`` vertices, restricted by ``filter``."""
    if n > CANON_MAX_ORDER:
        raise OrderTooLarge(f"built-in enumeration stops at {CANON_MAX_ORDER} vertices; ingest larger corpora")
    if n < 1:
        raise BadParams("order must be positive")
    for code in _connected_classes(n):
        g = decode_graph6(code)
        if filter.accepts(g):
            yield g


def random_regular(n: int, r: int, seed: int, max_restarts: int = 1000) -> Graph:
    """Seeded r-regular graph from the pairing model.

    Pairs that would create a loop or repeated edge are rejected and redrawn;
    a configuration that gets stuck is restarted.  Not uniform.
    """
    if r < 0 or n < 1 or r >= n:
        raise InfeasibleDegree(f"no simple {r}-regular graph on {n} vertices")
    if n * r % 2:
        raise InfeasibleDegree(f"n*r = {n * r} is odd")
    rng = random.Random(seed)
    for _ in range(max_restarts):
        points = [v for v in range(n) for _ in range(r)]
        adj = [0] * n
        ok = True
        while points:
            for _ in range(100):
                i, j = rng.sample(range(len(points)), 2)
                u, v = points[i], points[j]
                if u != v and not adj[u] >> v & 1:
                    break
            else:
                ok = False
                break
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            for k in sorted((i, j), reverse=True):
                points[k] = points[-1]
                points.pop()
        if ok:
            return Graph(n, tuple(adj))
    raise RetriesExhausted(f"no simple {r}-regular graph on {n} vertices after {max_restarts} restarts")
