"""Greedy peeling of maximal induced linear forests.

Vertices are peeled into parts G_1, G_2, ...  Each part is grown greedily
while keeping it an induced linear forest, with a swap rule that trades an
interior path vertex for an outside vertex hanging off it (same order, two
fewer edges).  Whenever a new part outgrows an earlier one, the two are
exchanged and every later part is dissolved back into the pool.  On an
r-regular graph the first part has order at least 2n/(r+1).

Selection is always by lowest vertex index, so the output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ClaimViolated, EmptyGraph, FuelExhausted
from .graph import Graph, bits, regularity, shape_check


@dataclass(frozen=True)
class PartitionResult:
    parts: tuple[tuple[int, ...], ...]
    steps: int
    regular: Optional[int]
    bound: Optional[Fraction]

    @property
    def certified(self) -> tuple[int, ...]:
        return self.parts[0]

    @property
    def masks(self) -> list[int]:
        return [sum(1 << v for v in p) for p in self.parts]

    @property
    def certificate_holds(self) -> Optional[bool]:
        if self.bound is None:
            return None
        return len(self.certified) >= self.bound


def _component_of(g: Graph, part: int, v: int) -> int:
    comp = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & part & ~comp
        comp |= frontier
    return comp


def addable(g: Graph, part: int, v: int) -> bool:
    """Whether ``part + v`` still induces a linear forest (``part`` assumed to be one)."""
    nb = g.adj[v] & part
    count = nb.bit_count()
    if count == 0:
        return True
    if count > 2:
        return False
    for u in bits(nb):
        if (g.adj[u] & part).bit_count() >= 2:
            return False
    if count == 2:
        u1 = (nb & -nb).bit_length() - 1
        return not (_component_of(g, part, u1) & nb & ~(1 << u1))
    return True


def _swap_candidate(g: Graph, part: int, residual: int) -> Optional[tuple[int, int]]:
    for w in bits(residual):
        nb = g.adj[w] & part
        if nb.bit_count() == 1:
            t = nb.bit_length() - 1
            if (g.adj[t] & part).bit_count() == 2:
                return w, t
    return None


def greedy_partition(g: Graph, fuel: Optional[int] = None, check: bool = False) -> PartitionResult:
    """Partition V(g) into induced linear forests with non-increasing orders.

    ``check`` re-validates every part after each mutation (slow; for tests).
    """
    if g.n == 0:
        raise EmptyGraph("cannot partition the empty graph")
    maxdeg = max(a.bit_count() for a in g.adj)
    if fuel is None:
        fuel = g.n ** 3 * (maxdeg + 1)
    steps = 0

    def spend() -> None:
        nonlocal steps
        steps += 1
        if steps > fuel:
            raise FuelExhausted(f"greedy partition exceeded {fuel} steps on a graph of order {g.n}")

    parts: list[int] = []
    residual = g.full
    while residual:
        parts.append(0)
        j = len(parts) - 1
        while True:
            v = next((v for v in bits(residual) if addable(g, parts[j], v)), None)
            if v is None:
                break
            spend()
            residual &= ~(1 << v)
            parts[j] |= 1 << v
            while (pair := _swap_candidate(g, parts[j], residual)) is not None:
                spend()
                w, t = pair
                parts[j] = parts[j] & ~(1 << t) | 1 << w
                residual = residual & ~(1 << w) | 1 << t
            if check:
                assert shape_check(g, parts[j], "linear_forest")
        size = parts[j].bit_count()
        k0 = next((k for k in range(j) if parts[k].bit_count() < size), None)
        if k0 is not None:
            spend()
            parts[k0], parts[j] = parts[j], parts[k0]
            for i in range(k0 + 1, j + 1):
                residual |= parts[i]
            del parts[k0 + 1:]

    r = regularity(g)
    # edgeless graphs (r = 0) carry no certificate
    bound = Fraction(2 * g.n, r + 1) if r else None
    return PartitionResult(tuple(tuple(bits(p)) for p in parts), steps, r, bound)


@dataclass
class ClaimReport:
    # (vertex, its part, earlier part) -> neighbours of the vertex in the earlier part
    cross_degrees: dict[tuple[int, int, int], int] = field(default_factory=dict)
    pendant_checked: bool = False
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_claims(g: Graph, res: PartitionResult, strict: bool = True) -> ClaimReport:
    """Check the structural properties of a partition.

    Every vertex of a later part must have at least two neighbours in each
    earlier part.  When the number of parts k satisfies 2(k-1) = r on an
    r-regular graph, the last part must also be independent, each of its
    vertices must meet the previous part in exactly two pendant vertices, and
    that previous part must be at least twice as large.

    With ``strict`` the first violation raises :class:`ClaimViolated`.
    """
    report = ClaimReport()
    masks = res.masks
    for i in range(1, len(masks)):
        for v in bits(masks[i]):
            for j in range(i):
                d = (g.adj[v] & masks[j]).bit_count()
                report.cross_degrees[(v, i, j)] = d
                if d < 2:
                    msg = f"vertex {v} of part {i} has {d} neighbour(s) in earlier part {j}"
                    if strict:
                        raise ClaimViolated(v, i, j, msg)
                    report.violations.append(msg)

    k = len(masks)
    r = regularity(g)
    if r is not None and k >= 2 and 2 * (k - 1) == r:
        report.pendant_checked = True
        last, prev = masks[-1], masks[-2]

        def fail(v: int, msg: str) -> None:
            if strict:
                raise ClaimViolated(v, k - 1, k - 2, msg)
            report.violations.append(msg)

        for v in bits(last):
            if g.adj[v] & last:
                fail(v, f"last part is not independent at vertex {v}")
            nb = g.adj[v] & prev
            if nb.bit_count() != 2 or any((g.adj[u] & prev).bit_count() != 1 for u in bits(nb)):
                fail(v, f"vertex {v} does not have exactly two pendant neighbours in part {k - 2}")
        if prev.bit_count() < 2 * last.bit_count():
            fail(-1, f"part {k - 2} has fewer than twice the vertices of the last part")
    return report
