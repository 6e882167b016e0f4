"""Closed-form bounds evaluated exactly, and extremal LIP constructions.

No floating point: every value is an ``int`` or a ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .errors import BadParams, ConstructionNotRegular
from .graph import Graph, is_connected, make_graph, regularity
from .solvers import longest_induced_path

LIP_SOLVE_MAX_R = 6


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def caro_wei_t(g: Graph) -> Fraction:
    """t(G) = sum over vertices of 1/(deg+1)."""
    return sum((Fraction(1, a.bit_count() + 1) for a in g.adj), Fraction(0))


def f_ratio(g: Graph, lif: int) -> Fraction:
    """LIF(G) / t(G); ``lif`` must be the exact LIF value of ``g``."""
    return Fraction(lif) / caro_wei_t(g)


def lif_regular_lower_bound(n: int, r: int) -> Fraction:
    if n < 1 or not 1 <= r <= n - 1:
        raise BadParams(f"need n >= 1 and 1 <= r <= n-1, got n={n}, r={r}")
    return Fraction(2 * n, r + 1)


def edges_leaving_path(r: int, k: int) -> int:
    """Edges between an induced k-path and the rest of an r-regular graph (k >= 2)."""
    if k < 2:
        raise BadParams("the count assumes two distinct path ends")
    return 2 * (r - 1) + (k - 2) * (r - 2)


def lip_order_lower_bound(r: int, k: int) -> int:
    """Least order of an r-regular graph whose longest induced path has k vertices."""
    if r < 1 or k < 1:
        raise BadParams(f"need r >= 1 and k >= 1, got r={r}, k={k}")
    c = ceil_div(-2 * (k - 1), r)
    n = 2 * k + c
    if r % 2 and c % 2:
        n += 1
    return n


def lip_upper_bound(n: int, r: int) -> Fraction:
    """Largest possible LIP of an r-regular graph of order n: (rn - 2)/(2r - 2)."""
    if r < 2:
        raise BadParams("needs r >= 2")
    return Fraction(r * n - 2, 2 * r - 2)


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: Fraction
    kind: Literal["lower", "upper"]
    applicable: bool = True
    measured: Optional[int] = None
    note: str = ""

    @property
    def holds(self) -> Optional[bool]:
        if not self.applicable or self.measured is None:
            return None
        return self.measured >= self.value if self.kind == "lower" else self.measured <= self.value

    @property
    def equality(self) -> Optional[bool]:
        if self.measured is None:
            return None
        return self.measured == self.value

    @property
    def trivial(self) -> bool:
        return self.kind == "lower" and self.value <= 0


def misc_lower_bounds(g: Graph, a: Optional[int] = None) -> list[BoundReport]:
    """Known lower bounds on a(G), each with its own applicability test."""
    n, m = g.n, g.m
    shi_xu = Fraction(8 * n - 2 * m - 2, 9)
    connected = is_connected(g)
    reports = [
        BoundReport(
            "shi_xu",
            shi_xu,
            "lower",
            applicable=connected,
            measured=a,
            note="negative, hence trivially true" if shi_xu < 0 else ("" if connected else "needs a connected graph"),
        )
    ]
    positive_min_degree = n > 0 and g.min_degree() >= 1
    reports.append(
        BoundReport(
            "punnim",
            2 * caro_wei_t(g),
            "lower",
            applicable=positive_min_degree,
            measured=a,
            note="" if positive_min_degree else "needs minimum degree >= 1",
        )
    )
    return reports


def nordhaus_gaddum_check(g: Graph, a_g: int, a_comp: int, invariant: str = "a") -> BoundReport:
    """invariant(G) + invariant(complement) <= n + 4."""
    return BoundReport(f"nordhaus_gaddum_{invariant}", Fraction(g.n + 4), "upper", measured=a_g + a_comp)


@dataclass(frozen=True)
class ExtremalConstruction:
    r: int
    graph: Graph
    parity_case: Literal["even", "odd"]
    verified_regular: bool
    expected_order: int
    lip_value: Optional[int] = None

    @property
    def lip_matches_r(self) -> Optional[bool]:
        return None if self.lip_value is None else self.lip_value == self.r


def _extremal_edges(r: int) -> tuple[int, list[tuple[int, int]]]:
    # path p_1..p_r on vertices 0..r-1
    p = list(range(r))
    edges = [(p[i], p[i + 1]) for i in range(r - 1)]
    if r % 2 == 0:
        v = r
        s = [r + 1 + i for i in range(r - 2)]
        removed = {(p[i + 1], s[i]) for i in range((r - 2) // 2)}
        edges += [(pj, si) for si in s for pj in p if (pj, si) not in removed]
        edges += [(v, x) for pair in sorted(removed) for x in pair]
        edges += [(v, p[0]), (v, p[-1])]
        return 2 * r - 1, edges
    u, w = r, r + 1
    s = [r + 2 + i for i in range(r - 2)]
    removed = {(p[i + 1], s[i]) for i in range(r - 2)}
    edges += [(pj, si) for si in s for pj in p if (pj, si) not in removed]
    edges += [(w, u)] + [(w, si) for si in s]
    edges += [(u, pj) for pj in p[1:-1]]
    edges += [(u, p[0]), (w, p[-1])]
    return 2 * r, edges


def construct_extremal_lip(r: int, solve_lip: Optional[bool] = None) -> ExtremalConstruction:
    """r-regular graph meant to have LIP = r at the least possible order.

    Even r: a path P on r vertices, r-2 vertices s_i joined to all of P minus
    a matching p_{i+1}s_i (i <= (r-2)/2), and a vertex v joined to the matched
    vertices and to both ends of P.  Odd r: P, vertices s_1..s_{r-2} joined to
    all of P minus the matching p_{i+1}s_i, plus u, w with w ~ u, w ~ every
    s_i, u ~ every interior p_j, u ~ p_1 and w ~ p_r.

    The LIP is computed when ``solve_lip`` is true (default: r <= 6).
    """
    if r < 2:
        raise BadParams("needs r >= 2")
    n, edges = _extremal_edges(r)
    g = make_graph(n, edges)
    expected = lip_order_lower_bound(r, r)
    regular = regularity(g) == r and g.m == len(edges)
    if not regular or n != expected:
        raise ConstructionNotRegular(f"construction for r={r}: regular={regular}, order {n} vs expected {expected}")
    if solve_lip is None:
        solve_lip = r <= LIP_SOLVE_MAX_R
    lip = longest_induced_path(g).value if solve_lip else None
    return ExtremalConstruction(r, g, "even" if r % 2 == 0 else "odd", True, expected, lip)
