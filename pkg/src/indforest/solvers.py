"""Exact maximum induced forest / linear forest / path solvers.

All searches branch include-first on the lowest undecided vertex, so among
optimal vertex sets the lexicographically smallest one is returned.  Budgets
never produce a silently wrong value: an interrupted search returns its best
set with ``optimal=False``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import EmptyGraph, BadParams, OrderTooLargeForOracle
from .graph import Graph, Shape, bits, shape_check

ORACLE_MAX_ORDER = 24


class BudgetExceeded(RuntimeError):
    def __init__(self, result: "SolveResult"):
        super().__init__(f"search budget exhausted; best {result.shape} so far has order {result.value}")
        self.result = result


@dataclass(frozen=True)
class SearchBudget:
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None


UNLIMITED = SearchBudget()


@dataclass(frozen=True)
class SolveResult:
    shape: Shape
    value: int
    witness: tuple[int, ...]
    optimal: bool = True
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def mask(self) -> int:
        m = 0
        for v in self.witness:
            m |= 1 << v
        return m

    def require_optimal(self) -> "SolveResult":
        if not self.optimal:
            raise BudgetExceeded(self)
        return self


class _Stop(Exception):
    pass


def _lex_smaller(a: int, b: int) -> bool:
    """For equal-size masks: is ``a`` lexicographically smaller as a sorted list?"""
    diff = a ^ b
    return bool(diff and a & diff & -diff)


class _Search:
    def __init__(self, g: Graph, budget: SearchBudget):
        self.g = g
        self.adj = g.adj
        self.budget = budget
        self.nodes = 0
        self.start = time.perf_counter()
        self.deadline = None if budget.time_limit is None else self.start + budget.time_limit
        self.best_mask = 0
        self.best_size = -1

    def tick(self) -> None:
        self.nodes += 1
        lim = self.budget.node_limit
        if lim is not None and self.nodes > lim:
            raise _Stop
        if self.deadline is not None and self.nodes & 1023 == 0 and time.perf_counter() > self.deadline:
            raise _Stop

    def offer(self, mask: int, size: int) -> None:
        if size > self.best_size or (size == self.best_size and _lex_smaller(mask, self.best_mask)):
            self.best_size = size
            self.best_mask = mask

    def clique_cover_bound(self, rest: int) -> int:
        """Any forest meets a clique in at most two vertices."""
        adj = self.adj
        total = 0
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest ^= 1 << v
            cand = adj[v] & rest
            size = 1
            while cand and size < 2:
                u = (cand & -cand).bit_length() - 1
                rest ^= 1 << u
                cand &= adj[u]
                size += 1
            # a third member cannot raise the contribution, but absorbing it tightens the bound
            while cand:
                u = (cand & -cand).bit_length() - 1
                rest ^= 1 << u
                cand &= adj[u]
            total += size
        return total

    def result(self, shape: Shape, optimal: bool) -> SolveResult:
        mask = self.best_mask if self.best_size >= 0 else 0
        return SolveResult(
            shape=shape,
            value=max(self.best_size, 0),
            witness=tuple(bits(mask)),
            optimal=optimal,
            nodes=self.nodes,
            elapsed=time.perf_counter() - self.start,
        )


def _forest_search(g: Graph, budget: SearchBudget, linear: bool, path_only: bool = False) -> SolveResult:
    s = _Search(g, budget)
    n = g.n
    adj = g.adj
    shape: Shape = "induced_path" if path_only else ("linear_forest" if linear else "forest")

    def dfs(v: int, chosen: int, size: int, comps: tuple[int, ...]) -> None:
        s.tick()
        if not path_only or len(comps) == 1:
            s.offer(chosen, size)
        if v == n:
            return
        rest = ((1 << n) - 1) >> v << v
        if size + rest.bit_count() <= s.best_size:
            return
        if size + s.clique_cover_bound(rest) <= s.best_size:
            return
        bit = 1 << v
        nb = adj[v] & chosen
        ok = True
        if linear:
            if nb.bit_count() > 2:
                ok = False
            else:
                for u in bits(nb):
                    if (adj[u] & chosen).bit_count() >= 2:
                        ok = False
                        break
        if ok:
            merged = bit
            kept = []
            for c in comps:
                hit = (c & nb).bit_count()
                if hit >= 2:
                    ok = False
                    break
                if hit:
                    merged |= c
                else:
                    kept.append(c)
            if ok:
                kept.append(merged)
                dfs(v + 1, chosen | bit, size + 1, tuple(kept))
        dfs(v + 1, chosen, size, comps)

    try:
        dfs(0, 0, 0, ())
        optimal = True
    except _Stop:
        optimal = False
    return s.result(shape, optimal)


def max_induced_forest(g: Graph, budget: SearchBudget = UNLIMITED) -> SolveResult:
    """a(G): maximum order of an induced forest."""
    return _forest_search(g, budget, linear=False)


def max_induced_linear_forest(g: Graph, budget: SearchBudget = UNLIMITED) -> SolveResult:
    """LIF(G): maximum order of an induced linear forest."""
    return _forest_search(g, budget, linear=True)


def longest_induced_path(g: Graph, budget: SearchBudget = UNLIMITED, method: str = "dfs") -> SolveResult:
    """LIP(G), by growing induced paths from every start vertex (``method="dfs"``)
    or by the include/exclude subset search (``method="subset"``)."""
    if g.n == 0:
        raise EmptyGraph("longest induced path of the empty graph is undefined")
    if method == "subset":
        return _forest_search(g, budget, linear=True, path_only=True)
    if method != "dfs":
        raise BadParams(f"unknown method {method!r}")

    s = _Search(g, budget)
    adj = g.adj
    full = g.full

    def grow(path: int, end: int, blocked: int, length: int) -> None:
        s.tick()
        s.offer(path, length)
        closed_end = adj[end] | (1 << end)
        cand = adj[end] & ~blocked & ~path
        if not cand:
            return
        beyond = full & ~blocked & ~closed_end & ~path
        if length + 1 + beyond.bit_count() < s.best_size:
            return
        nblocked = blocked | closed_end
        for w in bits(cand):
            grow(path | 1 << w, w, nblocked, length + 1)

    try:
        for v in range(g.n):
            grow(1 << v, v, 0, 1)
        optimal = True
    except _Stop:
        optimal = False
    return s.result("induced_path", optimal)


def solve(g: Graph, shape: Shape, budget: SearchBudget = UNLIMITED) -> SolveResult:
    if shape == "forest":
        return max_induced_forest(g, budget)
    if shape == "linear_forest":
        return max_induced_linear_forest(g, budget)
    if shape == "induced_path":
        return longest_induced_path(g, budget)
    raise BadParams(f"unknown shape {shape!r}")


def oracle_subset_scan(g: Graph, shape: Shape) -> SolveResult:
    """Plain scan over vertex subsets, largest first, with no pruning."""
    if g.n > ORACLE_MAX_ORDER:
        raise OrderTooLargeForOracle(f"oracle is capped at {ORACLE_MAX_ORDER} vertices")
    if shape == "induced_path" and g.n == 0:
        raise EmptyGraph("longest induced path of the empty graph is undefined")
    start = time.perf_counter()
    checked = 0
    lowest = 1 if shape == "induced_path" else 0
    for k in range(g.n, lowest - 1, -1):
        for combo in combinations(range(g.n), k):
            checked += 1
            if shape_check(g, combo, shape):
                return SolveResult(shape, k, combo, True, checked, time.perf_counter() - start)
    raise AssertionError("unreachable: a single vertex is always an induced path")


def independence_number(g: Graph) -> SolveResult:
    best = [0, 0]
    adj = g.adj
    n = g.n

    def dfs(v: int, chosen: int, size: int, allowed: int) -> None:
        if size > best[0]:
            best[0], best[1] = size, chosen
        rest = allowed >> v << v
        if size + rest.bit_count() <= best[0]:
            return
        u = (rest & -rest).bit_length() - 1
        dfs(u + 1, chosen | 1 << u, size + 1, allowed & ~adj[u])
        dfs(u + 1, chosen, size, allowed & ~(1 << u))

    if n:
        dfs(0, 0, 0, g.full)
    return SolveResult("linear_forest", best[0], tuple(bits(best[1])))

