"""Batch sweeps behind the command-line tables and reports.

Graphs cross process boundaries as graph6 strings; results are always merged
back in input order, so serial and parallel runs give identical output.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from .bounds import (
    ExtremalConstruction,
    construct_extremal_lip,
    f_ratio,
    lip_order_lower_bound,
    lip_upper_bound,
)
from .enumeration import CANON_MAX_ORDER, GraphFilter, canonical_form, enumerate_connected
from .graph import Graph, complement, complete, complete_bipartite, path, regularity, shape_check
from .graphio import decode_graph6, encode_graph6, read_stream
from .greedy import greedy_partition, verify_claims
from .solvers import UNLIMITED, SearchBudget, longest_induced_path, max_induced_forest, max_induced_linear_forest

T = TypeVar("T")
R = TypeVar("R")

CUBIC_COLUMNS = ["n", "max_a", "min_a", "max_lif", "min_lif", "graphs", "complete"]
G_COLUMNS = ["n", "g_num", "g_den", "witness_g6", "classes", "complete"]


def pmap(func: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    if jobs <= 1 or len(items) < 2:
        return [func(x) for x in items]
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=chunk))


@dataclass
class SurveyRow:
    n: int
    stats: dict = field(default_factory=dict)
    graphs: int = 0
    complete: bool = True
    witnesses: dict = field(default_factory=dict)


def _checked(g: Graph, res, shape) -> None:
    if not shape_check(g, res.witness, shape) or len(res.witness) != res.value:
        raise AssertionError(f"invalid {shape} witness {res.witness} for {encode_graph6(g)}")


def _forest_stats(job: tuple[str, Optional[int]]) -> tuple[int, int, bool]:
    code, node_limit = job
    g = decode_graph6(code)
    budget = SearchBudget(node_limit=node_limit)
    a = max_induced_forest(g, budget)
    lif = max_induced_linear_forest(g, budget)
    _checked(g, a, "forest")
    _checked(g, lif, "linear_forest")
    return a.value, lif.value, a.optimal and lif.optimal


def load_corpus(paths: Iterable[str | Path]) -> dict[int, list[str]]:
    """graph6 strings grouped by order, in file order."""
    by_n: dict[int, list[str]] = {}
    for p in paths:
        for _, g in read_stream(p):
            by_n.setdefault(g.n, []).append(encode_graph6(g))
    return by_n


def table_cubic(corpus: dict[int, list[str]], budget: SearchBudget = UNLIMITED, jobs: int = 1) -> list[SurveyRow]:
    """Extreme values of a(G) and LIF(G) over each order's corpus."""
    rows = []
    for n in sorted(corpus):
        codes = corpus[n]
        results = pmap(_forest_stats, [(c, budget.node_limit) for c in codes], jobs)
        a_vals = [a for a, _, _ in results]
        l_vals = [l for _, l, _ in results]
        row = SurveyRow(n, graphs=len(codes), complete=all(ok for _, _, ok in results))
        row.stats = {"max_a": max(a_vals), "min_a": min(a_vals), "max_lif": max(l_vals), "min_lif": min(l_vals)}
        for key, vals in (("max_a", a_vals), ("min_a", a_vals), ("max_lif", l_vals), ("min_lif", l_vals)):
            row.witnesses[key] = codes[vals.index(row.stats[key])]
        rows.append(row)
    return rows


def _f_job(job: tuple[str, Optional[int]]) -> tuple[Fraction, int, bool]:
    code, node_limit = job
    g = decode_graph6(code)
    res = max_induced_linear_forest(g, SearchBudget(node_limit=node_limit))
    _checked(g, res, "linear_forest")
    return f_ratio(g, res.value), res.value, res.optimal


def connected_codes(n: int, corpus: Optional[dict[int, list[str]]] = None, filter: GraphFilter = GraphFilter()) -> list[str]:
    if n <= CANON_MAX_ORDER:
        return [encode_graph6(g) for g in enumerate_connected(n, filter)]
    if corpus is None or n not in corpus:
        raise FileNotFoundError(f"order {n} needs an external corpus (built-in enumeration stops at {CANON_MAX_ORDER})")
    return [c for c in corpus[n] if filter.accepts(decode_graph6(c))]


def table_g(ns: Iterable[int], corpus: Optional[dict[int, list[str]]] = None,
            budget: SearchBudget = UNLIMITED, jobs: int = 1) -> list[SurveyRow]:
    """g(n): least LIF(G)/t(G) over connected graphs of order n."""
    rows = []
    for n in ns:
        codes = connected_codes(n, corpus)
        results = pmap(_f_job, [(c, budget.node_limit) for c in codes], jobs)
        best = min(f for f, _, _ in results)
        witness = min(c for c, (f, _, _) in zip(codes, results) if f == best)
        row = SurveyRow(n, graphs=len(codes), complete=all(ok for _, _, ok in results))
        row.stats = {"g": best}
        row.witnesses = {"g": witness}
        rows.append(row)
    return rows


def cubic_records(rows: list[SurveyRow]) -> list[dict]:
    return [
        {"n": r.n, **r.stats, "graphs": r.graphs, "complete": int(r.complete)}
        for r in rows
    ]


def g_records(rows: list[SurveyRow]) -> list[dict]:
    return [
        {
            "n": r.n,
            "g_num": r.stats["g"].numerator,
            "g_den": r.stats["g"].denominator,
            "witness_g6": r.witnesses["g"],
            "classes": r.graphs,
            "complete": int(r.complete),
        }
        for r in rows
    ]


def named_classes(n: int) -> dict[str, str]:
    """Canonical forms of the named graphs that can occur at order n."""
    names = {}
    if 1 <= n <= CANON_MAX_ORDER:
        names[canonical_form(complete(n))] = f"K_{n}"
        for a in range(1, n // 2 + 1):
            names.setdefault(canonical_form(complete_bipartite(a, n - a)), f"K_{{{a},{n - a}}}")
    return names


def conjecture_sweep(n_max: int, corpus: Optional[dict[int, list[str]]] = None,
                     budget: SearchBudget = UNLIMITED, jobs: int = 1) -> dict:
    """LIF(G)/t(G) >= 2 over connected graphs with minimum degree >= 2."""
    per_n = []
    counterexamples = []
    complete_run = True
    for n in range(3, n_max + 1):
        codes = connected_codes(n, corpus, GraphFilter(min_degree=2))
        results = pmap(_f_job, [(c, budget.node_limit) for c in codes], jobs)
        complete_run &= all(ok for _, _, ok in results)
        names = named_classes(n)
        fmin = min(f for f, _, _ in results)
        equality = []
        for code, (f, _, _) in zip(codes, results):
            if f == 2:
                key = canonical_form(decode_graph6(code)) if n <= CANON_MAX_ORDER else code
                equality.append({"graph6": code, "name": names.get(key, "")})
            if f < 2:
                counterexamples.append({"n": n, "graph6": code, "f": str(f)})
        per_n.append({"n": n, "classes": len(codes), "min_f": str(fmin), "equality": equality})
    return {
        "scope": "connected graphs, minimum degree >= 2",
        "per_n": per_n,
        "counterexamples": counterexamples,
        "complete": complete_run,
    }


def _ng_job(job: tuple[str, Optional[int]]) -> tuple[int, int, int, int, bool]:
    code, node_limit = job
    g = decode_graph6(code)
    h = complement(g)
    budget = SearchBudget(node_limit=node_limit)
    res = [max_induced_forest(g, budget), max_induced_forest(h, budget),
           max_induced_linear_forest(g, budget), max_induced_linear_forest(h, budget)]
    return res[0].value, res[1].value, res[2].value, res[3].value, all(r.optimal for r in res)


def nordhaus_gaddum_sweep(n_max: int, budget: SearchBudget = UNLIMITED, jobs: int = 1) -> dict:
    """a(G)+a(co-G) <= n+4 and LIF(G)+LIF(co-G) <= n+4 over connected classes and their complements."""
    per_n = []
    violations = []
    complete_run = True
    for n in range(1, n_max + 1):
        forms: dict[str, None] = {}
        for g in enumerate_connected(n):
            forms.setdefault(canonical_form(g), None)
            forms.setdefault(canonical_form(complement(g)), None)
        codes = list(forms)
        results = pmap(_ng_job, [(c, budget.node_limit) for c in codes], jobs)
        eq_a, eq_lif = [], []
        max_a = max_lif = 0
        for code, (a, ac, l, lc, ok) in zip(codes, results):
            complete_run &= ok
            max_a, max_lif = max(max_a, a + ac), max(max_lif, l + lc)
            if a + ac > n + 4 or l + lc > n + 4:
                violations.append({"n": n, "graph6": code, "a_sum": a + ac, "lif_sum": l + lc})
            if a + ac == n + 4:
                eq_a.append(code)
            if l + lc == n + 4:
                eq_lif.append(code)
        per_n.append({"n": n, "graphs": len(codes), "max_a_sum": max_a, "max_lif_sum": max_lif,
                      "equality_a": eq_a, "equality_lif": eq_lif})
    paths_ok = []
    for n in range(4, min(n_max, 7) + 1):
        p = path(n)
        s = max_induced_forest(p).value + max_induced_forest(complement(p)).value
        paths_ok.append({"n": n, "a_sum": s, "attains": s == n + 4})
    return {"per_n": per_n, "violations": violations, "paths": paths_ok, "complete": complete_run}


def extremal_record(c: ExtremalConstruction) -> dict:
    return {
        "r": c.r,
        "parity": c.parity_case,
        "graph6": encode_graph6(c.graph),
        "order": c.graph.n,
        "expected_order": c.expected_order,
        "regular": c.verified_regular,
        "lip": c.lip_value,
        "lip_matches_r": c.lip_matches_r,
        "flag": "claim mismatch" if c.lip_matches_r is False else "",
    }


def extremal_report(rs: Iterable[int]) -> list[dict]:
    return [extremal_record(construct_extremal_lip(r)) for r in rs]


def greedy_record(g: Graph, with_exact: bool = False) -> dict:
    res = greedy_partition(g)
    claims = verify_claims(g, res, strict=False)
    rec = {
        "graph6": encode_graph6(g),
        "n": g.n,
        "r": res.regular,
        "parts": [list(p) for p in res.parts],
        "certified": len(res.certified),
        "bound": None if res.bound is None else str(res.bound),
        "bound_ceil": None if res.bound is None else ceil(res.bound),
        "bound_holds": res.certificate_holds,
        "steps": res.steps,
        "claims_ok": claims.ok,
        "claim_violations": claims.violations,
    }
    if with_exact:
        lif = max_induced_linear_forest(g).value
        rec["lif"] = lif
        rec["lif_bound_holds"] = None if res.bound is None else lif >= res.bound
    return rec


def _greedy_job(job: tuple[str, bool]) -> dict:
    code, exact = job
    return greedy_record(decode_graph6(code), exact)


def greedy_sweep(codes: Sequence[str], with_exact: bool = False, jobs: int = 1) -> list[dict]:
    return pmap(_greedy_job, [(c, with_exact) for c in codes], jobs)


def lip_bound_record(g: Graph) -> dict:
    """LIP of a regular graph against the least-order and largest-LIP bounds."""
    r = regularity(g)
    if r is None or r < 2:
        raise ValueError("needs a regular graph of degree at least 2")
    k = longest_induced_path(g).value
    least = lip_order_lower_bound(r, k)
    top = lip_upper_bound(g.n, r)
    return {"n": g.n, "r": r, "lip": k, "order_bound": least, "lip_bound": str(top),
            "holds": g.n >= least and k <= top}

