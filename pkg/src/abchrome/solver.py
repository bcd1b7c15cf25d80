"""Exact small-graph solvers for A(G), phi(G), A_b(G) and the 4-colour de-cycler."""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .coloring import (
    Coloring,
    ColoringError,
    bicolored_cycle_rank,
    closes_bicolored_cycle,
    find_monochromatic_edge,
    is_ab_minimal,
    is_acyclic,
    may_be_blocked,
    missing_colors,
    recoloring_descent,
    trivial_coloring,
    _shortest_cycle_through,
)
from .graph import Graph, emit_graph6, girth, is_cubic


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one exact solve; ``None`` means unlimited."""

    max_nodes: int | None = None
    max_ms: int | None = None
    seed: int | None = None

    def __post_init__(self):
        for name in ("max_nodes", "max_ms"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive")


UNLIMITED = SearchBudget()


class BudgetExhausted(Exception):
    """A search ran out of budget; carries whatever bounds were established."""

    def __init__(self, what: str, lower=None, upper=None, witness: Coloring | None = None, nodes: int = 0):
        super().__init__(f"{what}: budget exhausted (bounds {lower}..{upper})")
        self.what = what
        self.lower = lower
        self.upper = upper
        self.witness = witness
        self.nodes = nodes


class _Stop(Exception):
    pass


class _Search:
    """Backtracking over vertex colourings with properness and incremental acyclicity pruning."""

    def __init__(self, g: Graph, budget: SearchBudget = UNLIMITED):
        self.g = g
        self.budget = budget
        self.order = search_order(g)
        self.nodes = 0
        self._deadline = None if budget.max_ms is None else time.monotonic() + budget.max_ms / 1000

    def _tick(self):
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            raise _Stop
        if self._deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self._deadline:
            raise _Stop

    def run(
        self,
        k: int,
        leaf: Callable[[list[int]], bool],
        acyclic: bool = True,
        surjective: bool = True,
        symmetry: bool = True,
        hint: list[int] | None = None,
    ) -> bool:
        """Visit colourings with colours ``1..k``; stop as soon as ``leaf`` returns True."""
        g, order = self.g, self.order
        n = g.n
        colors = [0] * n
        adj = g.adjacency

        def rec(pos: int, used: int) -> bool:
            self._tick()
            if pos == n:
                return leaf(colors)
            v = order[pos]
            if surjective and n - pos < k - used:
                return False
            top = min(k, used + 1) if symmetry else k
            choices = range(1, top + 1)
            if hint is not None and 1 <= hint[v] <= top:
                choices = [hint[v]] + [a for a in choices if a != hint[v]]
            for a in choices:
                if any(colors[u] == a for u in adj[v]):
                    continue
                if acyclic and closes_bicolored_cycle(g, colors, v, a):
                    continue
                colors[v] = a
                if rec(pos + 1, max(used, a)):
                    return True
                colors[v] = 0
            return False

        return rec(0, 0)


def _record(stats: dict | None, search: _Search) -> None:
    if stats is not None:
        stats["nodes"] = search.nodes


def search_order(g: Graph) -> list[int]:
    """Breadth-first order from the highest-degree vertex, neighbours by descending degree."""
    start = min(range(g.n), key=lambda v: (-g.degree(v), v))
    seen = [False] * g.n
    order = []
    for root in [start] + sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(g.adjacency[u], key=lambda v: (-g.degree(v), v)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


# exact invariants -------------------------------------------------------------


def compute_A(g: Graph, budget: SearchBudget = UNLIMITED, stats: dict | None = None) -> tuple[int, Coloring]:
    """Acyclic chromatic number with a witness colouring."""
    search = _Search(g, budget)
    found: list[Coloring] = []

    def leaf(colors):
        found.append(Coloring.of(colors))
        return True

    k = 1
    try:
        while True:
            if search.run(k, leaf, surjective=False):
                _record(stats, search)
                witness = found[0]
                return max(witness.colors), witness
            k += 1
    except _Stop:
        raise BudgetExhausted("A", lower=k, upper=None, nodes=search.nodes) from None


def has_b_vertex_in_every_class(g: Graph, colors: list[int], k: int) -> bool:
    covered = set()
    for v in range(g.n):
        if colors[v] in covered:
            continue
        if len({colors[u] for u in g.adjacency[v]}) == k - 1:
            covered.add(colors[v])
    return len(covered) == k


def compute_phi(g: Graph, budget: SearchBudget = UNLIMITED, stats: dict | None = None) -> tuple[int, Coloring]:
    """b-chromatic number: largest k with a proper k-colouring having a b-vertex in every class."""
    search = _Search(g, budget)
    found: list[Coloring] = []
    top = min(g.n, g.max_degree + 1)
    k = top
    try:
        for k in range(top, 0, -1):
            if sum(1 for v in range(g.n) if g.degree(v) >= k - 1) < k:
                continue

            def leaf(colors, k=k):
                if has_b_vertex_in_every_class(g, colors, k):
                    found.append(Coloring(tuple(colors), k))
                    return True
                return False

            if search.run(k, leaf, acyclic=False):
                _record(stats, search)
                return k, found[0]
    except _Stop:
        raise BudgetExhausted("phi", lower=None, upper=k, nodes=search.nodes) from None
    raise AssertionError("a graph always has a b-colouring")


def ab_upper_bound(g: Graph) -> int:
    # Delta^2/2 + 1, but never below Delta + 1 (K2 has two b-vertices)
    d = g.max_degree
    return min(g.n, max(d + 1, d * d // 2 + 1))


def compute_Ab(
    g: Graph,
    budget: SearchBudget = UNLIMITED,
    symmetry: bool = True,
    stats: dict | None = None,
) -> tuple[int, Coloring]:
    """Acyclic b-chromatic number: largest k with an acyclic k-colouring admitting no acyclic recolouring step.

    Descends from :func:`ab_upper_bound`; minimality is tested only at
    complete colourings that pass a cheap necessary filter.
    """
    search = _Search(g, budget)
    found: list[Coloring] = []
    k = ab_upper_bound(g)
    try:
        for k in range(ab_upper_bound(g), 0, -1):

            def leaf(colors, k=k):
                c = Coloring(tuple(colors), k)
                if may_be_blocked(g, c) and is_ab_minimal(g, c, check=False):
                    found.append(c)
                    return True
                return False

            if search.run(k, leaf, symmetry=symmetry):
                _record(stats, search)
                return k, found[0]
    except _Stop:
        lower = recoloring_descent(g, trivial_coloring(g))
        raise BudgetExhausted("Ab", lower=lower.k, upper=k, witness=lower, nodes=search.nodes) from None
    raise AssertionError("some acyclic colouring is always minimal")


def find_ab_coloring(
    g: Graph, k: int, budget: SearchBudget = UNLIMITED, hint: Coloring | None = None
) -> Coloring | None:
    """An acyclic, minimal colouring using exactly ``k`` colours, or ``None`` if none exists."""
    search = _Search(g, budget)
    found: list[Coloring] = []

    def leaf(colors):
        c = Coloring(tuple(colors), k)
        if may_be_blocked(g, c) and is_ab_minimal(g, c, check=False):
            found.append(c)
            return True
        return False

    guide = None
    if hint is not None:
        guide = [0] * g.n
        relabel: dict[int, int] = {}
        for v in search.order:
            relabel.setdefault(hint[v], len(relabel) + 1)
            guide[v] = relabel[hint[v]]
    try:
        search.run(k, leaf, hint=guide)
    except _Stop:
        raise BudgetExhausted(f"Ab>={k}", nodes=search.nodes) from None
    return found[0] if found else None


# de-cycling ------------------------------------------------------------------


def shortest_bicolored_cycle(g: Graph, colors: list[int]) -> tuple[int, ...] | None:
    """Shortest two-coloured cycle; ties go to the lexicographically smallest sequence."""
    best = None
    for v in range(g.n):
        for m in {colors[u] for u in g.adjacency[v]}:
            allowed = {u for u in range(g.n) if colors[u] in (colors[v], m) and u != v}
            cyc = _shortest_cycle_through(g, v, allowed)
            if cyc is not None and (best is None or (len(cyc), cyc) < (len(best), best)):
                best = cyc
        if best is not None and len(best) == 4:
            break
    return best


def _third_neighbor(g: Graph, cycle: tuple[int, ...], pos: int) -> int:
    n = len(cycle)
    on = {cycle[pos - 1], cycle[(pos + 1) % n]}
    return next(u for u in g.adjacency[cycle[pos]] if u not in on)


def _decycle_moves(g: Graph, colors: list[int], cycle: tuple[int, ...]):
    """Candidate recolourings in the order of the de-cycling argument."""
    n = len(cycle)
    p, q = colors[cycle[0]], colors[cycle[1]]
    off = [x for x in (1, 2, 3, 4) if x not in (p, q)]
    thirds = [_third_neighbor(g, cycle, i) for i in range(n)]
    tc = [colors[u] for u in thirds]
    for j in range(n):
        if tc[j] not in (p, q):
            continue
        left, right = tc[j - 1], tc[(j + 1) % n]
        if left in off and right in off:
            if left == right:
                other = off[1] if left == off[0] else off[0]
                yield {cycle[j]: other}
            else:
                yield {cycle[j - 1]: right}
                yield {cycle[(j + 1) % n]: left}
    if all(col in off for col in tc):
        for j in range(n):
            x = tc[j]
            y = off[1] if x == off[0] else off[0]
            yield {cycle[j]: y}
            prev, nxt = j - 1, (j + 1) % n
            shared = thirds[prev] == thirds[j] or thirds[nxt] == thirds[j]
            if tc[prev] == y and tc[nxt] == y and not shared:
                yield {cycle[prev]: x, cycle[nxt]: x, cycle[j]: colors[cycle[prev]]}


def _is_proper_at(g: Graph, colors: list[int], changed) -> bool:
    return all(colors[u] != colors[v] for v in changed for u in g.adjacency[v])


def decycle_4coloring(g: Graph, c: Coloring, trace: list[int] | None = None) -> Coloring:
    """Turn a proper colouring with at most 4 colours of a cubic graph into an acyclic one.

    Each round takes a shortest two-coloured cycle and applies the first local
    recolouring (single-vertex fixes off the cycle's neighbour colours, then
    the three-vertex repair) that keeps the colouring proper and strictly
    lowers the total cycle rank of the two-colour subgraphs.  ``trace``
    receives that rank before every round and at the end.
    """
    if not is_cubic(g):
        raise ColoringError("decycle_4coloring needs a cubic graph")
    bad = find_monochromatic_edge(g, c)
    if bad is not None:
        raise ColoringError(f"improper-coloring: edge {bad} is monochromatic")
    if c.k > 4 or max(c.colors) > 4:
        raise ColoringError("decycle_4coloring accepts at most 4 colours")
    colors = list(c.colors)
    rank = bicolored_cycle_rank(g, Coloring(tuple(colors), 4))
    while rank > 0:
        if trace is not None:
            trace.append(rank)
        cycle = shortest_bicolored_cycle(g, colors)
        rank = _improve(g, colors, cycle, rank)
    if trace is not None:
        trace.append(rank)
    return Coloring(tuple(colors), 4)


def _candidate_moves(g: Graph, colors: list[int], cycle: tuple[int, ...]):
    yield from _decycle_moves(g, colors, cycle)
    # fallbacks: any single recolouring on the cycle, then anywhere
    for v in list(cycle) + [v for v in range(g.n) if v not in cycle]:
        for a in (1, 2, 3, 4):
            if a != colors[v]:
                yield {v: a}


def _improve(g: Graph, colors: list[int], cycle: tuple[int, ...], rank: int) -> int:
    for move in _candidate_moves(g, colors, cycle):
        saved = {v: colors[v] for v in move}
        for v, a in move.items():
            colors[v] = a
        if _is_proper_at(g, colors, move):
            new_rank = bicolored_cycle_rank(g, Coloring(tuple(colors), 4))
            if new_rank < rank:
                return new_rank
        for v, a in saved.items():
            colors[v] = a
    raise RuntimeError(f"no rank-decreasing recolouring found around cycle {cycle}")


def greedy_coloring(g: Graph, order=None, k: int | None = None) -> Coloring:
    colors = [0] * g.n
    for v in order if order is not None else range(g.n):
        taken = {colors[u] for u in g.adjacency[v]}
        colors[v] = next(a for a in range(1, g.n + 2) if a not in taken)
    top = max(colors)
    return Coloring(tuple(colors), top if k is None else max(k, top))


def find_acyclic_b4(g: Graph, budget: SearchBudget = UNLIMITED, seed: Coloring | None = None) -> Coloring | None:
    """A minimal acyclic 4-colouring of a cubic graph, or ``None`` when exhaustive search finds none.

    The search is guided by the de-cycled greedy colouring (or ``seed``).
    """
    if not is_cubic(g):
        raise ColoringError("find_acyclic_b4 needs a cubic graph")
    if seed is None:
        seed = decycle_4coloring(g, greedy_coloring(g, search_order(g), 4))
    if len(seed.used()) == 4 and is_acyclic(g, seed) and is_ab_minimal(g, seed, check=False):
        return Coloring(seed.colors, 4)
    return find_ab_coloring(g, 4, budget, hint=seed)


# reports ----------------------------------------------------------------------


TARGETS = ("A", "phi", "Ab", "conjecture")


@dataclass
class SolveReport:
    graph6: str
    n: int
    m: int
    girth: int | None
    A: int | None = None
    phi: int | None = None
    Ab: int | None = None
    witnesses: dict[str, list[int]] = field(default_factory=dict)
    bounds: dict[str, list] = field(default_factory=dict)
    conjecture: dict | None = None
    status: str = "ok"
    nodes: int = 0
    millis: int = 0

    def check_invariants(self, g: Graph) -> None:
        """Raise if reported values contradict the known bounds for this graph."""
        if self.A is not None and self.Ab is not None and self.A > self.Ab:
            raise AssertionError(f"A={self.A} exceeds Ab={self.Ab}")
        if is_cubic(g):
            if self.A is not None and self.A > 4:
                raise AssertionError(f"cubic graph with A={self.A} > 4")
            if self.Ab is not None and self.Ab > 5:
                raise AssertionError(f"cubic graph with Ab={self.Ab} > 5")

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "girth": self.girth,
            "A": self.A,
            "phi": self.phi,
            "Ab": self.Ab,
            "witnesses": self.witnesses,
            "bounds": self.bounds,
            "status": self.status,
            "nodes": self.nodes,
        }
        if self.conjecture is not None:
            out["conjecture"] = self.conjecture
        if timing:
            out["millis"] = self.millis
        return out


def _run_budgeted(report: SolveReport, name: str, fn, g, budget):
    stats: dict = {}
    try:
        value, witness = fn(g, budget, stats=stats)
    except BudgetExhausted as exc:
        report.status = "budget-exhausted"
        report.bounds[name] = [exc.lower, exc.upper]
        report.nodes += exc.nodes
        return None
    setattr(report, name, value)
    report.nodes += stats.get("nodes", 0)
    report.witnesses[name] = list(witness.colors)
    return value


def conjecture_verdict(g_girth: int | None, phi: int | None, ab: int | None) -> dict:
    """Evaluate ``girth > 2 phi  =>  Ab >= phi`` on exact values."""
    if phi is None or ab is None:
        return {"girth": g_girth, "phi": phi, "Ab": ab, "hypothesis": None, "verdict": "inconclusive"}
    hypothesis = g_girth is None or g_girth > 2 * phi
    if not hypothesis:
        verdict = "vacuous"
    elif ab >= phi:
        verdict = "holds"
    else:
        verdict = "counterexample"
    return {"girth": g_girth, "phi": phi, "Ab": ab, "hypothesis": hypothesis, "verdict": verdict}


def probe_conjecture(g: Graph, budget: SearchBudget = UNLIMITED) -> dict:
    g_girth = girth(g)
    try:
        phi, _ = compute_phi(g, budget)
        ab, _ = compute_Ab(g, budget)
    except BudgetExhausted:
        return conjecture_verdict(g_girth, None, None)
    return conjecture_verdict(g_girth, phi, ab)


def solve(g: Graph, targets=("A", "phi", "Ab"), budget: SearchBudget = UNLIMITED) -> SolveReport:
    start = time.perf_counter()
    report = SolveReport(emit_graph6(g), g.n, g.m, girth(g))
    wanted = set(targets)
    if "conjecture" in wanted:
        wanted |= {"phi", "Ab"}
    for name, fn in (("A", compute_A), ("phi", compute_phi), ("Ab", compute_Ab)):
        if name in wanted:
            _run_budgeted(report, name, fn, g, budget)
    if "conjecture" in wanted:
        report.conjecture = conjecture_verdict(report.girth, report.phi, report.Ab)
    report.millis = round((time.perf_counter() - start) * 1000)
    report.check_invariants(g)
    return report
