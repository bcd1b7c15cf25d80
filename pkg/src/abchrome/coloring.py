"""Colourings and the definitional checks built on them.

Colours are 1-based ids in ``1..k``.  Checks come in pairs: a ``find_*``
function returning a witness (or ``None``) and a boolean wrapper.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph import CycleWitness, Graph, find_induced_cycle, is_cubic


class ColoringError(ValueError):
    """Raised when a colouring does not fit its graph or violates a precondition."""


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 1 for c in self.colors):
            raise ColoringError("colour ids start at 1")
        if self.colors and max(self.colors) > self.k:
            raise ColoringError(f"colour {max(self.colors)} exceeds palette size k={self.k}")

    @classmethod
    def of(cls, colors: Sequence[int], k: int | None = None) -> "Coloring":
        colors = tuple(colors)
        return cls(colors, max(colors) if k is None else k)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def used(self) -> set[int]:
        return set(self.colors)

    def color_class(self, i: int) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c == i]

    def pair_class(self, i: int, j: int) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c == i or c == j]

    def recolored(self, changes: dict[int, int], k: int | None = None) -> "Coloring":
        colors = list(self.colors)
        for v, c in changes.items():
            colors[v] = c
        return Coloring(tuple(colors), self.k if k is None else k)

    def canonical(self) -> "Coloring":
        """Relabel colours in order of first appearance."""
        relabel: dict[int, int] = {}
        for c in self.colors:
            relabel.setdefault(c, len(relabel) + 1)
        return Coloring(tuple(relabel[c] for c in self.colors), len(relabel))

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "colors": list(self.colors)})


def trivial_coloring(g: Graph) -> Coloring:
    return Coloring(tuple(range(1, g.n + 1)), g.n)


def load_coloring(text: str) -> Coloring:
    """Parse the JSON form ``{"k": .., "colors": [..]}`` or whitespace-separated ints."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return Coloring(tuple(data["colors"]), int(data["k"]))
    values = [int(tok) for tok in stripped.split()]
    if not values:
        raise ColoringError("empty colouring")
    return Coloring.of(values)


def _check_size(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ColoringError(f"size mismatch: colouring has {len(c)} entries, graph has {g.n} vertices")


# properness and acyclicity -----------------------------------------------------


def find_monochromatic_edge(g: Graph, c: Coloring) -> tuple[int, int] | None:
    _check_size(g, c)
    for u, v in g.edges():
        if c[u] == c[v]:
            return (u, v)
    return None


def is_proper(g: Graph, c: Coloring) -> bool:
    return find_monochromatic_edge(g, c) is None


def find_bicolored_cycle(g: Graph, c: Coloring) -> tuple[tuple[int, int], CycleWitness] | None:
    """First colour pair (in lexicographic order) whose two classes induce a cycle."""
    bad = find_monochromatic_edge(g, c)
    if bad is not None:
        raise ColoringError(f"improper-coloring: edge {bad} is monochromatic")
    used = sorted(c.used())
    for i, j in combinations(used, 2):
        cycle = find_induced_cycle(g, c.pair_class(i, j))
        if cycle is not None:
            return (i, j), cycle
    return None


def is_acyclic(g: Graph, c: Coloring) -> bool:
    return find_bicolored_cycle(g, c) is None


def bicolored_cycle_rank(g: Graph, c: Coloring) -> int:
    """Sum over colour pairs of the cycle rank ``m - n + components`` of the pair subgraph."""
    _check_size(g, c)
    total = 0
    for i, j in combinations(sorted(c.used()), 2):
        keep = set(c.pair_class(i, j))
        m = sum(1 for u in keep for w in g.adjacency[u] if w in keep) // 2
        comps = 0
        seen: set[int] = set()
        for s in keep:
            if s in seen:
                continue
            comps += 1
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                for w in g.adjacency[u]:
                    if w in keep and w not in seen:
                        seen.add(w)
                        stack.append(w)
        total += m - len(keep) + comps
    return total


# b-vertices -------------------------------------------------------------------


def missing_colors(g: Graph, c: Coloring, v: int) -> set[int]:
    present = {c[v]}
    present.update(c[u] for u in g.adjacency[v])
    return set(range(1, c.k + 1)) - present


def b_vertices(g: Graph, c: Coloring, i: int) -> set[int]:
    if not 1 <= i <= c.k:
        raise ColoringError(f"colour {i} outside 1..{c.k}")
    return {v for v in c.color_class(i) if not missing_colors(g, c, v)}


def classify_ab_vertex_shape(g: Graph, c: Coloring, v: int) -> str:
    """Shape of ``v`` as a potential acyclic b-vertex: ``"b"``, ``"A"``, ``"B"`` or ``"none"``.

    Looks only at neighbour colours; it does not certify that ``v`` is blocked.
    """
    if not is_cubic(g):
        raise ColoringError("shape classification needs a cubic graph")
    if not missing_colors(g, c, v):
        return "b"
    distinct = len({c[u] for u in g.adjacency[v]})
    return {1: "A", 2: "B"}.get(distinct, "none")


# recolouring steps ------------------------------------------------------------


@dataclass(frozen=True)
class RecolorWitness:
    """Replacement colours for a whole colour class."""

    class_color: int
    replacement: dict[int, int] = field(hash=False)

    def apply(self, c: Coloring) -> Coloring:
        """Recoloured colouring, with colours above ``class_color`` shifted down to keep ``1..k-1``."""
        i = self.class_color
        shifted = {}
        for v, col in enumerate(c.colors):
            col = self.replacement.get(v, col)
            shifted[v] = col - 1 if col > i else col
        return Coloring(tuple(shifted[v] for v in range(len(c))), c.k - 1)

    def apply_raw(self, c: Coloring) -> Coloring:
        """Recoloured colouring keeping the original colour ids."""
        return c.recolored(self.replacement)


@dataclass(frozen=True)
class Refusal:
    """Reason why a colour class cannot be removed."""

    class_color: int
    reason: str  # empty-class | b-vertex-present | all-assignments-cyclic
    vertex: int | None = None


def _connected_in_pair(g: Graph, colors: list[int], a: int, b: int, src: int, dst: int, skip: int) -> bool:
    # BFS inside the (a, b)-coloured subgraph, avoiding ``skip``
    if src == dst:
        return True
    seen = {src, skip}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w in seen:
                continue
            cw = colors[w]
            if cw != a and cw != b:
                continue
            if w == dst:
                return True
            seen.add(w)
            queue.append(w)
    return False


def closes_bicolored_cycle(g: Graph, colors: list[int], v: int, a: int) -> bool:
    """Would giving ``v`` colour ``a`` close a two-coloured cycle through ``v``?

    ``colors`` holds the current colours with 0 for uncoloured vertices.
    Every new cycle passes through ``v`` and uses two of its neighbours of
    one colour ``b``, so it suffices to test whether two such neighbours are
    already joined inside the (a, b) subgraph.
    """
    by_color: dict[int, list[int]] = {}
    for u in g.adjacency[v]:
        cu = colors[u]
        if cu and cu != a:
            by_color.setdefault(cu, []).append(u)
    for b, nbrs in by_color.items():
        if len(nbrs) < 2:
            continue
        for x, y in combinations(nbrs, 2):
            if _connected_in_pair(g, colors, a, b, x, y, v):
                return True
    return False


def try_acyclic_recoloring_step(g: Graph, c: Coloring, i: int) -> RecolorWitness | Refusal:
    """Search for ``l_v`` (missing in ``N[v]``) for every ``v`` of class ``i`` keeping acyclicity.

    Exact: candidate colours that close a cycle with vertices outside the
    class are discarded first (those cycles survive any choice for the other
    vertices), then the remaining product is explored by backtracking with
    vertices in fail-first order and candidates ascending.
    """
    _check_size(g, c)
    members = c.color_class(i)
    if not members:
        return Refusal(i, "empty-class")
    cands: dict[int, list[int]] = {}
    for v in members:
        miss = missing_colors(g, c, v)
        if not miss:
            return Refusal(i, "b-vertex-present", v)
        cands[v] = sorted(miss)

    colors = [0 if col == i else col for col in c.colors]
    for v in members:
        live = [a for a in cands[v] if not closes_bicolored_cycle(g, colors, v, a)]
        if not live:
            return Refusal(i, "all-assignments-cyclic", v)
        cands[v] = live

    order = sorted(members, key=lambda v: (len(cands[v]), v))
    assignment: dict[int, int] = {}

    def place(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for a in cands[v]:
            if pos and closes_bicolored_cycle(g, colors, v, a):
                continue
            colors[v] = a
            assignment[v] = a
            if place(pos + 1):
                return True
            colors[v] = 0
            del assignment[v]
        return False

    if place(0):
        return RecolorWitness(i, dict(sorted(assignment.items())))
    return Refusal(i, "all-assignments-cyclic")


def _require_acyclic(g: Graph, c: Coloring) -> None:
    found = find_bicolored_cycle(g, c)
    if found is not None:
        pair, cycle = found
        raise ColoringError(f"cyclic input: colours {pair} span the cycle {cycle.vertices}")


def find_recoloring_step(g: Graph, c: Coloring, check: bool = True) -> RecolorWitness | None:
    """First colour class (ascending) that admits an acyclic recolouring step."""
    if check:
        _require_acyclic(g, c)
    for i in sorted(c.used()):
        result = try_acyclic_recoloring_step(g, c, i)
        if isinstance(result, RecolorWitness):
            return result
    return None


def is_ab_minimal(g: Graph, c: Coloring, check: bool = True) -> bool:
    """True iff no colour class in use can be removed by an acyclic recolouring step."""
    return find_recoloring_step(g, c, check) is None


def may_be_blocked(g: Graph, c: Coloring) -> bool:
    """Cheap necessary condition for minimality.

    A class can only be blocked if one of its vertices is a b-vertex or has two
    neighbours of one colour; otherwise no recoloured vertex can lie on a
    two-coloured cycle.
    """
    blocked_candidates = set()
    for v in range(g.n):
        seen = set()
        for u in g.adjacency[v]:
            cu = c.colors[u]
            if cu in seen:
                blocked_candidates.add(c.colors[v])
                break
            seen.add(cu)
        else:
            if len(seen) + 1 >= c.k:
                blocked_candidates.add(c.colors[v])
    return blocked_candidates >= c.used()


def recoloring_descent(g: Graph, c: Coloring) -> Coloring:
    """Apply acyclic recolouring steps (first admissible class each time) until none is possible."""
    c = c.canonical()
    while True:
        step = find_recoloring_step(g, c, check=False)
        if step is None:
            return c
        c = step.apply(c)


# blocking cycles --------------------------------------------------------------


@dataclass(frozen=True)
class BlockReport:
    """For each colour ``j`` missing at ``vertex``: its shortest blocking cycle or ``None`` (free)."""

    vertex: int
    cycles: dict[int, CycleWitness | None] = field(hash=False)

    def free(self) -> list[int]:
        return [j for j, cyc in self.cycles.items() if cyc is None]

    def fully_blocked(self) -> bool:
        return bool(self.cycles) and not self.free()


def _shortest_cycle_through(g: Graph, v: int, allowed: set[int]) -> tuple[int, ...] | None:
    """Shortest cycle through ``v`` inside ``allowed | {v}``; ties go to the lexicographically smallest sequence."""
    nbrs = [u for u in g.adjacency[v] if u in allowed]
    best: tuple[int, tuple[int, ...]] | None = None
    for a in nbrs:
        for b in nbrs:
            if a == b:
                continue
            # distances to b inside allowed - {v}
            dist = {b: 0}
            queue = deque([b])
            while queue:
                u = queue.popleft()
                for w in g.adjacency[u]:
                    if w != v and w in allowed and w not in dist:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            if a not in dist:
                continue
            path = [a]
            cur = a
            while cur != b:
                cur = min(w for w in g.adjacency[cur] if dist.get(w, -2) == dist[cur] - 1 and w != v)
                path.append(cur)
            key = (len(path) + 1, (v, *path))
            if best is None or key < best:
                best = key
    return None if best is None else best[1]


def blocking_report(g: Graph, c: Coloring, v: int) -> BlockReport:
    """Shortest j_v-cycles for every colour ``j`` missing in ``N[v]``.

    A cycle blocks ``j`` when recolouring ``v`` alone to ``j`` would make it
    two-coloured: it passes through ``v`` and its other vertices use ``j`` and
    one further colour ``m``.
    """
    _check_size(g, c)
    report: dict[int, CycleWitness | None] = {}
    for j in sorted(missing_colors(g, c, v)):
        best = None
        for m in range(1, c.k + 1):
            if m == j or m == c[v]:
                continue
            allowed = {u for u in range(g.n) if c[u] in (j, m) and u != v}
            cyc = _shortest_cycle_through(g, v, allowed)
            if cyc is not None and (best is None or (len(cyc), cyc) < (len(best), best)):
                best = cyc
        report[j] = None if best is None else CycleWitness(best)
    return BlockReport(v, report)
