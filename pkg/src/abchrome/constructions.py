"""Explicit colourings: 5 colours on G(n,k) and (0,j)-prisms, 4 colours on C(T) and prisms."""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import permutations

from .coloring import (
    Coloring,
    ColoringError,
    blocking_report,
    classify_ab_vertex_shape,
    closes_bicolored_cycle,
    find_bicolored_cycle,
    find_monochromatic_edge,
    is_ab_minimal,
)
from .families import (
    CubicTree,
    FamilyError,
    H3_COLORS,
    NamedGraph,
    gen_0j_prism,
    gen_C_of_T,
    gen_petersen,
    prism_label,
)
from .graph import Graph
from .solver import SearchBudget, UNLIMITED, find_ab_coloring


class ConstructionError(ValueError):
    """Parameters outside a construction's range, or a construction that failed verification."""


# palettes ---------------------------------------------------------------------

# P_{i+1}[p] = P_i[GLUE[p]].  Reading the G(n,k) identities backwards:
# c0_i = c4_{i+1}, c1_i = c0_{i+1}, c2_i = c3_{i+1}, c3_i = c1_{i+1}, c4_i = c2_{i+1}.
GP_GLUE = (1, 3, 4, 2, 0)
# the two replacement rules used when the last segment touches the first
GP_GLUE_TOUCH = {2: (1, 3, 0, 2, 4), 4: (1, 2, 4, 3, 0)}
# prism segments share one rim vertex, so only c3_k = c4_{k+1} is forced
PRISM_GLUE = (2, 4, 1, 0, 3)


@dataclass(frozen=True)
class SegmentPalette:
    """Colour tuples ``(c0, c1, c2, c3, c4)`` for five consecutive segments."""

    tuples: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.tuples) != 5:
            raise ValueError("a palette has exactly five segments")
        for t in self.tuples:
            if sorted(t) != [1, 2, 3, 4, 5]:
                raise ValueError(f"segment tuple {t} is not a permutation of 1..5")
        if len({t[0] for t in self.tuples}) != 5:
            raise ValueError("anchor colours c0 must be pairwise distinct")

    @classmethod
    def glued(cls, glues, start=(1, 2, 3, 4, 5)) -> "SegmentPalette":
        """Build tuples from ``start`` using one position map per step; the last map must close the cycle."""
        tuples = [tuple(start)]
        for glue in glues:
            prev = tuples[-1]
            tuples.append(tuple(prev[glue[p]] for p in range(5)))
        if tuples[-1] != tuples[0]:
            raise ValueError("gluing maps do not close up cyclically")
        return cls(tuple(tuples[:5]))

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.tuples[i]


def gp_palette(touching: bool = False) -> SegmentPalette:
    glues = [GP_GLUE_TOUCH.get(i, GP_GLUE) if touching else GP_GLUE for i in range(5)]
    return SegmentPalette.glued(glues)


def prism_palette() -> SegmentPalette:
    return SegmentPalette.glued([PRISM_GLUE] * 5)


# segment pattern tables: (ring, offset from anchor) -> role 0..4 -------------


def gp_pattern(k: int) -> dict[tuple[str, int], int]:
    """Roles around an anchor ``x_j`` of G(n,k); ring ``x`` is outer, ``y`` inner."""
    if k % 2:
        table = {("x", 0): 0, ("x", 1): 4}
        for t in range(1, k + 1):
            table[("x", -t)] = 3 if t % 2 else 1
        table.update({("y", 0): 3, ("y", k - 1): 3, ("x", k): 3, ("y", -k): 1})
        table.update({("y", -1): 2, ("x", k - 1): 2, ("y", k): 2})
        return table
    table = {("x", 0): 0, ("x", 1): 4}
    for key in (("x", -1), ("y", -k - 1), ("x", -k), ("y", 0), ("y", -2), ("x", k - 2), ("x", k)):
        table[key] = 3
    for key in (("y", -1), ("x", -k - 1), ("y", -k)):
        table[key] = 1
    for key in (("x", -2), ("y", k - 2), ("x", k - 1), ("y", k)):
        table[key] = 2
    return table


def prism_pattern(j: int) -> dict[tuple[int, int], int]:
    """Roles around an anchor ``v^1_a`` of a (0,j)-prism, keyed by (rim, offset)."""
    table = {(1, -1): 4, (1, 0): 0}
    for off in range(1, j + 2):
        table[(1, off)] = 3 if off % 2 else 2
    for off in range(1, j + 1):
        table[(2, off)] = 1 if off % 2 else 3
    table[(2, j + 1)] = 2
    return table


# results ----------------------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    named: NamedGraph
    coloring: Coloring
    anchors: tuple[int, ...]
    palette: SegmentPalette | None = None
    fill_backtracks: int = 0
    palette_searched: bool = False

    @property
    def graph(self) -> Graph:
        return self.named.graph

    def anchor_labels(self) -> list[str]:
        return [self.named.names[v] for v in self.anchors]

    def to_dict(self) -> dict:
        return {
            "k": self.coloring.k,
            "colors": list(self.coloring.colors),
            "anchors": list(self.anchors),
            "anchor_labels": self.anchor_labels(),
            "fill_backtracks": self.fill_backtracks,
            "palette": None if self.palette is None else [list(t) for t in self.palette.tuples],
            "palette_searched": self.palette_searched,
        }


def _place(colors: list[int], v: int, color: int, where: str) -> None:
    if colors[v] not in (0, color):
        raise ConstructionError(f"segments disagree at {where}: {colors[v]} vs {color}")
    colors[v] = color


def fill_gaps(g: Graph, colors: list[int], k: int) -> tuple[list[int], int]:
    """Colour every 0 entry with ``1..k`` keeping the colouring proper and acyclic.

    Smallest admissible colour first, so this is plain greedy until some vertex
    has no admissible colour; then it backtracks over earlier fill choices.
    Returns the filled list and the number of backtracks.
    """
    free = [v for v in range(g.n) if colors[v] == 0]
    colors = list(colors)
    backtracks = 0

    def rec(pos: int) -> bool:
        nonlocal backtracks
        if pos == len(free):
            return True
        v = free[pos]
        for a in range(1, k + 1):
            if any(colors[u] == a for u in g.adjacency[v]):
                continue
            if closes_bicolored_cycle(g, colors, v, a):
                continue
            colors[v] = a
            if rec(pos + 1):
                return True
            colors[v] = 0
        backtracks += 1
        return False

    if not rec(0):
        raise ConstructionError("no proper acyclic completion of the fixed segments")
    return colors, backtracks


def verify_construction(g: Graph, c: Coloring, k: int, anchors=()) -> None:
    """Raise unless ``c`` is a proper, acyclic, minimal colouring using exactly ``k`` colours."""
    if c.used() != set(range(1, k + 1)):
        raise ConstructionError(f"expected exactly {k} colours, used {sorted(c.used())}")
    edge = find_monochromatic_edge(g, c)
    if edge is not None:
        raise ConstructionError(f"monochromatic edge {edge}")
    cyc = find_bicolored_cycle(g, c)
    if cyc is not None:
        raise ConstructionError(f"two-coloured cycle {cyc[1].vertices} on colours {cyc[0]}")
    if not is_ab_minimal(g, c, check=False):
        raise ConstructionError("colouring admits an acyclic recolouring step")
    for v in anchors:
        if classify_ab_vertex_shape(g, c, v) != "B" or not blocking_report(g, c, v).fully_blocked():
            raise ConstructionError(f"anchor {v} is not a fully blocked type B vertex")


def _fixed_segments(named: NamedGraph, palette: SegmentPalette, cells) -> tuple[list[int], list[int]]:
    colors = [0] * named.graph.n
    anchors = []
    for i, (anchor_label, entries) in enumerate(cells):
        anchors.append(named.index(anchor_label))
        for label, role in entries:
            _place(colors, named.index(label), palette[i][role], label)
    return colors, anchors


def _palette_candidates(named: NamedGraph, cells):
    """Palettes (first tuple fixed to 1..5) whose segments agree on shared vertices and are proper."""
    g = named.graph
    segs = [[(named.index(label), role) for label, role in entries] for _, entries in cells]
    perms = sorted(permutations(range(1, 6)))
    colors = [0] * g.n

    def rec(i, chosen):
        if i == 5:
            if len({t[0] for t in chosen}) == 5:
                yield SegmentPalette(tuple(chosen))
            return
        for t in perms if i else [(1, 2, 3, 4, 5)]:
            if t[0] in {c[0] for c in chosen}:
                continue
            snapshot = list(colors)
            ok = True
            for v, role in segs[i]:
                a = t[role]
                if colors[v] not in (0, a) or any(colors[u] == a for u in g.adjacency[v]):
                    ok = False
                    break
                colors[v] = a
            if ok:
                yield from rec(i + 1, chosen + [t])
            colors[:] = snapshot

    yield from rec(0, [])


def _build(named: NamedGraph, cells, palette: SegmentPalette, k: int = 5) -> Construction:
    colors, anchors = _fixed_segments(named, palette, cells)
    return _finish(named, colors, k, anchors, palette)


def _build_with_fallback(named: NamedGraph, cells, palette: SegmentPalette, limit: int = 200) -> Construction:
    """Use the stated palette; if its segments clash, try other palettes in a fixed order."""
    try:
        return _build(named, cells, palette)
    except ConstructionError as first:
        reason = first
    for tried, candidate in enumerate(_palette_candidates(named, cells)):
        if tried >= limit:
            break
        try:
            return replace(_build(named, cells, candidate), palette_searched=True)
        except ConstructionError:
            continue
    raise ConstructionError(f"no palette completes the segments ({reason})")


# G(n,k) -------------------------------------------------------------------------


def gp5_bound(k: int) -> int:
    return 5 * (2 * k + (-1) ** k)


def color_gp5(n: int, k: int) -> Construction:
    """Acyclic minimal 5-colouring of G(n,k) for ``k >= 3`` and ``n >= 5(2k + (-1)^k)``.

    Five anchors ``x_{j_i}`` with ``j_i = (2k-1)i`` (odd k) or ``(2k+1)i``
    (even k) each get a segment whose two blocking cycles cover both colours
    missing at the anchor.  Unassigned vertices are filled afterwards.
    """
    if k < 3:
        raise ConstructionError(f"parameter-below-bound: need k >= 3, got k={k}")
    if n < gp5_bound(k):
        raise ConstructionError(
            f"parameter-below-bound: need n >= 5(2k + (-1)^k) = {gp5_bound(k)} for k={k}, got n={n}"
        )
    named = gen_petersen(n, k)
    step = 2 * k - 1 if k % 2 else 2 * k + 1
    palette = gp_palette(touching=(k % 2 == 1 and n == 10 * k - 4))
    pattern = gp_pattern(k)
    cells = []
    for i in range(5):
        j = step * i
        entries = [(f"{ring}{(j + off) % n}", role) for (ring, off), role in pattern.items()]
        cells.append((f"x{j}", entries))
    return _build_with_fallback(named, cells, palette)


# (0,j)-prisms ---------------------------------------------------------------------


def color_0j_prism5(rim_len: int, j: int) -> Construction:
    """Acyclic minimal 5-colouring of the (0,j)-prism with rims of length ``rim_len >= 5(j+2)``."""
    named = gen_0j_prism(rim_len, j)  # parity and range checks
    if j <= 0:
        raise ConstructionError(f"parameter-below-bound: need j > 0, got j={j}")
    if rim_len < 5 * (j + 2):
        raise ConstructionError(
            f"parameter-below-bound: need rim length >= 5(j+2) = {5 * (j + 2)}, got {rim_len}"
        )
    palette = prism_palette()
    pattern = prism_pattern(j)
    cells = []
    for seg in range(5):
        a = seg * (j + 2) + 1
        entries = [(prism_label(rim, (a + off) % rim_len), role) for (rim, off), role in pattern.items()]
        cells.append((prism_label(1, a), entries))
    return _build_with_fallback(named, cells, palette)


def _finish(named: NamedGraph, colors: list[int], k: int, anchors, palette) -> Construction:
    g = named.graph
    for v in range(g.n):
        if colors[v] and any(colors[u] == colors[v] for u in g.adjacency[v]):
            raise ConstructionError(f"fixed segments are improper at {named.names[v]}")
    filled, backtracks = fill_gaps(g, colors, k)
    c = Coloring(tuple(filled), k)
    verify_construction(g, c, k, anchors)
    return Construction(named, c, tuple(anchors), palette, backtracks)


# C(T) and prisms with four colours ------------------------------------------------


def color_C_of_T4(t: CubicTree) -> Construction:
    """Minimal acyclic 4-colouring of C(T) with every H3 copy coloured as the fixed gadget."""
    named = gen_C_of_T(t)
    colors = [0] * named.graph.n
    for v, label in enumerate(named.names):
        base, _, leaf = label.partition("#")
        if leaf:
            colors[v] = H3_COLORS.get(base, 0)
    filled, backtracks = fill_gaps(named.graph, colors, 4)
    c = Coloring(tuple(filled), 4)
    verify_construction(named.graph, c, 4)
    return Construction(named, c, (), None, backtracks)


def prism_seed(n: int) -> Coloring:
    """A periodic proper 4-colouring of G(n,1) used to steer the exact search."""
    outer = [1 + (i % 2) for i in range(n)]
    inner = [3 + (i % 2) for i in range(n)]
    if n % 2:
        outer[-1], inner[-1] = 3, 1
    return Coloring(tuple(outer + inner), 4)


def prism_ab4(n: int, budget: SearchBudget = UNLIMITED) -> Construction:
    """Acyclic minimal 4-colouring of the prism G(n,1), ``n >= 4``."""
    if n < 4:
        raise ConstructionError(
            f"G({n},1) is below n >= 4" + (": G(3,1) is K2 x K3, whose value is 3" if n == 3 else "")
        )
    named = gen_petersen(n, 1)
    c = find_ab_coloring(named.graph, 4, budget, hint=prism_seed(n))
    if c is None:
        raise ConstructionError(f"no acyclic minimal 4-colouring of G({n},1) found")
    verify_construction(named.graph, c, 4)
    return Construction(named, c, ())


__all__ = [
    "Construction",
    "ConstructionError",
    "SegmentPalette",
    "color_0j_prism5",
    "color_C_of_T4",
    "color_gp5",
    "fill_gaps",
    "gp_pattern",
    "gp_palette",
    "prism_ab4",
    "prism_pattern",
    "prism_palette",
    "verify_construction",
    "ColoringError",
    "FamilyError",
]
