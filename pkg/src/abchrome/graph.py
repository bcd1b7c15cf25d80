"""Simple undirected graphs on dense vertex ids, structural queries and graph6."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when a vertex/edge description does not form a simple graph."""


class Graph6Error(ValueError):
    """Raised on malformed graph6 input. ``kind`` names the failure."""

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``adjacency[v]`` is the strictly increasing tuple of neighbours of ``v``.
    Instances are immutable; build them with :func:`make_graph`.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length differs from n")
        for v, nbrs in enumerate(self.adjacency):
            for a, b in zip(nbrs, nbrs[1:]):
                if a >= b:
                    raise GraphError(f"adjacency of {v} is not strictly increasing")
            for u in nbrs:
                if u == v:
                    raise GraphError(f"loop at {v}")
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max(len(nbrs) for nbrs in self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


@dataclass(frozen=True)
class CycleWitness:
    """A cycle given as a cyclic sequence of distinct vertices."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a :class:`Graph`, rejecting loops, duplicates and bad endpoints."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint-out-of-range: ({u}, {v}) with n={n}")
        if u == v:
            raise GraphError(f"loop-edge: ({u}, {v})")
        if v in nbrs[u]:
            raise GraphError(f"duplicate-edge: ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def is_cubic(g: Graph) -> bool:
    return all(len(nbrs) == 3 for nbrs in g.adjacency)


def is_connected(g: Graph) -> bool:
    return len(_component(g, 0, range(g.n))) == g.n


def _component(g: Graph, start: int, allowed) -> set[int]:
    allowed = set(allowed)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w in allowed and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` when ``g`` is a forest.

    BFS from every vertex; the first non-tree edge met from root ``r`` closes a
    cycle of length ``d(u) + d(w) + 1`` and the minimum over all roots is exact.
    """
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.adjacency[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def find_induced_cycle(g: Graph, keep: Iterable[int]) -> CycleWitness | None:
    """Return a cycle of ``g[keep]``, or ``None`` if the induced subgraph is a forest."""
    keep = set(keep)
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in sorted(keep):
        if root in depth:
            continue
        depth[root] = 0
        parent[root] = -1
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w not in keep or w == parent[u]:
                    continue
                if w in depth:
                    return _close_cycle(u, w, parent, depth)
                depth[w] = depth[u] + 1
                parent[w] = u
                stack.append(w)
    return None


def _close_cycle(u: int, w: int, parent: dict[int, int], depth: dict[int, int]) -> CycleWitness:
    # u and w lie in one search tree; join them through their lowest common ancestor
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return CycleWitness(tuple(left + right[::-1]))


def induced_subgraph_is_forest(g: Graph, keep: Iterable[int]) -> bool:
    return find_induced_cycle(g, keep) is None


# graph6 -----------------------------------------------------------------------

MAX_GRAPH6_N = 62


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_N:
        raise Graph6Error("unsupported-size", f"n={g.n} exceeds {MAX_GRAPH6_N}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for pos in range(0, len(bits), 6):
        value = 0
        for bit in bits[pos:pos + 6]:
            value = (value << 1) | bit
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str, strict: bool = True) -> Graph:
    """Decode one graph6 line (optionally with the ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("truncated-payload", "empty input")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error("bad-character", f"{ch!r} is outside the printable graph6 range")
    if s[0] == "~":
        raise Graph6Error("unsupported-size", "multi-byte size prefix (n > 62) is not supported")
    n = ord(s[0]) - 63
    if n < 1:
        raise Graph6Error("unsupported-size", "graphs need at least one vertex")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    payload = s[1:]
    if len(payload) < nbytes:
        raise Graph6Error("truncated-payload", f"expected {nbytes} data bytes, got {len(payload)}")
    if len(payload) > nbytes:
        raise Graph6Error("trailing-data", f"expected {nbytes} data bytes, got {len(payload)}")
    bits = []
    for ch in payload:
        value = ord(ch) - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if strict and any(bits[nbits:]):
        raise Graph6Error("nonzero-padding", "padding bits must be zero")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return make_graph(n, edges)
