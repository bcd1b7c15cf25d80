"""Independent brute-force reference implementations used only by the tests.

Everything here goes through networkx (forest tests, isomorphism) and plain
enumeration, never through the package's own search or incremental checks.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx


def to_nx(g) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def proper(G: nx.Graph, colors) -> bool:
    return all(colors[u] != colors[v] for u, v in G.edges())


def acyclic(G: nx.Graph, colors) -> bool:
    if not proper(G, colors):
        return False
    for a, b in combinations(sorted(set(colors)), 2):
        if not nx.is_forest(G.subgraph([v for v in G if colors[v] in (a, b)])):
            return False
    return True


def recoloring_exists(G: nx.Graph, colors, i: int) -> bool:
    """Try every assignment of a colour absent from N[v] to each v of class i."""
    cls = [v for v in G if colors[v] == i]
    palette = set(colors) - {i}
    options = []
    for v in cls:
        seen = {colors[u] for u in G[v]} | {i}
        options.append(sorted(palette - seen))
    if any(not opt for opt in options):
        return False
    for choice in product(*options):
        new = list(colors)
        for v, a in zip(cls, choice):
            new[v] = a
        if acyclic(G, new):
            return True
    return False


def minimal(G: nx.Graph, colors) -> bool:
    return not any(recoloring_exists(G, colors, i) for i in set(colors))


def set_partitions(n: int):
    """All colourings 1..k in restricted-growth form (one per partition of the vertex set)."""
    colors = [0] * n

    def rec(pos, top):
        if pos == n:
            yield list(colors)
            return
        for a in range(1, top + 2):
            colors[pos] = a
            yield from rec(pos + 1, max(top, a))

    yield from rec(0, 0)


def naive_A(G: nx.Graph) -> int:
    return min(max(c) for c in set_partitions(G.number_of_nodes()) if acyclic(G, c))


def naive_Ab(G: nx.Graph) -> int:
    best = 0
    for c in set_partitions(G.number_of_nodes()):
        if max(c) > best and acyclic(G, c) and minimal(G, c):
            best = max(c)
    return best


def naive_phi(G: nx.Graph) -> int:
    best = 0
    for c in set_partitions(G.number_of_nodes()):
        k = max(c)
        if k <= best or not proper(G, c):
            continue
        covered = {c[v] for v in G if len({c[u] for u in G[v]}) == k - 1}
        if len(covered) == k:
            best = k
    return best


def cycle_rank(G: nx.Graph, colors, a: int, b: int) -> int:
    H = G.subgraph([v for v in G if colors[v] in (a, b)])
    return H.number_of_edges() - H.number_of_nodes() + nx.number_connected_components(H)
