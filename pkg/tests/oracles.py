"""Independent oracles used to freeze expected values.

Everything here is deliberately written from first principles, separate
from the library code paths it checks.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


@lru_cache(maxsize=None)
def catalan(k: int) -> int:
    """Catalan numbers by the convolution recurrence."""
    if k == 0:
        return 1
    return sum(catalan(j) * catalan(k - 1 - j) for j in range(k))


def mobius_core_arcs_disjoint(n: int, pair1: tuple[int, int], pair2: tuple[int, int]) -> bool:
    """Alternation oracle for one-sided arcs of the Moebius crown.

    Both arcs cross the core curve once, so their strand endpoints on the
    crosscap circle interleave; the arcs are disjoint exactly when the four
    boundary endpoints can likewise be placed in alternating cyclic order.
    Endpoints at a shared boundary vertex may be micro-ordered freely.
    """
    points = [(pair1[0], 0), (pair1[1], 0), (pair2[0], 1), (pair2[1], 1)]
    by_vertex: dict[int, list[int]] = {}
    for idx, (v, _) in enumerate(points):
        by_vertex.setdefault(v, []).append(idx)

    groups = sorted(by_vertex.items())
    orders = [list(itertools.permutations(members)) for _, members in groups]
    for choice in itertools.product(*orders):
        seq: list[int] = []
        for perm in choice:
            seq.extend(points[idx][1] for idx in perm)
        if all(seq[i] != seq[(i + 1) % 4] for i in range(4)):
            return True
    return False


def euler_by_inclusion_exclusion(facets) -> int:
    """chi via inclusion-exclusion over the maximal faces (chi of a
    nonempty simplex is 1)."""
    facets = [set(f) for f in facets]
    total = 0
    for r in range(1, len(facets) + 1):
        for combo in itertools.combinations(facets, r):
            inter = set.intersection(*combo)
            if inter:
                total += (-1) ** (r + 1)
    return total


def brute_force_faces(facets) -> set[frozenset]:
    """All nonempty faces spanned by the maximal faces."""
    out: set[frozenset] = set()
    for f in facets:
        f = sorted(f)
        for r in range(1, len(f) + 1):
            out.update(map(frozenset, itertools.combinations(f, r)))
    return out


def naive_max_cliques(vertices, edges) -> set[frozenset]:
    """Maximal cliques by brute-force subset filtering (tiny graphs only)."""
    vertices = sorted(vertices)
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    cliques: set[frozenset] = set()
    for r in range(1, len(vertices) + 1):
        for combo in itertools.combinations(vertices, r):
            if all(v in adj[u] for u, v in itertools.combinations(combo, 2)):
                cliques.add(frozenset(combo))
    return {c for c in cliques if not any(c < d for d in cliques)}


def floyd_warshall_diameter(n_vertices: int, edges) -> int:
    """All-pairs shortest paths by Floyd-Warshall; -1 if disconnected."""
    INF = float("inf")
    dist = [[0 if i == j else INF for j in range(n_vertices)] for i in range(n_vertices)]
    for u, v in edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n_vertices):
        dk = dist[k]
        for i in range(n_vertices):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n_vertices):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    best = max(max(row) for row in dist) if n_vertices else 0
    return -1 if best == INF else int(best)
