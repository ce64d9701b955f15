"""Pseudomanifold checks, shellability search, ball/sphere certificates.

Verdicts are certificate-based and never claimed from homeomorphism
testing.  A shellable closed pseudomanifold is a sphere and a shellable
pseudomanifold with nonempty boundary is a ball (rule "danaraj-klee"); a
collapsible combinatorial manifold with boundary is a ball (rule
"whitehead", with the manifold evidence supplied by recursive vertex-link
certification).  When budgets exhaust, the verdict is "undetermined".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .collapse import (
    DEFAULT_BUDGET,
    INCONCLUSIVE,
    PROVEN,
    DISPROVEN,
    is_collapsible,
)
from .simplicial import (
    Complex,
    Face,
    Graph,
    dimension,
    dual_graph,
    euler_characteristic,
    is_pure,
    link,
)

RULE_DANARAJ_KLEE = "danaraj-klee"
RULE_WHITEHEAD = "whitehead"

PM_CLOSED = "closed"
PM_BOUNDARY = "with-boundary"
PM_NO = "no"


@dataclass(frozen=True)
class PseudomanifoldReport:
    status: str  # closed | with-boundary | no
    strongly_connected: bool
    boundary: tuple[Face, ...]  # codimension-one faces in exactly one facet


@dataclass(frozen=True)
class ShellingResult:
    status: str  # proven | disproven | inconclusive
    order: tuple[Face, ...] | None = None


@dataclass(frozen=True)
class Certificate:
    pseudomanifold: str
    strongly_connected: bool
    shelling: tuple[Face, ...] | None
    verdict: str  # sphere | ball | undetermined
    dim: int | None
    rule: str | None
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "pseudomanifold": self.pseudomanifold,
            "strongly_connected": self.strongly_connected,
            "shelling": None
            if self.shelling is None
            else [sorted(f) for f in self.shelling],
            "verdict": {"kind": self.verdict, "dim": self.dim},
            "rule": self.rule,
            "notes": list(self.notes),
        }


def _ridge_table(c: Complex) -> dict[Face, list[int]]:
    table: dict[Face, list[int]] = {}
    for idx, facet in enumerate(c.facets):
        if not facet:
            table.setdefault(frozenset(), []).append(idx)
        for v in facet:
            table.setdefault(facet - {v}, []).append(idx)
    return table


def is_connected(g: Graph) -> bool:
    if not g.vertices:
        return True
    adj = g.adjacency()
    seen = {g.vertices[0]}
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.vertices)


def graph_diameter(g: Graph) -> int:
    """Largest BFS eccentricity; -1 for a disconnected graph."""
    if not g.vertices:
        return 0
    adj = g.adjacency()
    best = 0
    for start in g.vertices:
        dist = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) != len(g.vertices):
            return -1
        best = max(best, max(dist.values()))
    return best


def pseudomanifold_check(c: Complex) -> PseudomanifoldReport:
    """Classify a pure complex as closed / with-boundary / not a pseudomanifold."""
    if not is_pure(c):
        raise ValueError("pseudomanifold check requires a pure complex")
    table = _ridge_table(c)
    boundary = tuple(
        sorted(
            (r for r, members in table.items() if len(members) == 1),
            key=lambda f: tuple(sorted(f)),
        )
    )
    overfull = any(len(members) > 2 for members in table.values())
    connected = is_connected(dual_graph(c))
    if overfull or not connected:
        status = PM_NO
    elif boundary:
        status = PM_BOUNDARY
    else:
        status = PM_CLOSED
    return PseudomanifoldReport(status, connected, boundary)


def flip_graph(c: Complex) -> Graph:
    """Dual graph of a pure complex; vertices are facets, edges are flips."""
    return dual_graph(c)


# --- shellability -------------------------------------------------------------


def validate_shelling(c: Complex, order: Iterable[Face]) -> bool:
    """Independent step-by-step check of the shelling condition.

    For each k >= 2 the intersection of facet k with the union of the first
    k-1 facets must be a pure nonempty complex of codimension one (for
    one-point facets the empty intersection is allowed).
    """
    order = [frozenset(f) for f in order]
    if sorted(order, key=lambda f: tuple(sorted(f))) != list(c.facets):
        return False
    d = dimension(c)
    earlier: list[Face] = []
    for k, facet in enumerate(order):
        if k:
            pieces = {facet & g for g in earlier}
            pieces.discard(frozenset())
            maximal = [
                p for p in pieces if not any(p < q for q in pieces)
            ]
            if d >= 1 and not maximal:
                return False
            if any(len(p) != d for p in maximal):
                return False
        earlier.append(facet)
    return True


def shelling_search(c: Complex, budget: int = DEFAULT_BUDGET) -> ShellingResult:
    """Backtracking over facet orders with incremental feasibility pruning."""
    if not is_pure(c):
        raise ValueError("shelling search requires a pure complex")
    facets = list(c.facets)
    t = len(facets)
    if t == 1:
        return ShellingResult(PROVEN, tuple(facets))
    d = dimension(c)
    if d <= 0:
        # any order of points shells by convention
        return ShellingResult(PROVEN, tuple(facets))

    index = {v: i for i, v in enumerate(c.vertex_ids)}
    masks = [0] * t
    for i, f in enumerate(facets):
        for v in f:
            masks[i] |= 1 << index[v]
    size = d + 1

    def popcount(x: int) -> int:
        return bin(x).count("1")

    neighbors: list[list[int]] = [[] for _ in range(t)]
    for i in range(t):
        for j in range(i + 1, t):
            if popcount(masks[i] & masks[j]) == d:
                neighbors[i].append(j)
                neighbors[j].append(i)

    nodes = 0

    def addable(i: int, used: list[int]) -> bool:
        ridges = [masks[i] & masks[j] for j in used if popcount(masks[i] & masks[j]) == d]
        if not ridges:
            return False
        for j in used:
            x = masks[i] & masks[j]
            if x and not any(x & ~r == 0 for r in ridges):
                return False
        return True

    def extend(used: list[int], used_set: set[int], frontier: set[int]) -> list[int] | None:
        nonlocal nodes
        if len(used) == t:
            return used
        nodes += 1
        if nodes >= budget:
            raise _Budget
        candidates = sorted(i for i in frontier if addable(i, used))
        for i in candidates:
            new_frontier = (frontier | set(neighbors[i])) - used_set - {i}
            used.append(i)
            used_set.add(i)
            result = extend(used, used_set, new_frontier)
            if result is not None:
                return result
            used.pop()
            used_set.discard(i)
        return None

    class _Budget(Exception):
        pass

    for start in range(t):
        try:
            found = extend([start], {start}, set(neighbors[start]))
        except _Budget:
            return ShellingResult(INCONCLUSIVE)
        except RecursionError:
            return ShellingResult(INCONCLUSIVE)
        if found is not None:
            order = tuple(facets[i] for i in found)
            if not validate_shelling(c, order):
                raise AssertionError("search produced an invalid shelling")
            return ShellingResult(PROVEN, order)
    return ShellingResult(DISPROVEN)


# --- certificates --------------------------------------------------------------


def _chi_consistent(verdict: str, d: int, chi: int) -> bool:
    if verdict == "sphere":
        return chi == 1 + (-1) ** d
    if verdict == "ball":
        return chi == 1
    return True


def certify(
    c: Complex,
    effort: str = "full",
    rules: tuple[str, ...] = (RULE_DANARAJ_KLEE, RULE_WHITEHEAD),
    _depth: int = 0,
) -> Certificate:
    """Assemble a ball/sphere certificate for a pure complex.

    effort picks the search budgets ("fast" or "full").  The verdict cites
    the inference rule used; "undetermined" is an honest outcome.
    """
    if not is_pure(c):
        raise ValueError("certification requires a pure complex")
    budgets = {"fast": (20_000, 5_000), "full": (DEFAULT_BUDGET, 200_000)}
    if effort not in budgets:
        raise ValueError("effort must be 'fast' or 'full'")
    shell_budget, collapse_budget = budgets[effort]

    d = dimension(c)
    pm = pseudomanifold_check(c)
    notes: list[str] = []

    if c.n_vertices == 0:
        return Certificate(
            pm.status, pm.strongly_connected, None, "undetermined", None, None,
            ("empty complex",),
        )
    if d == 0:
        if c.n_vertices == 1:
            return Certificate(pm.status, pm.strongly_connected, tuple(c.facets), "ball", 0, RULE_DANARAJ_KLEE)
        if c.n_vertices == 2:
            return Certificate(pm.status, pm.strongly_connected, tuple(c.facets), "sphere", 0, RULE_DANARAJ_KLEE)
        return Certificate(pm.status, pm.strongly_connected, None, "undetermined", None, None)

    shelling: tuple[Face, ...] | None = None
    if RULE_DANARAJ_KLEE in rules and pm.status in (PM_CLOSED, PM_BOUNDARY):
        result = shelling_search(c, shell_budget)
        if result.status == PROVEN:
            shelling = result.order
            verdict = "sphere" if pm.status == PM_CLOSED else "ball"
            if not _chi_consistent(verdict, d, euler_characteristic(c)):
                raise AssertionError("certificate contradicts Euler characteristic")
            return Certificate(
                pm.status, pm.strongly_connected, shelling, verdict, d, RULE_DANARAJ_KLEE
            )
        notes.append(f"shelling search: {result.status}")

    if RULE_WHITEHEAD in rules and pm.status == PM_BOUNDARY and _depth <= 4:
        coll = is_collapsible(c, collapse_budget)
        if coll.status == PROVEN:
            links_ok = True
            saw_ball = False
            for v in c.vertex_ids:
                # manifold evidence may use any rule, whatever the top level
                sub = certify(link(c, [v]), effort, _depth=_depth + 1)
                if sub.verdict == "ball" and sub.dim == d - 1:
                    saw_ball = True
                elif not (sub.verdict == "sphere" and sub.dim == d - 1):
                    links_ok = False
                    break
            if links_ok and saw_ball:
                if not _chi_consistent("ball", d, euler_characteristic(c)):
                    raise AssertionError("certificate contradicts Euler characteristic")
                notes.append("collapsible combinatorial manifold with boundary")
                return Certificate(
                    pm.status,
                    pm.strongly_connected,
                    shelling,
                    "ball",
                    d,
                    RULE_WHITEHEAD,
                    tuple(notes),
                )
        else:
            notes.append(f"collapsibility search: {coll.status}")

    return Certificate(
        pm.status, pm.strongly_connected, shelling, "undetermined", None, None, tuple(notes)
    )
