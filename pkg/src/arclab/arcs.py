"""Combinatorial arc classes on four families of marked surfaces.

Surfaces (boundary vertices are labeled 1..n in clockwise order):

* polygon   -- convex polygon with n boundary vertices; arcs are diagonals.
* crown     -- disk with n boundary vertices and one interior marked point 0;
               c-arcs join 0 to a boundary vertex, b-arcs cut off a polygon
               not containing 0.
* mobius    -- Moebius strip with n boundary vertices ("non-orientable
               crown"); c-arcs cross the core curve (there is exactly one
               homotopy class between any two boundary vertices, loops L_i
               included), b-arcs cut off an orientable polygon.
* strip     -- integral strip P(m, n): a quadrilateral with m bottom (blue)
               x-vertices and n top (red) y-vertices, numbered left to
               right; arcs join a blue vertex to a red vertex.  The two
               corner arcs (1,1) and (m,n) are homotopic to boundary edges
               and are excluded.

Every homotopy class of nontrivial arcs is encoded by one `Arc` value, and
`disjoint` decides whether two classes admit representatives that meet at
most in shared endpoints.  A b-arc is stored as the ordered pair (p, q): its
polygon side is the clockwise boundary interval from p to q, with wrap
length W = ((q - p - 1) mod n) + 1 in {2..n}; W = n (q = p) is the loop M_p.
In the universal cover of the annular neighbourhood of the boundary the
polygon side lifts to the integer interval [p, p + W], and two b-arcs are
disjoint exactly when no pair of lifted translates strictly interleaves.
Moebius c-arcs {i,j} and {k,l} are disjoint exactly when both pairs can be
split into alternating strands around the boundary circle, which the integer
order test in `_mobc_disjoint` captures.
"""

from __future__ import annotations

from dataclasses import dataclass, field

POLYGON = "polygon"
CROWN = "crown"
MOBIUS = "mobius"
STRIP = "strip"

_FAMILIES = (POLYGON, CROWN, MOBIUS, STRIP)


@dataclass(frozen=True, order=True)
class SurfaceSpec:
    """One of the four marked surfaces."""

    family: str
    n: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown surface family {self.family!r}")
        if self.n < 1:
            raise ValueError("vertex count n must be a positive integer")
        if self.family == STRIP:
            if self.m is None or self.m < 1:
                raise ValueError("integral strip needs a positive x-vertex count m")
        elif self.m is not None:
            raise ValueError(f"{self.family} takes a single vertex count")

    def describe(self) -> str:
        if self.family == STRIP:
            return f"strip({self.m},{self.n})"
        return f"{self.family}({self.n})"


def polygon(n: int) -> SurfaceSpec:
    return SurfaceSpec(POLYGON, n)


def crown(n: int) -> SurfaceSpec:
    return SurfaceSpec(CROWN, n)


def mobius_crown(n: int) -> SurfaceSpec:
    return SurfaceSpec(MOBIUS, n)


def integral_strip(m: int, n: int) -> SurfaceSpec:
    return SurfaceSpec(STRIP, n, m)


# Arc kinds.
DIAG = "diag"  # polygon diagonal
C_ARC = "c"  # crown c-arc, 0 to vertex i
B_ARC = "b"  # crown / mobius b-arc (p, q); q == p encodes the loop M_p
CC_ARC = "cc"  # mobius c-arc (i, j) with i <= j; i == j encodes the loop L_i
STRIP_ARC = "strip"  # blue-i to red-j chord of the integral strip


@dataclass(frozen=True, order=True)
class Arc:
    """One homotopy class of nontrivial arcs, tagged by kind."""

    kind: str
    a: int
    b: int

    def label(self) -> str:
        """Stable text label: c:i, M:p, b:p-q, L:i, cc:i-j, strip:i-j, d:i-j."""
        if self.kind == C_ARC:
            return f"c:{self.a}"
        if self.kind == B_ARC:
            if self.a == self.b:
                return f"M:{self.a}"
            return f"b:{self.a}-{self.b}"
        if self.kind == CC_ARC:
            if self.a == self.b:
                return f"L:{self.a}"
            return f"cc:{self.a}-{self.b}"
        if self.kind == STRIP_ARC:
            return f"strip:{self.a}-{self.b}"
        return f"d:{self.a}-{self.b}"


def diag(i: int, j: int) -> Arc:
    return Arc(DIAG, min(i, j), max(i, j))


def c_arc(i: int) -> Arc:
    return Arc(C_ARC, i, i)


def b_arc(p: int, q: int) -> Arc:
    return Arc(B_ARC, p, q)


def loop_b(p: int) -> Arc:
    """The maximal b-arc M_p (both endpoints at p)."""
    return Arc(B_ARC, p, p)


def cc_arc(i: int, j: int) -> Arc:
    return Arc(CC_ARC, min(i, j), max(i, j))


def loop_c(i: int) -> Arc:
    """The maximal Moebius c-arc L_i (both endpoints at i)."""
    return Arc(CC_ARC, i, i)


def strip_arc(i: int, j: int) -> Arc:
    return Arc(STRIP_ARC, i, j)


def wrap_length(arc: Arc, n: int) -> int:
    """Number of boundary edges on the polygon side of a b-arc."""
    if arc.kind != B_ARC:
        raise ValueError("wrap_length is defined for b-arcs only")
    return ((arc.b - arc.a - 1) % n) + 1


def b_arc_from_wrap(p: int, w: int, n: int) -> Arc:
    """The b-arc whose polygon side starts at p and spans w boundary edges."""
    q = ((p + w - 1) % n) + 1
    return Arc(B_ARC, p, q)


def is_loop(arc: Arc) -> bool:
    return arc.kind in (B_ARC, CC_ARC) and arc.a == arc.b


def validate_arc(s: SurfaceSpec, arc: Arc) -> None:
    """Raise ValueError unless arc is a nontrivial arc class of s."""
    n = s.n
    if s.family == POLYGON:
        if arc.kind != DIAG:
            raise ValueError(f"{arc} is not a polygon arc")
        i, j = arc.a, arc.b
        gap = j - i
        if not (1 <= i < j <= n) or gap < 2 or n - gap < 2:
            raise ValueError(f"{arc} is not a diagonal of polygon({n})")
        return
    if s.family == STRIP:
        if arc.kind != STRIP_ARC:
            raise ValueError(f"{arc} is not a strip arc")
        i, j = arc.a, arc.b
        if not (1 <= i <= s.m and 1 <= j <= n):
            raise ValueError(f"{arc} out of range for {s.describe()}")
        if (i, j) == (1, 1) or (i, j) == (s.m, n):
            raise ValueError(f"{arc} is a trivial corner arc of {s.describe()}")
        return
    if arc.kind == B_ARC:
        if not (1 <= arc.a <= n and 1 <= arc.b <= n):
            raise ValueError(f"{arc} out of range for {s.describe()}")
        w = wrap_length(arc, n)
        if w < 2:
            raise ValueError(f"{arc} is a trivial boundary-parallel arc")
        if w == n and n < 2:
            raise ValueError(f"loop {arc} is trivial on {s.describe()}")
        return
    if s.family == CROWN:
        if arc.kind != C_ARC or arc.a != arc.b or not (1 <= arc.a <= n):
            raise ValueError(f"{arc} is not an arc of {s.describe()}")
        return
    if s.family == MOBIUS:
        if arc.kind != CC_ARC or not (1 <= arc.a <= arc.b <= n):
            raise ValueError(f"{arc} is not an arc of {s.describe()}")
        return
    raise ValueError(f"{arc} is not an arc of {s.describe()}")


def enumerate_arcs(s: SurfaceSpec) -> list[Arc]:
    """Every nontrivial arc class of s exactly once, in canonical order.

    Polygon: diagonals (i, j) lexicographically.  Crown: c-arcs c_1..c_n,
    then b-arcs by (p, wrap length).  Mobius: c-arcs (i, j) with i <= j
    lexicographically, then b-arcs by (p, wrap length).  Strip: (i, j)
    lexicographically, corners excluded.
    """
    n = s.n
    out: list[Arc] = []
    if s.family == POLYGON:
        for i in range(1, n + 1):
            for j in range(i + 2, n + 1):
                if n - (j - i) >= 2:
                    out.append(diag(i, j))
        return out
    if s.family == STRIP:
        for i in range(1, s.m + 1):
            for j in range(1, n + 1):
                if (i, j) != (1, 1) and (i, j) != (s.m, n):
                    out.append(strip_arc(i, j))
        return out
    if s.family == CROWN:
        out.extend(c_arc(i) for i in range(1, n + 1))
    else:
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                out.append(cc_arc(i, j))
    max_w = n if n >= 2 else 1
    for p in range(1, n + 1):
        for w in range(2, max_w + 1):
            out.append(b_arc_from_wrap(p, w, n))
    return out


def arc_ids(s: SurfaceSpec) -> dict[Arc, int]:
    """Canonical dense vertex id of every arc of s."""
    return {arc: i for i, arc in enumerate(enumerate_arcs(s))}


# --- disjointness -----------------------------------------------------------


def _chords_cross(a1: int, a2: int, b1: int, b2: int) -> bool:
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


def _barc_disjoint(n: int, x: Arc, y: Arc) -> bool:
    # Lift both polygon-side intervals to the universal cover and test every
    # overlapping translate; |k| <= 2 covers all intervals of length <= n.
    px, wx = (x.a - 1) % n, wrap_length(x, n)
    py, wy = (y.a - 1) % n, wrap_length(y, n)
    for k in range(-2, 3):
        if _chords_cross(px, px + wx, py + k * n, py + wy + k * n):
            return False
    return True


def _strictly_inside(n: int, v: int, barc: Arc) -> bool:
    d = (v - barc.a) % n
    return 1 <= d <= wrap_length(barc, n) - 1


def _mobc_disjoint(x: Arc, y: Arc) -> bool:
    pairs = ((x.a, x.b), (y.a, y.b))
    for first, second in (pairs, pairs[::-1]):
        for a, b in (first, first[::-1]):
            for c, d in (second, second[::-1]):
                if b <= d <= a <= c:
                    return True
    return False


def disjoint(s: SurfaceSpec, x: Arc, y: Arc) -> bool:
    """True iff the two distinct classes have disjoint representatives.

    Representatives may share endpoints; only interior crossings count.
    """
    if x == y:
        raise ValueError("disjointness is defined on distinct arc classes only")
    validate_arc(s, x)
    validate_arc(s, y)
    if s.family == POLYGON:
        return not _chords_cross(x.a, x.b, y.a, y.b)
    if s.family == STRIP:
        return (x.a <= y.a and x.b <= y.b) or (x.a >= y.a and x.b >= y.b)
    n = s.n
    if x.kind == B_ARC and y.kind == B_ARC:
        return _barc_disjoint(n, x, y)
    if x.kind != B_ARC and y.kind != B_ARC:
        if x.kind == C_ARC:
            return True  # crown c-arcs meet only at 0
        return _mobc_disjoint(x, y)
    c, barc = (x, y) if y.kind == B_ARC else (y, x)
    if c.kind == C_ARC:
        return not _strictly_inside(n, c.a, barc)
    return not (
        _strictly_inside(n, c.a, barc) or _strictly_inside(n, c.b, barc)
    )


# --- symmetries (used by the equivariance gates) ----------------------------


def rotated(s: SurfaceSpec, arc: Arc, shift: int = 1) -> Arc:
    """Shift all boundary labels by `shift` (mod n); not defined for strips."""
    if s.family == STRIP:
        raise ValueError("integral strips have no rotational symmetry")
    n = s.n

    def r(v: int) -> int:
        return (v + shift - 1) % n + 1

    if arc.kind == DIAG:
        return diag(r(arc.a), r(arc.b))
    if arc.kind == C_ARC:
        return c_arc(r(arc.a))
    if arc.kind == CC_ARC:
        return cc_arc(r(arc.a), r(arc.b))
    return b_arc(r(arc.a), r(arc.b))


def reflected(s: SurfaceSpec, arc: Arc) -> Arc:
    """Relabel v -> n+1-v (and i -> m+1-i on the blue row of a strip)."""
    n = s.n

    def r(v: int) -> int:
        return n + 1 - v

    if s.family == STRIP:
        return strip_arc(s.m + 1 - arc.a, r(arc.b))
    if arc.kind == DIAG:
        return diag(r(arc.a), r(arc.b))
    if arc.kind == C_ARC:
        return c_arc(r(arc.a))
    if arc.kind == CC_ARC:
        return cc_arc(r(arc.a), r(arc.b))
    # reflection reverses the boundary orientation, so the polygon side of
    # (p, q) becomes the clockwise interval from the image of q to the image
    # of p
    return b_arc(r(arc.b), r(arc.a))


# --- fans (mobius) ----------------------------------------------------------


def fan(s: SurfaceSpec, i: int, j: int, k: int) -> list[Arc]:
    """The simplex of c-arcs {(i,j), (i,j+1), ..., (i,k)} of a Moebius crown.

    The second index runs cyclically from j to k.  With i == j == k the fan
    wraps all the way around: all n c-arcs based at i (a fan triangulation,
    which is a maximal face).
    """
    if s.family != MOBIUS:
        raise ValueError("fans are defined on the non-orientable crown")
    n = s.n
    for v in (i, j, k):
        if not (1 <= v <= n):
            raise ValueError(f"fan index {v} out of range 1..{n}")
    if i == j == k:
        seconds = [(i - 1 + t) % n + 1 for t in range(n)]
    elif j <= k:
        seconds = list(range(j, k + 1))
    else:
        seconds = list(range(j, n + 1)) + list(range(1, k + 1))
    return [cc_arc(i, x) for x in seconds]


# --- tiles and botany -------------------------------------------------------


@dataclass(frozen=True)
class Tile:
    """One complementary region of a boundary simplex."""

    kind: str  # "polygon", "crown" or "mobius"
    size: int  # number of boundary vertices of the tile
    arc: Arc | None  # bounding b-arc; None for the trunk


@dataclass(frozen=True)
class TileTree:
    """Botany of a boundary simplex: trunk, tiles, branches, roots."""

    tiles: tuple[Tile, ...]  # tiles[0] is the trunk
    branches: tuple[Arc, ...]  # outermost b-arcs, bounding the trunk
    roots: tuple[int, ...]  # boundary edges (p, p+1) on the trunk, by p
    degree: int  # branches + roots
    edges: tuple[tuple[int, int], ...] = field(default=())  # dual-tree edges
    node_labels: tuple[str, ...] = field(default=())


def _b_part(s: SurfaceSpec, arcs) -> list[Arc]:
    barcs = []
    for a in arcs:
        validate_arc(s, a)
        if a.kind == B_ARC:
            barcs.append(a)
    return sorted(barcs)


def _check_pairwise_disjoint(s: SurfaceSpec, arcs: list[Arc]) -> None:
    for idx, x in enumerate(arcs):
        for y in arcs[idx + 1 :]:
            if x == y:
                raise ValueError(f"repeated arc {x.label()}")
            if not disjoint(s, x, y):
                raise ValueError(
                    f"{x.label()} and {y.label()} intersect; not a face"
                )


def _nested_in(n: int, inner: Arc, outer: Arc) -> bool:
    """Whether inner's polygon side sits inside outer's (for disjoint arcs)."""
    pi, wi = (inner.a - 1) % n, wrap_length(inner, n)
    po, wo = (outer.a - 1) % n, wrap_length(outer, n)
    if (pi, wi) == (po, wo):
        return False
    for k in (-1, 0, 1):
        if po <= pi + k * n and pi + wi + k * n <= po + wo:
            return True
    return False


def tile_tree(s: SurfaceSpec, arcs) -> TileTree:
    """Decompose the surface along the b-arcs of a face of its arc complex.

    c-arcs of the face are ignored: they live in the trunk and do not affect
    branches, roots or degree.
    """
    if s.family not in (CROWN, MOBIUS):
        raise ValueError("tile trees are defined for crowns")
    n = s.n
    barcs = _b_part(s, list(arcs))
    _check_pairwise_disjoint(s, sorted(set(arcs)))
    parent: dict[Arc, Arc | None] = {}
    for x in barcs:
        enclosing = [y for y in barcs if y != x and _nested_in(n, x, y)]
        parent[x] = (
            min(enclosing, key=lambda y: wrap_length(y, n)) if enclosing else None
        )
    children: dict[Arc | None, list[Arc]] = {a: [] for a in barcs}
    children[None] = []
    for x, p in parent.items():
        children[p].append(x)
    outermost = sorted(children[None])

    covered: set[int] = set()
    for x in outermost:
        p, w = (x.a - 1) % n, wrap_length(x, n)
        covered.update((p + t) % n for t in range(w))
    roots = tuple(e + 1 for e in range(n) if e not in covered)

    trunk_kind = CROWN if s.family == CROWN else MOBIUS
    degree = len(outermost) + len(roots)
    trunk = Tile(trunk_kind, degree if barcs or roots else n, None)

    tiles: list[Tile] = [trunk]
    index_of: dict[Arc | None, int] = {None: 0}
    for x in barcs:
        p, w = (x.a - 1) % n, wrap_length(x, n)
        kids = children[x]
        covered_inside = sum(wrap_length(y, n) for y in kids)
        own_edges = w - covered_inside
        tiles.append(Tile(POLYGON, 1 + len(kids) + own_edges, x))
        index_of[x] = len(tiles) - 1

    edges: list[tuple[int, int]] = []
    labels = [f"trunk:{trunk.kind}:{trunk.size}"]
    for t in tiles[1:]:
        labels.append(f"tile:polygon:{t.size}:{t.arc.label()}")
    for x in barcs:
        edges.append((index_of[parent[x]], index_of[x]))
    for p in roots:
        labels.append(f"root:{p}")
        edges.append((0, len(labels) - 1))
    return TileTree(
        tiles=tuple(tiles),
        branches=tuple(outermost),
        roots=roots,
        degree=degree,
        edges=tuple(edges),
        node_labels=tuple(labels),
    )


def degree(s: SurfaceSpec, arcs) -> int:
    """Degree of a face: branches plus roots of its b-arc part."""
    return tile_tree(s, arcs).degree


def is_sapling(s: SurfaceSpec, arcs) -> bool:
    """Whether a boundary simplex has no nesting among its b-arcs."""
    arcs = sorted(set(arcs))
    if any(a.kind != B_ARC for a in arcs):
        raise ValueError("saplings are boundary simplices (b-arcs only)")
    if not arcs:
        raise ValueError("the empty face is not a sapling")
    tree = tile_tree(s, arcs)
    return len(tree.branches) == len(arcs)


def saplings_of_degree(s: SurfaceSpec, deg: int) -> list[tuple[Arc, ...]]:
    """All saplings of the given degree, as sorted tuples of b-arcs.

    A set of pairwise disjoint, pairwise non-nested b-arcs covering a total
    of c boundary edges with b branches has degree b + (n - c); since the
    polygon sides of non-nested disjoint arcs have disjoint interiors, the
    degree equals n + sum over arcs of (1 - wrap).
    """
    n = s.n
    barcs = [a for a in enumerate_arcs(s) if a.kind == B_ARC]
    target = n - deg  # required sum of (wrap - 1)
    if target < 0:
        return []
    out: list[tuple[Arc, ...]] = []

    def extend(start: int, chosen: list[Arc], remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(chosen))
            return
        for idx in range(start, len(barcs)):
            cand = barcs[idx]
            w = wrap_length(cand, n)
            if w - 1 > remaining:
                continue
            if all(
                disjoint(s, cand, prev)
                and not _nested_in(n, cand, prev)
                and not _nested_in(n, prev, cand)
                for prev in chosen
            ):
                chosen.append(cand)
                extend(idx + 1, chosen, remaining - (w - 1))
                chosen.pop()

    extend(0, [], target)
    return out
