"""Finite simplicial complexes stored by their maximal faces.

A `Complex` is an immutable snapshot: a vertex table (dense integer ids with
text labels) plus the antichain of maximal faces.  All other face queries
enumerate on demand; at desk scale this is affordable and keeps one source
of truth.  The complex with no vertices is represented by the single maximal
face {} so that joins and links behave uniformly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .arcs import SurfaceSpec, integral_strip

Face = frozenset[int]

EMPTY_FACE: Face = frozenset()


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on integer vertex ids."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # each sorted, no loops, no repeats

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def make_graph(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> Graph:
    vs = tuple(sorted(set(vertices)))
    vset = set(vs)
    es = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge at {u}")
        if u not in vset or v not in vset:
            raise ValueError(f"edge ({u},{v}) uses an undeclared vertex")
        es.add((min(u, v), max(u, v)))
    return Graph(vs, tuple(sorted(es)))


@dataclass(frozen=True, eq=False)
class Complex:
    """Simplicial complex as canonical vertex ids plus maximal faces."""

    vertex_labels: tuple[tuple[int, str], ...]  # sorted by id
    facets: tuple[Face, ...]  # canonical order; (frozenset(),) if no faces
    surface: SurfaceSpec | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return (
            self.vertex_labels == other.vertex_labels
            and set(self.facets) == set(other.facets)
        )

    def __hash__(self) -> int:  # stable enough for small caches
        return hash((self.vertex_labels, frozenset(self.facets)))

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.vertex_labels)

    @property
    def labels(self) -> dict[int, str]:
        return dict(self.vertex_labels)

    def label(self, v: int) -> str:
        return self.labels[v]

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    def __repr__(self) -> str:
        return (
            f"Complex({self.n_vertices} vertices, {len(self.facets)} facets, "
            f"dim {dimension(self)})"
        )


def _canonical_facets(faces: Iterable[Iterable[int]]) -> tuple[Face, ...]:
    sets = sorted({frozenset(f) for f in faces}, key=len, reverse=True)
    kept: list[Face] = []
    for f in sets:
        if not any(f <= g for g in kept):
            kept.append(f)
    if not kept:
        kept = [EMPTY_FACE]
    kept.sort(key=lambda f: (tuple(sorted(f))))
    return tuple(kept)


def make_complex(
    labels: Mapping[int, str] | Iterable[tuple[int, str]],
    faces: Iterable[Iterable[int]],
    surface: SurfaceSpec | None = None,
) -> Complex:
    """Build a complex, pruning non-maximal faces.

    Every declared vertex must appear in some face; isolated vertices must be
    passed as singleton faces.
    """
    label_map = dict(labels if isinstance(labels, Mapping) else dict(labels))
    facets = _canonical_facets(faces)
    used = set().union(*facets) if facets else set()
    missing = used - set(label_map)
    if missing:
        raise ValueError(f"faces use undeclared vertices {sorted(missing)}")
    uncovered = set(label_map) - used
    if uncovered:
        raise ValueError(
            f"vertices {sorted(uncovered)} appear in no maximal face; "
            "declare them as singleton faces"
        )
    return Complex(tuple(sorted(label_map.items())), facets, surface)


def point_complex(v: int, label: str) -> Complex:
    return make_complex({v: label}, [[v]])


def empty_complex() -> Complex:
    return make_complex({}, [])


def restrict(c: Complex, keep: Iterable[int]) -> Complex:
    """Induced subcomplex on a vertex subset."""
    keep = frozenset(keep)
    labels = {v: l for v, l in c.vertex_labels if v in keep}
    return make_complex(labels, [f & keep for f in c.facets], c.surface)


def facets_containing(c: Complex, face: Iterable[int]) -> list[Face]:
    face = frozenset(face)
    return [f for f in c.facets if face <= f]


def contains_face(c: Complex, face: Iterable[int]) -> bool:
    face = frozenset(face)
    return any(face <= f for f in c.facets)


def faces(c: Complex, include_empty: bool = False) -> Iterator[Face]:
    """All faces of c, enumerated from the maximal faces (deduplicated)."""
    seen: set[Face] = set()
    if include_empty:
        seen.add(EMPTY_FACE)
        yield EMPTY_FACE
    for facet in c.facets:
        elems = sorted(facet)
        for mask in range(1, 1 << len(elems)):
            f = frozenset(
                elems[i] for i in range(len(elems)) if mask >> i & 1
            )
            if f not in seen:
                seen.add(f)
                yield f


def dimension(c: Complex) -> int:
    return max(len(f) for f in c.facets) - 1


def is_pure(c: Complex) -> bool:
    sizes = {len(f) for f in c.facets}
    return len(sizes) == 1


def f_vector(c: Complex) -> list[int]:
    counts: dict[int, int] = {}
    for f in faces(c):
        counts[len(f)] = counts.get(len(f), 0) + 1
    return [counts.get(k, 0) for k in range(1, max(counts, default=0) + 1)]


def euler_characteristic(c: Complex) -> int:
    return sum((-1) ** k * fk for k, fk in enumerate(f_vector(c)))


def is_cone(c: Complex) -> int | None:
    """A vertex contained in every maximal face (lowest id), if any."""
    apexes = set(c.facets[0])
    for f in c.facets[1:]:
        apexes &= f
        if not apexes:
            return None
    return min(apexes) if apexes else None


def link(c: Complex, face: Iterable[int]) -> Complex:
    face = frozenset(face)
    stars = facets_containing(c, face)
    if not stars:
        raise ValueError(f"{sorted(face)} is not a face of the complex")
    new_facets = [f - face for f in stars]
    used = set().union(*new_facets)
    labels = {v: l for v, l in c.vertex_labels if v in used}
    return make_complex(labels, new_facets, c.surface)


def face_deletion(c: Complex, face: Iterable[int]) -> Complex:
    """All faces of c not containing the given face."""
    face = frozenset(face)
    if not face:
        raise ValueError("cannot delete the empty face")
    if not contains_face(c, face):
        raise ValueError(f"{sorted(face)} is not a face of the complex")
    new_faces: list[Face] = []
    for f in c.facets:
        if face <= f:
            new_faces.extend(f - {v} for v in face)
        else:
            new_faces.append(f)
    facets = _canonical_facets(new_faces)
    used = set().union(*facets)
    labels = {v: l for v, l in c.vertex_labels if v in used}
    return Complex(tuple(sorted(labels.items())), facets, c.surface)


def vertex_deletion(c: Complex, v: int) -> Complex:
    return face_deletion(c, [v])


def star_facets(c: Complex, v: int) -> list[Face]:
    return facets_containing(c, [v])


def join(c1: Complex, c2: Complex) -> Complex:
    """Join of two complexes on disjoint vertex id and label spaces."""
    ids1, ids2 = set(c1.vertex_ids), set(c2.vertex_ids)
    if ids1 & ids2:
        raise ValueError(f"vertex id collision {sorted(ids1 & ids2)}")
    lab1, lab2 = c1.labels, c2.labels
    shared = set(lab1.values()) & set(lab2.values())
    if shared:
        raise ValueError(f"vertex label collision {sorted(shared)}")
    labels = {**lab1, **lab2}
    facets = [f | g for f in c1.facets for g in c2.facets]
    return make_complex(labels, facets)


def join_all(parts: Iterable[Complex]) -> Complex:
    out = empty_complex()
    for p in parts:
        out = join(out, p)
    return out


def dual_graph(c: Complex) -> Graph:
    """Facet adjacency along shared codimension-one faces (pure input)."""
    if not is_pure(c):
        raise ValueError("dual graph requires a pure complex")
    ridges: dict[Face, list[int]] = {}
    for idx, f in enumerate(c.facets):
        for v in f:
            ridges.setdefault(f - {v}, []).append(idx)
        if not f:
            ridges.setdefault(EMPTY_FACE, []).append(idx)
    edges = set()
    for members in ridges.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                edges.add((members[i], members[j]))
    return make_graph(range(len(c.facets)), edges)


# --- isomorphism (desk scale) ------------------------------------------------

_ISO_GATE = 25


def _vertex_signature(c: Complex) -> dict[int, tuple]:
    sig: dict[int, list[int]] = {v: [] for v in c.vertex_ids}
    for f in c.facets:
        for v in f:
            sig[v].append(len(f))
    return {v: tuple(sorted(s)) for v, s in sig.items()}


def isomorphic(c1: Complex, c2: Complex) -> bool:
    """Exhaustive backtracking with signature pruning; gated to 25 vertices."""
    if max(c1.n_vertices, c2.n_vertices) > _ISO_GATE:
        raise ValueError(f"isomorphism check gated to {_ISO_GATE} vertices")
    if c1.n_vertices != c2.n_vertices:
        return False
    if sorted(map(len, c1.facets)) != sorted(map(len, c2.facets)):
        return False
    if f_vector(c1) != f_vector(c2):
        return False
    sig1, sig2 = _vertex_signature(c1), _vertex_signature(c2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False
    if c1.n_vertices == 0:
        return True

    facets2 = set(c2.facets)
    vs1 = sorted(
        c1.vertex_ids, key=lambda v: (sum(1 for w in sig2.values() if w == sig1[v]), v)
    )
    candidates = {
        v: [w for w in c2.vertex_ids if sig2[w] == sig1[v]] for v in vs1
    }
    incident1 = {v: [f for f in c1.facets if v in f] for v in c1.vertex_ids}

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def feasible(v: int, w: int) -> bool:
        # every fully-mapped facet through v must land on a facet of c2
        for f in incident1[v]:
            if all(u in mapping or u == v for u in f):
                image = frozenset(mapping.get(u, w) for u in f)
                if image not in facets2:
                    return False
        return True

    def assign(k: int) -> bool:
        if k == len(vs1):
            return {frozenset(mapping[u] for u in f) for f in c1.facets} == facets2
        v = vs1[k]
        for w in candidates[v]:
            if w in used:
                continue
            mapping[v] = w
            if feasible(v, w):
                used.add(w)
                if assign(k + 1):
                    return True
                used.discard(w)
            del mapping[v]
        return False

    return assign(0)


# --- JSON + DOT ---------------------------------------------------------------


def surface_to_json(s: SurfaceSpec | None) -> dict | None:
    if s is None:
        return None
    out: dict = {"family": s.family, "n": s.n}
    if s.m is not None:
        out["m"] = s.m
    return out


def surface_from_json(d: dict | None) -> SurfaceSpec | None:
    if d is None:
        return None
    if not isinstance(d, dict) or "family" not in d or "n" not in d:
        raise ValueError("surface: expected {family, n[, m]}")
    if d["family"] == "strip":
        return integral_strip(d.get("m", 1), d["n"])
    return SurfaceSpec(d["family"], d["n"])


def complex_to_json(c: Complex) -> dict:
    return {
        "surface": surface_to_json(c.surface),
        "vertices": [{"id": v, "label": l} for v, l in c.vertex_labels],
        "facets": [sorted(f) for f in c.facets],
    }


def complex_from_json(d: dict) -> Complex:
    if not isinstance(d, dict):
        raise ValueError("complex: expected a JSON object")
    for key in ("vertices", "facets"):
        if key not in d:
            raise ValueError(f"complex: missing field {key!r}")
    labels: dict[int, str] = {}
    for i, entry in enumerate(d["vertices"]):
        if (
            not isinstance(entry, dict)
            or not isinstance(entry.get("id"), int)
            or not isinstance(entry.get("label"), str)
        ):
            raise ValueError(f"vertices[{i}]: expected {{id: int, label: str}}")
        if entry["id"] in labels:
            raise ValueError(f"vertices[{i}]: duplicate id {entry['id']}")
        labels[entry["id"]] = entry["label"]
    for i, f in enumerate(d["facets"]):
        if not isinstance(f, list) or not all(isinstance(v, int) for v in f):
            raise ValueError(f"facets[{i}]: expected a list of vertex ids")
        unknown = set(f) - set(labels)
        if unknown:
            raise ValueError(f"facets[{i}]: unknown vertex ids {sorted(unknown)}")
    surface = surface_from_json(d.get("surface"))
    return make_complex(labels, d["facets"], surface)


def dumps_canonical(c: Complex) -> str:
    """Canonical JSON text; byte-identical across save/load round trips."""
    return json.dumps(complex_to_json(c), sort_keys=True, separators=(",", ":")) + "\n"


def loads_complex(text: str) -> Complex:
    return complex_from_json(json.loads(text))


def graph_to_dot(g: Graph, labels: Mapping[int, str] | None = None, name: str = "arcs") -> str:
    def fmt(v: int) -> str:
        text = labels[v] if labels else str(v)
        return '"' + text.replace('"', r"\"") + '"'

    lines = [f"graph {name} {{"]
    lines.extend(f"  {fmt(v)};" for v in g.vertices)
    lines.extend(f"  {fmt(u)} -- {fmt(v)};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- flag complexes -----------------------------------------------------------


def max_cliques(adj: Mapping[int, set[int]]) -> list[frozenset[int]]:
    """All maximal cliques (Bron-Kerbosch with pivoting, bitmask sets)."""
    vs = sorted(adj)
    index = {v: i for i, v in enumerate(vs)}
    nbr = [0] * len(vs)
    for v, ws in adj.items():
        for w in ws:
            nbr[index[v]] |= 1 << index[w]
    out: list[frozenset[int]] = []

    def unpack(mask: int) -> frozenset[int]:
        return frozenset(vs[i] for i in _bits(mask))

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(unpack(r))
            return
        pool = p | x
        pivot = max(_bits(pool), key=lambda i: _popcount(nbr[i] & p))
        for i in _bits(p & ~nbr[pivot]):
            bit = 1 << i
            bk(r | bit, p & nbr[i], x & nbr[i])
            p &= ~bit
            x |= bit

    if vs:
        bk(0, (1 << len(vs)) - 1, 0)
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def flag_complex(g: Graph, labels: Mapping[int, str] | None = None,
                 surface: SurfaceSpec | None = None) -> Complex:
    """Complex whose maximal faces are the maximal cliques of g."""
    adj = g.adjacency()
    cliques = max_cliques(adj)
    if labels is None:
        labels = {v: str(v) for v in g.vertices}
    return make_complex(labels, cliques, surface)
