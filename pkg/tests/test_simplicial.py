import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arclab.arcs import crown, mobius_crown, polygon
from arclab.build import arc_complex, disjointness_graph, inner_complex
from arclab.simplicial import (
    complex_from_json,
    complex_to_json,
    dimension,
    dual_graph,
    dumps_canonical,
    euler_characteristic,
    f_vector,
    face_deletion,
    facets_containing,
    flag_complex,
    is_cone,
    isomorphic,
    join,
    join_all,
    link,
    loads_complex,
    make_complex,
    make_graph,
    max_cliques,
    point_complex,
    restrict,
    vertex_deletion,
)
from oracles import (
    brute_force_faces,
    catalan,
    euler_by_inclusion_exclusion,
    naive_max_cliques,
)


def simple_labels(ids):
    return {v: f"v{v}" for v in ids}


def complex_from_facets(facets):
    ids = set().union(*[set(f) for f in facets]) if facets else set()
    return make_complex(simple_labels(ids), facets)


# hypothesis strategy: small random complexes given by facet candidates
facet_strategy = st.lists(
    st.sets(st.integers(min_value=0, max_value=7), min_size=1, max_size=4),
    min_size=1,
    max_size=6,
)


# --- construction ----------------------------------------------------------------


def test_flag_complex_of_mobius_two_is_a_path(complex_of):
    c = complex_of("mobius", 2)
    labels = c.labels
    facet_labels = {frozenset(labels[v] for v in f) for f in c.facets}
    assert facet_labels == {
        frozenset({"M:1", "L:1"}),
        frozenset({"L:1", "cc:1-2"}),
        frozenset({"cc:1-2", "L:2"}),
        frozenset({"L:2", "M:2"}),
    }


def test_flag_complex_of_empty_graph_is_isolated_vertices():
    g = make_graph(range(4), [])
    c = flag_complex(g)
    assert sorted(map(sorted, c.facets)) == [[0], [1], [2], [3]]


def test_hexagon_complex_has_catalan_facets(complex_of):
    c = complex_of("polygon", 6)
    assert len(c.facets) == catalan(4) == 14


@pytest.mark.parametrize("n", range(4, 9))
def test_polygon_facet_counts_match_catalan(n, complex_of):
    assert len(complex_of("polygon", n).facets) == catalan(n - 2)


@pytest.mark.parametrize("m,n", [(2, 2), (3, 4), (5, 5), (2, 7)])
def test_strip_facet_counts_are_lattice_paths(m, n, complex_of):
    # triangulations of the strip are monotone staircases: binomial count
    from math import comb

    assert len(complex_of("strip", n, m).facets) == comb(m + n - 2, m - 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_crown_facet_counts_follow_the_closed_form(n, complex_of):
    # regression gate: 1, 3, 10, 35, 126, 462 = C(2n-1, n-1)
    from math import comb

    assert len(complex_of("crown", n).facets) == comb(2 * n - 1, n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_mobius_facet_counts_are_powers_of_four(n, complex_of):
    # regression gate: the full complex has 4^(n-1) facets
    assert len(complex_of("mobius", n).facets) == 4 ** (n - 1)


def test_max_cliques_against_naive_enumeration():
    # a fixed awkward graph plus the mobius(3) disjointness graph
    g = make_graph(range(6), [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (5, 0)])
    assert set(max_cliques(g.adjacency())) == naive_max_cliques(g.vertices, g.edges)
    g2 = disjointness_graph(mobius_crown(3))
    assert set(max_cliques(g2.adjacency())) == naive_max_cliques(g2.vertices, g2.edges)


def test_flag_complex_faces_are_graph_cliques(complex_of):
    s = mobius_crown(3)
    g = disjointness_graph(s)
    adj = g.adjacency()
    c = complex_of("mobius", 3)
    for f in c.facets:
        for u, v in itertools.combinations(sorted(f), 2):
            assert v in adj[u]


# --- link, deletion, join ----------------------------------------------------------


def test_link_of_crown_loop_is_cone_over_pentagon_complex(complex_of):
    c = complex_of("crown", 4)
    ids = {label: v for v, label in c.vertex_labels}
    lk = link(c, [ids["M:1"]])
    apex = is_cone(lk)
    assert apex is not None and lk.label(apex) == "c:1"
    base = restrict(lk, set(lk.vertex_ids) - {apex})
    assert f_vector(base) == [5, 5]  # a 5-cycle


def test_link_of_facet_is_empty_complex(complex_of):
    c = complex_of("polygon", 5)
    lk = link(c, c.facets[0])
    assert lk.n_vertices == 0 and dimension(lk) == -1


def test_link_of_mobius_core_loop_is_polygon_sphere(complex_of):
    c = complex_of("mobius", 4)
    ids = {label: v for v, label in c.vertex_labels}
    lk = link(c, [ids["L:1"]])
    assert isomorphic(lk, arc_complex(polygon(6)))


def test_link_requires_a_face(complex_of):
    c = complex_of("polygon", 4)
    with pytest.raises(ValueError):
        link(c, c.vertex_ids[:2])  # the two diagonals cross


def test_face_deletion_drops_star_only():
    c = complex_from_facets([[0, 1, 2], [1, 2, 3]])
    d = face_deletion(c, [1, 2])
    assert set(map(frozenset, [(0, 1), (0, 2), (1, 3), (2, 3)])) == set(d.facets)


def test_deleting_free_vertex_of_edge():
    c = complex_from_facets([[0, 1]])
    d = vertex_deletion(c, 0)
    assert d.facets == (frozenset([1]),)


def test_deletion_never_increases_dimension():
    c = complex_from_facets([[0, 1, 2], [2, 3], [4]])
    for v in c.vertex_ids:
        assert dimension(vertex_deletion(c, v)) <= dimension(c)


def test_deletion_of_absent_face_rejected():
    c = complex_from_facets([[0, 1]])
    with pytest.raises(ValueError):
        face_deletion(c, [5])


def test_join_point_is_cone():
    base = complex_from_facets([[0, 1], [2, 3]])
    apex = point_complex(9, "apex")
    coned = join(base, apex)
    assert is_cone(base) is None
    assert is_cone(coned) == 9


def test_join_label_collision_rejected():
    a = point_complex(0, "x")
    b = point_complex(1, "x")
    with pytest.raises(ValueError):
        join(a, b)


def test_join_pentagon_complex_with_point_f_vector(complex_of):
    c = complex_of("polygon", 5)
    coned = join(c, point_complex(99, "apex"))
    assert f_vector(coned) == [6, 10, 5]


def test_join_of_strongly_collapsible_factors_is_strongly_collapsible(complex_of):
    from arclab.strong import is_strongly_collapsible

    a = complex_of("crown", 3)
    b = arc_complex(crown(2))
    shifted = make_complex(
        {v + 100: "b" + l for v, l in b.vertex_labels},
        [[v + 100 for v in f] for f in b.facets],
    )
    assert is_strongly_collapsible(a)[0] and is_strongly_collapsible(shifted)[0]
    assert is_strongly_collapsible(join(a, shifted))[0]


@settings(max_examples=60, deadline=None)
@given(facet_strategy, facet_strategy)
def test_link_join_duality(f1, f2):
    x = complex_from_facets(f1)
    y_ids = {v + 10 for f in f2 for v in f}
    y = make_complex(simple_labels(y_ids), [[v + 10 for v in f] for f in f2])
    sigma = set(x.facets[0])
    lhs = link(join(x, y), sigma)
    rhs = join_all([link(x, sigma), y])
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(facet_strategy, st.integers(min_value=0, max_value=7))
def test_vertex_deletion_star_round_trip(facets, v):
    c = complex_from_facets(facets)
    if v not in c.vertex_ids:
        return
    star = facets_containing(c, [v])
    d = vertex_deletion(c, v)
    rebuilt_faces = list(d.facets) + list(star)
    rebuilt = make_complex(c.labels, rebuilt_faces)
    assert rebuilt == c


# --- numeric invariants ----------------------------------------------------------


def test_pentagon_complex_is_a_circle(complex_of):
    c = complex_of("polygon", 5)
    assert f_vector(c) == [5, 5]
    assert euler_characteristic(c) == 0


def test_single_vertex_f_vector():
    c = point_complex(0, "v")
    assert f_vector(c) == [1]
    assert euler_characteristic(c) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_crown_complexes_have_euler_characteristic_one(n, complex_of):
    assert euler_characteristic(complex_of("crown", n)) == 1


@settings(max_examples=60, deadline=None)
@given(facet_strategy)
def test_euler_characteristic_matches_inclusion_exclusion(facets):
    c = complex_from_facets(facets)
    assert euler_characteristic(c) == euler_by_inclusion_exclusion(c.facets)


@settings(max_examples=60, deadline=None)
@given(facet_strategy)
def test_f_vector_matches_brute_force_faces(facets):
    c = complex_from_facets(facets)
    brute = brute_force_faces(c.facets)
    fv = f_vector(c)
    assert sum(fv) == len(brute)
    for k, count in enumerate(fv):
        assert count == sum(1 for f in brute if len(f) == k + 1)


# --- cones ------------------------------------------------------------------------


def test_inner_crown_complex_is_a_cone(complex_of):
    inner = inner_complex(crown(5))
    assert len(inner.facets) == 1
    assert is_cone(inner) is not None


@pytest.mark.parametrize("n", range(4, 7))
def test_inner_mobius_complex_is_not_a_cone(n):
    assert is_cone(inner_complex(mobius_crown(n))) is None


def test_single_vertex_is_its_own_apex():
    assert is_cone(point_complex(3, "v")) == 3


# --- dual graphs and isomorphism ---------------------------------------------------


def test_hexagon_dual_graph_is_the_associahedron_skeleton(complex_of):
    g = dual_graph(complex_of("polygon", 6))
    assert len(g.vertices) == 14
    assert len(g.edges) == 21


def test_mobius_two_dual_graph_is_a_path(complex_of):
    g = dual_graph(complex_of("mobius", 2))
    degrees = sorted(len(v) for v in g.adjacency().values())
    assert len(g.vertices) == 4 and degrees == [1, 1, 2, 2]


def test_dual_graph_requires_pure():
    c = complex_from_facets([[0, 1, 2], [3, 4]])
    with pytest.raises(ValueError):
        dual_graph(c)


def test_isomorphic_to_relabeled_self(complex_of):
    c = complex_of("crown", 3)
    perm = {v: (v * 7 + 3) % 97 for v in c.vertex_ids}
    relabeled = make_complex(
        {perm[v]: f"x{perm[v]}" for v in c.vertex_ids},
        [[perm[v] for v in f] for f in c.facets],
    )
    assert isomorphic(c, relabeled)


def test_isomorphic_distinguishes_path_from_star():
    path = complex_from_facets([[0, 1], [1, 2], [2, 3]])
    star = complex_from_facets([[0, 1], [0, 2], [0, 3]])
    assert not isomorphic(path, star)


def test_isomorphic_gate():
    big = complex_from_facets([[i, i + 1] for i in range(30)])
    with pytest.raises(ValueError):
        isomorphic(big, big)


# --- serialization ------------------------------------------------------------------


def test_json_round_trip_is_byte_identical(complex_of):
    c = complex_of("mobius", 3)
    text = dumps_canonical(c)
    again = dumps_canonical(loads_complex(text))
    assert text == again


def test_json_surface_round_trip(complex_of):
    c = complex_of("strip", 2, 3)
    d = complex_to_json(c)
    c2 = complex_from_json(json.loads(json.dumps(d)))
    assert c2 == c and c2.surface == c.surface


def test_json_errors_carry_paths():
    with pytest.raises(ValueError, match="facets"):
        complex_from_json({"vertices": [{"id": 0, "label": "a"}], "facets": [[1]]})
    with pytest.raises(ValueError, match=r"vertices\[1\]"):
        complex_from_json(
            {"vertices": [{"id": 0, "label": "a"}, {"id": 0}], "facets": [[0]]}
        )


def test_uncovered_vertex_rejected():
    with pytest.raises(ValueError, match="no maximal face"):
        make_complex({0: "a", 1: "b"}, [[0]])
