import random

import pytest

from arclab.arcs import arc_ids, loop_b, loop_c, mobius_crown

from arclab.collapse import verify_trace
from arclab.simplicial import (
    euler_characteristic,
    isomorphic,
    make_complex,
)
from arclab.strong import (
    StrongTrace,
    core,
    dominated_vertices,
    dominating_set,
    is_strongly_collapsible,
    remove_dominated,
    strong_to_elementary,
    verify_strong_trace,
)

def labeled(facets):
    ids = {v for f in facets for v in f}
    return make_complex({v: f"v{v}" for v in ids}, facets)

def random_complex(rng, pool, max_facets=6, max_size=4):
    facets = [
        rng.sample(pool, rng.randint(1, min(max_size, len(pool))))
        for _ in range(rng.randint(1, max_facets))
    ]
    return labeled(facets)

# --- dominated vertices ----------------------------------------------------------

def test_mobius_three_dominated_are_exactly_the_b_loops(complex_of):
    s = mobius_crown(3)
    c = complex_of("mobius", 3)
    ids = arc_ids(s)
    dom = dict(dominated_vertices(c))
    assert set(dom) == {ids[loop_b(i)] for i in (1, 2, 3)}
    for i in (1, 2, 3):
        assert dom[ids[loop_b(i)]] == ids[loop_c(i)]

def test_every_vertex_of_a_simplex_is_dominated():
    c = labeled([[0, 1, 2, 3]])
    assert [v for v, _ in dominated_vertices(c)] == [0, 1, 2, 3]

def test_core_of_simplex_is_a_point():
    terminal, t = core(labeled([[0, 1, 2]]))
    assert terminal.n_vertices == 1 and len(t) == 2

def test_core_of_crown_five_is_a_point(complex_of):
    terminal, _ = core(complex_of("crown", 5))
    assert terminal.n_vertices == 1

def test_core_of_mobius_four_has_fourteen_vertices(complex_of):
    terminal, t = core(complex_of("mobius", 4))
    assert terminal.n_vertices == 22 - 8 == 14
    assert len(t) == 8
    assert dominated_vertices(terminal) == []

def test_remove_dominated_requires_domination():
    c = labeled([[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        remove_dominated(c, 1)
    assert remove_dominated(c, 0).n_vertices == 2

def test_isolated_vertex_is_not_dominated():
    c = labeled([[0], [1, 2]])
    assert dominating_set(c, 0) == set()

# --- cores: idempotence, order independence ------------------------------------------

def test_core_is_idempotent():
    rng = random.Random(3)
    for _ in range(20):
        c = random_complex(rng, range(8))
        terminal, _ = core(c)
        again, t = core(terminal)
        assert again == terminal and len(t) == 0

def test_strong_trace_length_counts_removals():
    rng = random.Random(4)
    for _ in range(20):
        c = random_complex(rng, range(8))
        terminal, t = core(c)
        assert len(t) == c.n_vertices - terminal.n_vertices

def test_random_orders_give_isomorphic_cores():
    rng = random.Random(5)
    for _ in range(15):
        c = random_complex(rng, range(9))
        canonical, _ = core(c)
        for seed in range(4):
            shuffled, _ = core(c, order="random", seed=seed)
            assert isomorphic(canonical, shuffled)

def test_mobius_random_orders_agree_exactly(complex_of):
    c = complex_of("mobius", 4)
    canonical, _ = core(c)
    for seed in range(20):
        shuffled, _ = core(c, order="random", seed=seed)
        assert set(shuffled.vertex_ids) == set(canonical.vertex_ids)

# --- strong collapsibility decisions ---------------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_crowns_strongly_collapsible(n, complex_of):
    assert is_strongly_collapsible(complex_of("crown", n))[0]

@pytest.mark.parametrize("n", (4, 5))
def test_mobius_full_not_strongly_collapsible(n, complex_of):
    assert not is_strongly_collapsible(complex_of("mobius", n))[0]

@pytest.mark.parametrize("n", range(1, 8))
def test_inner_mobius_strongly_collapsible(n, complex_of):
    assert is_strongly_collapsible(complex_of("inner-mobius", n))[0]

# --- elementary conversion ---------------------------------------------------------

def test_edge_conversion():
    c = labeled([[0, 1]])
    t = StrongTrace(((0, 1),))
    elem = strong_to_elementary(c, t)
    assert elem.steps == ((frozenset([0]), frozenset([0, 1])),)

def test_mobius_two_strong_trace_converts_to_point(complex_of):
    c = complex_of("mobius", 2)
    ok, t = is_strongly_collapsible(c)
    assert ok
    elem = strong_to_elementary(c, t)
    verdict = verify_trace(c, elem)
    assert verdict.valid and verdict.terminal.n_vertices == 1

def test_crown_schedule_converts_to_full_collapse(complex_of):
    c = complex_of("crown", 4)
    ok, t = is_strongly_collapsible(c)
    assert ok
    verdict = verify_trace(c, strong_to_elementary(c, t))
    assert verdict.valid and verdict.terminal.n_vertices == 1

def test_conversion_preserves_euler_characteristic_stepwise():
    rng = random.Random(6)
    for _ in range(10):
        c = random_complex(rng, range(7))
        terminal, t = core(c)
        chi = euler_characteristic(c)
        current = c
        from arclab.collapse import apply_collapse

        for step in strong_to_elementary(c, t).steps:
            current = apply_collapse(current, *step)
            assert euler_characteristic(current) == chi
        assert current == terminal

def test_verify_strong_trace_checks_witnesses():
    c = labeled([[0, 1], [1, 2]])
    good = StrongTrace(((0, 1),))
    assert verify_strong_trace(c, good).n_vertices == 2
    with pytest.raises(ValueError):
        verify_strong_trace(c, StrongTrace(((1, 0),)))

def test_strong_trace_json_round_trip():
    t = StrongTrace(((3, 4), (5, 6)))
    assert StrongTrace.from_json(t.to_json()) == t
