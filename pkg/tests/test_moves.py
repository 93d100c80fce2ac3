import pytest
from hypothesis import given, settings, strategies as st

from torustutte import fixtures
from torustutte.gaingraph import GainGraph, GraphError
from torustutte.generators import circular_ladder, random_cubic_torus
from torustutte.golden import PHI
from torustutte.moves import (
    golden_check, ih_flip, ih_flip_ribbon, is_cubic, jw_identity_holds,
    jw_triple, planar_golden_check,
)
from torustutte.ribbon import validate_cellulation
from torustutte.statesum import eval_R5, flow_poly_top


def test_theta_golden():
    rep = golden_check(fixtures.theta(), "theta")
    assert rep.equal and rep.lhs == PHI ** -3 and rep.rhs == PHI ** -3


@pytest.mark.parametrize("k", range(1, 7))
def test_loop_family_golden(k):
    assert golden_check(fixtures.trivial_loops(k)).equal
    assert golden_check(fixtures.essential_loops(k)).equal


@pytest.mark.parametrize("name", ["k4", "prism", "cube"])
def test_planar_golden(name):
    assert planar_golden_check(fixtures.corpus()[name], name).equal


def test_planar_golden_circle():
    assert planar_golden_check(fixtures.free_loop()).equal


def test_non_cubic_rejected():
    with pytest.raises(GraphError):
        golden_check(fixtures.wedge())
    with pytest.raises(GraphError):
        planar_golden_check(fixtures.theta())


def test_ih_flip_theta():
    R = fixtures.theta()
    F = ih_flip_ribbon(R, "a")
    assert is_cubic(F.base)
    assert validate_cellulation(F)
    assert F.base.num_edges == 3


def test_ih_flip_pairing_checks():
    G = fixtures.k4().base
    e = next(x for x in G.edges if not x.is_loop)
    with pytest.raises(GraphError):
        ih_flip(G, e.id, (e.id + "+", e.id + "-"))
    with pytest.raises(GraphError):
        jw_triple(G, e.id)


def test_ih_flip_gain_graph_keeps_degrees():
    G = fixtures.prism().base
    e = G.edges[0]
    legs_u = [x for x in G.incident(e.tail) if x.id != e.id]
    legs_v = [x for x in G.incident(e.head) if x.id != e.id]
    tok = lambda x, v: x.id + ("+" if x.tail == v else "-")
    F = ih_flip(G, e.id, (tok(legs_u[0], e.tail), tok(legs_v[0], e.head)))
    assert is_cubic(F)


def test_jw_theta():
    assert jw_identity_holds(jw_triple(fixtures.theta(), "a"))


def test_circular_ladder():
    for n in range(1, 5):
        R = circular_ladder(n)
        assert is_cubic(R.base) and golden_check(R).equal


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_cubic_golden(seed):
    R = random_cubic_torus(seed, max_edges=12)
    assert is_cubic(R.base)
    assert golden_check(R).equal


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.data())
def test_random_jw(seed, data):
    R = random_cubic_torus(seed, max_edges=12)
    G = R.base
    links = [e.id for e in G.edges if not e.is_loop
             and G.degree(e.tail) == 3 and G.degree(e.head) == 3]
    if not links:
        return
    assert jw_identity_holds(jw_triple(R, data.draw(st.sampled_from(links))))
