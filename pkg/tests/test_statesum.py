"""State-sum polynomials against hand expansions and brute-force counts."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from torustutte import fixtures
from torustutte.gaingraph import GainGraph, contract, delete, gauge_shift, homology_profile
from torustutte.generators import random_gain_graph
from torustutte.golden import PHI, PHI_INV, GoldenNumber
from torustutte.polynomial import A, B, MultiPoly, U, W, X, Y, poly_eval
from torustutte.statesum import (
    ResourceCapError, chrom_poly_top, classical_flow_poly, dc_eval, eval_R5,
    eval_R10, eval_Rr, flow_poly_top, full_poly, profile_histogram, r5_sectors,
)

seeds = st.integers(min_value=0, max_value=10 ** 6)


def with_trivial_loop(G):
    v = G.vertices[0]
    return G.with_edges(list(G.edges) + [("zloop", v, v, (0, 0))])


def with_pendant(G):
    v = G.vertices[0]
    return GainGraph(list(G.vertices) + ["zleaf"],
                     list(G.edges) + [("zpend", v, "zleaf", (1, 1))])


def test_wedge():
    assert flow_poly_top(fixtures.wedge().base) == A * Y ** 2 - 2 * Y * W + 1


def test_theta():
    assert flow_poly_top(fixtures.theta().base) == A * Y ** 2 - 3 * Y * W + 2


@pytest.mark.parametrize("k", range(1, 7))
def test_loop_families(k):
    assert flow_poly_top(fixtures.trivial_loops(k).base) == (Y - 1) ** k
    assert flow_poly_top(fixtures.essential_loops(k).base) == (Y * W - 1) ** k


def test_full_poly_single_vertex():
    G = GainGraph(["v"])
    assert full_poly(G) == X * B
    assert chrom_poly_top(G) == B


def test_full_poly_essential_loop():
    G = fixtures.essential_loops(1).base
    # H = {} gives X B (sign -1); H = {loop} gives Y W
    assert full_poly(G) == Y * W - X * B


def test_chromatic_theta():
    # c(theta) = 0: no edges gives two trivial components, one edge gives
    # one, two edges carry an essential cycle, all three span Z^2
    C = chrom_poly_top(fixtures.theta().base)
    assert C == -X ** 2 * B + 3 * X * B - 3 * U + 1


def test_r5_examples():
    for k in range(1, 7):
        assert eval_R5(fixtures.trivial_loops(k).base) == 2 * PHI ** k
        assert eval_R5(fixtures.essential_loops(k).base) == PHI ** k + (-PHI_INV) ** k
    assert eval_R5(fixtures.wedge().base) == 2 - 2 * PHI ** -2
    assert eval_R5(fixtures.theta().base) == PHI ** -3
    assert eval_R10(fixtures.theta().base) == PHI ** -3


def test_r5_sectors_sum():
    G = fixtures.wedge().base
    parts = r5_sectors(G)
    assert set(parts) == {0, 2}
    assert parts[0] + parts[2] == eval_R5(G)


def test_rr_at_five_matches_exact():
    for G in fixtures.corpus().values():
        assert abs(eval_Rr(G.base, 5) - float(eval_R5(G.base))) <= 1e-9


def test_cap():
    G = fixtures.trivial_loops(6).base
    with pytest.raises(ResourceCapError):
        full_poly(G, cap=5)


def test_jobs_determinism():
    G = fixtures.torus_grid(2, 2).base
    assert profile_histogram(G, jobs=2) == profile_histogram(G, jobs=1)


@settings(max_examples=60)
@given(seeds)
def test_contraction_deletion(seed):
    G = random_gain_graph(seed, max_edges=8)
    whole = full_poly(G)
    for e in G.edges:
        if not e.is_loop:
            assert whole == full_poly(contract(G, e.id)) - full_poly(delete(G, e.id))


@settings(max_examples=60)
@given(seeds)
def test_trivial_loop_factor(seed):
    G = random_gain_graph(seed, max_edges=8)
    assert flow_poly_top(with_trivial_loop(G)) == (Y - 1) * flow_poly_top(G)


@settings(max_examples=60)
@given(seeds)
def test_pendant_edge_vanishes(seed):
    G = random_gain_graph(seed, max_edges=8)
    assert flow_poly_top(with_pendant(G)) == MultiPoly()


@settings(max_examples=60)
@given(seeds, st.data())
def test_gauge_invariance(seed, data):
    G = random_gain_graph(seed, max_edges=8)
    v = data.draw(st.sampled_from(G.vertices))
    p = data.draw(st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
    assert full_poly(gauge_shift(G, v, p)) == full_poly(G)


@settings(max_examples=40)
@given(seeds)
def test_dc_matches_brute_force(seed):
    G = random_gain_graph(seed, max_edges=7)
    assert dc_eval(G) == full_poly(G)
    assert dc_eval(G, "p") == flow_poly_top(G)


@settings(max_examples=60)
@given(seeds)
def test_exponent_bounds(seed):
    G = random_gain_graph(seed, max_edges=8)
    E, V = G.num_edges, G.num_vertices
    for exps, _ in full_poly(G).items():
        x, y, w, a, b, _u = exps
        assert x <= V and y <= E and w <= V and a <= 1 and b <= 1


def nowhere_zero_flows(G, q):
    count = 0
    for values in itertools.product(range(1, q), repeat=G.num_edges):
        net = {v: 0 for v in G.vertices}
        for e, val in zip(G.edges, values):
            net[e.tail] += val
            net[e.head] -= val
        count += all(x % q == 0 for x in net.values())
    return count


def proper_colourings(G, q):
    count = 0
    for colours in itertools.product(range(q), repeat=G.num_vertices):
        c = dict(zip(G.vertices, colours))
        count += all(c[e.tail] != c[e.head] for e in G.edges)
    return count


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_classical_flow_count(seed):
    G = random_gain_graph(seed, max_vertices=4, max_edges=6)
    F = classical_flow_poly(G)
    zeroed = G.with_edges(e._replace(gain=(0, 0)) for e in G.edges)
    assert flow_poly_top(zeroed) == F
    for q in (2, 3):
        assert poly_eval(F, {"Y": q}) == nowhere_zero_flows(G, q)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_classical_chromatic_count(seed):
    G = random_gain_graph(seed, max_vertices=4, max_edges=6)
    zeroed = G.with_edges(e._replace(gain=(0, 0)) for e in G.edges)
    C = chrom_poly_top(zeroed)
    comps = homology_profile(zeroed).comp
    sign = -1 if G.num_edges % 2 else 1
    for q in (1, 2, 3):
        value = sign * poly_eval(C, {"X": q, "B": 1, "U": 0}) * q ** comps
        assert value == proper_colourings(G, q)
