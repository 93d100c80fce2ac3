"""Acceptance criteria 1-10, one printed PASS/FAIL line each.

Every criterion runs at its stated tolerance and wall-clock limit.  Seeds
are fixed so the random families are the same on every run.
"""

from __future__ import annotations

import os
import random
import time
from contextlib import contextmanager

import pytest

from torustutte import fixtures
from torustutte.checks import duality_sides
from torustutte.gaingraph import GainGraph, contract, delete, gauge_shift, homology_profile
from torustutte.generators import random_cubic_torus, random_gain_graph, random_ribbon_graph
from torustutte.golden import PHI, PHI_INV
from torustutte.moves import golden_check, is_cubic, jw_identity_holds, jw_triple, planar_golden_check
from torustutte.polynomial import A, MultiPoly, W, Y
from torustutte.ribbon import surround_counts
from torustutte.statesum import eval_R5, eval_Rr, flow_poly_top, full_poly, r5_sectors
from torustutte.trace import surround_histogram, trace

JOBS = os.cpu_count() or 1


@contextmanager
def criterion(capsys, number: int, title: str, limit: float):
    """Time the body, print one line, then fail on a broken claim or a slow run."""
    state = {"ok": True, "detail": ""}
    start = time.perf_counter()
    try:
        yield state
    except AssertionError as exc:
        state["ok"] = False
        state["detail"] = str(exc).splitlines()[0] if str(exc) else "assertion failed"
        raise
    finally:
        elapsed = time.perf_counter() - start
        in_time = elapsed < limit
        verdict = "PASS" if state["ok"] and in_time else "FAIL"
        note = state["detail"] + ("" if in_time else f" [over the {limit:g}s limit]")
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {verdict}  {title}  ({elapsed:.2f}s / {limit:g}s)  {note}")
    assert in_time, f"criterion {number} took {elapsed:.1f}s, limit {limit:g}s"


def test_criterion_01_wedge_polynomial(capsys):
    with criterion(capsys, 1, "P(wedge) = AY^2 - 2YW + 1", 1.0) as st:
        P = flow_poly_top(fixtures.wedge().base)
        st["detail"] = str(P)
        assert P == A * Y ** 2 - 2 * Y * W + 1, f"got {P}"


def test_criterion_02_loop_families(capsys):
    with criterion(capsys, 2, "P of k parallel loops, k <= 6", 1.0) as st:
        for k in range(1, 7):
            assert flow_poly_top(fixtures.essential_loops(k).base) == (Y * W - 1) ** k, f"essential k={k}"
            assert flow_poly_top(fixtures.trivial_loops(k).base) == (Y - 1) ** k, f"trivial k={k}"
        st["detail"] = "12 polynomials exact"


def test_criterion_03_r5_fixtures(capsys):
    with criterion(capsys, 3, "R5 on loop families and wedge", 1.0) as st:
        for k in range(1, 7):
            assert eval_R5(fixtures.trivial_loops(k).base) == 2 * PHI ** k, f"trivial k={k}"
            assert eval_R5(fixtures.essential_loops(k).base) == PHI ** k + (-PHI_INV) ** k, f"essential k={k}"
        assert eval_R5(fixtures.wedge().base) == 2 - 2 * PHI ** -2, "wedge"
        st["detail"] = "13 values exact"


def test_criterion_04_trace_equals_r5(capsys):
    with criterion(capsys, 4, "tr5 = R5 with matching sectors, fixtures + 200 random", 60.0) as st:
        graphs = list(fixtures.corpus().items())
        graphs += [(f"random#{s}", random_ribbon_graph(4000 + s, max_edges=12)) for s in range(200)]
        for name, R in graphs:
            assert R.base.num_edges <= 12
            t = trace(R, 5)
            assert t.value == eval_R5(R.base), name
            assert t.per_label == r5_sectors(R.base), f"{name} sectors"
        biggest = max(R.base.num_edges for _, R in graphs)
        st["detail"] = f"{len(graphs)} graphs, max E={biggest}"


def test_criterion_05_trace_vs_rr(capsys):
    with criterion(capsys, 5, "tr_r vs R_r for r in 3,7,9 at 1e-9", 60.0) as st:
        worst = 0.0
        for s in range(50):
            R = random_ribbon_graph(5000 + s, max_edges=10)
            hist = surround_histogram(R)
            for r in (3, 7, 9):
                diff = abs(trace(R, r, hist).value - eval_Rr(R.base, r))
                worst = max(worst, diff)
                assert diff <= 1e-9, f"seed {5000 + s} r={r} diff={diff:.3g}"
        st["detail"] = f"max |diff| = {worst:.2g}"


def test_criterion_06_trace_examples(capsys):
    with criterion(capsys, 6, "tr5 of wedge and loop families", 1.0) as st:
        assert trace(fixtures.wedge(), 5).value == 2 - 2 / PHI ** 2, "wedge"
        for k in range(1, 7):
            assert trace(fixtures.trivial_loops(k), 5).value == 2 * PHI ** k, f"trivial k={k}"
            assert trace(fixtures.essential_loops(k), 5).value == PHI ** k + (-PHI_INV) ** k, f"essential k={k}"
        st["detail"] = "13 traces exact"


def test_criterion_07_golden_identity(capsys):
    with criterion(capsys, 7, "R10 = phi^E R5^2 on theta, loops, 100 cubic torus graphs", 600.0) as st:
        rep = golden_check(fixtures.theta(), "theta")
        assert rep.equal and rep.lhs == PHI ** -3 == rep.rhs, "theta"
        for k in range(1, 7):
            assert golden_check(fixtures.trivial_loops(k)).equal, f"trivial k={k}"
            assert golden_check(fixtures.essential_loops(k)).equal, f"essential k={k}"
        sizes = []
        for s in range(100):
            R = random_cubic_torus(7000 + s, max_edges=18)
            assert is_cubic(R.base) and R.base.num_edges <= 18, f"seed {7000 + s} shape"
            sizes.append(R.base.num_edges)
            assert golden_check(R, f"seed {7000 + s}", jobs=JOBS).equal, f"seed {7000 + s}"
        st["detail"] = f"E range {min(sizes)}..{max(sizes)}, {sizes.count(18)} at E=18, jobs={JOBS}"


def test_criterion_08_planar_golden(capsys):
    with criterion(capsys, 8, "F(phi+2) = phi^E F(phi+1)^2 on circle, K4, prism, cube", 10.0) as st:
        graphs = {"circle": fixtures.free_loop(), "k4": fixtures.k4(),
                  "prism": fixtures.prism(), "cube": fixtures.cube()}
        for name, R in graphs.items():
            assert planar_golden_check(R, name).equal, name
        st["detail"] = "4 graphs exact"


def test_criterion_09_duality(capsys):
    """The identity exactly as stated: P_G(Y,W,A) = C_G*(Y, YW, AY^2).

    It does not hold.  On theta the right side has a Y^3 term whatever the
    dual gains are, so this test fails on purpose; the signed form with
    B = AY is checked in ``test_duality_signed_form``.
    """
    with criterion(capsys, 9, "P_G(Y,W,A) = C_G*(Y,YW,AY^2) on theta, 1x1, 2x2 grids", 10.0) as st:
        for name in ("theta", "grid_1x1", "grid_2x2"):
            P, _signed, literal = duality_sides(fixtures.corpus()[name])
            assert P == literal, f"{name}: P = {P} but C* gives {literal}"
        st["detail"] = "3 cellulations exact"


def test_duality_signed_form():
    for name in ("theta", "grid_1x1", "grid_2x2", "wedge"):
        P, signed, _literal = duality_sides(fixtures.corpus()[name])
        assert P == signed, name


# --- criterion 10 ---------------------------------------------------------

def _with_trivial_loop(G):
    v = G.vertices[0]
    return G.with_edges(list(G.edges) + [("zloop", v, v, (0, 0))])


def _with_pendant(G):
    return GainGraph(list(G.vertices) + ["zleaf"],
                     list(G.edges) + [("zpend", G.vertices[0], "zleaf", (1, 2))])


def _suite_cd(seed):
    G = random_gain_graph(seed, max_edges=8)
    whole = full_poly(G)
    for e in G.edges:
        if not e.is_loop:
            assert whole == full_poly(contract(G, e.id)) - full_poly(delete(G, e.id)), f"cd seed {seed}"


def _suite_loop_factor(seed):
    G = random_gain_graph(seed, max_edges=8)
    assert flow_poly_top(_with_trivial_loop(G)) == (Y - 1) * flow_poly_top(G), f"loop seed {seed}"


def _suite_pendant(seed):
    G = random_gain_graph(seed, max_edges=8)
    assert flow_poly_top(_with_pendant(G)) == MultiPoly(), f"pendant seed {seed}"


def _suite_gauge(seed):
    G = random_gain_graph(seed, max_edges=8)
    rng = random.Random(seed)
    H = gauge_shift(G, rng.choice(G.vertices), (rng.randint(-3, 3), rng.randint(-3, 3)))
    assert full_poly(H) == full_poly(G), f"gauge seed {seed}"


def _suite_jw(seed):
    R = random_cubic_torus(seed, max_edges=12)
    G = R.base
    links = [e.id for e in G.edges if not e.is_loop
             and G.degree(e.tail) == 3 and G.degree(e.head) == 3]
    if not links:
        return False  # free loops or theta-like graphs with no edge to flip
    eid = random.Random(seed).choice(links)
    assert jw_identity_holds(jw_triple(R, eid)), f"jw seed {seed} edge {eid}"
    return True


def _suite_surround(seed):
    R = random_ribbon_graph(seed, max_edges=12)
    G = R.base
    for mask in range(1 << G.num_edges):
        p = homology_profile(G, mask)
        t, m = surround_counts(R, mask)
        if p.r == 1:
            assert p.edge_count - G.num_vertices + t == 2 * (p.n - p.cbar), f"case B seed {seed}"
            assert m == 2 * p.cbar, f"case B seed {seed}"
        elif p.r == 2:
            assert m == 0, f"case C seed {seed}"


SUITES = {
    "contraction-deletion": _suite_cd,
    "trivial-loop factor": _suite_loop_factor,
    "pendant vanishing": _suite_pendant,
    "gauge invariance": _suite_gauge,
    "JW relation": _suite_jw,
    "surround counts B/C": _suite_surround,
}


def test_criterion_10_property_suites(capsys):
    with criterion(capsys, 10, "six property suites, 200 seeded instances each", 300.0) as st:
        counts = {}
        for k, (name, fn) in enumerate(SUITES.items()):
            done = tried = 0
            while done < 200:
                done += fn(10_000 * (k + 1) + tried) is not False
                tried += 1
            counts[name] = f"{done}/{tried}"
        st["detail"] = ", ".join(f"{n}: {c}" for n, c in counts.items())
