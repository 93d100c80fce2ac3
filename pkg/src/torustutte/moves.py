"""Cubic-graph surgeries and the golden-identity checks."""

from __future__ import annotations

from dataclasses import dataclass

from .gaingraph import GainGraph, GraphError, contract, delete, gauge_shift
from .golden import PHI, GoldenNumber
from .ribbon import RibbonGraph, ribbon_contract, ribbon_delete
from .statesum import classical_flow_poly, eval_R5, eval_R10, flow_poly_top
from .polynomial import poly_eval


def _is_free_loop_vertex(G: GainGraph, v: str) -> bool:
    inc = G.incident(v)
    return len(inc) == 1 and inc[0].is_loop


def is_cubic(G: GainGraph) -> bool:
    """Every vertex 3-valent, except lone vertices carrying one free loop."""
    return all(
        G.degree(v) == 3 or _is_free_loop_vertex(G, v) for v in G.vertices
    )


def effective_edge_count(G: GainGraph) -> int:
    """Edges not belonging to free-loop components."""
    free = {v for v in G.vertices if _is_free_loop_vertex(G, v)}
    return sum(1 for e in G.edges if e.tail not in free)


@dataclass(frozen=True)
class CubicReport:
    graph_id: str
    E_effective: int
    lhs: GoldenNumber
    rhs: GoldenNumber
    equal: bool


def golden_check(G, graph_id: str = "", jobs: int = 1) -> CubicReport:
    """Compare R_10(G) with phi^E R_5(G)^2 exactly."""
    if isinstance(G, RibbonGraph):
        G = G.base
    if not is_cubic(G):
        raise GraphError(f"graph {graph_id or G!r} is not cubic")
    P = flow_poly_top(G, jobs=jobs)
    E = effective_edge_count(G)
    lhs = eval_R10(P)
    r5 = eval_R5(P)
    rhs = PHI ** E * r5 * r5
    return CubicReport(graph_id, E, lhs, rhs, lhs == rhs)


def _leg_end(G: GainGraph, token: str, vertex: str) -> tuple[str, int]:
    eid, end = token[:-1], token[-1]
    e = G.edge(eid)
    at = e.tail if end == "+" else e.head
    if end not in "+-" or at != vertex:
        raise GraphError(f"half-edge {token!r} is not attached to {vertex!r}")
    return eid, end


def ih_flip(G: GainGraph, eid: str, pairing: tuple[str, str]) -> GainGraph:
    """Exchange one leg of each endpoint of ``eid``.

    ``pairing = (leg_u, leg_v)`` names half-edges (``"x+"``/``"x-"``) at
    the tail ``u`` and head ``v`` of ``eid``; ``leg_u`` is moved to ``v``
    and ``leg_v`` to ``u``.  Gains are preserved after first gauging
    ``eid`` to zero gain.
    """
    e = G.edge(eid)
    if e.is_loop:
        raise GraphError(f"cannot flip loop {eid!r}")
    u, v = e.tail, e.head
    if G.degree(u) != 3 or G.degree(v) != 3:
        raise GraphError(f"endpoints of {eid!r} must both be 3-valent")
    leg_u, leg_v = pairing
    if eid in (leg_u[:-1], leg_v[:-1]):
        raise GraphError("pairing must name legs other than the flipped edge")
    xu, end_u = _leg_end(G, leg_u, u)
    xv, end_v = _leg_end(G, leg_v, v)
    G = gauge_shift(G, v, e.gain)
    out = []
    for f in G.edges:
        tail, head = f.tail, f.head
        if f.id == xu:
            if end_u == "+":
                tail = v
            else:
                head = v
        if f.id == xv:
            if end_v == "+":
                tail = u
            else:
                head = u
        out.append((f.id, tail, head, f.gain))
    return G.with_edges(out)


def ribbon_pairing(R: RibbonGraph, eid: str) -> tuple[str, str]:
    """Legs following ``eid`` in the rotations at its tail and head."""
    e = R.base.edge(eid)
    tok = R.tokens()
    ru, rv = tok[e.tail], tok[e.head]
    a = ru[(ru.index(eid + "+") + 1) % len(ru)]
    c = rv[(rv.index(eid + "-") + 1) % len(rv)]
    return a, c


def ih_flip_ribbon(R: RibbonGraph, eid: str) -> RibbonGraph:
    """The I-H move on an embedded graph, keeping the embedding."""
    e = R.base.edge(eid)
    tok = R.tokens()
    if len(tok[e.tail]) != 3 or len(tok[e.head]) != 3 or e.is_loop:
        raise GraphError(f"edge {eid!r} does not join two distinct 3-valent vertices")
    a, c = ribbon_pairing(R, eid)
    ru, rv = tok[e.tail], tok[e.head]
    b = ru[(ru.index(eid + "+") + 2) % 3]
    d = rv[(rv.index(eid + "-") + 2) % 3]
    base = ih_flip(R.base, eid, (a, c))
    tok[e.tail] = [eid + "+", b, c]
    tok[e.head] = [eid + "-", d, a]
    return RibbonGraph(base, tok)


def jw_triple(G, eid: str, pairing: tuple[str, str] | None = None):
    """``(G_X, G_I, G_E)`` around the edge ``eid`` joining two 3-valent vertices.

    With legs a, b at the tail and c, d at the head (a, b, c, d cyclic
    around the contracted vertex), G_X is the 4-valent vertex ``G/eid``,
    G_I joins a-b and c-d (``G`` minus ``eid``) and G_E joins b-c and
    d-a (the I-H flip minus ``eid``).  With a RibbonGraph the pairing
    comes from the rotation and ribbon graphs are returned.
    """
    if isinstance(G, RibbonGraph):
        if pairing is not None:
            raise GraphError("pairing is determined by the rotation of a ribbon graph")
        flipped = ih_flip_ribbon(G, eid)
        return ribbon_contract(G, eid), ribbon_delete(G, eid), ribbon_delete(flipped, eid)
    if pairing is None:
        raise GraphError("a leg pairing is required for a graph without rotation")
    flipped = ih_flip(G, eid, pairing)
    return contract(G, eid), delete(G, eid), delete(flipped, eid)


def jw_identity_holds(triple) -> bool:
    gx, gi, ge = (g.base if isinstance(g, RibbonGraph) else g for g in triple)
    return PHI * eval_R5(gx) == eval_R5(gi) + eval_R5(ge)


@dataclass(frozen=True)
class PlanarGoldenReport:
    graph_id: str
    E: int
    lhs: GoldenNumber
    rhs: GoldenNumber
    equal: bool


def planar_golden_check(G, graph_id: str = "") -> PlanarGoldenReport:
    """The planar golden identity F(phi + 2) = phi^E F(phi + 1)^2 for a gain-zero cubic graph."""
    if isinstance(G, RibbonGraph):
        G = G.base
    if any(e.gain != (0, 0) for e in G.edges):
        raise GraphError("planar golden check needs all gains zero")
    if not is_cubic(G):
        raise GraphError(f"graph {graph_id or G!r} is not cubic")
    F = flow_poly_top(G)
    if F.variables() - {"Y"}:
        raise GraphError("flow polynomial of a gain-zero graph depends only on Y")
    E = effective_edge_count(G)
    lhs = GoldenNumber.coerce(poly_eval(F, {"Y": PHI + 2}))
    at = GoldenNumber.coerce(poly_eval(F, {"Y": PHI + 1}))
    rhs = PHI ** E * at * at
    return PlanarGoldenReport(graph_id, E, lhs, rhs, lhs == rhs)


__all__ = [
    "CubicReport", "PlanarGoldenReport", "classical_flow_poly", "effective_edge_count",
    "golden_check", "ih_flip", "ih_flip_ribbon", "is_cubic", "jw_identity_holds",
    "jw_triple", "planar_golden_check", "ribbon_pairing",
]
