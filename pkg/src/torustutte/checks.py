"""Identity checks run over a corpus of graph documents."""

from __future__ import annotations

from dataclasses import dataclass

from .golden import format_golden
from .graphio import GraphDocument
from .moves import golden_check, is_cubic, jw_identity_holds, jw_triple, planar_golden_check
from .polynomial import A, MultiPoly, W, Y
from .ribbon import RibbonGraph, dual, validate_cellulation
from .gaingraph import contract, delete
from .statesum import chrom_poly_top, eval_R5, eval_Rr, flow_poly_top, full_poly, r5_sectors
from .trace import surround_histogram, trace

NUMERIC_TOL = 1e-9


@dataclass(frozen=True)
class CheckRow:
    graph: str
    check: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""


def duality_sides(R: RibbonGraph) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """``(P_G, (-1)^E C_{G*}(Y, YW, AY), C_{G*}(Y, YW, AY^2))`` for a cellulation.

    The middle entry is the form that holds for every cellulation; the
    last is the unsigned substitution with ``B = AY^2``, kept for
    comparison.
    """
    G = R.base
    C = chrom_poly_top(dual(R).base)
    P = flow_poly_top(G)
    sign = -1 if G.num_edges % 2 else 1
    dual_side = C.substitute(X=Y, U=Y * W, B=A * Y) * sign
    literal = C.substitute(X=Y, U=Y * W, B=A * Y ** 2)
    return P, dual_side, literal


def _ribbon(doc: GraphDocument) -> RibbonGraph | None:
    return doc.ribbon


def check_golden(doc: GraphDocument, jobs: int = 1) -> list[CheckRow]:
    if not is_cubic(doc.graph):
        return [CheckRow(doc.name, "golden", "skip", "not cubic")]
    rep = golden_check(doc.graph, doc.name, jobs=jobs)
    detail = f"E={rep.E_effective} R10={format_golden(rep.lhs)} phi^E*R5^2={format_golden(rep.rhs)}"
    return [CheckRow(doc.name, "golden", "pass" if rep.equal else "fail", detail)]


def check_planar_golden(doc: GraphDocument, jobs: int = 1) -> list[CheckRow]:
    G = doc.graph
    if not is_cubic(G) or any(e.gain != (0, 0) for e in G.edges):
        return [CheckRow(doc.name, "planar-golden", "skip", "needs a gain-zero cubic graph")]
    rep = planar_golden_check(G, doc.name)
    detail = f"E={rep.E} F(phi+2)={format_golden(rep.lhs)} phi^E*F(phi+1)^2={format_golden(rep.rhs)}"
    return [CheckRow(doc.name, "planar-golden", "pass" if rep.equal else "fail", detail)]


def check_jw(doc: GraphDocument, jobs: int = 1) -> list[CheckRow]:
    R = _ribbon(doc)
    if R is None:
        return [CheckRow(doc.name, "jw", "skip", "no rotation")]
    G = R.base
    rows = []
    for e in G.edges:
        if e.is_loop or G.degree(e.tail) != 3 or G.degree(e.head) != 3:
            continue
        ok = jw_identity_holds(jw_triple(R, e.id))
        rows.append(CheckRow(doc.name, "jw", "pass" if ok else "fail", f"edge {e.id}"))
    return rows or [CheckRow(doc.name, "jw", "skip", "no edge between two 3-valent vertices")]


def check_duality(doc: GraphDocument, jobs: int = 1) -> list[CheckRow]:
    R = _ribbon(doc)
    if R is None or not validate_cellulation(R):
        return [CheckRow(doc.name, "duality", "skip", "not a cellulation")]
    P, dual_side, literal = duality_sides(R)
    detail = f"P={P}; unsigned B=AY^2 form {'agrees' if literal == P else 'differs'}"
    return [CheckRow(doc.name, "duality", "pass" if P == dual_side else "fail", detail)]


def check_trace_eq(doc: GraphDocument, jobs: int = 1) -> list[CheckRow]:
    R = _ribbon(doc)
    if R is None:
        return [CheckRow(doc.name, "trace-eq", "skip", "no rotation")]
    hist = surround_histogram(R)
    P = flow_poly_top(R.base, jobs=jobs)
    rows = []
    t5 = trace(R, 5, hist)
    ok = t5.value == eval_R5(P) and t5.per_label == r5_sectors(P)
    rows.append(CheckRow(doc.name, "trace-eq r=5", "pass" if ok else "fail",
                         f"tr5={format_golden(t5.value)}"))
    for r in (3, 7, 9):
        diff = abs(trace(R, r, hist).value - eval_Rr(P, r))
        rows.append(CheckRow(doc.name, f"trace-eq r={r}",
                             "pass" if diff <= NUMERIC_TOL else "fail", f"|diff|={diff:.3g}"))
    return rows


def check_cd(doc: GraphDocument, jobs: int = 1) -> list[CheckRow]:
    G = doc.graph
    whole = full_poly(G, jobs=jobs)
    rows = []
    for e in G.edges:
        if e.is_loop:
            continue
        ok = whole == full_poly(contract(G, e.id)) - full_poly(delete(G, e.id))
        rows.append(CheckRow(doc.name, "cd", "pass" if ok else "fail", f"edge {e.id}"))
    return rows or [CheckRow(doc.name, "cd", "skip", "no non-loop edge")]


CHECKS = {
    "golden": check_golden,
    "jw": check_jw,
    "planar-golden": check_planar_golden,
    "duality": check_duality,
    "trace-eq": check_trace_eq,
    "cd": check_cd,
}


def run_checks(name: str, docs: list[GraphDocument], jobs: int = 1) -> list[CheckRow]:
    fn = CHECKS[name]
    rows: list[CheckRow] = []
    for doc in docs:
        rows.extend(fn(doc, jobs=jobs))
    return rows
