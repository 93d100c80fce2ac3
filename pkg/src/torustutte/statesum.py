"""State sums over spanning subgraphs and the sector evaluations R_5, R_10, R_r."""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .gaingraph import GainGraph, GraphError, contract, delete, primitive_direction
from .golden import ONE, PHI, ZERO, GoldenNumber
from .polynomial import MultiPoly, poly_eval
from .roots import check_level, even_labels, spin_one_eigenvalue_float

DEFAULT_EDGE_CAP = 26


class ResourceCapError(RuntimeError):
    """Requested computation exceeds the configured size cap."""


def _check_cap(G: GainGraph, cap: int | None) -> None:
    cap = DEFAULT_EDGE_CAP if cap is None else cap
    if G.num_edges > cap:
        raise ResourceCapError(
            f"{G.num_edges} edges exceeds the brute-force cap of {cap}"
        )


def _enumerate_chunk(G: GainGraph, low: int, high_pattern: int) -> Counter:
    """Profile histogram over masks whose bits >= ``low`` equal ``high_pattern``.

    Depth-first over the free low edges with a gain-weighted union-find
    that is rolled back on the way up.
    """
    V = G.num_vertices
    vindex = {v: i for i, v in enumerate(G.vertices)}
    edges = [(vindex[e.tail], vindex[e.head], e.gain[0], e.gain[1]) for e in G.edges]

    parent = list(range(V))
    size = [1] * V
    offx = [0] * V
    offy = [0] * V
    # component span: rank 0, rank 1 with a primitive direction, or rank 2
    srank = [0] * V
    sdir: list = [None] * V
    state = {"comp": V, "c": V, "n2": 0, "edges": 0}
    dircount: dict = {}
    hist: Counter = Counter()

    def find(x):
        px = py = 0
        while parent[x] != x:
            px += offx[x]
            py += offy[x]
            x = parent[x]
        return x, px, py

    def drop_span(root):
        k = srank[root]
        if k == 0:
            state["c"] -= 1
        elif k == 2:
            state["n2"] -= 1
        else:
            d = sdir[root]
            left = dircount[d] - 1
            if left:
                dircount[d] = left
            else:
                del dircount[d]

    def add_span(root):
        k = srank[root]
        if k == 0:
            state["c"] += 1
        elif k == 2:
            state["n2"] += 1
        else:
            d = sdir[root]
            dircount[d] = dircount.get(d, 0) + 1

    def include(i):
        """Add edge i; return an undo record."""
        u, v, gx, gy = edges[i]
        ru, pux, puy = find(u)
        rv, pvx, pvy = find(v)
        state["edges"] += 1
        if ru != rv:
            if size[ru] < size[rv]:
                # hang ru under rv: shift ru's tree so p(u) + g = p(v)
                child, root = ru, rv
                dx, dy = pvx - gx - pux, pvy - gy - puy
            else:
                child, root = rv, ru
                dx, dy = pux + gx - pvx, puy + gy - pvy
            saved = (srank[root], sdir[root])
            drop_span(child)
            drop_span(root)
            k1, d1 = srank[root], sdir[root]
            k2, d2 = srank[child], sdir[child]
            if k1 == 2 or k2 == 2:
                k, d = 2, None
            elif k1 == 0:
                k, d = k2, d2
            elif k2 == 0 or d1 == d2:
                k, d = k1, d1
            else:
                k, d = 2, None
            srank[root], sdir[root] = k, d
            add_span(root)
            parent[child] = root
            offx[child], offy[child] = dx, dy
            size[root] += size[child]
            state["comp"] -= 1
            return (0, child, root, saved)
        zx, zy = gx + pux - pvx, gy + puy - pvy
        if (zx or zy) and srank[ru] != 2:
            d = primitive_direction((zx, zy))
            saved = (srank[ru], sdir[ru])
            if srank[ru] == 0:
                drop_span(ru)
                srank[ru], sdir[ru] = 1, d
                add_span(ru)
                return (1, ru, saved)
            if sdir[ru] != d:
                drop_span(ru)
                srank[ru], sdir[ru] = 2, None
                add_span(ru)
                return (1, ru, saved)
        return (2,)

    def undo(rec):
        state["edges"] -= 1
        kind = rec[0]
        if kind == 0:
            _, child, root, saved = rec
            drop_span(root)
            srank[root], sdir[root] = saved
            add_span(root)
            add_span(child)
            parent[child] = child
            offx[child] = offy[child] = 0
            size[root] -= size[child]
            state["comp"] += 1
        elif kind == 1:
            _, root, saved = rec
            drop_span(root)
            srank[root], sdir[root] = saved
            add_span(root)

    def record():
        ndirs = len(dircount)
        if state["n2"] or ndirs > 1:
            r = 2
        else:
            r = ndirs
        eh = state["edges"]
        n = eh - V + state["comp"]
        cbar = sum(dircount.values()) if r == 1 else 0
        hist[(eh, n, state["c"], cbar, int(r == 2), int(r == 0))] += 1

    def dfs(i):
        if i < 0:
            record()
            return
        dfs(i - 1)
        rec = include(i)
        dfs(i - 1)
        undo(rec)

    for i in range(low, G.num_edges):
        if high_pattern >> (i - low) & 1:
            include(i)
    dfs(low - 1)
    return hist


def _chunk_worker(args):
    G, low, pattern = args
    return _enumerate_chunk(G, low, pattern)


def profile_histogram(G: GainGraph, jobs: int = 1, cap: int | None = None) -> Counter:
    """Count spanning subgraphs by ``(E(H), n, c, cbar, s, sperp)``.

    With ``jobs > 1`` the 2^E masks are split into contiguous ranges
    (fixed high bits) evaluated in worker processes and summed.
    """
    _check_cap(G, cap)
    E = G.num_edges
    if jobs <= 1 or E < 8:
        return _enumerate_chunk(G, E, 0)
    split = min(E, max(1, math.ceil(math.log2(jobs * 4))))
    low = E - split
    tasks = [(G, low, pattern) for pattern in range(1 << split)]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_chunk_worker, tasks):
            total.update(part)
    return total


def _sign(E: int, eh: int) -> int:
    return -1 if (E - eh) % 2 else 1


def full_poly(G: GainGraph, jobs: int = 1, cap: int | None = None) -> MultiPoly:
    """The five-variable state sum in X, Y, W, A, B."""
    E = G.num_edges
    terms: dict = {}
    for (eh, n, c, cbar, s, sp), count in profile_histogram(G, jobs, cap).items():
        key = (c, n, cbar, s, sp, 0)
        terms[key] = terms.get(key, 0) + _sign(E, eh) * count
    return MultiPoly(terms)


def flow_poly_top(G: GainGraph, jobs: int = 1, cap: int | None = None) -> MultiPoly:
    """Topological flow polynomial in Y, W, A (X = B = 1)."""
    E = G.num_edges
    terms: dict = {}
    for (eh, n, c, cbar, s, sp), count in profile_histogram(G, jobs, cap).items():
        key = (0, n, cbar, s, 0, 0)
        terms[key] = terms.get(key, 0) + _sign(E, eh) * count
    return MultiPoly(terms)


def chrom_poly_top(G: GainGraph, jobs: int = 1, cap: int | None = None) -> MultiPoly:
    """Topological chromatic polynomial in X, U, B."""
    E = G.num_edges
    hist = profile_histogram(G, jobs, cap)
    c_full = next(c for (eh, n, c, cbar, s, sp) in hist if eh == E)
    terms: dict = {}
    for (eh, n, c, cbar, s, sp), count in hist.items():
        key = (c - c_full, 0, 0, 0, sp, cbar)
        terms[key] = terms.get(key, 0) + _sign(E, eh) * count
    return MultiPoly(terms)


# --- sector weights -------------------------------------------------------

PHI_SQ = PHI * PHI
R5_Y = PHI_SQ
R5_A = PHI_SQ.inverse()
R5_SECTORS = ((ONE, 1), (PHI ** -4, 1))

R10_Y = PHI + 2
R10_A = (2 * R10_Y).inverse()
R10_SECTORS = (
    ((PHI + 2) / R10_Y, 1),
    ((1 + PHI ** -2) / R10_Y, 1),
    (ZERO, 2),
)


def _as_poly(G_or_P, jobs: int = 1) -> MultiPoly:
    if isinstance(G_or_P, MultiPoly):
        return G_or_P
    return flow_poly_top(G_or_P, jobs=jobs)


def _sector_sum(P: MultiPoly, Y, A, sectors):
    total = ZERO
    for W, mult in sectors:
        total = total + mult * GoldenNumber.coerce(poly_eval(P, {"Y": Y, "W": W, "A": A}))
    return total


def eval_R5(G, jobs: int = 1) -> GoldenNumber:
    """Sum of the two level-5 sector evaluations of P (exact)."""
    return _sector_sum(_as_poly(G, jobs), R5_Y, R5_A, R5_SECTORS)


def r5_sectors(G, jobs: int = 1) -> dict[int, GoldenNumber]:
    """The two R_5 summands keyed by the label they correspond to (0 and 2)."""
    P = _as_poly(G, jobs)
    return {
        j: GoldenNumber.coerce(poly_eval(P, {"Y": R5_Y, "W": W, "A": R5_A}))
        for j, (W, _) in zip((0, 2), R5_SECTORS)
    }


def eval_R10(G, jobs: int = 1) -> GoldenNumber:
    """Weighted four-sector sum at Y = phi + 2 (exact)."""
    return _sector_sum(_as_poly(G, jobs), R10_Y, R10_A, R10_SECTORS)


def sector_weights_float(r: int) -> dict[int, tuple[float, float, float]]:
    """``{j: (Y, W_j, A)}`` for the level-r sectors in floating point.

    ``Y*W_j - 1`` is the eigenvalue of an essential spin-1 loop around
    the label-j core; it agrees with the spin-1/2 eigenvalue at r = 5.
    """
    check_level(r)
    d = 2 * math.cos(math.pi / r)
    Y = d * d
    return {
        j: (Y, (1 + spin_one_eigenvalue_float(j, r)) / Y, 1 / Y)
        for j in even_labels(r)
    }


def rr_sectors(G, r: int, jobs: int = 1) -> dict[int, float]:
    P = _as_poly(G, jobs)
    return {
        j: float(poly_eval(P, {"Y": Y, "W": W, "A": A}, one=1.0))
        for j, (Y, W, A) in sector_weights_float(r).items()
    }


def eval_Rr(G, r: int, jobs: int = 1) -> float:
    """Level-r sector sum of P, numerically."""
    return math.fsum(rr_sectors(G, r, jobs).values())


# --- deletion-contraction -------------------------------------------------

def _loops_only_poly(G: GainGraph) -> MultiPoly:
    return full_poly(G)


def dc_eval(G: GainGraph, which: str = "ptilde", max_depth: int = 400) -> MultiPoly:
    """Deletion-contraction evaluation of the state-sum polynomials.

    Recurses on non-loop edges with ``G = G/e - G\\e``; graphs made only
    of loops are summed directly.  Results are memoized on the exact
    graph.  ``which`` selects ``ptilde`` or ``p``.
    """
    if which not in ("ptilde", "p"):
        raise ValueError(f"unknown polynomial {which!r}")
    memo: dict = {}

    def rec(H: GainGraph, depth: int) -> MultiPoly:
        if depth > max_depth:
            raise RecursionError("deletion-contraction depth guard exceeded")
        key = H.key()
        if key in memo:
            return memo[key]
        bridge = next((e for e in H.edges if not e.is_loop), None)
        if bridge is None:
            value = _loops_only_poly(H)
        else:
            value = rec(contract(H, bridge.id), depth + 1) - rec(delete(H, bridge.id), depth + 1)
        memo[key] = value
        return value

    result = rec(G, 0)
    if which == "p":
        result = result.substitute(X=1, B=1)
    return result


def classical_flow_poly(G: GainGraph) -> MultiPoly:
    """Flow polynomial in Y, ignoring gains (ordinary deletion-contraction)."""
    memo: dict = {}

    def rec(H: GainGraph) -> MultiPoly:
        key = (H.vertices, tuple((e.id, e.tail, e.head) for e in H.edges))
        if key in memo:
            return memo[key]
        if not H.edges:
            value = MultiPoly.constant(1)
        else:
            e = H.edges[0]
            rest = delete(H, e.id)
            if e.is_loop:
                value = (MultiPoly.var("Y") - 1) * rec(rest)
            else:
                zeroed = H.with_edges(f._replace(gain=(0, 0)) for f in H.edges)
                value = rec(contract(zeroed, e.id)) - rec(rest)
        memo[key] = value
        return value

    return rec(G)
