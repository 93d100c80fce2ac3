"""Rotation systems on gain graphs: faces, surround loops and duals.

Half-edges ("darts") are numbered ``2*i`` for the tail end of edge ``i``
and ``2*i + 1`` for its head end.  A face is traced by leaving along a
dart, arriving at the opposite end, and continuing with the rotation
successor of that end.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .gaingraph import GainGraph, GraphError, homology_profile, primitive_direction


class RibbonError(GraphError):
    """Malformed rotation system or non-cellular input."""


def dart_token(G: GainGraph, dart: int) -> str:
    return G.edges[dart >> 1].id + ("-" if dart & 1 else "+")


def parse_token(G: GainGraph, token: str) -> int:
    if len(token) < 2 or token[-1] not in "+-":
        raise RibbonError(f"bad rotation token {token!r}")
    pos = G.edge_position(token[:-1])
    return 2 * pos + (token[-1] == "-")


@dataclass(frozen=True)
class BoundaryCircle:
    walk: tuple[int, ...]
    homology_class: tuple[int, int]

    @property
    def trivial(self) -> bool:
        return self.homology_class == (0, 0)


class RibbonGraph:
    """A gain graph together with a cyclic order of half-edges at each vertex."""

    __slots__ = ("base", "rotation", "_succ", "_dart_vertex", "_dart_gain")

    def __init__(self, base: GainGraph, rotation: Mapping[str, Sequence]):
        self.base = base
        rot = {}
        seen = set()
        for v in base.vertices:
            darts = []
            for t in rotation.get(v, ()):
                h = parse_token(base, t) if isinstance(t, str) else int(t)
                e = base.edges[h >> 1]
                end = e.head if h & 1 else e.tail
                if end != v:
                    raise RibbonError(
                        f"half-edge {dart_token(base, h)} listed at {v!r} but attached to {end!r}"
                    )
                if h in seen:
                    raise RibbonError(f"half-edge {dart_token(base, h)} listed twice")
                seen.add(h)
                darts.append(h)
            rot[v] = tuple(darts)
        extra = set(rotation) - set(base.vertices)
        if extra:
            raise RibbonError(f"rotation for unknown vertices {sorted(extra)}")
        missing = set(range(2 * base.num_edges)) - seen
        if missing:
            raise RibbonError(
                "half-edges missing from rotation: "
                + ", ".join(dart_token(base, h) for h in sorted(missing))
            )
        self.rotation = rot
        succ = [0] * (2 * base.num_edges)
        dart_vertex = [0] * (2 * base.num_edges)
        for vi, v in enumerate(base.vertices):
            darts = rot[v]
            for k, h in enumerate(darts):
                succ[h] = darts[(k + 1) % len(darts)]
                dart_vertex[h] = vi
        self._succ = succ
        self._dart_vertex = dart_vertex
        gains = []
        for e in base.edges:
            gains.append(e.gain)
            gains.append((-e.gain[0], -e.gain[1]))
        self._dart_gain = gains

    def tokens(self) -> dict[str, list[str]]:
        return {v: [dart_token(self.base, h) for h in darts] for v, darts in self.rotation.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, RibbonGraph):
            return NotImplemented
        return self.base == other.base and self.rotation == other.rotation

    def __hash__(self) -> int:
        return hash((self.base, tuple(sorted(self.rotation.items()))))

    def __repr__(self) -> str:
        return f"RibbonGraph(V={self.base.num_vertices}, E={self.base.num_edges})"

    def restrict(self, mask: int) -> RibbonGraph:
        """Spanning ribbon subgraph on the edges selected by ``mask``."""
        G = self.base
        keep = [e for i, e in enumerate(G.edges) if mask >> i & 1]
        sub = GainGraph(G.vertices, keep)
        rot = {
            v: [dart_token(G, h) for h in darts if mask >> (h >> 1) & 1]
            for v, darts in self.rotation.items()
        }
        return RibbonGraph(sub, rot)

    def euler_characteristic(self) -> int:
        return self.base.num_vertices - self.base.num_edges + len(faces(self))


def _trace_circles(R: RibbonGraph, mask: int) -> list[BoundaryCircle]:
    G = R.base
    present = [h for h in range(2 * G.num_edges) if mask >> (h >> 1) & 1]
    succ = {}
    for darts in R.rotation.values():
        live = [h for h in darts if mask >> (h >> 1) & 1]
        for k, h in enumerate(live):
            succ[h] = live[(k + 1) % len(live)]
    circles = []
    done = set()
    for start in present:
        if start in done:
            continue
        walk = []
        cx = cy = 0
        h = start
        while h not in done:
            done.add(h)
            walk.append(h)
            gx, gy = R._dart_gain[h]
            cx += gx
            cy += gy
            h = succ[h ^ 1]
        circles.append(BoundaryCircle(tuple(walk), (cx, cy)))
    for v, darts in R.rotation.items():
        if not any(mask >> (h >> 1) & 1 for h in darts):
            circles.append(BoundaryCircle((), (0, 0)))
    return circles


def faces(R: RibbonGraph) -> list[BoundaryCircle]:
    """Boundary circles of the ribbon surface; one per isolated vertex too."""
    return _trace_circles(R, R.base.full_mask())


def surround_loops(R: RibbonGraph, H=None) -> list[BoundaryCircle]:
    """Boundary of a regular neighbourhood of the spanning subgraph ``H``."""
    if H is None:
        mask = R.base.full_mask()
    elif isinstance(H, int):
        mask = H
    else:
        mask = R.base.mask_of(H)
    return _trace_circles(R, mask)


def surround_counts(R: RibbonGraph, mask: int) -> tuple[int, int]:
    """``(t, m)``: trivial and essential surround circles of ``mask``.

    Raises if the essential circles are not mutually parallel or come in
    odd number, which cannot happen for a graph embedded in the torus.
    """
    t = m = 0
    direction = None
    for circle in _trace_circles(R, mask):
        if circle.trivial:
            t += 1
            continue
        m += 1
        d = primitive_direction(circle.homology_class)
        if direction is None:
            direction = d
        elif d != direction:
            raise RibbonError(
                "essential surround circles are not parallel; "
                "rotation and gains do not describe a torus embedding"
            )
    if m % 2:
        raise RibbonError("odd number of essential surround circles")
    return t, m


@dataclass
class CellulationReport:
    ok: bool
    reasons: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def validate_cellulation(R: RibbonGraph) -> CellulationReport:
    """Check that R is a 2-cell embedding in the torus matching its gains."""
    reasons = []
    fs = faces(R)
    G = R.base
    chi = G.num_vertices - G.num_edges + len(fs)
    if chi != 0:
        reasons.append(f"Euler characteristic V-E+F = {chi}, expected 0")
    bad = [i for i, f in enumerate(fs) if not f.trivial]
    if bad:
        reasons.append(f"faces {bad} have nonzero homology class")
    if G.num_vertices and homology_profile(G).r != 2:
        reasons.append("edge gains do not generate Z^2")
    if G.num_vertices == 0:
        reasons.append("empty graph")
    return CellulationReport(not reasons, reasons)


# --- dual ------------------------------------------------------------------

def _fundamental_cycles(G: GainGraph):
    """Fundamental cycles as ``(coefficients, class)``; coefficients keyed by edge position."""
    parent_edge: dict[str, tuple[int, int]] = {}
    potential: dict[str, tuple[int, int]] = {}
    adj: dict[str, list] = {v: [] for v in G.vertices}
    for i, e in enumerate(G.edges):
        adj[e.tail].append((i, e.head, 1))
        if not e.is_loop:
            adj[e.head].append((i, e.tail, -1))
    tree = set()
    for root in G.vertices:
        if root in potential:
            continue
        potential[root] = (0, 0)
        stack = [root]
        while stack:
            x = stack.pop()
            for i, y, sgn in adj[x]:
                if y in potential:
                    continue
                g = G.edges[i].gain
                potential[y] = (potential[x][0] + sgn * g[0], potential[x][1] + sgn * g[1])
                parent_edge[y] = (i, sgn)
                tree.add(i)
                stack.append(y)

    def path_to_root(v):
        coeffs: dict[int, int] = {}
        while v in parent_edge:
            i, sgn = parent_edge[v]
            coeffs[i] = coeffs.get(i, 0) + sgn
            e = G.edges[i]
            v = e.tail if sgn == 1 else e.head
        return coeffs

    cycles = []
    for i, e in enumerate(G.edges):
        if i in tree:
            continue
        coeffs = {i: 1}
        for j, c in path_to_root(e.tail).items():
            coeffs[j] = coeffs.get(j, 0) + c
        for j, c in path_to_root(e.head).items():
            coeffs[j] = coeffs.get(j, 0) - c
        pu, pv = potential[e.tail], potential[e.head]
        z = (e.gain[0] + pu[0] - pv[0], e.gain[1] + pu[1] - pv[1])
        cycles.append(({j: c for j, c in coeffs.items() if c}, z))
    return cycles


def _combine(c1, k1, c2, k2):
    out = dict()
    for j, c in c1.items():
        out[j] = out.get(j, 0) + k1 * c
    for j, c in c2.items():
        out[j] = out.get(j, 0) + k2 * c
    return {j: c for j, c in out.items() if c}


def homology_basis_cycles(G: GainGraph):
    """Integer cycles of G whose classes are (1, 0) and (0, 1).

    Column-reduces the 2 x k matrix of fundamental-cycle classes by
    unimodular operations, carrying the cycles along.
    """
    cols = [[dict(c), list(z)] for c, z in _fundamental_cycles(G)]

    def reduce_row(row, pool):
        pool = [col for col in pool]
        while True:
            live = [col for col in pool if col[1][row] != 0]
            if len(live) <= 1:
                return live[0] if live else None, [col for col in pool if col[1][row] == 0]
            live.sort(key=lambda col: abs(col[1][row]))
            pivot = live[0]
            for col in live[1:]:
                q = col[1][row] // pivot[1][row]
                col[0] = _combine(col[0], 1, pivot[0], -q)
                col[1] = [col[1][0] - q * pivot[1][0], col[1][1] - q * pivot[1][1]]

    pivot_x, rest = reduce_row(0, cols)
    pivot_y, _ = reduce_row(1, rest)
    if pivot_x is None or pivot_y is None or abs(pivot_x[1][0]) != 1 or abs(pivot_y[1][1]) != 1:
        raise RibbonError("edge gains do not generate Z^2")
    gy = pivot_y[1][1]
    cycle_y = _combine(pivot_y[0], gy, {}, 0)
    gx = pivot_x[1][0]
    off = pivot_x[1][1]
    cycle_x = _combine(pivot_x[0], gx, cycle_y, -off * gx)
    return cycle_x, cycle_y


def dual(R: RibbonGraph, vertex_prefix: str = "f") -> RibbonGraph:
    """Dual cellulation.

    One dual vertex per face, named ``f0, f1, ...`` in tracing order.  The
    dual of edge ``e`` keeps its id and runs from the face containing the
    tail-side half-edge to the face containing the head-side one.  Dual
    gains pair each dual edge with integral cycles representing a basis
    of H_1(T) through the intersection form.
    """
    report = validate_cellulation(R)
    if not report:
        raise RibbonError("dual requires a cellulation: " + "; ".join(report.reasons))
    G = R.base
    fs = faces(R)
    face_of = {}
    for k, f in enumerate(fs):
        for h in f.walk:
            face_of[h] = k
    names = [f"{vertex_prefix}{k}" for k in range(len(fs))]
    cycle_x, cycle_y = homology_basis_cycles(G)
    edges = []
    for i, e in enumerate(G.edges):
        gain = (-cycle_y.get(i, 0), cycle_x.get(i, 0))
        edges.append((e.id, names[face_of[2 * i]], names[face_of[2 * i + 1]], gain))
    base = GainGraph(names, edges)
    rotation = {names[k]: [dart_token(G, h) for h in f.walk] for k, f in enumerate(fs)}
    return RibbonGraph(base, rotation)


# --- surgery ---------------------------------------------------------------

def fresh_id(taken, prefix: str) -> str:
    k = 0
    while f"{prefix}{k}" in taken:
        k += 1
    return f"{prefix}{k}"


def ribbon_delete(R: RibbonGraph, eid: str) -> RibbonGraph:
    pos = R.base.edge_position(eid)
    return R.restrict(R.base.full_mask() & ~(1 << pos))


def ribbon_contract(R: RibbonGraph, eid: str) -> RibbonGraph:
    """Contract a non-loop edge, splicing the head's rotation into the tail's."""
    from .gaingraph import contract

    G = R.base
    e = G.edge(eid)
    base = contract(G, eid)
    tok = R.tokens()
    u_rot, v_rot = tok[e.tail], tok[e.head]
    i, j = u_rot.index(eid + "+"), v_rot.index(eid + "-")
    merged = u_rot[i + 1:] + u_rot[:i] + v_rot[j + 1:] + v_rot[:j]
    rot = {v: t for v, t in tok.items() if v != e.head}
    rot[e.tail] = merged
    return RibbonGraph(base, rot)


def subdivide(R: RibbonGraph, eid: str, vertex: str | None = None,
              new_edge: str | None = None) -> RibbonGraph:
    """Insert a 2-valent vertex in the middle of ``eid``."""
    G = R.base
    e = G.edge(eid)
    w = vertex or fresh_id(set(G.vertices), "s")
    f = new_edge or fresh_id({x.id for x in G.edges}, "d")
    edges = []
    for x in G.edges:
        if x.id == eid:
            edges.append((eid, e.tail, w, e.gain))
            edges.append((f, w, e.head, (0, 0)))
        else:
            edges.append(tuple(x))
    tok = R.tokens()
    tok[e.head] = [f + "-" if t == eid + "-" else t for t in tok[e.head]]
    tok[w] = [eid + "-", f + "+"]
    return RibbonGraph(GainGraph(list(G.vertices) + [w], edges), tok)


def corners(R: RibbonGraph):
    """Every corner as ``(face index, position in walk)``."""
    return [(k, i) for k, f in enumerate(faces(R)) for i in range(len(f.walk))]


def add_chord(R: RibbonGraph, face_index: int, i: int, j: int,
              new_edge: str | None = None) -> RibbonGraph:
    """Join two corners of one face by a new edge drawn inside that face.

    Corner ``i`` of a face walk is where its ``i``-th half-edge departs.
    The gain is chosen so both resulting faces keep the class of the old
    one's pieces: the new edge is homotopic to the walk between corners.
    """
    G = R.base
    walk = faces(R)[face_index].walk
    if not walk:
        raise RibbonError("cannot draw a chord in the face of an isolated vertex")
    i, j = sorted((i % len(walk), j % len(walk)))
    eid = new_edge or fresh_id({x.id for x in G.edges}, "c")
    gx = gy = 0
    for h in walk[i:j]:
        dx, dy = R._dart_gain[h]
        gx += dx
        gy += dy
    vi = G.vertices[R._dart_vertex[walk[i]]]
    vj = G.vertices[R._dart_vertex[walk[j]]]
    base = GainGraph(G.vertices, [tuple(x) for x in G.edges] + [(eid, vi, vj, (gx, gy))])
    tok = R.tokens()

    def insert_before(v, dart, token):
        rot = tok[v]
        k = rot.index(dart_token(G, dart))
        rot.insert(k, token)

    # insert the head end first; positions are looked up by token so the
    # order only matters when both corners sit at the same vertex
    insert_before(vj, walk[j], eid + "-")
    insert_before(vi, walk[i], eid + "+")
    return RibbonGraph(base, tok)


def add_isolated_loop(R: RibbonGraph, gain=(0, 0)) -> RibbonGraph:
    G = R.base
    v = fresh_id(set(G.vertices), "z")
    eid = fresh_id({x.id for x in G.edges}, "l")
    base = GainGraph(list(G.vertices) + [v], [tuple(x) for x in G.edges] + [(eid, v, v, gain)])
    tok = R.tokens()
    tok[v] = [eid + "+", eid + "-"]
    return RibbonGraph(base, tok)


def truncate_vertex(R: RibbonGraph, v: str) -> RibbonGraph:
    """Replace a 3-valent vertex by a small triangle."""
    G = R.base
    legs = R.tokens()[v]
    if len(legs) != 3:
        raise RibbonError(f"vertex {v!r} is not 3-valent")
    vids = set(G.vertices)
    news = []
    for _ in range(3):
        w = fresh_id(vids, "t")
        vids.add(w)
        news.append(w)
    eids = {x.id for x in G.edges}
    tri = []
    for _ in range(3):
        t = fresh_id(eids, "q")
        eids.add(t)
        tri.append(t)
    edges = []
    for x in G.edges:
        tail, head = x.tail, x.head
        if tail == v:
            tail = news[legs.index(x.id + "+")]
        if head == v:
            head = news[legs.index(x.id + "-")]
        edges.append((x.id, tail, head, x.gain))
    for k in range(3):
        edges.append((tri[k], news[k], news[(k + 1) % 3], (0, 0)))
    verts = [x for x in G.vertices if x != v] + news
    tok = {x: t for x, t in R.tokens().items() if x != v}
    for k in range(3):
        tok[news[k]] = [legs[k], tri[k] + "+", tri[(k - 1) % 3] + "-"]
    return RibbonGraph(GainGraph(verts, edges), tok)
