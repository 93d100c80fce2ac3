"""Multigraphs with Z^2 gains: graphs mapped to the torus up to homotopy.

A closed walk in a gain graph picks up the sum of the gains of the edges
it traverses forwards minus those traversed backwards; that sum is the
homology class of the walk in H_1(T) = Z^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Structurally invalid graph or surgery request."""


class Edge(NamedTuple):
    id: str
    tail: str
    head: str
    gain: tuple[int, int]

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def reversed(self) -> Edge:
        return Edge(self.id, self.head, self.tail, (-self.gain[0], -self.gain[1]))


def primitive_direction(v: tuple[int, int]) -> tuple[int, int]:
    """Primitive vector spanning the same line as nonzero ``v``, sign-normalized."""
    a, b = v
    g = gcd(a, b)
    if g == 0:
        raise ValueError("the zero vector has no direction")
    a, b = a // g, b // g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return a, b


def lattice_rank(vectors: Iterable[tuple[int, int]]) -> int:
    """Rank over Q of a family of vectors in Z^2."""
    first = None
    for v in vectors:
        if v == (0, 0):
            continue
        if first is None:
            first = v
        elif first[0] * v[1] - first[1] * v[0] != 0:
            return 2
    return 0 if first is None else 1


class GainGraph:
    """Immutable multigraph whose oriented edges carry Z^2 gains.

    Loops and parallel edges are allowed; isolated vertices are legal.
    Vertex and edge ids are strings and keep their insertion order.
    """

    __slots__ = ("_vertices", "_edges", "_edge_index", "_vertex_index")

    def __init__(self, vertices: Sequence[str], edges: Iterable = ()):
        self._vertices = tuple(str(v) for v in vertices)
        if len(set(self._vertices)) != len(self._vertices):
            raise GraphError("duplicate vertex id")
        self._vertex_index = {v: i for i, v in enumerate(self._vertices)}
        parsed = []
        for e in edges:
            eid, tail, head, gain = e
            gain = (int(gain[0]), int(gain[1]))
            edge = Edge(str(eid), str(tail), str(head), gain)
            for end in (edge.tail, edge.head):
                if end not in self._vertex_index:
                    raise GraphError(f"edge {edge.id!r} references unknown vertex {end!r}")
            parsed.append(edge)
        self._edges = tuple(parsed)
        self._edge_index = {e.id: i for i, e in enumerate(self._edges)}
        if len(self._edge_index) != len(self._edges):
            raise GraphError("duplicate edge id")

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def edge(self, eid: str) -> Edge:
        try:
            return self._edges[self._edge_index[eid]]
        except KeyError:
            raise GraphError(f"unknown edge {eid!r}") from None

    def edge_position(self, eid: str) -> int:
        self.edge(eid)
        return self._edge_index[eid]

    def vertex_position(self, v: str) -> int:
        try:
            return self._vertex_index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_index

    def degree(self, v: str) -> int:
        self.vertex_position(v)
        return sum((e.tail == v) + (e.head == v) for e in self._edges)

    def incident(self, v: str) -> list[Edge]:
        return [e for e in self._edges if v in (e.tail, e.head)]

    def key(self) -> tuple:
        return (self._vertices, self._edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GainGraph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"GainGraph(V={self.num_vertices}, E={self.num_edges})"

    def with_edges(self, edges: Iterable, vertices: Sequence[str] | None = None) -> GainGraph:
        return GainGraph(self._vertices if vertices is None else vertices, edges)

    def reverse_edge(self, eid: str) -> GainGraph:
        pos = self.edge_position(eid)
        edges = list(self._edges)
        edges[pos] = edges[pos].reversed()
        return self.with_edges(edges)

    def full_mask(self) -> int:
        return (1 << self.num_edges) - 1

    def mask_of(self, edge_ids: Iterable[str]) -> int:
        mask = 0
        for eid in edge_ids:
            mask |= 1 << self.edge_position(eid)
        return mask


def delete(G: GainGraph, eid: str) -> GainGraph:
    """G with edge ``eid`` removed; all vertices kept."""
    G.edge(eid)
    return G.with_edges(e for e in G.edges if e.id != eid)


def delete_many(G: GainGraph, eids: Iterable[str]) -> GainGraph:
    drop = set(eids)
    for eid in drop:
        G.edge(eid)
    return G.with_edges(e for e in G.edges if e.id not in drop)


def gauge_shift(G: GainGraph, v: str, p: tuple[int, int]) -> GainGraph:
    """Homotope the map across vertex ``v`` by ``p``.

    Edges leaving ``v`` gain ``+p``, edges entering ``v`` gain ``-p``;
    loops at ``v`` are unchanged.
    """
    G.vertex_position(v)
    px, py = p
    out = []
    for e in G.edges:
        gx, gy = e.gain
        if e.tail == v and e.head != v:
            e = e._replace(gain=(gx + px, gy + py))
        elif e.head == v and e.tail != v:
            e = e._replace(gain=(gx - px, gy - py))
        out.append(e)
    return G.with_edges(out)


def contract(G: GainGraph, eid: str) -> GainGraph:
    """Contract non-loop edge ``eid``, merging its head into its tail.

    The head is first gauge-shifted so the edge has zero gain; parallel
    edges become loops carrying well-defined gains.
    """
    e = G.edge(eid)
    if e.is_loop:
        raise GraphError(f"cannot contract loop {eid!r}")
    G = gauge_shift(G, e.head, e.gain)
    u, v = e.tail, e.head
    out = []
    for f in G.edges:
        if f.id == eid:
            continue
        out.append(f._replace(tail=u if f.tail == v else f.tail,
                              head=u if f.head == v else f.head))
    return GainGraph([x for x in G.vertices if x != v], out)


def classify_loop(G: GainGraph, eid: str) -> str:
    """'trivial' for a null-homotopic loop, 'essential' otherwise."""
    e = G.edge(eid)
    if not e.is_loop:
        raise GraphError(f"edge {eid!r} is not a loop")
    return "trivial" if e.gain == (0, 0) else "essential"


@dataclass(frozen=True)
class HomologyProfile:
    edge_count: int
    comp: int
    n: int
    r: int
    c: int
    cbar: int
    s: int
    sperp: int


def _mask_bits(G: GainGraph, H) -> int:
    if H is None:
        return G.full_mask()
    if isinstance(H, int):
        if H < 0 or H >> G.num_edges:
            raise GraphError("selector mask does not fit the edge count")
        return H
    return G.mask_of(H)


def component_data(G: GainGraph, H=None):
    """Components of the spanning subgraph H with their cycle classes.

    Returns a list of ``(vertices, classes)`` pairs, one per component,
    where ``classes`` are the homology classes of the fundamental cycles
    of a spanning tree of that component.
    """
    mask = _mask_bits(G, H)
    adj: dict[str, list] = {v: [] for v in G.vertices}
    chosen = [e for i, e in enumerate(G.edges) if mask >> i & 1]
    for e in chosen:
        adj[e.tail].append(e)
        if not e.is_loop:
            adj[e.head].append(e)
    potential: dict[str, tuple[int, int]] = {}
    tree_edges: set[str] = set()
    comps = []
    for root in G.vertices:
        if root in potential:
            continue
        potential[root] = (0, 0)
        members = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            px = potential[x]
            for e in adj[x]:
                other = e.head if e.tail == x else e.tail
                if other in potential:
                    continue
                g = e.gain if e.tail == x else (-e.gain[0], -e.gain[1])
                potential[other] = (px[0] + g[0], px[1] + g[1])
                tree_edges.add(e.id)
                members.append(other)
                stack.append(other)
        comps.append(members)
    where = {}
    for i, members in enumerate(comps):
        for v in members:
            where[v] = i
    classes: list[list] = [[] for _ in comps]
    for e in chosen:
        if e.id in tree_edges:
            continue
        pu, pv = potential[e.tail], potential[e.head]
        z = (e.gain[0] + pu[0] - pv[0], e.gain[1] + pu[1] - pv[1])
        classes[where[e.tail]].append(z)
    return list(zip(comps, classes))


def homology_profile(G: GainGraph, H=None) -> HomologyProfile:
    """Homological invariants of the spanning subgraph selected by ``H``.

    ``H`` is an edge bitmask, an iterable of edge ids, or None for G itself.
    """
    mask = _mask_bits(G, H)
    data = component_data(G, mask)
    edge_count = bin(mask).count("1")
    comp = len(data)
    n = edge_count - G.num_vertices + comp
    ranks = [lattice_rank(cls) for _, cls in data]
    r = lattice_rank(z for _, cls in data for z in cls)
    c = sum(1 for k in ranks if k == 0)
    cbar = sum(1 for k in ranks if k > 0) if r == 1 else 0
    return HomologyProfile(
        edge_count=edge_count, comp=comp, n=n, r=r, c=c, cbar=cbar,
        s=int(r == 2), sperp=int(r == 0),
    )
