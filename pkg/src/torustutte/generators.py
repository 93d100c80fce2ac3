"""Seeded random gain graphs and torus-embedded ribbon graphs."""

from __future__ import annotations

import random

from .fixtures import essential_loops, k4, prism, theta, torus_grid, trivial_loops
from .gaingraph import GainGraph
from .moves import ih_flip_ribbon
from .ribbon import (
    RibbonGraph,
    add_chord,
    add_isolated_loop,
    faces,
    ribbon_contract,
    ribbon_delete,
    subdivide,
    truncate_vertex,
)


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_gain_graph(seed, max_vertices: int = 5, max_edges: int = 10,
                      gain_range: int = 2, loop_prob: float = 0.15) -> GainGraph:
    """Arbitrary multigraph with random gains (not necessarily embeddable)."""
    rng = _rng(seed)
    V = rng.randint(1, max_vertices)
    E = rng.randint(0, max_edges)
    vs = [f"v{i}" for i in range(V)]
    es = []
    for k in range(E):
        u = rng.randrange(V)
        w = u if rng.random() < loop_prob or V == 1 else rng.randrange(V)
        g = (rng.randint(-gain_range, gain_range), rng.randint(-gain_range, gain_range))
        if rng.random() < 0.3:
            g = (0, 0)
        es.append((f"e{k}", vs[u], vs[w], g))
    return GainGraph(vs, es)


def _random_chord(rng: random.Random, R: RibbonGraph) -> RibbonGraph:
    fs = faces(R)
    choices = [k for k, f in enumerate(fs) if f.walk]
    k = rng.choice(choices)
    n = len(fs[k].walk)
    return add_chord(R, k, rng.randrange(n), rng.randrange(n))


def random_cellulation(seed, max_edges: int = 10, steps: int | None = None) -> RibbonGraph:
    """Random 2-cell embedding in the torus built from small seeds.

    Moves: chords across faces, subdivisions, contractions, and deletion
    of edges separating two distinct faces; all preserve cellularity.
    """
    rng = _rng(seed)
    R = rng.choice([torus_grid(1, 1), theta(), torus_grid(2, 1)])
    steps = rng.randint(0, 3 * max_edges) if steps is None else steps
    for _ in range(steps):
        E = R.base.num_edges
        move = rng.random()
        if move < 0.55 and E < max_edges:
            R = _random_chord(rng, R)
        elif move < 0.75 and E < max_edges:
            R = subdivide(R, rng.choice(R.base.edges).id)
        elif move < 0.88:
            bridges = [e.id for e in R.base.edges if not e.is_loop]
            if bridges and R.base.num_vertices > 1:
                R = ribbon_contract(R, rng.choice(bridges))
        else:
            fs = faces(R)
            side = {}
            for k, f in enumerate(fs):
                for h in f.walk:
                    side[h] = k
            separating = [e.id for i, e in enumerate(R.base.edges)
                          if side[2 * i] != side[2 * i + 1]]
            if separating:
                R = ribbon_delete(R, rng.choice(separating))
    while R.base.num_edges > max_edges:
        bridges = [e.id for e in R.base.edges if not e.is_loop]
        R = ribbon_contract(R, rng.choice(bridges))
    return R


def random_ribbon_graph(seed, max_edges: int = 12) -> RibbonGraph:
    """Random graph embedded in the torus, not necessarily cellular.

    A random cellulation with a random subset of its edges removed, plus
    occasional free loops drawn inside a face.
    """
    rng = _rng(seed)
    extra = rng.choice([0, 0, 0, 1])
    R = random_cellulation(rng, max_edges=max_edges - extra)
    drop = rng.choice([0.0, 0.1, 0.25, 0.5])
    for e in list(R.base.edges):
        if rng.random() < drop:
            R = ribbon_delete(R, e.id)
    for _ in range(extra):
        R = add_isolated_loop(R)
    return R


def _expand_across_face(rng: random.Random, R: RibbonGraph) -> RibbonGraph:
    """Subdivide two edge-sides of one face and join the new vertices."""
    fs = faces(R)
    k = rng.choice([i for i, f in enumerate(fs) if f.walk])
    walk = fs[k].walk
    free = {v for v in R.base.vertices if R.base.degree(v) == 2}
    sides = [h for h in walk if R.base.edges[h >> 1].tail not in free]
    if not sides:
        return R
    e1 = R.base.edges[rng.choice(sides) >> 1].id
    e2 = R.base.edges[rng.choice(sides) >> 1].id
    R = subdivide(R, e1)
    w1 = R.base.vertices[-1]
    R = subdivide(R, e2)
    w2 = R.base.vertices[-1]
    # pick a face that has corners at both new vertices
    options = []
    for k, f in enumerate(faces(R)):
        pos1 = [p for p, h in enumerate(f.walk) if R.base.vertices[R._dart_vertex[h]] == w1]
        pos2 = [p for p, h in enumerate(f.walk) if R.base.vertices[R._dart_vertex[h]] == w2]
        options += [(k, p, q) for p in pos1 for q in pos2 if p != q]
    k, p, q = rng.choice(options)
    return add_chord(R, k, p, q)


def random_cubic_torus(seed, max_edges: int = 18) -> RibbonGraph:
    """Random cubic graph on the torus grown by I-H flips and expansions.

    Starts from theta (rank 2), essential loops or a circular ladder
    (rank 1), or K4 / prism / free trivial loops (rank 0); expansions are
    vertex truncations and new edges across a face.
    """
    rng = _rng(seed)
    seeds = [theta, theta, theta, lambda: circular_ladder(rng.randint(1, 3)),
             lambda: essential_loops(1), k4, prism, lambda: trivial_loops(1)]
    R = rng.choice(seeds)()
    target = rng.randint(R.base.num_edges, max_edges)
    for _ in range(40):
        E = R.base.num_edges
        flippable = [e.id for e in R.base.edges if not e.is_loop
                     and R.base.degree(e.tail) == 3 and R.base.degree(e.head) == 3]
        roll = rng.random()
        if roll < 0.4 and flippable:
            R = ih_flip_ribbon(R, rng.choice(flippable))
        elif E + 3 <= target:
            trivalent = [v for v in R.base.vertices if R.base.degree(v) == 3]
            if roll < 0.7 and trivalent:
                R = truncate_vertex(R, rng.choice(trivalent))
            else:
                R = _expand_across_face(rng, R)
        elif not flippable:
            break
    return R


def circular_ladder(n: int) -> RibbonGraph:
    """C_n x K_2 wrapped around the torus so both rims are essential."""
    vs = [f"a{i}" for i in range(n)] + [f"b{i}" for i in range(n)]
    es = []
    for i in range(n):
        wrap = (1, 0) if i == n - 1 else (0, 0)
        es.append((f"p{i}", f"a{i}", f"a{(i + 1) % n}", wrap))
        es.append((f"q{i}", f"b{i}", f"b{(i + 1) % n}", wrap))
        es.append((f"r{i}", f"a{i}", f"b{i}", (0, 0)))
    rot = {}
    for i in range(n):
        rot[f"a{i}"] = [f"p{i}+", f"p{(i - 1) % n}-", f"r{i}+"]
        rot[f"b{i}"] = [f"q{i}+", f"r{i}-", f"q{(i - 1) % n}-"]
    return RibbonGraph(GainGraph(vs, es), rot)
