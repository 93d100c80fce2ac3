"""Named graphs on the torus used as regression fixtures."""

from __future__ import annotations

from .gaingraph import GainGraph
from .ribbon import RibbonGraph


def trivial_loops(k: int) -> RibbonGraph:
    """k disjoint null-homotopic loops, each on its own vertex."""
    vs = [f"v{i}" for i in range(k)]
    es = [(f"e{i}", f"v{i}", f"v{i}", (0, 0)) for i in range(k)]
    return RibbonGraph(GainGraph(vs, es), {f"v{i}": [f"e{i}+", f"e{i}-"] for i in range(k)})


def essential_loops(k: int, gain=(1, 0)) -> RibbonGraph:
    """k disjoint parallel essential loops, each on its own vertex."""
    vs = [f"v{i}" for i in range(k)]
    es = [(f"e{i}", f"v{i}", f"v{i}", gain) for i in range(k)]
    return RibbonGraph(GainGraph(vs, es), {f"v{i}": [f"e{i}+", f"e{i}-"] for i in range(k)})


def wedge() -> RibbonGraph:
    """One vertex with a meridian and a longitude loop (the 1x1 torus grid)."""
    G = GainGraph(["v"], [("a", "v", "v", (1, 0)), ("b", "v", "v", (0, 1))])
    return RibbonGraph(G, {"v": ["a+", "b+", "a-", "b-"]})


def theta() -> RibbonGraph:
    """Two trivalent vertices joined by three edges, cellular on the torus."""
    G = GainGraph(["u", "v"], [
        ("a", "u", "v", (0, 0)),
        ("b", "u", "v", (1, 0)),
        ("c", "u", "v", (0, 1)),
    ])
    return RibbonGraph(G, {"u": ["a+", "b+", "c+"], "v": ["a-", "b-", "c-"]})


def torus_grid(m: int, n: int) -> RibbonGraph:
    """The m x n square grid on the torus; wrapping edges carry unit gains."""
    def name(i, j):
        return f"v{i}_{j}"

    vs = [name(i, j) for j in range(n) for i in range(m)]
    es = []
    rot: dict[str, list[str]] = {v: [] for v in vs}
    for j in range(n):
        for i in range(m):
            es.append((f"h{i}_{j}", name(i, j), name((i + 1) % m, j),
                       (1 if i == m - 1 else 0, 0)))
            es.append((f"u{i}_{j}", name(i, j), name(i, (j + 1) % n),
                       (0, 1 if j == n - 1 else 0)))
    for j in range(n):
        for i in range(m):
            rot[name(i, j)] = [
                f"h{i}_{j}+",
                f"u{i}_{j}+",
                f"h{(i - 1) % m}_{j}-",
                f"u{i}_{(j - 1) % n}-",
            ]
    return RibbonGraph(GainGraph(vs, es), rot)


def _planar(vertices, edge_pairs, rotation) -> RibbonGraph:
    es = [(f"e{k}", a, b, (0, 0)) for k, (a, b) in enumerate(edge_pairs)]
    G = GainGraph(vertices, es)
    index = {(a, b): k for k, (a, b) in enumerate(edge_pairs)}
    rot = {}
    for v, nbrs in rotation.items():
        toks = []
        for w in nbrs:
            if (v, w) in index:
                toks.append(f"e{index[(v, w)]}+")
            else:
                toks.append(f"e{index[(w, v)]}-")
        rot[v] = toks
    return RibbonGraph(G, rot)


def k4() -> RibbonGraph:
    """Planar K_4 with zero gains (a disk-embedded cubic graph)."""
    vs = ["0", "1", "2", "3"]
    pairs = [("0", "1"), ("0", "2"), ("0", "3"), ("1", "2"), ("2", "3"), ("3", "1")]
    # 0 in the centre of triangle 1-2-3, counterclockwise
    rot = {"0": ["1", "2", "3"], "1": ["0", "3", "2"], "2": ["0", "1", "3"], "3": ["0", "2", "1"]}
    return _planar(vs, pairs, rot)


def prism() -> RibbonGraph:
    """Planar triangular prism with zero gains."""
    vs = ["a0", "a1", "a2", "b0", "b1", "b2"]
    pairs = [("a0", "a1"), ("a1", "a2"), ("a2", "a0"),
             ("b0", "b1"), ("b1", "b2"), ("b2", "b0"),
             ("a0", "b0"), ("a1", "b1"), ("a2", "b2")]
    # inner triangle a, outer triangle b, both counterclockwise
    rot = {
        "a0": ["a1", "a2", "b0"], "a1": ["a2", "a0", "b1"], "a2": ["a0", "a1", "b2"],
        "b0": ["a0", "b2", "b1"], "b1": ["a1", "b0", "b2"], "b2": ["a2", "b1", "b0"],
    }
    return _planar(vs, pairs, rot)


def cube() -> RibbonGraph:
    """Planar cube graph with zero gains."""
    vs = [f"a{i}" for i in range(4)] + [f"b{i}" for i in range(4)]
    pairs = [(f"a{i}", f"a{(i + 1) % 4}") for i in range(4)]
    pairs += [(f"b{i}", f"b{(i + 1) % 4}") for i in range(4)]
    pairs += [(f"a{i}", f"b{i}") for i in range(4)]
    rot = {}
    for i in range(4):
        rot[f"a{i}"] = [f"a{(i + 1) % 4}", f"a{(i - 1) % 4}", f"b{i}"]
        rot[f"b{i}"] = [f"a{i}", f"b{(i - 1) % 4}", f"b{(i + 1) % 4}"]
    return _planar(vs, pairs, rot)


def free_loop(essential: bool = False) -> RibbonGraph:
    return essential_loops(1) if essential else trivial_loops(1)


def corpus() -> dict[str, RibbonGraph]:
    """The shipped fixture corpus, keyed by file stem."""
    out: dict[str, RibbonGraph] = {}
    for k in range(1, 7):
        out[f"trivial_loops_{k}"] = trivial_loops(k)
        out[f"essential_loops_{k}"] = essential_loops(k)
    out["wedge"] = wedge()
    out["theta"] = theta()
    out["grid_1x1"] = torus_grid(1, 1)
    out["grid_2x2"] = torus_grid(2, 2)
    out["k4"] = k4()
    out["prism"] = prism()
    out["cube"] = cube()
    return out


TAGS = {
    "wedge": ["cellulation"],
    "theta": ["cubic", "cellulation"],
    "grid_1x1": ["cellulation"],
    "grid_2x2": ["cellulation"],
    "k4": ["cubic", "planar"],
    "prism": ["cubic", "planar"],
    "cube": ["cubic", "planar"],
}
for _k in range(1, 7):
    TAGS[f"trivial_loops_{_k}"] = ["cubic", "planar"]
    TAGS[f"essential_loops_{_k}"] = ["cubic"]
