"""SO(3) trace of a graph on the torus from its surround-loop expansion.

Each edge is replaced by the second Jones-Wenzl projector; the term of a
spanning subgraph H is the multicurve bounding a neighbourhood of H.
Trivial circles contribute the loop value d, and a family of m parallel
essential circles acts on the label-j core by the m-th power of the
spin-1/2 eigenvalue.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .golden import PHI, PHI_INV, ZERO, GoldenNumber
from .ribbon import RibbonGraph, surround_counts
from .roots import check_level, even_labels, loop_eigenvalue_float
from .statesum import DEFAULT_EDGE_CAP, ResourceCapError

_EXACT_R5 = {0: PHI, 2: -PHI_INV}


def loop_eigenvalue(j: int, r: int):
    """Essential spin-1/2 loop eigenvalue on label j; exact for r = 5."""
    value = loop_eigenvalue_float(j, r)
    if r == 5:
        return _EXACT_R5[j]
    return value


@dataclass(frozen=True)
class TraceResult:
    r: int
    value: object
    per_label: dict

    def __float__(self) -> float:
        return float(self.value)


def surround_histogram(R: RibbonGraph, cap: int | None = None) -> Counter:
    """Count spanning subgraphs by ``(E(H), t(H), m(H))``."""
    cap = DEFAULT_EDGE_CAP if cap is None else cap
    E = R.base.num_edges
    if E > cap:
        raise ResourceCapError(f"{E} edges exceeds the trace cap of {cap}")
    hist: Counter = Counter()
    for mask in range(1 << E):
        t, m = surround_counts(R, mask)
        hist[(bin(mask).count("1"), t, m)] += 1
    return hist


def trace(R: RibbonGraph, r: int, hist: Counter | None = None) -> TraceResult:
    """tr_r of the ribbon graph R, split by even label.

    The term of H is ``(-1)^(E-E(H)) d^(E(H)-V) d^t(H) lam_j^m(H)``.
    """
    check_level(r)
    if hist is None:
        hist = surround_histogram(R)
    E, V = R.base.num_edges, R.base.num_vertices
    exact = r == 5
    d = PHI if exact else 2 * math.cos(math.pi / r)
    per_label = {}
    for j in even_labels(r):
        lam = loop_eigenvalue(j, r)
        if exact:
            total = ZERO
            for (eh, t, m), count in hist.items():
                sign = -1 if (E - eh) % 2 else 1
                total = total + (sign * count) * d ** (eh - V + t) * lam ** m
        else:
            total = math.fsum(
                (-1 if (E - eh) % 2 else 1) * count * d ** (eh - V + t) * lam ** m
                for (eh, t, m), count in hist.items()
            )
        per_label[j] = total
    if exact:
        value = ZERO
        for v in per_label.values():
            value = value + v
    else:
        value = math.fsum(per_label.values())
    return TraceResult(r, value, per_label)
