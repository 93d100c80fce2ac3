"""Quantities attached to the root of unity q = exp(2 pi i / r), r odd."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .golden import PHI, PHI_INV, GoldenNumber


def check_level(r: int) -> None:
    if not isinstance(r, int) or r < 3 or r % 2 == 0:
        raise ValueError(f"level r must be an odd integer >= 3, got {r!r}")


def quantum_integer(n: int, r: int) -> float:
    """The bracket [n] at A = exp(2 pi i / 4r), i.e. sin(n pi/r) / sin(pi/r)."""
    check_level(r)
    return math.sin(n * math.pi / r) / math.sin(math.pi / r)


def even_labels(r: int) -> list[int]:
    check_level(r)
    return list(range(0, r - 1, 2))


def loop_eigenvalue_float(j: int, r: int) -> float:
    """Eigenvalue of an essential spin-1/2 loop on the label-j core."""
    check_level(r)
    if j % 2 or not 0 <= j <= r - 2:
        raise ValueError(f"label j={j} is not an even label for r={r}")
    x = (j + 1) * math.pi / r
    return math.sin(2 * x) / math.sin(x)


def spin_one_eigenvalue_float(j: int, r: int) -> float:
    """Eigenvalue of an essential spin-1 loop, [3(j+1)]/[j+1]."""
    check_level(r)
    x = (j + 1) * math.pi / r
    return math.sin(3 * x) / math.sin(x)


@dataclass(frozen=True)
class RootOfUnityData:
    r: int
    d: float
    lam: dict = field(default_factory=dict)
    # exact forms, populated for r = 5 only
    d_exact: GoldenNumber | None = None
    lam_exact: dict | None = None

    @property
    def labels(self) -> list[int]:
        return sorted(self.lam)


def root_data(r: int) -> RootOfUnityData:
    check_level(r)
    lam = {j: loop_eigenvalue_float(j, r) for j in even_labels(r)}
    d = 2 * math.cos(math.pi / r)
    if r == 5:
        return RootOfUnityData(r, d, lam, PHI, {0: PHI, 2: -PHI_INV})
    return RootOfUnityData(r, d, lam)
