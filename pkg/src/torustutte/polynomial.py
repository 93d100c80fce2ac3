"""Integer multivariate polynomials in the fixed variables X, Y, W, A, B, U."""

from __future__ import annotations

import re
from typing import Mapping

VARIABLES = ("X", "Y", "W", "A", "B", "U")
_INDEX = {v: i for i, v in enumerate(VARIABLES)}
# variables appear alphabetically inside a printed monomial
_PRINT_ORDER = sorted(VARIABLES)
_ZERO_EXP = (0,) * len(VARIABLES)


class MultiPoly:
    """Immutable polynomial with integer coefficients.

    ``terms`` maps exponent tuples ordered as ``VARIABLES`` to nonzero
    integer coefficients.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean = {}
        for exp, coeff in (terms or {}).items():
            if len(exp) != len(VARIABLES):
                raise ValueError(f"bad exponent vector {exp!r}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp!r}")
            if coeff:
                clean[tuple(exp)] = int(coeff)
        self._terms = clean

    @classmethod
    def constant(cls, c: int) -> MultiPoly:
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> MultiPoly:
        exp = [0] * len(VARIABLES)
        exp[_INDEX[name]] = power
        return cls({tuple(exp): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, **powers: int) -> MultiPoly:
        exp = [0] * len(VARIABLES)
        for name, p in powers.items():
            exp[_INDEX[name]] = p
        return cls({tuple(exp): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order (descending lexicographic exponents)."""
        return sorted(self._terms.items(), reverse=True)

    def variables(self) -> set[str]:
        used = set()
        for exp in self._terms:
            used.update(v for v, e in zip(VARIABLES, exp) if e)
        return used

    def degree(self, name: str) -> int:
        i = _INDEX[name]
        return max((exp[i] for exp in self._terms), default=0)

    def coefficient(self, **powers: int) -> int:
        exp = [0] * len(VARIABLES)
        for name, p in powers.items():
            exp[_INDEX[name]] = p
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __neg__(self) -> MultiPoly:
        return MultiPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> MultiPoly:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> MultiPoly:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, int):
            return MultiPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("MultiPoly powers must be non-negative integers")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, **assignment):
        return poly_eval(self, assignment)

    def substitute(self, **images) -> MultiPoly:
        """Compose with polynomial images; unlisted variables map to themselves."""
        full = {v: MultiPoly.var(v) for v in VARIABLES}
        for name, img in images.items():
            full[name] = img if isinstance(img, MultiPoly) else MultiPoly.constant(img)
        return poly_eval(self, full, one=MultiPoly.constant(1))


def poly_eval(p: MultiPoly, assignment: Mapping[str, object], one=1):
    """Evaluate ``p`` at ``assignment`` in any commutative ring.

    Values may be ints, GoldenNumbers, floats or MultiPolys; the result
    is exact whenever every value used is exact.  Only variables that
    actually occur in ``p`` need to be assigned.
    """
    missing = p.variables() - set(assignment)
    if missing:
        raise KeyError(f"no value for variable(s) {sorted(missing)}")
    powers: dict = {}

    def power(i: int, e: int):
        key = (i, e)
        if key not in powers:
            base = assignment[VARIABLES[i]]
            value = one
            for _ in range(e):
                value = value * base
            powers[key] = value
        return powers[key]

    total = one * 0
    for exp, coeff in p.items():
        term = one * coeff
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        total = total + term
    return total


def format_poly(p: MultiPoly) -> str:
    """Canonical text form, e.g. ``+1*A^1*Y^2 -2*W^1*Y^1 +1``."""
    if p.is_zero():
        return "0"
    chunks = []
    for exp, coeff in p.items():
        factors = [
            f"{v}^{exp[_INDEX[v]]}" for v in _PRINT_ORDER if exp[_INDEX[v]]
        ]
        head = f"{coeff:+d}"
        chunks.append("*".join([head] + factors))
    return " ".join(chunks)


_TERM_RE = re.compile(r"^([+-]\d+)((?:\*[XYWABU]\^\d+)*)$")


def parse_poly(text: str) -> MultiPoly:
    """Inverse of :func:`format_poly`."""
    text = text.strip()
    if text == "0":
        return MultiPoly()
    terms: dict = {}
    for chunk in text.split():
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"malformed polynomial term {chunk!r}")
        exp = [0] * len(VARIABLES)
        for factor in filter(None, m.group(2).split("*")):
            name, power = factor.split("^")
            exp[_INDEX[name]] = int(power)
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + int(m.group(1))
    return MultiPoly(terms)


X = MultiPoly.var("X")
Y = MultiPoly.var("Y")
W = MultiPoly.var("W")
A = MultiPoly.var("A")
B = MultiPoly.var("B")
U = MultiPoly.var("U")
