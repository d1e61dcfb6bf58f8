"""Exact sparse polynomials in x0, x1 with integer coefficients.

Only what the embedding needs: addition, multiplication by a monomial, and
evaluation on the unit torus ``|x0| = |x1| = 1``. Coefficients are Python
ints, so there is no overflow to guard against.
"""

from __future__ import annotations

import cmath
import math
from typing import Iterable, Mapping, NamedTuple


class Monomial(NamedTuple):
    e0: int
    e1: int

    @property
    def degree(self) -> int:
        return self.e0 + self.e1


ONE = Monomial(0, 0)
X0 = Monomial(1, 0)
X1 = Monomial(0, 1)


def _order(m: Monomial) -> tuple[int, int]:
    return (m.e0 + m.e1, m.e0)


class BiPoly:
    """Immutable polynomial; ``terms`` never stores a zero coefficient."""

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None) -> None:
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            mono = Monomial(*mono)
            if mono.e0 < 0 or mono.e1 < 0:
                raise ValueError(f"negative exponent in {mono}")
            if c:
                clean[mono] = int(c)
        self._terms = clean
        self._key: tuple[tuple[int, int, int], ...] | None = None

    def _canon(self) -> tuple[tuple[int, int, int], ...]:
        if self._key is None:
            t = self._terms
            self._key = tuple((m.e0, m.e1, t[m]) for m in sorted(t, key=_order))
        return self._key

    @classmethod
    def constant(cls, c: int) -> BiPoly:
        return cls({ONE: c})

    @classmethod
    def monomial(cls, m: tuple[int, int], c: int = 1) -> BiPoly:
        return cls({m: c})

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> BiPoly:
        terms: dict[Monomial, int] = {}
        for t in triples:
            e0, e1, c = t
            m = Monomial(e0, e1)
            if m in terms:
                raise ValueError(f"repeated monomial {m}")
            if c == 0:
                raise ValueError("zero coefficient in canonical serialisation")
            terms[m] = c
        return cls(terms)

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def to_triples(self) -> list[list[int]]:
        """Canonical serialisation: ``[e0, e1, coeff]`` by total degree, then e0."""
        return [list(t) for t in self._canon()]

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._canon() == other._canon()

    def __hash__(self) -> int:
        return hash(self._canon())

    def __add__(self, other: BiPoly | int) -> BiPoly:
        if isinstance(other, int):
            other = BiPoly.constant(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: BiPoly | int) -> BiPoly:
        if isinstance(other, int):
            other = BiPoly.constant(other)
        return self + (-other)

    def mul_monomial(self, m: tuple[int, int], k: int = 1) -> BiPoly:
        e0, e1 = m
        return BiPoly({(a + e0, b + e1): c * k for (a, b), c in self._terms.items()})

    def __call__(self, theta0: float, theta1: float) -> complex:
        return poly_eval(self, theta0, theta1)

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e0, e1, c in self._canon():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x0", e0), ("x1", e1)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = BiPoly()


def poly_add(p: BiPoly, q: BiPoly) -> BiPoly:
    return p + q


def poly_mul_monomial(p: BiPoly, m: tuple[int, int], k: int = 1) -> BiPoly:
    return p.mul_monomial(m, k)


def poly_eval(p: BiPoly, theta0: float, theta1: float) -> complex:
    """Value at ``x0 = exp(i theta0)``, ``x1 = exp(i theta1)``.

    Each monomial is evaluated from its exact integer phase ``e0*theta0 +
    e1*theta1`` and the parts are summed with ``math.fsum``; two polynomials
    sharing terms therefore round those terms identically, which keeps short
    edge vectors accurate even when the endpoints have large coordinates.
    """
    re_parts = []
    im_parts = []
    for (e0, e1), c in p._terms.items():
        z = c * cmath.exp(1j * (e0 * theta0 + e1 * theta1))
        re_parts.append(z.real)
        im_parts.append(z.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))
