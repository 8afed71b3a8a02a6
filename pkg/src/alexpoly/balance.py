"""Balanced-class equivalence of Laurent polynomials over Z and Q.

Two integer-power polynomials are Z-balanced when one is the other times
a unit +-t^n, and Q-balanced when one is the other times r*t^n for some
nonzero rational r.  Classes are represented by a fixed canonical form so
that two polynomials are equivalent exactly when their canonical forms
are equal.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NonIntegerExponent
from .laurent import LaurentPoly


class Ring(enum.Enum):
    """Coefficient ring tag for balanced classes."""

    Z = "Z"
    Q = "Q"


def _require_integral(f: LaurentPoly) -> None:
    if not f.is_integral():
        raise NonIntegerExponent(f"{f} has half powers of t")


def z_balanced_eq(f: LaurentPoly, g: LaurentPoly) -> bool:
    """True iff f = +-t^n * g for some integer n.

    Both inputs must use integer powers of t only.
    """
    _require_integral(f)
    _require_integral(g)
    if not f or not g:
        return f == g
    shifted = g.shift(f.min_halfexp - g.min_halfexp)
    return f == shifted or f == -shifted


def q_balanced_eq(f: LaurentPoly, g: LaurentPoly) -> bool:
    """True iff f = r*t^n * g for some integer n and nonzero rational r.

    Decided over exact integers by cross-multiplying with the contents:
    f*content(g) must be a unit multiple of a shift of g*content(f).
    """
    _require_integral(f)
    _require_integral(g)
    if not f or not g:
        return f == g
    return z_balanced_eq(f * g.content(), g * f.content())


def canonicalize(f: LaurentPoly, ring: Ring) -> LaurentPoly:
    """Canonical representative of the balanced class of f.

    For Z: shift so the minimum exponent is 0 and flip the sign so the
    leading (highest-degree) coefficient is positive.  For Q: divide
    additionally by the content.  Zero maps to zero.
    """
    _require_integral(f)
    if not f:
        return f
    out = f.shift(-f.min_halfexp)
    if out.terms[out.max_halfexp] < 0:
        out = -out
    if ring is Ring.Q:
        c = out.content()
        if c > 1:
            out = LaurentPoly({k: v // c for k, v in out.terms.items()})
    return out


@dataclass(frozen=True)
class BalancedClass:
    """A balanced class, stored via its canonical representative."""

    representative: LaurentPoly
    ring: Ring

    @classmethod
    def from_poly(cls, f: LaurentPoly, ring: Ring) -> BalancedClass:
        return cls(canonicalize(f, ring), ring)

    def contains(self, f: LaurentPoly) -> bool:
        return canonicalize(f, self.ring) == self.representative

    def __str__(self) -> str:
        return f"{self.ring.value}-class of {self.representative}"
