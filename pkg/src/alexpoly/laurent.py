"""Exact Laurent polynomials in t with half-integer exponents.

A polynomial lives on the half-exponent grid: it is a finite map from an
integer key k to a nonzero integer coefficient, the key k standing for
t^(k/2).  Even keys are the ordinary integer powers of t, so Z[t, t^-1]
and Z[t^(1/2), t^(-1/2)] share this one representation.  Coefficients are
Python ints, hence arbitrary precision; nothing here ever touches floats.
"""
from __future__ import annotations

import math
import re

from .errors import NotDivisible

_TERM_CONST = re.compile(r"^(-?\d+)$")
_TERM_WHOLE = re.compile(r"^(-?\d+)\*t\^(-?\d+)$")
_TERM_HALF = re.compile(r"^(-?\d+)\*t\^\((-?\d+)/2\)$")


class LaurentPoly:
    """An integer Laurent polynomial on the t^(1/2) exponent grid.

    Construct from a map of half-exponents to coefficients (zero values
    are dropped), or via the helpers below.

    >>> LaurentPoly({2: 1, 0: -1})
    LaurentPoly('-1 + 1*t^1')
    >>> LaurentPoly.t_power(2) * LaurentPoly({1: 1})
    LaurentPoly('1*t^(5/2)')
    >>> print(LaurentPoly({}))
    0
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if not isinstance(k, int) or not isinstance(c, int):
                    raise TypeError("half-exponents and coefficients must be ints")
                if c:
                    clean[k] = c
        self._terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def t_power(cls, n: int) -> LaurentPoly:
        """The monomial t^n."""
        return cls({2 * n: 1})

    @classmethod
    def half_power(cls, k: int) -> LaurentPoly:
        """The monomial t^(k/2)."""
        return cls({k: 1})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the canonical rendering produced by ``str``.

        The grammar is exact: terms in strictly ascending exponent order
        joined by `` + ``, each term ``c``, ``c*t^n`` or ``c*t^(k/2)``
        with k odd; the zero polynomial is the single character ``0``.

        >>> LaurentPoly.parse('-1*t^-1 + 2 + -1*t^1')
        LaurentPoly('-1*t^-1 + 2 + -1*t^1')
        """
        text = text.strip()
        if text == "0":
            return cls()
        terms: dict[int, int] = {}
        last = None
        for part in text.split(" + "):
            m = _TERM_CONST.match(part)
            if m:
                coeff, halfexp = int(m.group(1)), 0
            else:
                m = _TERM_WHOLE.match(part)
                if m:
                    coeff, halfexp = int(m.group(1)), 2 * int(m.group(2))
                else:
                    m = _TERM_HALF.match(part)
                    if m is None:
                        raise ValueError(f"cannot parse term {part!r}")
                    coeff, halfexp = int(m.group(1)), int(m.group(2))
                    if halfexp % 2 == 0:
                        raise ValueError(
                            f"term {part!r} writes an integer power in half form"
                        )
            if coeff == 0:
                raise ValueError(f"zero coefficient in term {part!r}")
            if last is not None and halfexp <= last:
                raise ValueError("terms must appear in ascending exponent order")
            last = halfexp
            terms[halfexp] = coeff
        return cls(terms)

    # -- basic queries ----------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the underlying half-exponent map."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_halfexp(self) -> int | None:
        """Smallest half-exponent, or None for the zero polynomial."""
        return min(self._terms) if self._terms else None

    @property
    def max_halfexp(self) -> int | None:
        """Largest half-exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def span_halfexp(self) -> int | None:
        """max_halfexp - min_halfexp, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(self._terms) - min(self._terms)

    def is_integral(self) -> bool:
        """True iff only integer powers of t occur (all keys even)."""
        return all(k % 2 == 0 for k in self._terms)

    def content(self) -> int:
        """Gcd of the absolute coefficients; 0 for the zero polynomial."""
        return math.gcd(*self._terms.values()) if self._terms else 0

    # -- ring structure ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            for j, d in other._terms.items():
                e = k + j
                v = out.get(e, 0) + c * d
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) == 1:
                ((k, c),) = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly({-k: c}) ** (-n)
            raise ValueError("only unit monomials have negative powers")
        if n == 0:
            return LaurentPoly.constant(1)
        half = self ** (n // 2)
        return half * half if n % 2 == 0 else half * half * self

    def shift(self, halfexp: int) -> LaurentPoly:
        """Multiply by the monomial t^(halfexp/2)."""
        return LaurentPoly({k + halfexp: c for k, c in self._terms.items()})

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient q with self = q * other over the integers.

        Ascending-exponent long division; raises NotDivisible as soon as
        a step would need a fractional coefficient or leave a remainder.
        The zero polynomial divides into anything with quotient zero.

        >>> f = LaurentPoly.parse('1 + -3*t^1 + 2*t^2')
        >>> f.exact_div(LaurentPoly.parse('-1 + 1*t^1'))
        LaurentPoly('-1 + 2*t^1')
        """
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly()
        g_min = min(other._terms)
        g_low = other._terms[g_min]
        max_q = max(self._terms) - max(other._terms)
        quot: dict[int, int] = {}
        rem = dict(self._terms)
        while rem:
            r_min = min(rem)
            k = r_min - g_min
            if k > max_q:
                raise NotDivisible(f"{self} is not divisible by {other}")
            c, residue = divmod(rem[r_min], g_low)
            if residue:
                raise NotDivisible(f"{self} is not divisible by {other}")
            quot[k] = c
            for e, gc in other._terms.items():
                ne = e + k
                v = rem.get(ne, 0) - c * gc
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return LaurentPoly(quot)

    def __truediv__(self, other: LaurentPoly) -> LaurentPoly:
        return self.exact_div(other)

    # -- evaluation and symmetry -------------------------------------------

    def eval_at_one(self) -> int:
        """Value at t = 1, i.e. the coefficient sum."""
        return sum(self._terms.values())

    def invert_variable(self) -> LaurentPoly:
        """Substitute t -> t^-1 (negate every exponent)."""
        return LaurentPoly({-k: c for k, c in self._terms.items()})

    def is_inversion_symmetric(self) -> bool:
        """True iff the polynomial is unchanged under t -> t^-1."""
        return all(self._terms.get(-k) == c for k, c in self._terms.items())

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms):
            c = self._terms[k]
            if k == 0:
                parts.append(str(c))
            elif k % 2 == 0:
                parts.append(f"{c}*t^{k // 2}")
            else:
                parts.append(f"{c}*t^({k}/2)")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.t_power(1)
T_HALF = LaurentPoly.half_power(1)
