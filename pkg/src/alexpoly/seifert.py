"""Seifert matrix pairs, Alexander matrices, and exact determinants.

A Seifert pair holds the positive and negative Seifert matrices S and N
of a link (entries are linking numbers of basis cycles with push-offs),
plus the cycle degree p and the submanifold dimension n.  From a pair the
Alexander matrix t*S - N and the normalized matrix t^(1/2)*S - t^(-1/2)*N
are built, whose exact determinants carry the invariants.

Matrices are immutable tuples of tuples.  Determinants of polynomial
matrices use cofactor expansion up to 4x4 and fraction-free Bareiss
elimination above that; every division in Bareiss is exact in the
Laurent ring, so no rationals appear.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotSquare, NotUnimodular, ShapeMismatch
from .laurent import ONE, ZERO, LaurentPoly, T, T_HALF

IntMatrix = tuple[tuple[int, ...], ...]


# -- integer matrix helpers ---------------------------------------------------


def as_int_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    """Freeze a row-major iterable of ints, checking rectangularity."""
    out = tuple(tuple(row) for row in rows)
    for row in out:
        for v in row:
            if not isinstance(v, int):
                raise TypeError(f"matrix entries must be ints, got {v!r}")
    if out and any(len(r) != len(out[0]) for r in out):
        raise ShapeMismatch("rows have unequal lengths")
    return out


def transpose(m: IntMatrix) -> IntMatrix:
    if not m:
        return ()
    return tuple(tuple(m[i][j] for i in range(len(m))) for j in range(len(m[0])))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a and b and len(a[0]) != len(b):
        raise ShapeMismatch(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    if not a or not b:
        return tuple(() for _ in a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def int_det(m: IntMatrix) -> int:
    """Exact integer determinant (fraction-free Bareiss)."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise NotSquare(f"{n}x{len(m[0])} matrix has no determinant")
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


# -- core data types ----------------------------------------------------------


@dataclass(frozen=True)
class SeifertPair:
    """Positive/negative Seifert matrices with dimension metadata.

    S and N must share one shape; p is the cycle degree (0 <= p <= n+1),
    n >= 1 the dimension of the submanifold.
    """

    S: IntMatrix
    N: IntMatrix
    p: int
    n: int

    def __init__(self, S, N, p: int, n: int):
        object.__setattr__(self, "S", as_int_matrix(S))
        object.__setattr__(self, "N", as_int_matrix(N))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        if self.shape != (len(self.N), len(self.N[0]) if self.N else 0):
            raise ShapeMismatch("S and N must have identical shape")
        if n < 1 or not 0 <= p <= n + 1:
            raise ValueError(f"need n >= 1 and 0 <= p <= n+1, got p={p}, n={n}")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.S), len(self.S[0]) if self.S else 0)

    @property
    def is_square(self) -> bool:
        rows, cols = self.shape
        return rows == cols


@dataclass(frozen=True)
class AlexanderMatrix:
    """A rectangular matrix of Laurent polynomials."""

    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __init__(self, entries: Iterable[Iterable[LaurentPoly]]):
        rows = tuple(tuple(row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ShapeMismatch("rows have unequal lengths")
        object.__setattr__(self, "entries", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    @property
    def is_square(self) -> bool:
        rows, cols = self.shape
        return rows == cols


@dataclass(frozen=True)
class UnimodularPair:
    """Basis-change matrices (P for the x-basis, Q for the y-basis)."""

    P: IntMatrix
    Q: IntMatrix

    def __init__(self, P, Q):
        object.__setattr__(self, "P", as_int_matrix(P))
        object.__setattr__(self, "Q", as_int_matrix(Q))
        for name, m in (("P", self.P), ("Q", self.Q)):
            if abs(int_det(m)) != 1:
                raise NotUnimodular(f"{name} has determinant {int_det(m)}")


# -- matrix constructions -----------------------------------------------------


def alexander_matrix(pair: SeifertPair) -> AlexanderMatrix:
    """The matrix t*S - N."""
    return AlexanderMatrix(
        tuple(
            tuple(T * s - LaurentPoly.constant(n) for s, n in zip(srow, nrow))
            for srow, nrow in zip(pair.S, pair.N)
        )
    )


def normalized_matrix(pair: SeifertPair) -> AlexanderMatrix:
    """The matrix t^(1/2)*S - t^(-1/2)*N."""
    t_neg_half = LaurentPoly.half_power(-1)
    return AlexanderMatrix(
        tuple(
            tuple(T_HALF * s - t_neg_half * n for s, n in zip(srow, nrow))
            for srow, nrow in zip(pair.S, pair.N)
        )
    )


def intersection_form(pair: SeifertPair) -> IntMatrix:
    """S - N, the matrix of the homological intersection pairing."""
    return tuple(
        tuple(s - n for s, n in zip(srow, nrow)) for srow, nrow in zip(pair.S, pair.N)
    )


# -- determinants -------------------------------------------------------------


def _det_cofactor(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = ZERO
    for j, head in enumerate(rows[0]):
        if not head:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = head * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    n = len(rows)
    a = [list(row) for row in rows]
    negate, prev = False, ONE
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    negate = not negate
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return -result if negate else result


def det(m: AlexanderMatrix) -> LaurentPoly:
    """Exact determinant over the Laurent ring (empty matrix: 1)."""
    rows, cols = m.shape
    if rows != cols:
        raise NotSquare(f"{rows}x{cols} matrix has no determinant")
    if rows <= 4:
        return _det_cofactor(m.entries)
    return _det_bareiss(m.entries)


# -- matrix moves -------------------------------------------------------------


def check_duality(pair_a: SeifertPair, pair_b: SeifertPair) -> bool:
    """Whether pair_a.N = (-1)^(p*n+1) * transpose(pair_b.S).

    pair_a must have degree p and pair_b the complementary degree n+1-p
    over the same n, with pair_b shaped as the transpose of pair_a.
    """
    if pair_a.n != pair_b.n or pair_b.p != pair_a.n + 1 - pair_a.p:
        raise ShapeMismatch(
            f"degrees (p={pair_a.p}, n={pair_a.n}) and (p={pair_b.p}, n={pair_b.n}) are not complementary"
        )
    rows, cols = pair_a.shape
    if pair_b.shape != (cols, rows):
        raise ShapeMismatch(f"expected {cols}x{rows} partner, got {pair_b.shape}")
    sign = (-1) ** (pair_a.p * pair_a.n + 1)
    flipped = tuple(tuple(sign * v for v in row) for row in transpose(pair_b.S))
    return pair_a.N == flipped


def check_mars_symmetry(s: IntMatrix, m: int) -> bool:
    """Whether S = (-1)^m * transpose(S) for a square integer matrix."""
    s = as_int_matrix(s)
    if s and len(s) != len(s[0]):
        raise NotSquare(f"{len(s)}x{len(s[0])} matrix cannot be compared with its transpose")
    sign = (-1) ** m
    return s == tuple(tuple(sign * v for v in row) for row in transpose(s))


def basis_change(pair: SeifertPair, u: UnimodularPair) -> SeifertPair:
    """Transform both pairings by the same bases: S -> P*S*Q^t, N -> P*N*Q^t."""
    rows, cols = pair.shape
    if len(u.P) != rows or len(u.Q) != cols:
        raise ShapeMismatch(
            f"basis change ({len(u.P)}, {len(u.Q)}) does not fit a {rows}x{cols} pair"
        )
    qt = transpose(u.Q)
    return SeifertPair(
        mat_mul(mat_mul(u.P, pair.S), qt),
        mat_mul(mat_mul(u.P, pair.N), qt),
        pair.p,
        pair.n,
    )


def stabilize(
    m: AlexanderMatrix, sign: int, filler: Sequence[LaurentPoly]
) -> AlexanderMatrix:
    """Border a square matrix as [[sign*t, filler], [0, m]].

    This is the block form produced by adding a trivial handle to the
    underlying hypersurface; it multiplies the determinant by sign*t.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    rows, cols = m.shape
    if rows != cols:
        raise NotSquare("can only stabilize a square matrix")
    filler = tuple(filler)
    if len(filler) != cols:
        raise ShapeMismatch(f"filler length {len(filler)} != {cols} columns")
    top = (T * sign,) + filler
    body = tuple((ZERO,) + row for row in m.entries)
    return AlexanderMatrix((top,) + body)
