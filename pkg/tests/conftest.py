"""Shared random generators and independent oracles for the test suite.

The oracles here deliberately avoid the library's own code paths:
determinants are expanded over permutations, products are convolved on
raw dicts, and parities are counted by inversions.
"""
from __future__ import annotations

import itertools
import random

from alexpoly import LaurentPoly, SeifertPair
from alexpoly.seifert import IntMatrix, as_int_matrix, transpose


def random_poly(
    rng: random.Random,
    *,
    integral: bool = False,
    max_terms: int = 6,
    halfexp_lo: int = -12,
    halfexp_hi: int = 12,
    coeff_lo: int = -9,
    coeff_hi: int = 9,
) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        k = rng.randint(halfexp_lo, halfexp_hi)
        if integral and k % 2:
            k += 1
        terms[k] = rng.randint(coeff_lo, coeff_hi)
    return LaurentPoly(terms)


def random_nonzero_poly(rng: random.Random, **kwargs) -> LaurentPoly:
    while True:
        f = random_poly(rng, **kwargs)
        if f:
            return f


def dict_product_oracle(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Schoolbook convolution over every term pair, on raw dicts."""
    out: dict[int, int] = {}
    for k, c in f.terms.items():
        for j, d in g.terms.items():
            out[k + j] = out.get(k + j, 0) + c * d
    return LaurentPoly(out)


def _parity(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for i, j in itertools.combinations(range(len(perm)), 2)
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def perm_det_oracle(entries) -> LaurentPoly:
    """Determinant by full permutation expansion (Laurent entries)."""
    n = len(entries)
    total = LaurentPoly()
    for perm in itertools.permutations(range(n)):
        term = LaurentPoly.constant(_parity(perm))
        for i, j in enumerate(perm):
            term = dict_product_oracle(term, entries[i][j])
        total = total + term
    return total


def perm_det_int_oracle(m: IntMatrix) -> int:
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        prod = _parity(perm)
        for i, j in enumerate(perm):
            prod *= m[i][j]
        total += prod
    return total


def random_int_matrix(rng: random.Random, rows: int, cols: int, lo=-3, hi=3) -> IntMatrix:
    return tuple(tuple(rng.randint(lo, hi) for _ in range(cols)) for _ in range(rows))


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> IntMatrix:
    """Unimodular matrix built from elementary row operations on identity."""
    if n == 0:
        return ()
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(n)
        if op == 0 and n > 1:
            j = rng.randrange(n)
            if i != j:
                factor = rng.randint(-2, 2)
                for c in range(n):
                    m[i][c] += factor * m[j][c]
        elif op == 1 and n > 1:
            j = rng.randrange(n)
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-v for v in m[i]]
    return as_int_matrix(m)


def symplectic(m: int) -> IntMatrix:
    """Standard symplectic 2m x 2m matrix, block diagonal [[0,1],[-1,0]]."""
    size = 2 * m
    rows = [[0] * size for _ in range(size)]
    for b in range(m):
        rows[2 * b][2 * b + 1] = 1
        rows[2 * b + 1][2 * b] = -1
    return as_int_matrix(rows)


def congruence(u: IntMatrix, k: IntMatrix) -> IntMatrix:
    """U * K * U^t with plain integer loops."""
    n = len(u)
    uk = tuple(
        tuple(sum(u[i][a] * k[a][j] for a in range(n)) for j in range(n))
        for i in range(n)
    )
    return tuple(
        tuple(sum(uk[i][a] * u[j][a] for a in range(n)) for j in range(n))
        for i in range(n)
    )


def alinking_block_pair(rng: random.Random, size: int) -> SeifertPair:
    """Pair whose intersection form is a zero row over an identity block."""
    s = random_int_matrix(rng, size, size, -4, 4)
    form = [[0] * size] + [
        [int(i == j) for j in range(size)] for i in range(1, size)
    ]
    n = tuple(
        tuple(sv - fv for sv, fv in zip(srow, frow)) for srow, frow in zip(s, form)
    )
    return SeifertPair(s, n, 1, 2)


def twinkling_block_pair(rng: random.Random, half_blocks: int) -> SeifertPair:
    """Pair with N = S^t whose intersection form has a zero first row and
    column over a unimodular skew block (a symplectic congruate)."""
    m = 2 * half_blocks
    skew = congruence(random_unimodular(rng, m), symplectic(half_blocks))
    block = [[skew[i][j] if i < j else 0 for j in range(m)] for i in range(m)]
    symmetric = random_int_matrix(rng, m, m, -2, 2)
    for i in range(m):
        for j in range(m):
            block[i][j] += symmetric[min(i, j)][max(i, j)]
    first = [rng.randint(-3, 3) for _ in range(m)]
    s11 = rng.randint(-4, 4)
    rows = [[s11] + first] + [[first[i]] + block[i] for i in range(m)]
    s = as_int_matrix(rows)
    return SeifertPair(s, transpose(s), 1, 1)
