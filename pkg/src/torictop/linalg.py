"""Exact linear algebra kernels.

Everything here is deterministic and exact: integer routines use Python's
arbitrary-precision ints (Bareiss fraction-free elimination), field routines
use either Fraction arithmetic or ints mod p.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


# ---------------------------------------------------------------------------
# exact integer routines


def rank_int(rows: list[list[int]]) -> int:
    """Rank of an integer matrix over Q, by fraction-free elimination."""
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pivval = A[r][c]
        for i in range(r + 1, m):
            aic = A[i][c]
            if aic or pivval != prev:
                for j in range(c + 1, n):
                    num = A[i][j] * pivval - aic * A[r][j]
                    q, rem = divmod(num, prev)
                    assert rem == 0, "Bareiss division must be exact"
                    A[i][j] = q
            A[i][c] = 0
        prev = pivval
        rank += 1
        r += 1
        if r == m:
            break
    return rank


def det_int(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    m = len(rows)
    if m == 0:
        return 1
    if any(len(r) != m for r in rows):
        raise ValueError("determinant needs a square matrix")
    A = [list(r) for r in rows]
    sign = 1
    prev = 1
    for c in range(m):
        piv = next((i for i in range(c, m) if A[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        pivval = A[c][c]
        for i in range(c + 1, m):
            aic = A[i][c]
            for j in range(c + 1, m):
                q, rem = divmod(A[i][j] * pivval - aic * A[c][j], prev)
                assert rem == 0
                A[i][j] = q
            A[i][c] = 0
        prev = pivval
    return sign * A[m - 1][m - 1]


def unimodular_inverse(rows: list[list[int]]) -> list[list[int]]:
    """Integer inverse of a square matrix with determinant +-1 (adjugate)."""
    n = len(rows)
    d = det_int(rows)
    if d not in (1, -1):
        raise ValueError(f"matrix has determinant {d}, not a unit")
    inv = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i
            ]
            inv[j][i] = (-1) ** (i + j) * det_int(minor) * d
    return inv


def matmul_int(A: list[list[int]], B: list[list[int]], inner: int) -> list[list[int]]:
    """Exact product of integer matrices given as row lists."""
    rows = len(A)
    cols = len(B[0]) if B else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        for k in range(inner):
            a = Ai[k]
            if a:
                Bk = B[k]
                row = out[i]
                for j in range(cols):
                    row[j] += a * Bk[j]
    return out


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix over F_p (vectorized elimination)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return 0
    A = np.array(rows, dtype=np.int64) % p
    rank = 0
    r = 0
    for c in range(n):
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        below = A[r + 1 :, c]
        if below.size:
            A[r + 1 :] = (A[r + 1 :] - np.outer(below, A[r])) % p
        rank += 1
        r += 1
        if r == m:
            break
    return rank


# ---------------------------------------------------------------------------
# coefficient fields


class PrimeField:
    """Arithmetic in F_p with elements stored as ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, a: int) -> int:
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0


class RationalField:
    """Arithmetic in Q via Fraction."""

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(a: int) -> Fraction:
        return Fraction(a)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return Fraction(1) / a

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0


def field_for_tag(coeff: str):
    """Map a coefficient tag ('Q', 'F2', 'F3', ...) to a field object."""
    if coeff == "Q":
        return RationalField()
    if coeff.startswith("F"):
        return PrimeField(int(coeff[1:]))
    raise ValueError(f"no field for coefficient tag {coeff!r}")


# ---------------------------------------------------------------------------
# field linear algebra (dense rows, deterministic pivoting)


def rref(rows: list[list], ncols: int, field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column indices).  Pivots are chosen
    greedily left to right, first nonzero row wins; output is independent of
    the input row order only up to row scaling, so callers that need
    byte-stable output should fix their row order.
    """
    work = [list(r) for r in rows]
    pivots: list[int] = []
    out: list[list] = []
    r = 0
    m = len(work)
    for c in range(ncols):
        piv = next((i for i in range(r, m) if not field.is_zero(work[i][c])), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = field.inv(work[r][c])
        work[r] = [field.mul(inv, x) for x in work[r]]
        for i in range(m):
            if i != r and not field.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        out.append(work[r])
        r += 1
        if r == m:
            break
    return out, pivots


def reduce_against(vec: list, rref_rows: list[list], pivots: list[int], field) -> list:
    """Normal form of vec modulo the row space given in RREF."""
    v = list(vec)
    for row, p in zip(rref_rows, pivots):
        c = v[p]
        if not field.is_zero(c):
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    return v


def kernel_basis(rows: list[list], ncols: int, field) -> list[list]:
    """Basis of the right kernel of the matrix, one vector per free column."""
    red, pivots = rref(rows, ncols, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, p in zip(red, pivots):
            v[p] = field.neg(row[f])
        basis.append(v)
    return basis
