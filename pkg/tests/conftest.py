"""Shared brute-force oracles, kept independent of the library internals.

Everything here recomputes from scratch with the dumbest correct method:
faces by powerset enumeration, ranks by Gaussian elimination over Fraction,
F2 ranks by xor-ing bit rows.  Tests compare the library against these.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction


def powerset_faces(maximal_faces) -> set[tuple[int, ...]]:
    """All faces (as sorted tuples, including the empty tuple)."""
    faces = set()
    for mf in maximal_faces:
        mf = tuple(sorted(mf))
        for r in range(len(mf) + 1):
            faces.update(itertools.combinations(mf, r))
    faces.add(())
    return faces


def face_counts_by_card(maximal_faces) -> dict[int, int]:
    counts: dict[int, int] = {}
    for f in powerset_faces(maximal_faces):
        counts[len(f)] = counts.get(len(f), 0) + 1
    return counts


def h_from_f_polynomial(f_entries, n) -> tuple[int, ...]:
    """h-vector via the generating polynomial sum_i f_{i-1} (t-1)^(n-i).

    Independent of the alternating-sum formula: expand the polynomial and
    read h_k off the coefficient of t^(n-k).
    """
    # poly[d] = coefficient of t^d
    poly = [0] * (n + 1)
    for i in range(n + 1):  # f_entries[i] = f_{i-1}
        # (t-1)^(n-i)
        e = n - i
        for d in range(e + 1):
            import math

            poly[d] += f_entries[i] * math.comb(e, d) * (-1) ** (e - d)
    return tuple(poly[n - k] for k in range(n + 1))


def fraction_rank(rows) -> int:
    """Gaussian elimination over Fraction; the reference rank."""
    A = [[Fraction(x) for x in row] for row in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    rank = 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = Fraction(1) / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        rank += 1
        r += 1
        if r == m:
            break
    return rank


def f2_rank(rows) -> int:
    """Rank over F2, each row packed into one int."""
    packed = []
    for row in rows:
        v = 0
        for j, x in enumerate(row):
            if x % 2:
                v |= 1 << j
        packed.append(v)
    rank = 0
    for c in range(max((len(r) for r in rows), default=0)):
        bit = 1 << c
        piv = next((i for i, v in enumerate(packed) if v & bit), None)
        if piv is None:
            continue
        pv = packed.pop(piv)
        packed = [v ^ pv if v & bit else v for v in packed]
        rank += 1
    return rank


def brute_boundaries(maximal_faces):
    """Augmented boundary matrices from scratch (tuples, not bitmasks).

    Returns (mats, dims) where mats[k] maps the span of (k+1)-vertex faces
    to the span of k-vertex faces, and dims[k] counts k-vertex faces.
    """
    faces = powerset_faces(maximal_faces)
    top = max(len(f) for f in faces)
    by_card = [sorted(f for f in faces if len(f) == c) for c in range(top + 1)]
    index = [{f: i for i, f in enumerate(lst)} for lst in by_card]
    dims = [len(lst) for lst in by_card]
    mats = []
    for c in range(1, top + 1):
        rows = [[0] * dims[c] for _ in range(dims[c - 1])]
        for col, f in enumerate(by_card[c]):
            for t in range(len(f)):
                sub = f[:t] + f[t + 1 :]
                rows[index[c - 1][sub]][col] = (-1) ** t
        mats.append(rows)
    return mats, dims


def brute_reduced_betti(maximal_faces, rank_fn=fraction_rank) -> dict[int, int]:
    """Reduced Betti numbers over Q (or F2 with rank_fn=f2_rank)."""
    mats, dims = brute_boundaries(maximal_faces)
    ranks = [rank_fn(m) if m and m[0] else 0 for m in mats]
    betti = {}
    for k, dim in enumerate(dims):
        out_rank = ranks[k - 1] if k >= 1 else 0
        in_rank = ranks[k] if k < len(mats) else 0
        b = dim - out_rank - in_rank
        if b:
            betti[k - 1] = b
    return betti


def graded_tensor_unreduced(u1: dict[int, int], u2: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for d1, r1 in u1.items():
        for d2, r2 in u2.items():
            out[d1 + d2] = out.get(d1 + d2, 0) + r1 * r2
    return {d: r for d, r in out.items() if r}


def unreduce(reduced: dict[int, int]) -> dict[int, int]:
    """Reduced ranks of a connected space -> unreduced ranks."""
    out = dict(reduced)
    out[0] = out.get(0, 0) + 1
    return out


def reduce_ranks(unreduced: dict[int, int]) -> dict[int, int]:
    out = dict(unreduced)
    out[0] = out.get(0, 0) - 1
    return {d: r for d, r in out.items() if r}


def random_complex_faces(rng: random.Random, m: int, n_faces: int, max_card: int):
    """Random maximal-face candidates (may be redundant; that is fine)."""
    faces = []
    for _ in range(n_faces):
        card = rng.randint(1, max_card)
        faces.append(sorted(rng.sample(range(1, m + 1), min(card, m))))
    return faces


def pascal_parity_table(limit: int):
    """Rows 0..limit of Pascal's triangle mod 2."""
    rows = [[1]]
    for r in range(1, limit + 1):
        prev = rows[-1]
        row = [1] + [(prev[i - 1] + prev[i]) % 2 for i in range(1, r)] + [1]
        rows.append(row)
    return rows
