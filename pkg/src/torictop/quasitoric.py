"""Quasitoric manifolds as (dual complex, characteristic matrix) pairs.

A quasitoric manifold over a simple n-polytope P with m facets is encoded by
an n x m integer matrix whose column j is attached to vertex j of the dual
complex.  The matrix is admissible when every maximal face yields a column
submatrix of determinant +-1; this is checked with exact integer arithmetic.

The cohomology ring over a field is presented in the classical way: the face
ring of the dual complex (polynomial generators v_1..v_m in degree 2, with
products over non-faces set to zero) divided by the n linear forms given by
the rows of the characteristic matrix.  Per even degree this is plain linear
algebra, done here with a fixed monomial order so output is deterministic:
the linear forms are pivoted on the lexicographically first maximal face,
and in each degree the surviving basis monomials are the lexicographically
smallest face-supported monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .complexes import PolytopeDual, h_vector_of, join, simplex_boundary
from .errors import ConsistencyError, InputError


@dataclass(frozen=True)
class CharacteristicMatrix:
    n: int
    m: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "CharacteristicMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows:
            raise InputError("characteristic matrix needs at least one row")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise InputError("characteristic matrix is ragged")
        return cls(n=len(rows), m=m, rows=rows)

    def column_submatrix(self, vertices) -> list[list[int]]:
        return [[r[v - 1] for v in vertices] for r in self.rows]

    def to_json_obj(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    failing_face: tuple[int, ...] | None = None
    failing_det: int | None = None


def validate_characteristic(P: PolytopeDual, lam: CharacteristicMatrix) -> ValidityReport:
    """Check the unimodular-minor condition on every maximal face."""
    if lam.n != P.n or lam.m != P.m:
        raise InputError(
            f"characteristic matrix is {lam.n}x{lam.m}, polytope needs {P.n}x{P.m}"
        )
    for face in sorted(P.complex.maximal_faces):
        d = linalg.det_int(lam.column_submatrix(face))
        if d not in (1, -1):
            return ValidityReport(valid=False, failing_face=face, failing_det=d)
    return ValidityReport(valid=True)


# ---------------------------------------------------------------------------
# cohomology of the quotient


def _compositions(total: int, parts: int):
    """Positive integer compositions of ``total`` into ``parts`` slots."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _support_mask(exp: tuple[int, ...]) -> int:
    mask = 0
    for i, e in enumerate(exp):
        if e:
            mask |= 1 << i
    return mask


@dataclass(frozen=True)
class CohomologyPresentation:
    """Field cohomology of a quasitoric manifold, degree by degree.

    ``basis[k]`` lists exponent vectors (length m) of the monomials that
    represent a basis of degree 2k; ``mult_h2[k][s][t]`` expands the product
    of degree-2 basis element s with degree-2k basis element t over the
    degree-2(k+1) basis.  ``squaring_cols`` (F2 only) has one column per
    degree-2 basis element, giving its square over the degree-4 basis.
    """

    coeff: str
    n: int
    m: int
    h: tuple[int, ...]
    pivot_face: tuple[int, ...]
    basis: dict[int, tuple[tuple[int, ...], ...]]
    mult_h2: dict[int, tuple[tuple[tuple, ...], ...]]
    squaring_cols: tuple[tuple[int, ...], ...] | None

    def dim(self, degree: int) -> int:
        if degree % 2 or degree < 0 or degree > 2 * self.n:
            return 0
        return len(self.basis[degree // 2])

    def dims_even(self) -> tuple[int, ...]:
        return tuple(len(self.basis[k]) for k in range(self.n + 1))

    def squaring_matrix(self) -> list[list[int]]:
        """The additive squaring map on degree 2, rows over the degree-4 basis."""
        if self.squaring_cols is None:
            raise InputError("squaring map only exists over F2")
        h4 = self.dim(4)
        return [[col[r] for col in self.squaring_cols] for r in range(h4)]

    def h2_labels(self) -> list[str]:
        out = []
        for exp in self.basis[1]:
            v = next(i + 1 for i, e in enumerate(exp) if e)
            out.append(f"v{v}")
        return out

    def to_json_obj(self) -> dict:
        def ser(x):
            if isinstance(x, Fraction):
                return str(x)
            return x

        obj = {
            "coeff": self.coeff,
            "n": self.n,
            "m": self.m,
            "h": list(self.h),
            "pivot_face": list(self.pivot_face),
            "dims": {str(2 * k): len(b) for k, b in self.basis.items()},
            "basis": {str(2 * k): [list(e) for e in b] for k, b in self.basis.items()},
            "products_with_degree2": {
                str(2 * k): [[[ser(c) for c in cell] for cell in row] for row in table]
                for k, table in self.mult_h2.items()
            },
        }
        if self.squaring_cols is not None:
            obj["squaring"] = {"columns": [list(c) for c in self.squaring_cols]}
        return obj


class _DegreeSystem:
    """Monomial columns and relation reducer for one polynomial degree."""

    def __init__(self, cols, col_index, rref_rows, pivots, basis_cols, field):
        self.cols = cols
        self.col_index = col_index
        self.rref_rows = rref_rows
        self.pivots = pivots
        self.basis_cols = basis_cols  # column indices of surviving monomials
        self.field = field

    @property
    def basis(self):
        return tuple(self.cols[c] for c in self.basis_cols)

    def normal_form(self, vec):
        red = linalg.reduce_against(vec, self.rref_rows, self.pivots, self.field)
        return tuple(red[c] for c in self.basis_cols)


def cohomology_ring(
    P: PolytopeDual, lam: CharacteristicMatrix, coeff: str = "Q"
) -> CohomologyPresentation:
    """Compute the field cohomology presentation of the quasitoric manifold.

    Raises ConsistencyError when a computed dimension disagrees with the
    h-vector; that equality is a theorem, so a failure means corrupt input
    or a bug, never a property of valid data.
    """
    report = validate_characteristic(P, lam)
    if not report.valid:
        raise InputError(
            f"characteristic matrix fails on face {report.failing_face} "
            f"(determinant {report.failing_det})"
        )
    field = linalg.field_for_tag(coeff)
    K = P.complex
    n, m = P.n, P.m
    h = h_vector_of(P).entries

    sigma0 = min(K.maximal_faces)
    in_sigma0 = set(sigma0)
    priority = list(sigma0) + [v for v in range(1, m + 1) if v not in in_sigma0]

    def key(exp):
        return tuple(exp[v - 1] for v in priority)

    faces = sorted(
        {mask for lst in K.faces_by_card().values() for mask in lst if mask},
        key=lambda f: f.bit_count(),
    )
    face_verts = {}
    for f in faces:
        vs = []
        x = f
        v = 1
        while x:
            if x & 1:
                vs.append(v)
            x >>= 1
            v += 1
        face_verts[f] = vs
    face_set = set(faces)

    def monomials(k):
        if k == 0:
            return [(0,) * m]
        out = []
        for f in faces:
            vs = face_verts[f]
            if len(vs) > k:
                continue
            for comp in _compositions(k, len(vs)):
                exp = [0] * m
                for v, e in zip(vs, comp):
                    exp[v - 1] = e
                out.append(tuple(exp))
        out.sort(key=key, reverse=True)
        return out

    lam_field = [[field.from_int(x) for x in row] for row in lam.rows]

    systems: dict[int, _DegreeSystem] = {}
    prev_monomials: list[tuple[int, ...]] = []
    for k in range(0, n + 2):
        cols = monomials(k)
        col_index = {c: i for i, c in enumerate(cols)}
        rows = []
        if k >= 1:
            for i in range(n):
                lam_row = lam_field[i]
                for mu in prev_monomials:
                    vec = [field.zero] * len(cols)
                    hit = False
                    for j in range(m):
                        c = lam_row[j]
                        if field.is_zero(c):
                            continue
                        exp = list(mu)
                        exp[j] += 1
                        texp = tuple(exp)
                        idx = col_index.get(texp)
                        if idx is None:
                            continue  # non-face monomial: zero in the face ring
                        vec[idx] = field.add(vec[idx], c)
                        hit = True
                    if hit:
                        rows.append(vec)
        rref_rows, pivots = linalg.rref(rows, len(cols), field)
        basis_cols = [c for c in range(len(cols)) if c not in set(pivots)]
        basis_cols.reverse()  # ascending priority order: smallest monomials first
        systems[k] = _DegreeSystem(cols, col_index, rref_rows, pivots, basis_cols, field)
        if k == 1 and sorted(pivots) != list(range(n)):
            raise ConsistencyError(
                "linear forms failed to pivot on the first maximal face; "
                "the unimodular minor should have made this impossible"
            )
        want = h[k] if k <= n else 0
        if len(basis_cols) != want:
            raise ConsistencyError(
                f"degree {2 * k} has dimension {len(basis_cols)}, "
                f"h-vector predicts {want}"
            )
        prev_monomials = cols

    basis = {k: systems[k].basis for k in range(n + 1)}

    mult_h2 = {}
    for k in range(1, n):
        table = []
        target = systems[k + 1]
        for b2 in basis[1]:
            row = []
            for bt in basis[k]:
                prod = tuple(a + b for a, b in zip(b2, bt))
                if _support_mask(prod) in face_set:
                    vec = [field.zero] * len(target.cols)
                    vec[target.col_index[prod]] = field.one
                    row.append(target.normal_form(vec))
                else:
                    row.append(tuple([field.zero] * len(target.basis_cols)))
            table.append(tuple(row))
        mult_h2[k] = tuple(table)

    squaring_cols = None
    if coeff == "F2":
        target = systems[2]
        cols_out = []
        for b2 in basis[1]:
            sq = tuple(2 * e for e in b2)
            vec = [field.zero] * len(target.cols)
            vec[target.col_index[sq]] = field.one
            cols_out.append(tuple(target.normal_form(vec)))
        squaring_cols = tuple(cols_out)

    return CohomologyPresentation(
        coeff=coeff,
        n=n,
        m=m,
        h=h,
        pivot_face=sigma0,
        basis=basis,
        mult_h2=mult_h2,
        squaring_cols=squaring_cols,
    )


def power_map_scalars(pres: CohomologyPresentation, u: int) -> dict[int, int]:
    """Action of the degree-u self-map on cohomology: u^k on degree 2k."""
    return {2 * k: u**k for k in range(pres.n + 1)}


# ---------------------------------------------------------------------------
# constructors for the standard families


def generalized_bott(dims, params=None) -> tuple[PolytopeDual, CharacteristicMatrix]:
    """Characteristic data for an iterated projective-bundle tower.

    ``dims[i]`` is the fiber dimension of stage i; ``params[j]`` (for stage
    j >= 1) lists one integer vector per earlier stage i < j, of length
    ``dims[j]``, giving the twist of stage j over stage i.  The polytope is
    the product of simplices; admissibility holds for every parameter value
    because the matrix is block triangular with unit diagonal blocks.
    """
    dims = [int(d) for d in dims]
    if not dims or any(d < 1 for d in dims):
        raise InputError("stage dimensions must be positive integers")
    ell = len(dims)
    if params is None:
        params = [[[0] * dims[j] for _ in range(j)] for j in range(ell)]
    if len(params) != ell:
        raise InputError(f"need parameter entries for all {ell} stages")
    for j, plist in enumerate(params):
        if len(plist) != j:
            raise InputError(
                f"stage {j + 1} must reference exactly the {j} earlier stages"
            )
        for vec in plist:
            if len(vec) != dims[j]:
                raise InputError(
                    f"stage {j + 1} parameter vectors must have length {dims[j]}"
                )
    n = sum(dims)
    m = sum(d + 1 for d in dims)
    row_off = [sum(dims[:j]) for j in range(ell)]
    col_off = [sum(d + 1 for d in dims[:j]) for j in range(ell)]
    rows = [[0] * m for _ in range(n)]
    for i in range(ell):
        for t in range(dims[i]):
            rows[row_off[i] + t][col_off[i] + t] = 1
        extra = col_off[i] + dims[i]
        for t in range(dims[i]):
            rows[row_off[i] + t][extra] = -1
        for j in range(i + 1, ell):
            vec = params[j][i]
            for s in range(dims[j]):
                rows[row_off[j] + s][extra] = vec[s]
    K = simplex_boundary(dims[0])
    for d in dims[1:]:
        K = join(K, simplex_boundary(d))
    P = PolytopeDual(n=n, complex=K)
    lam = CharacteristicMatrix.from_rows(rows)
    report = validate_characteristic(P, lam)
    if not report.valid:  # block triangular structure makes this impossible
        raise ConsistencyError(f"tower matrix failed validation: {report}")
    return P, lam


# ---------------------------------------------------------------------------
# small quadratic presentations over F2


@dataclass(frozen=True)
class QuadraticPresentationF2:
    """Symbolic mod-2 presentation for the two low-dimensional families.

    kind 'cube': F2[x,y,z] / (x^2+x(ay+bz), y^2+y(cx+dz), z^2+z(ex+fy));
    kind 'two-simplices': F2[x,y] / (x^(k'-l+1)(x+y)^l, y^(n-k'+1)).
    """

    kind: str
    params: tuple[int, ...]
    valid: bool | None
    h2_dim: int
    h4_dim: int
    squaring: tuple[tuple[int, ...], ...]  # rows over the degree-4 basis
    h2_names: tuple[str, ...]

    def squaring_matrix(self) -> list[list[int]]:
        return [list(r) for r in self.squaring]

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "params": list(self.params),
            "valid": self.valid,
            "h2_dim": self.h2_dim,
            "h4_dim": self.h4_dim,
            "squaring": [list(r) for r in self.squaring],
        }


def cube_determinant_f2(a: int, b: int, c: int, d: int, e: int, f: int) -> int:
    """F2 determinant of [[1,c,e],[a,1,f],[b,d,1]]."""
    return (1 + f * d + c * a + c * f * b + e * a * d + e * b) % 2


def cube_presentation(a: int, b: int, c: int, d: int, e: int, f: int) -> QuadraticPresentationF2:
    """Quadratic presentation attached to a quasitoric manifold over the 3-cube.

    Validity demands every pairwise product ac, df, be to vanish and the
    determinant to be 1: these are exactly the mod-2 shadows of the
    unimodular principal minors of a characteristic matrix in refined form.
    (The pair condition be = 0 is forced by the 2x2 principal minor on the
    first and third stages, symmetrically to ac and df.)
    """
    a, b, c, d, e, f = (int(x) % 2 for x in (a, b, c, d, e, f))
    valid = (
        a * c == 0 and d * f == 0 and b * e == 0 and cube_determinant_f2(a, b, c, d, e, f) == 1
    )
    squaring = (
        (a, c, 0),
        (b, 0, e),
        (0, d, f),
    )
    return QuadraticPresentationF2(
        kind="cube",
        params=(a, b, c, d, e, f),
        valid=valid,
        h2_dim=3,
        h4_dim=3,
        squaring=squaring,
        h2_names=("x", "y", "z"),
    )


def _poly_mul(p1: dict, p2: dict) -> dict:
    out: dict[tuple[int, int], int] = {}
    for (i1, j1), c1 in p1.items():
        for (i2, j2), c2 in p2.items():
            k = (i1 + i2, j1 + j2)
            out[k] = (out.get(k, 0) + c1 * c2) % 2
    return {k: v for k, v in out.items() if v}


def product_presentation(n: int, kprime: int, ell: int) -> QuadraticPresentationF2:
    """Mod-2 presentation for quasitoric manifolds over a product of two simplices."""
    if not (0 <= ell <= kprime <= n):
        raise InputError("need 0 <= l <= k' <= n")
    x_plus_y = {(1, 0): 1, (0, 1): 1}
    r1 = {(kprime - ell + 1, 0): 1}
    for _ in range(ell):
        r1 = _poly_mul(r1, x_plus_y)
    r2 = {(0, n - kprime + 1): 1}
    relations = [r1, r2]
    field = linalg.PrimeField(2)

    def degree_system(d):
        cols = [(d - j, j) for j in range(d + 1)]
        col_index = {c: i for i, c in enumerate(cols)}
        rows = []
        for r in relations:
            deg_r = max(i + j for (i, j) in r)
            if deg_r > d:
                continue
            extra = d - deg_r
            for t in range(extra + 1):
                vec = [0] * len(cols)
                for (i, j), c in r.items():
                    vec[col_index[(i + extra - t, j + t)]] ^= c
                rows.append(vec)
        rref_rows, pivots = linalg.rref(rows, len(cols), field)
        basis_cols = [c for c in range(len(cols)) if c not in set(pivots)]
        return cols, rref_rows, pivots, basis_cols

    cols1, rr1, pv1, b1 = degree_system(1)
    cols2, rr2, pv2, b2 = degree_system(2)
    sq_cols = []
    for c in b1:
        i, j = cols1[c]
        vec = [0] * len(cols2)
        vec[cols2.index((2 * i, 2 * j))] = 1
        red = linalg.reduce_against(vec, rr2, pv2, field)
        sq_cols.append(tuple(red[cc] for cc in b2))
    squaring = tuple(
        tuple(col[r] for col in sq_cols) for r in range(len(b2))
    )
    names = tuple("xy"[cols1[c].index(1)] if 1 in cols1[c] else "?" for c in b1)
    return QuadraticPresentationF2(
        kind="two-simplices",
        params=(n, kprime, ell),
        valid=None,
        h2_dim=len(b1),
        h4_dim=len(b2),
        squaring=squaring,
        h2_names=names,
    )


def cube_parameters(P: PolytopeDual, lam: CharacteristicMatrix) -> QuadraticPresentationF2:
    """Extract the mod-2 quadratic presentation from quasitoric data over the 3-cube.

    Works for any admissible matrix, not only refined ones: the column
    submatrix on the first maximal face is inverted over the integers and
    used to rewrite the remaining columns.
    """
    if P.n != 3 or P.m != 6:
        raise InputError("cube parameters need a 3-polytope with 6 facets")
    K = P.complex
    # antipodal pairing: each vertex has exactly one non-neighbor
    partner = {}
    for v in range(1, 7):
        non = [w for w in range(1, 7) if w != v and not K.has_face([v, w])]
        if len(non) != 1:
            raise InputError("dual complex is not the boundary of the 3-dimensional cross-polytope")
        partner[v] = non[0]
    report = validate_characteristic(P, lam)
    if not report.valid:
        raise InputError(
            f"characteristic matrix fails on face {report.failing_face} "
            f"(determinant {report.failing_det})"
        )
    sigma0 = min(K.maximal_faces)
    free = [partner[v] for v in sigma0]
    S = linalg.unimodular_inverse(lam.column_submatrix(sigma0))
    B = linalg.matmul_int(S, lam.column_submatrix(free), 3)
    Bbar = [[x % 2 for x in row] for row in B]
    for k in range(3):
        if Bbar[k][k] != 1:
            raise ConsistencyError("diagonal of the reduced matrix must be odd for admissible data")
    a, b = Bbar[0][1], Bbar[0][2]
    c, d = Bbar[1][0], Bbar[1][2]
    e, f = Bbar[2][0], Bbar[2][1]
    return cube_presentation(a, b, c, d, e, f)
