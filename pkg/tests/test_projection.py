from collections import Counter

import pytest

from conftest import pascal_parity_table
from torictop import (
    CharacteristicMatrix,
    InputError,
    cohomology_ring,
    cube_census,
    cube_presentation,
    full_subcomplex,
    generalized_bott,
    p_local_note,
    polygon_polytope,
    projection_decomposition,
    simplex_polytope,
    squaring_kernel,
    steenrod_hit_search,
    suspension_triviality_check,
    two_simplices_check,
)
from torictop import fixtures
from torictop.projection import CERT_DIMENSION, CERT_SIMPLEX, CERT_VANISHING

CP2 = (simplex_polytope(2), CharacteristicMatrix.from_rows([[1, 0, -1], [0, 1, -1]]))
SQUARE = (polygon_polytope(4), CharacteristicMatrix.from_rows([[1, 0, -1, 0], [0, 1, 0, -1]]))


def test_decomposition_groups_partition_everything():
    P, lam = SQUARE
    for p in (3, 5, 7):
        rep = projection_decomposition(P, lam, p)
        subsets = [c.subset for c in rep.all_certificates()]
        assert len(subsets) == 2**P.m - 1
        assert len(set(subsets)) == len(subsets)
        for i, group in rep.groups.items():
            assert all((len(c.subset) - i) % (p - 1) == 0 for c in group)


def test_decomposition_simplex_p5():
    P, lam = CP2
    rep = projection_decomposition(P, lam, 5)
    kinds = {c.subset: c.kind for c in rep.all_certificates()}
    for I in [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]:
        assert kinds[I] == CERT_SIMPLEX
    assert kinds[(1, 2, 3)] == CERT_DIMENSION
    # the group of the full subset targets a piece with no homology
    assert rep.targets[2].homology.is_trivial()


def test_grouping_sizes_four_cycle_p3():
    P, lam = SQUARE
    rep = projection_decomposition(P, lam, 3)
    sizes = {i: len(g) for i, g in rep.groups.items()}
    assert sizes == {1: 8, 2: 7}  # |I| in {1,3} and |I| in {2,4}


def test_empty_groups_when_m_small():
    P, lam = CP2
    rep = projection_decomposition(P, lam, 7)
    assert all(len(rep.groups[i]) == 0 for i in (4, 5, 6))


def test_triviality_certified_cases():
    cube3, _ = generalized_bott([1, 1, 1])
    cases = [
        (CP2[0], 5),
        (SQUARE[0], 3),
        (SQUARE[0], 5),
        (cube3, 5),
        (cube3, 7),
    ]
    for P, p in cases:
        t = suspension_triviality_check(P, p)
        assert t.applicable and t.certified, (P.n, P.m, p)
        assert all(c.kind in (CERT_SIMPLEX, CERT_DIMENSION, CERT_VANISHING) for c in t.summands)


def test_triviality_simplex_p3_boundary_case():
    # the full-subset summand suspends the circle to degree 6, which lands
    # exactly on the first even p-torsion line of the 3-sphere at p=3; no
    # certificate applies there, and in fact the restricted map is essential
    # (its cofiber carries a nonzero degree-doubling operation mod 3), so a
    # sound checker must refuse to certify this pair
    t = suspension_triviality_check(CP2[0], 3)
    assert t.applicable
    assert t.certified is False
    assert t.uncertified_subsets() == [(1, 2, 3)]


def test_four_cycle_p3_certificate_kinds():
    t = suspension_triviality_check(SQUARE[0], 3)
    kinds = Counter(c.kind for c in t.summands)
    assert kinds == {CERT_SIMPLEX: 8, CERT_DIMENSION: 2, CERT_VANISHING: 5}
    by_subset = {c.subset: c for c in t.summands}
    assert by_subset[(1, 3)].kind == CERT_DIMENSION
    assert by_subset[(1, 2, 3, 4)].kind == CERT_VANISHING


def test_four_cycle_p5_dimension_details():
    t = suspension_triviality_check(SQUARE[0], 5)
    c = next(x for x in t.summands if x.subset == (1, 3))
    assert c.kind == CERT_DIMENSION
    assert c.details["dim_K_I"] == 0
    assert c.details["top_cell"] == 4 and c.details["target_sphere"] == 5


def test_rejects_prime_two():
    with pytest.raises(InputError, match="p=2"):
        suspension_triviality_check(CP2[0], 2)


def test_certificate_soundness_recompute():
    # dimension certificates: dim K_I <= |I| - 2 and 2|I| < 2i+1
    for name in ("cp2", "cp1xcp1", "bott3"):
        P, lam = fixtures.load_quasitoric(name)
        for p in (5, 7):
            rep = projection_decomposition(P, lam, p)
            for c in rep.all_certificates():
                if c.kind == CERT_DIMENSION:
                    sub = full_subcomplex(P.complex, c.subset)
                    assert sub.dim <= len(c.subset) - 2
                    assert 2 * len(c.subset) < 2 * c.group + 1
                if c.kind == CERT_SIMPLEX:
                    assert P.complex.has_face(c.subset)


def test_squaring_kernel_cp2_inconclusive():
    pres = cohomology_ring(*CP2, "F2")
    v = squaring_kernel(pres)
    assert v.conclusion == "inconclusive" and v.witness is None


def test_squaring_kernel_square_witness():
    pres = cohomology_ring(*SQUARE, "F2")
    v = squaring_kernel(pres)
    assert v.conclusion == "not-null"
    assert v.witness["kernel_dimension"] == 2
    assert any(v.witness["coefficients"])


def test_squaring_kernel_polygons():
    for k in range(4, 9):
        P, lam = fixtures.load_quasitoric(f"qtm_polygon{k}") if k >= 5 else SQUARE
        pres = cohomology_ring(P, lam, "F2")
        v = squaring_kernel(pres)
        assert v.conclusion == "not-null"
        assert v.witness["kernel_dimension"] >= k - 3


def test_squaring_kernel_needs_f2():
    pres = cohomology_ring(*CP2, "Q")
    with pytest.raises(InputError):
        squaring_kernel(pres)


def test_squaring_additivity_via_structure_constants():
    # (v+w)^2 = v^2 + w^2: expand the square bilinearly with the product
    # table and compare against the linear squaring map
    import itertools

    for name in ("cp1xcp1", "bott3", "qtm_polygon5"):
        P, lam = fixtures.load_quasitoric(name)
        pres = cohomology_ring(P, lam, "F2")
        h2 = pres.dim(2)
        h4 = pres.dim(4)
        table = pres.mult_h2[1]
        for coeffs in itertools.product((0, 1), repeat=h2):
            via_products = [0] * h4
            for s in range(h2):
                for t in range(h2):
                    if coeffs[s] and coeffs[t]:
                        for r in range(h4):
                            via_products[r] ^= table[s][t][r]
            via_squares = [0] * h4
            for s in range(h2):
                if coeffs[s]:
                    for r in range(h4):
                        via_squares[r] ^= pres.squaring_cols[s][r]
            assert via_products == via_squares


def test_steenrod_hit_pinned():
    assert steenrod_hit_search(2) == (1, 1)
    assert steenrod_hit_search(3) is None
    assert steenrod_hit_search(5) == (3, 2)
    with pytest.raises(InputError):
        steenrod_hit_search(0)


def test_steenrod_hit_against_pascal_parity():
    rows = pascal_parity_table(512)
    for s in range(1, 513):
        expected = None
        for j in range(1, s // 2 + 1):
            if rows[s - j][j] % 2:
                expected = (s - j, j)
                break
        assert steenrod_hit_search(s) == expected
        assert (expected is None) == ((s + 1) & s == 0)  # s = 2^e - 1


def test_two_simplices_pinned():
    v = two_simplices_check(5, 2)
    assert v.conclusion == "not-null"
    assert v.witness["hits"]["4"]["hit"] == [3, 1]
    assert two_simplices_check(2, 1).conclusion == "inconclusive"
    v0 = two_simplices_check(3, 0)
    assert v0.conclusion == "not-null" and v0.criterion == "projective-space-cofiber"
    with pytest.raises(InputError):
        two_simplices_check(2, 3)


def test_cube_census_complete():
    census = cube_census()
    assert census.total == 64
    assert census.valid_count == 25
    assert census.uncertified == ()
    for e in census.entries:
        if e.valid:
            assert e.witness is not None
            # witness re-validates: nonzero and squares to zero
            pres = cube_presentation(*e.params)
            vec = e.witness["coefficients"]
            assert any(vec)
            mat = pres.squaring_matrix()
            img = [sum(mat[r][c] * vec[c] for c in range(3)) % 2 for r in range(3)]
            assert img == [0, 0, 0]


def test_cube_census_spot_checked_determinants():
    # five tuples checked by hand against the cofactor expansion of
    # [[1,c,e],[a,1,f],[b,d,1]] over F2
    from torictop.quasitoric import cube_determinant_f2

    assert cube_determinant_f2(0, 0, 0, 0, 0, 0) == 1  # identity
    assert cube_determinant_f2(1, 0, 0, 1, 1, 0) == 0  # 1 - fd - ca + cfb + ead - eb = 1+1
    assert cube_determinant_f2(0, 1, 0, 1, 1, 0) == 0  # eb term kills it
    assert cube_determinant_f2(1, 1, 0, 1, 1, 0) == 1  # dets fine; pair be fails instead
    assert cube_determinant_f2(0, 0, 1, 0, 0, 1) == 1  # valid with witness x


def test_p_local_note():
    P, lam = fixtures.load_quasitoric("cp2")
    note = p_local_note(P, lam)
    assert note["computed"] is False and "statement" in note
    hopf = p_local_note(*fixtures.load_quasitoric("cp1"))
    assert "Hopf" in hopf["special_case"]
    with pytest.raises(InputError):
        p_local_note(SQUARE[0], CharacteristicMatrix.from_rows([[1, 0, 1, 0], [0, 1, 0, 2]]))
