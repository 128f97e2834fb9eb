"""The p-local splitting of a suspended quasitoric manifold.

Composites of shifted power maps act on odd homology by products of
eigenvalue differences; the vanishing pattern of those scalars cuts the
suspension into p-1 wedge pieces sorted by residue class.

Run:  python demos/suspension_splitting.py
"""

from torictop import (
    EvenBettiData,
    eigen_scalar,
    h_vector_of,
    polygon_polytope,
    primitive_root,
    simplex_polytope,
    sphere_wedge_decomposition,
    split,
)

p = 5
u = primitive_root(p)
print(f"== selector scalars mod {p} (primitive root u={u}) ==")
print("rows i = wedge piece, columns k = half-degree; dot means zero")
header = "      " + "".join(f"k={k:<3}" for k in range(1, 9))
print(header)
for i in range(1, p):
    row = "".join(f"{eigen_scalar(p, u, i, k) or '.':<4}" for k in range(1, 9))
    print(f"  i={i}: {row}")
print("piece i keeps exactly the degrees with k = i mod p-1")

print()
print("== projective 3-space at p=5 splits into three spheres ==")
b = EvenBettiData(3, (1, 1, 1, 1))
for s in sphere_wedge_decomposition(b, 5):
    print(f"  piece {s.i}: sphere wedge {s.sphere_wedge}")

print()
print("== below the dimension the pieces stack congruence classes ==")
b5 = EvenBettiData(5, (1,) * 6)
for s in split(b5, 3):
    print(f"  piece {s.i}: degrees {s.homology.degrees()}")

print()
print("== rigidity over a fixed polytope ==")
print("the pieces depend only on the h-vector, so any two manifolds over")
print("the same polytope get identical reports:")
for k in (4, 6):
    b = EvenBettiData.from_h_vector(h_vector_of(polygon_polytope(k)))
    pieces = sphere_wedge_decomposition(b, 5)
    print(f"  {k}-gon: " + ", ".join(f"X_{s.i}={s.sphere_wedge}" for s in pieces))
print("compare: the h-vector of the simplex gives a single sphere per piece")
b = EvenBettiData.from_h_vector(h_vector_of(simplex_polytope(3)))
print("  3-simplex:", [s.sphere_wedge for s in sphere_wedge_decomposition(b, 5)])
