"""Face numbers of simple polytopes through their dual complexes.

Run:  python demos/hvectors.py
"""

from torictop import (
    PolytopeDual,
    dehn_sommerville_report,
    f_vector,
    h_vector_of,
    join,
    polygon_polytope,
    simplex_boundary,
    simplex_polytope,
)

print("== polygons ==")
print("a k-gon has h-vector (1, k-2, 1): the middle entry counts the")
print("interior degrees of freedom, the outer ones are forced.")
for k in range(3, 9):
    P = polygon_polytope(k)
    print(f"  k={k}:  f={f_vector(P).entries}  h={h_vector_of(P).entries}")

print()
print("== simplices ==")
print("the n-simplex is the smallest simple n-polytope; its h-vector is all ones,")
print("matching the even Betti numbers of complex projective n-space.")
for n in range(1, 6):
    P = simplex_polytope(n)
    print(f"  n={n}:  h={h_vector_of(P).entries}")

print()
print("== the 3-cube ==")
cube = PolytopeDual(
    n=3, complex=join(join(simplex_boundary(1), simplex_boundary(1)), simplex_boundary(1))
)
print(f"  f={f_vector(cube).entries}  (1 body, 6 facets, 12 edges, 8 vertices)")
print(f"  h={h_vector_of(cube).entries}")

print()
print("== products convolve h-vectors ==")
prism = PolytopeDual(n=3, complex=join(simplex_boundary(1), simplex_boundary(2)))
print(f"  segment x triangle: h={h_vector_of(prism).entries}  (= (1,1) * (1,1,1))")

print()
print("== symmetry check ==")
for P, label in [(cube, "3-cube"), (polygon_polytope(7), "7-gon")]:
    r = dehn_sommerville_report(h_vector_of(P))
    print(f"  {label}: symmetric={r.symmetric}, h1>=h2: {r.h1_ge_h2}")
print("an asymmetric h-vector can never come from a simple polytope.")
