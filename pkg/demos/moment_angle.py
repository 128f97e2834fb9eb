"""Homology of moment-angle complexes, one full subcomplex at a time.

The suspension of a moment-angle complex splits stably into wedge pieces
indexed by vertex subsets, so its homology assembles from the reduced
homology of full subcomplexes, shifted by |I|+1.

Run:  python demos/moment_angle.py
"""

from torictop import (
    join,
    moment_angle_homology,
    polygon_boundary,
    simplex_boundary,
    validate_complex,
    wedge_splitting,
)


def show(label, h):
    parts = []
    for deg, (rank, tors) in h.groups:
        t = "" if not tors else " + torsion " + "+".join(f"Z/{x}" for x in tors)
        parts.append(f"H_{deg} = Z^{rank}{t}")
    print(f"  {label}: " + ("; ".join(parts) if parts else "no reduced homology"))


print("== boundaries of simplices give odd spheres ==")
for n in range(1, 6):
    show(f"boundary of the {n}-simplex", moment_angle_homology(simplex_boundary(n)))

print()
print("== the square gives a product of two 3-spheres ==")
square = polygon_boundary(4)
show("4-cycle", moment_angle_homology(square))
sp = wedge_splitting(square)
print(f"  contributing subsets (of {2**square.m - 1}):")
for s in sp.summands:
    print(f"    I={s.subset}: subcomplex homology {s.homology.as_dict()}")
print(f"  the other {sp.trivial_count} subsets have contractible subcomplexes")

print()
print("== joins model products ==")
K = join(simplex_boundary(1), simplex_boundary(2))
show("segment x triangle dual", moment_angle_homology(K))
print("  degrees 3, 5 and 3+5 are the homology of a product of two odd spheres")

print()
print("== torsion is carried through exactly ==")
rp2 = validate_complex(
    [[1, 2, 3], [1, 3, 4], [1, 2, 6], [1, 4, 5], [1, 5, 6],
     [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]], 6)
show("6-vertex projective plane", moment_angle_homology(rp2))
