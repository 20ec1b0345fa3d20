"""
Frolov point sets
=================

The Frolov lattice has coordinate products bounded away from zero. Scaling
it by a = 2^i gives nested point sets with bounded mesh ratio.
"""

from qups import (admissibility_min_normform, frolov_matrix, gen_frolov_points,
                  mesh_ratio_enclosure, nestedness_check)

L = frolov_matrix(2)
print("generator matrix:\n", L.matrix)
print("|det| =", L.det_abs)
adm = admissibility_min_normform(L, 50)
print(f"min |x1 x2| over ||x|| <= 50: {adm.minimum:.12f} at k = {adm.coeffs}")

prev = None
for i in range(2, 8):
    P = gen_frolov_points(2, 2 ** i)
    lo, hi = mesh_ratio_enclosure(P, "inf", 512)
    nested = "" if prev is None else f"contains previous: {nestedness_check(prev, P)}"
    print(f"a = {2 ** i:4d}  N = {P.n:5d}  rho in [{lo:.3f}, {hi:.3f}]  {nested}")
    prev = P
