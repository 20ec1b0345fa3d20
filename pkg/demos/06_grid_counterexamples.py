"""
Grids that are not quasi-uniform, and grid discrepancy
======================================================

The anisotropic grid with m, m^2 points per axis has separation 1/(2 m^2)
and a mesh ratio growing like m. The regular grid has star discrepancy of
order 1/m.
"""

from qups import gen_grid_aniso, gen_grid_regular, mesh_ratio_enclosure, separation_radius
from qups import star_discrepancy_exact

print(" m    N   q         rho_lo")
for m in range(2, 9):
    P = gen_grid_aniso(m, 2)
    print(f"{m:2d} {P.n:4d}  {str(separation_radius(P)):8s}  {mesh_ratio_enclosure(P)[0]:.2f}")

print("\nregular grid star discrepancy")
for m in (2, 4, 8, 16):
    print(f"  m = {m:2d}: d=1 {star_discrepancy_exact(gen_grid_regular(m, 1))}, "
          f"d=2 {star_discrepancy_exact(gen_grid_regular(m, 2))}")
