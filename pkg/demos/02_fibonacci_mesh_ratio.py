"""
Mesh ratio of Fibonacci lattices
================================

Fibonacci ratios have all partial quotients equal to 1, so their mesh
ratio in the sup-norm never exceeds 4 * (1 + 2) = 12.
"""

from qups import gen_fibonacci, mesh_ratio_enclosure, qu_report

print(" m      N   rho_lo   rho_hi")
for m in range(5, 21):
    P = gen_fibonacci(m)
    lo, hi = mesh_ratio_enclosure(P, "inf", 512)
    print(f"{m:2d} {P.n:6d} {lo:8.4f} {hi:8.4f}")

rep = qu_report(gen_fibonacci(12), discrepancy=True)
print("\nfull report for m = 12:")
for key, value in rep.to_dict().items():
    print(f"  {key}: {value}")
