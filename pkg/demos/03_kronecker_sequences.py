"""
Kronecker sequences: badly approximable versus Liouville directions
===================================================================

The prefixes of ({n alpha}) are quasi-uniform exactly when
n^(1/d) <n alpha> stays bounded away from zero.
"""

from qups import (alpha_power2, badly_approximable_profile, gen_kronecker, liouville_alpha,
                  profile_prefixes)

for name, alpha in [("2^(j/3)", alpha_power2(2)), ("Liouville", liouville_alpha(2))]:
    prof = badly_approximable_profile(alpha, 100_000)
    print(f"{name:10s} min sqrt(n) <n alpha> = {prof.minimum:.3e} at n = {prof.argmin}")

indices = [2 ** i for i in range(4, 15)]
for name, alpha in [("2^(j/3)", alpha_power2(2)), ("Liouville", liouville_alpha(2))]:
    seq = gen_kronecker(alpha, indices[-1])
    prof = profile_prefixes(seq, indices, "inf", 512)
    print(f"\n{name}: prefix, q * sqrt(n), rho_hi")
    for i, r in zip(indices, prof.reports):
        print(f"  {i:6d} {float(r.q) * i ** 0.5:10.4f} {r.rho_hi:10.2f}")
