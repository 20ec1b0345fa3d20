"""
Searching for good rank-1 generating vectors
============================================

For prime N a positive fraction of all g has both a large dual l1 minimum
and no short primal vector. The scan below reports that fraction.
"""

from qups import SearchConfig, auto_thresholds, search_generators
from qups.search import count_small_dual, counting_bound

N, d = 31, 2
kd, kp = auto_thresholds(N, d)
res = search_generators(SearchConfig(N=N, d=d, kappa_dual_min=kd, kappa_primal_min=kp))
print(f"N = {N}: thresholds kappa_dual >= {kd:.3f}, kappa_primal >= {kp:.4f}")
print(f"passed {res.passed} of {res.scanned} (fraction {res.fraction})")
best = max(res.passing, key=lambda r: (r.kappa_dual, r.kappa_primal))
print(f"best g = {best.g}: kappa_dual = {best.kappa_dual}, kappa_primal = {best.kappa_primal}")

print("\ncounting bound at N = 11")
for kappa in range(1, 6):
    print(f"  kappa <= {kappa}: {count_small_dual(11, 2, kappa):4d} <= {counting_bound(11, 2, kappa)}")
