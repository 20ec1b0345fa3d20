"""
Continued fractions and the shortest vector of a 2D rank-1 lattice
==================================================================

The sup-norm shortest vector of X((1, g), N) is built from a convergent of
g/N, and its length is at least 1/sqrt((K+2) N) where K is the largest
partial quotient.
"""

import math

from qups import (cf_expand_rational, convergents, max_partial_quotient, rank1_lattice,
                  shortest_vector, shortest_vector_2d_cf)

g, N = 34, 55
cf = cf_expand_rational(g, N)
print(f"{g}/{N} = {list(cf.partial_quotients)}")
for c in convergents(cf):
    print(f"  p/q = {c.p}/{c.q}")

K = max_partial_quotient(cf)
vec, length = shortest_vector_2d_cf(g, N)
enum = shortest_vector(rank1_lattice((1, g), N), "inf")
print(f"shortest vector from convergents: {vec}, length {length}")
print(f"enumeration agrees: {enum.length == length}")
print(f"lower bound 1/sqrt((K+2)N) = {1 / math.sqrt((K + 2) * N):.4f} <= {float(length):.4f}")

# a ratio with a large partial quotient gives a much shorter vector
g, N = 1, 101
cf = cf_expand_rational(g, N)
print(f"\n{g}/{N}: K = {max_partial_quotient(cf)}, lambda_1 = {shortest_vector_2d_cf(g, N)[1]}")
