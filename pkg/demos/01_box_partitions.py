"""
Partitions in a box and their parity split
==========================================

"""

from math import comb

from multiaxial.family import Family
from multiaxial.grassmannian import (
    count_A_B,
    count_a_b,
    enumerate_box_partitions,
    grassmannian_betti,
)

# A partition in an n x w box is a weakly increasing tuple of n entries,
# each between 0 and w. These index the Schubert cells of the Grassmannian
# of n-planes in (n + w)-space, one cell of real dimension 2 * sum(mu) per
# partition mu.

n, w = 2, 3
partitions = enumerate_box_partitions(n, w)
print(f"partitions in a {n} x {w} box:")
for mu in partitions:
    print(f"  {mu}  weight {sum(mu)}")
print(f"count = {len(partitions)}, expected C({n + w},{n}) = {comb(n + w, n)}")

# The weight parity splits the count in two. For the group computations
# the even-weight cells each contribute a Z and the odd-weight cells a Z_2,
# so the pair (A, B) below is the whole answer in compressed form.
print()
for k in range(2, 7):
    a, b = count_A_B(2, k)
    print(f"n=2 k={k}: A={a} B={b} A+B={a + b} C(k,n)={comb(k, 2)}")

# Transposing the box preserves weight, so swapping the roles of n and k-n
# leaves the parity counts alone.
print()
print("transpose check on a 2 x 3 box vs a 3 x 2 box:")
print(" ", count_A_B(2, 5), "vs", count_A_B(3, 5))

# The one-smaller box governs the reduced (based) variant. In the
# quaternionic family all cells land in degrees divisible by 4, so the odd
# count is always zero there.
print()
print("reduced counts at n=2, k=5:")
print("  complex     ", count_a_b(2, 5, Family.COMPLEX))
print("  quaternionic", count_a_b(2, 5, Family.QUATERNIONIC))

# Betti numbers come from the same enumeration, graded by 2 * weight.
print()
betti = grassmannian_betti(2, 4)
print("Betti numbers of G(2,4):", betti)
print("Poincare polynomial:",
      " + ".join(f"{r}t^{d}" if r > 1 else f"t^{d}" for d, r in betti.items()))
