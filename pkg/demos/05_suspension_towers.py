"""
Suspension towers
=================

"""

from multiaxial.family import Family
from multiaxial.structure_set import ActionSpec, suspension_report

# Adding a copy of the standard representation suspends the sphere.
# Climbing k -> k+1 flips the gap parity and with it the decomposition
# branch, so the honest comparison is k against k+2. There the branch and
# the summand labels match up and each summand can only grow.

# dataclasses.replace swaps one field of a frozen spec
from dataclasses import replace

spec = ActionSpec(Family.COMPLEX, 2, 2)
print("tower over", spec.describe())
print(f"{'k':>3} {'branch':>9}  total")
for k in range(2, 9):
    report = suspension_report(replace(spec, k=k))
    print(f"{k:>3} {report.base.branch:>9}  {report.base.total}")

print()
report = suspension_report(spec)
print(f"double suspension of {spec.describe()}:")
for pair in report.pairs:
    print(f"  {pair.label:>16}: {pair.near}  ->  {pair.far}"
          f"  embeds={pair.embeds}")
print("branch flip at k+1:", report.branch_flip)
print("summand-wise monotone:", report.summandwise_monotone)
print("total embeds in double suspension:", report.totals_embed)

# The quaternionic odd-gap tower shows why single steps are not compared
# summand by summand. The k and k+1 answers live on different branches
# with different summand lists, and the basepoint torsion present at odd
# gaps has no counterpart one step up.
print()
spec = ActionSpec(Family.QUATERNIONIC, 3, 4, j=1)
report = suspension_report(spec)
print("tower over", spec.describe())
print("  k  :", report.base.total, f"[{report.base.branch}]")
print("  k+1:", report.once.total, f"[{report.once.branch}]")
print("  k+2:", report.twice.total, f"[{report.twice.branch}]")
print("consistent:", report.consistent)
