"""
Cells of the orbit space and their homology
===========================================

"""

from multiaxial.family import Family
from multiaxial.homology import integral_homology, mod2_homology, smith_normal_form
from multiaxial.orbit_cells import (
    CellFiltration,
    build_chain_complex,
    enumerate_shapes,
    orbit_space_dimension,
)

C = Family.COMPLEX

# The orbit space of the unit sphere in k copies of the standard U(n)
# representation has one cell per strictly decreasing pivot tuple
# (m_1 > ... > m_r >= 1) with m_1 <= k and r <= n. The tuple records the
# pivot columns of a row-echelon representative, r being the matrix rank.

n, k = 2, 4
shapes = enumerate_shapes(C, n, k)
print(f"cells of the n={n}, k={k} orbit space:")
for s in shapes:
    print(f"  {s.label():>8}  rank {s.rank}  dim {s.dimension}")
print("top dimension:", orbit_space_dimension(C, n, k))

# Almost every boundary map vanishes. The only surviving face relation
# drops a trailing pivot at position 1, with coefficient 1, so the chain
# complex is very sparse and its homology is torsion free.
cx = build_chain_complex(C, n, k)
print()
print("nonzero boundary matrices:")
for p in cx.degrees():
    matrix = cx.boundary_matrix(p)
    if any(any(row) for row in matrix):
        print(f"  d_{p}: {matrix}")

print()
print("integral homology:")
for degree, group in sorted(integral_homology(cx).items()):
    print(f"  H_{degree} = {group}")
print("mod 2 ranks:", mod2_homology(cx))

# Restricting to full-rank cells kills every boundary map outright. The
# resulting groups are the relative homology of the orbit space against
# its singular part, one Z per cell in its own degree.
relative = build_chain_complex(C, n, k, CellFiltration.exact(n))
print()
print("full-rank (relative) cell degrees:",
      {p: relative.cell_count(p) for p in relative.degrees()})

# The underlying integer kernel is general purpose. Invariant factors of
# any integer matrix come out of the same routine the homology uses.
print()
print("Smith normal form of [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]:")
print(" ", smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]))
