"""Top-degree homology with 4-periodic surgery coefficients.

The coefficient spectrum has homotopy Z in degrees 0, 4, 8, ..., Z_2 in
degrees 2, 6, 10, ... and nothing else.  For the spaces produced by
orbit_cells the corresponding homology collapses, so the group in the top
degree d is assembled degreewise from ordinary Betti numbers:

    free part     from integral ranks in degrees d, d-4, d-8, ...
    2-torsion     from mod 2 ranks in degrees d-2, d-6, ...

Each closed form below has an oracle twin that takes the long way around
through the cell complex and Smith normal form.  The two routes are kept
separate on purpose; equality between them is asserted by the test suite
and the verify command, never assumed inside either route.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping

from .abelian import FGAbelianGroup
from .family import Family
from .grassmannian import count_A_B, count_a_b
from .homology import ChainComplex, integral_homology, mod2_homology
from .orbit_cells import CellFiltration, build_chain_complex, orbit_space_dimension


def l_coefficient(q: int) -> FGAbelianGroup:
    """Coefficient group in degree q: Z, Z_2 or 0.

    >>> [str(l_coefficient(q)) for q in range(5)]
    ['Z', '0', 'Z_2', '0', 'Z']
    """
    if q < 0 or q % 2:
        return FGAbelianGroup.trivial()
    if q % 4 == 0:
        return FGAbelianGroup.free(1)
    return FGAbelianGroup(0, (2,))


def assemble_l_homology(
    betti_z: Mapping[int, int],
    betti_z2: Mapping[int, int],
    d: int,
    *,
    reduced: bool,
) -> FGAbelianGroup:
    """Collapse the coefficient tower onto degree d.

    betti_z are integral ranks, betti_z2 mod 2 ranks, both of the same
    space in the same normalization; the reduced flag only records which
    normalization the caller supplied, the formula is identical.
    """
    del reduced
    if d < 0:
        raise ValueError("top degree must be nonnegative")
    free = sum(betti_z.get(d - q, 0) for q in range(0, d + 1, 4))
    two_torsion = sum(betti_z2.get(d - q, 0) for q in range(2, d + 1, 4))
    return FGAbelianGroup(free, (2,) * two_torsion)


def relative_l_homology(family: Family, n: int, k: int) -> FGAbelianGroup:
    """Top-degree group of the pair (orbit space, next lower stratum).

    Closed form: one Z per even-weight and one Z_2 per odd-weight cell of
    the Grassmannian of n-planes in k-space in the complex case, and one Z
    per cell overall in the quaternionic case.
    """
    if family is Family.COMPLEX:
        a, b = count_A_B(n, k)
        return FGAbelianGroup(a, (2,) * b)
    _require_valid(n, k)
    return FGAbelianGroup.free(comb(k, n))


def relative_l_homology_oracle(family: Family, n: int, k: int) -> FGAbelianGroup:
    """Same group, computed from the full-rank cell complex."""
    complex_ = build_chain_complex(family, n, k, CellFiltration.exact(n))
    d = orbit_space_dimension(family, n, k)
    betti = _torsion_free_ranks(integral_homology(complex_))
    return assemble_l_homology(betti, mod2_homology(complex_), d, reduced=False)


def reduced_l_homology(family: Family, n: int, k: int) -> FGAbelianGroup:
    """Top-degree group of the orbit space with the basepoint removed.

    Closed form from the one-column-smaller box counts.
    """
    a, b = count_a_b(n, k, family)
    return FGAbelianGroup(a, (2,) * b)


def reduced_l_homology_oracle(family: Family, n: int, k: int) -> FGAbelianGroup:
    """Same group, computed from the full cell complex minus the basepoint."""
    complex_ = build_chain_complex(family, n, k)
    d = orbit_space_dimension(family, n, k)
    betti = _torsion_free_ranks(integral_homology(complex_))
    betti2 = dict(mod2_homology(complex_))
    if betti.get(0) != 1 or betti2.get(0) != 1:
        raise ValueError(
            "orbit space should be connected with one basepoint class, "
            f"got ranks {betti.get(0)} and {betti2.get(0)} in degree 0"
        )
    del betti[0]
    del betti2[0]
    return assemble_l_homology(betti, betti2, d, reduced=True)


def basepoint_correction(family: Family, n: int, k: int) -> FGAbelianGroup:
    """Coefficient group sitting at the basepoint in the top degree.

    Only meaningful when k - n is odd (the top degree is even then); the
    even-gap case never consumes it and is rejected.
    """
    _require_valid(n, k)
    if (k - n) % 2 == 0:
        raise ValueError("basepoint correction applies only when k - n is odd")
    return l_coefficient(orbit_space_dimension(family, n, k))


@dataclass(frozen=True)
class CollapseReport:
    """Certificate that homology is sparse enough for degreewise assembly."""

    ok: bool
    family: Family
    n: int
    k: int
    homology_degrees: tuple[int, ...]
    offending_degrees: tuple[int, ...]
    rule: str

    def __bool__(self) -> bool:
        return self.ok


def verify_collapse(family: Family, n: int, k: int) -> CollapseReport:
    """Check the degree pattern that kills every assembly differential.

    Complex case: all reduced homology in degrees of the same parity as
    n + 1.  Quaternionic case: all reduced homology in one residue class
    mod 4.  Either pattern leaves no room for a nonzero differential
    against the 4-periodic coefficients.
    """
    complex_ = build_chain_complex(family, n, k)
    homology = integral_homology(complex_)
    degrees = []
    for p, group in sorted(homology.items()):
        if p == 0:
            group = FGAbelianGroup.from_orders(
                [0] * (group.free_rank - 1) + list(group.torsion)
            )
        if not group.is_trivial:
            degrees.append(p)
    if family is Family.COMPLEX:
        wanted = (n + 1) % 2
        offending = tuple(p for p in degrees if p % 2 != wanted)
        rule = f"all reduced homology degrees congruent to {wanted} mod 2"
    else:
        if degrees:
            wanted = degrees[0] % 4
            offending = tuple(p for p in degrees if p % 4 != wanted)
            rule = f"all reduced homology degrees congruent to {wanted} mod 4"
        else:
            offending = ()
            rule = "no reduced homology at all"
    return CollapseReport(
        ok=not offending,
        family=family,
        n=n,
        k=k,
        homology_degrees=tuple(degrees),
        offending_degrees=offending,
        rule=rule,
    )


def _torsion_free_ranks(homology: dict[int, FGAbelianGroup]) -> dict[int, int]:
    for p, group in homology.items():
        if group.torsion:
            raise ValueError(
                f"unexpected torsion {group.torsion} in degree {p}, "
                "the degreewise assembly needs torsion free input"
            )
    return {p: group.free_rank for p, group in homology.items()}


def _require_valid(n: int, k: int):
    if n < 1 or k < n:
        raise ValueError(f"need k >= n >= 1, got n={n}, k={k}")
