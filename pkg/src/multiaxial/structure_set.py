"""Structure sets of multiaxial representation spheres.

The sphere is the unit sphere of k copies of the defining representation
of U(n) or Sp(n) plus j trivial summands.  Its isovariant structure set
splits along the rank strata of the orbit space, and every piece is a
top-degree group already computed in l_homology.  Which pieces appear is
decided by the parity of the gap k - n:

    even gap:  stratum pairs at depths 0, 2, 4, ... below the top rank
    odd gap:   the reduced group of the whole orbit space, then stratum
               pairs at depths 1, 3, 5, ...

Two corrections can fire, never both at once.  With no trivial summand
(j = 0) the deepest stratum of the even/odd branch for n odd/even is a
free sphere quotient, and its summand is the structure set of that
quotient, one Z below the homology count.  With j > 0 on the odd branch
the basepoint contributes its coefficient group as an extra summand.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import reduce

from .abelian import FGAbelianGroup
from .family import Family
from .l_homology import (
    basepoint_correction,
    reduced_l_homology,
    relative_l_homology,
)


class InternalContradictionError(RuntimeError):
    """A structural rule fired on data that cannot support it."""


@dataclass(frozen=True)
class ActionSpec:
    """k copies of the defining representation plus j trivial ones."""

    family: Family
    n: int
    k: int
    j: int = 0

    def __post_init__(self):
        if self.n < 0 or self.k < 0 or self.j < 0:
            raise ValueError("n, k, j must be nonnegative")

    @property
    def is_trivial(self) -> bool:
        """No defining summands act, so the sphere carries a trivial action."""
        return self.n == 0

    @property
    def is_normalized(self) -> bool:
        return self.is_trivial or self.k >= self.n

    def describe(self) -> str:
        return (
            f"S_{self.family}({self.n})"
            f"(S({self.k} rho_{self.n} + {self.j} eps))"
        )


def normalize(spec: ActionSpec) -> ActionSpec:
    """Fold away ranks the sphere cannot reach.

    With fewer defining copies than the rank (k < n) the action only sees
    the first k axes, so n is replaced by k; n = 0 marks a trivial action.
    Idempotent.
    """
    if spec.n == 0:
        return spec
    if spec.k < spec.n:
        return replace(spec, n=spec.k)
    return spec


@dataclass(frozen=True)
class Summand:
    label: str
    group: FGAbelianGroup
    source: str


@dataclass(frozen=True)
class DecompositionReport:
    spec: ActionSpec
    branch: str
    summands: tuple[Summand, ...]
    total: FGAbelianGroup
    notes: tuple[str, ...] = ()

    def summand(self, label: str) -> Summand:
        for s in self.summands:
            if s.label == label:
                return s
        raise KeyError(label)

    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.summands)


def _one_z_less(group: FGAbelianGroup, context: str) -> FGAbelianGroup:
    if group.free_rank < 1:
        raise InternalContradictionError(
            f"{context}: cannot remove a Z from {group}, free rank is zero"
        )
    return FGAbelianGroup(group.free_rank - 1, group.torsion)


def compute_structure_set(spec: ActionSpec) -> DecompositionReport:
    """Decompose the structure set into labeled summands.

    Requires a normalized spec (apply normalize first); a trivial action
    yields the zero report.
    """
    if not spec.is_normalized:
        raise ValueError(
            f"spec is not normalized (n={spec.n} > k={spec.k}), "
            "apply normalize first"
        )
    if spec.is_trivial:
        return DecompositionReport(
            spec=spec,
            branch="trivial",
            summands=(),
            total=FGAbelianGroup.trivial(),
            notes=("trivial action, the structure set of a sphere vanishes",),
        )
    family, n, k, j = spec.family, spec.n, spec.k, spec.j
    summands: list[Summand] = []
    notes: list[str] = []
    even_gap = (k - n) % 2 == 0
    free_exception_fires = j == 0 and (n % 2 == 1 if even_gap else n % 2 == 0)
    if even_gap:
        branch = "even-gap"
        depths = range(0, n, 2)
    else:
        branch = "odd-gap"
        top_group = reduced_l_homology(family, n, k)
        summands.append(
            Summand(
                label="top",
                group=top_group,
                source=(
                    f"reduced top-degree assembly of the whole orbit space, "
                    f"counts from the {n} x {k - n - 1} box with parity "
                    f"offset {k * n}"
                ),
            )
        )
        if j > 0:
            correction = basepoint_correction(family, n, k)
            if not correction.is_trivial:
                summands.append(
                    Summand(
                        label="basepoint",
                        group=correction,
                        source=(
                            "periodic coefficient at the basepoint in the "
                            "top degree"
                        ),
                    )
                )
                notes.append(
                    f"trivial summands present (j={j}), the basepoint "
                    f"contributes an extra {correction} summand"
                )
        depths = range(1, n, 2)
    for depth in depths:
        m = n - depth
        group = relative_l_homology(family, m, k)
        if m == 1 and free_exception_fires:
            group = _one_z_less(group, "free stratum summand")
            summands.append(
                Summand(
                    label="free_stratum",
                    group=group,
                    source=(
                        "structure set of the free-stratum quotient, the "
                        f"cell count of lines in {k}-space minus one Z for "
                        "the degree zero surgery obstruction"
                    ),
                )
            )
            notes.append(
                "no trivial summand (j=0), so the deepest stratum is a "
                "free sphere quotient (n and k - n make k odd in every "
                "firing case) and its summand drops one Z"
            )
        else:
            summands.append(
                Summand(
                    label=f"stratum_pair({depth})",
                    group=group,
                    source=(
                        f"relative top-degree assembly at rank {m}, parity "
                        f"split cell counts of {m}-planes in {k}-space"
                    ),
                )
            )
    labels = [s.label for s in summands]
    if len(set(labels)) != len(labels):
        raise InternalContradictionError(f"duplicate summand labels {labels}")
    if free_exception_fires and any(s.label == "basepoint" for s in summands):
        raise InternalContradictionError(
            "free stratum and basepoint corrections fired together"
        )
    total = reduce(
        FGAbelianGroup.direct_sum,
        (s.group for s in summands),
        FGAbelianGroup.trivial(),
    )
    return DecompositionReport(
        spec=spec,
        branch=branch,
        summands=tuple(summands),
        total=total,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class SummandComparison:
    label: str
    near: FGAbelianGroup
    far: FGAbelianGroup
    embeds: bool


@dataclass(frozen=True)
class SuspensionReport:
    """Shadow of the double suspension on the computed answers.

    Adding two defining copies keeps the branch and the summand labels,
    so the claimed injection is certified summand by summand between k
    and k+2, and once more on the totals.  The single step in between
    flips the branch and may lose torsion (an even-gap answer has none
    to receive it), so no embedding is asserted against k+1; its report
    is carried along and the flip is recorded.
    """

    base: DecompositionReport
    once: DecompositionReport
    twice: DecompositionReport
    pairs: tuple[SummandComparison, ...]
    pairing_complete: bool
    summandwise_monotone: bool
    totals_embed: bool
    branch_flip: tuple[str, str]

    @property
    def consistent(self) -> bool:
        return (
            self.pairing_complete
            and self.summandwise_monotone
            and self.totals_embed
        )


def suspension_report(spec: ActionSpec) -> SuspensionReport:
    """Compare a spec against its single and double suspensions in k."""
    if not spec.is_normalized:
        raise ValueError("spec must be normalized")
    base = compute_structure_set(spec)
    once = compute_structure_set(replace(spec, k=spec.k + 1))
    twice = compute_structure_set(replace(spec, k=spec.k + 2))
    far_labels = set(twice.labels())
    pairs = []
    complete = True
    for summand in base.summands:
        if summand.label in far_labels:
            far = twice.summand(summand.label).group
            pairs.append(
                SummandComparison(
                    label=summand.label,
                    near=summand.group,
                    far=far,
                    embeds=summand.group.embeds_in(far),
                )
            )
        else:
            complete = False
            pairs.append(
                SummandComparison(
                    label=summand.label,
                    near=summand.group,
                    far=FGAbelianGroup.trivial(),
                    embeds=False,
                )
            )
    return SuspensionReport(
        base=base,
        once=once,
        twice=twice,
        pairs=tuple(pairs),
        pairing_complete=complete,
        summandwise_monotone=all(p.embeds for p in pairs),
        totals_embed=base.total.embeds_in(twice.total),
        branch_flip=(base.branch, once.branch),
    )
