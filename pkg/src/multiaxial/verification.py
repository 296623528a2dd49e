"""Cross-checks wiring the whole package together over a parameter grid.

Every check compares two independent routes to the same number or group,
or asserts a structural identity that the construction does not enforce
by itself.  The CLI verify subcommand and the acceptance tests both run
through here, so a single list of checks serves both.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from .abelian import FGAbelianGroup
from .family import Family
from .grassmannian import (
    count_A_B,
    count_a_b,
    enumerate_box_partitions,
    grassmannian_betti,
)
from .homology import integral_homology, mod2_homology, smith_normal_form
from .l_homology import (
    basepoint_correction,
    reduced_l_homology,
    reduced_l_homology_oracle,
    relative_l_homology,
    relative_l_homology_oracle,
    verify_collapse,
)
from .orbit_cells import (
    CellFiltration,
    build_chain_complex,
    enumerate_shapes,
    orbit_space_dimension,
)
from .structure_set import (
    ActionSpec,
    compute_structure_set,
    suspension_report,
)

_SHUFFLE_SEED = 20240917


@dataclass(frozen=True)
class CheckResult:
    check: str
    params: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationSummary:
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.ok)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if not r.ok)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def first_failure(self) -> CheckResult | None:
        for r in self.results:
            if not r.ok:
                return r
        return None

    def by_check(self) -> dict[str, tuple[int, int]]:
        """check name -> (passed, failed), in first-seen order."""
        table: dict[str, list[int]] = {}
        for r in self.results:
            entry = table.setdefault(r.check, [0, 0])
            entry[0 if r.ok else 1] += 1
        return {name: (p, f) for name, (p, f) in table.items()}


def _grid(max_n: int, max_k: int):
    for n in range(1, max_n + 1):
        for k in range(n, max_k + 1):
            yield n, k


def run_verification(
    max_n: int,
    max_k: int,
    max_j: int,
    families: tuple[Family, ...] = (Family.COMPLEX, Family.QUATERNIONIC),
) -> VerificationSummary:
    if max_n < 1 or max_k < 1:
        raise ValueError("grid bounds must be at least 1")
    if max_j < 0:
        raise ValueError("max_j must be nonnegative")
    results: list[CheckResult] = []
    add = results.append

    for n, k in _grid(max_n, max_k):
        params = f"n={n} k={k}"
        partitions = enumerate_box_partitions(n, k - n)
        sorted_ok = partitions == sorted(set(partitions))
        add(
            CheckResult(
                "partition-enumeration",
                params,
                sorted_ok and len(partitions) == comb(k, n),
                f"{len(partitions)} partitions",
            )
        )
        a_count, b_count = count_A_B(n, k)
        add(
            CheckResult(
                "cell-count-identity",
                params,
                a_count + b_count == comb(k, n),
                f"{a_count}+{b_count} vs C({k},{n})",
            )
        )
        if k > n:
            transpose = count_A_B(k - n, k)
            add(
                CheckResult(
                    "transpose-duality",
                    params,
                    (a_count, b_count) == tuple(transpose),
                    f"{(a_count, b_count)} vs {tuple(transpose)}",
                )
            )
        betti = grassmannian_betti(n, k)
        add(
            CheckResult(
                "betti-total",
                params,
                sum(betti.values()) == comb(k, n),
                "",
            )
        )
        for family in families:
            fparams = f"family={family} {params}"
            reduced_counts = count_a_b(n, k, family)
            add(
                CheckResult(
                    "reduced-count-identity",
                    fparams,
                    reduced_counts.total == comb(k - 1, n),
                    f"total {reduced_counts.total} vs C({k - 1},{n})",
                )
            )
            if (k - n) % 2 == 1 and family is Family.COMPLEX:
                shifted = count_A_B(n, k - 1)
                add(
                    CheckResult(
                        "reduced-equals-shifted",
                        fparams,
                        tuple(reduced_counts) == tuple(shifted),
                        f"{tuple(reduced_counts)} vs {tuple(shifted)}",
                    )
                )

    for family in families:
        for n, k in _grid(max_n, max_k):
            fparams = f"family={family} n={n} k={k}"
            shapes = enumerate_shapes(family, n, k)
            expected_cells = sum(comb(k, r) for r in range(1, n + 1))
            full_rank_interior = [
                s for s in shapes if s.rank == n and s.pivots[-1] > 1
            ]
            d = orbit_space_dimension(family, n, k)
            complex_ = build_chain_complex(family, n, k)
            add(
                CheckResult(
                    "cell-census",
                    fparams,
                    len(shapes) == expected_cells
                    and complex_.cell_count(0) == 1
                    and len(full_rank_interior) == comb(k - 1, n)
                    and max(s.dimension for s in shapes) == d,
                    f"{len(shapes)} cells, top degree {d}",
                )
            )
            composite_zero = True
            for p in complex_.degrees():
                left = complex_.boundary_matrix(p)
                right = complex_.boundary_matrix(p + 1)
                if left and right and left[0] and right[0]:
                    for i in range(len(left)):
                        for jcol in range(len(right[0])):
                            if sum(
                                left[i][t] * right[t][jcol]
                                for t in range(len(right))
                            ):
                                composite_zero = False
            add(CheckResult("boundary-squares-to-zero", fparams, composite_zero))
            homology = integral_homology(complex_)
            euler_cells = complex_.euler_characteristic()
            euler_homology = sum(
                (-1) ** p * g.free_rank for p, g in homology.items()
            )
            add(
                CheckResult(
                    "euler-characteristic",
                    fparams,
                    euler_cells == euler_homology,
                    f"{euler_cells} vs {euler_homology}",
                )
            )
            betti2 = mod2_homology(complex_)
            uct_ok = True
            degrees = set(homology) | set(betti2)
            for p in sorted(degrees):
                g = homology.get(p, FGAbelianGroup.trivial())
                below = homology.get(p - 1, FGAbelianGroup.trivial())
                expected = (
                    g.free_rank
                    + g.two_torsion_rank()
                    + below.two_torsion_rank()
                )
                if betti2.get(p, 0) != expected:
                    uct_ok = False
            add(CheckResult("mod2-consistency", fparams, uct_ok))
            if family is Family.COMPLEX:
                parity_ok = all(
                    s.dimension % 2 == (n + 1) % 2 for s in shapes if s.rank == n
                )
            else:
                residues = {s.dimension % 4 for s in shapes if s.rank == n}
                parity_ok = len(residues) <= 1
            add(CheckResult("full-rank-dimension-parity", fparams, parity_ok))

            relative = build_chain_complex(
                family, n, k, CellFiltration.exact(n)
            )
            zero_boundaries = all(
                not any(any(row) for row in relative.boundary_matrix(p))
                for p in relative.degrees()
            )
            add(
                CheckResult(
                    "relative-complex-zero-boundary", fparams, zero_boundaries
                )
            )
            closed = relative_l_homology(family, n, k)
            oracle = relative_l_homology_oracle(family, n, k)
            add(
                CheckResult(
                    "relative-closed-vs-oracle",
                    fparams,
                    closed == oracle,
                    f"{closed} vs {oracle}",
                )
            )
            closed_reduced = reduced_l_homology(family, n, k)
            oracle_reduced = reduced_l_homology_oracle(family, n, k)
            add(
                CheckResult(
                    "reduced-closed-vs-oracle",
                    fparams,
                    closed_reduced == oracle_reduced,
                    f"{closed_reduced} vs {oracle_reduced}",
                )
            )
            add(
                CheckResult(
                    "collapse-certificate",
                    fparams,
                    bool(verify_collapse(family, n, k)),
                )
            )

            rng = random.Random(_SHUFFLE_SEED + 100 * n + k)
            permutations = {}
            for p in complex_.degrees():
                order = list(range(complex_.cell_count(p)))
                rng.shuffle(order)
                permutations[p] = order
            shuffled = complex_.permute_generators(permutations)
            add(
                CheckResult(
                    "generator-order-invariance",
                    fparams,
                    integral_homology(shuffled) == homology
                    and mod2_homology(shuffled) == betti2,
                )
            )
            snf_ok = True
            for p in complex_.degrees():
                matrix = complex_.boundary_matrix(p)
                if matrix and matrix[0]:
                    factors = smith_normal_form(matrix)
                    snf_ok = snf_ok and all(
                        later % earlier == 0
                        for earlier, later in zip(factors, factors[1:])
                    )
            add(CheckResult("snf-divisibility-chain", fparams, snf_ok))

    for family in families:
        for n, k in _grid(max_n, max_k):
            for j in range(0, max_j + 1):
                spec = ActionSpec(family, n, k, j)
                sparams = f"family={family} n={n} k={k} j={j}"
                report = compute_structure_set(spec)
                layer_ok = True
                rebuilt = FGAbelianGroup.trivial()
                for summand in report.summands:
                    rebuilt = rebuilt.direct_sum(summand.group)
                    if summand.label == "top":
                        expected = reduced_l_homology(family, n, k)
                    elif summand.label == "basepoint":
                        expected = basepoint_correction(family, n, k)
                    elif summand.label == "free_stratum":
                        expected = FGAbelianGroup(
                            relative_l_homology(family, 1, k).free_rank - 1,
                            relative_l_homology(family, 1, k).torsion,
                        )
                    else:
                        depth = int(
                            summand.label.removeprefix("stratum_pair(").rstrip(
                                ")"
                            )
                        )
                        expected = relative_l_homology(family, n - depth, k)
                    if summand.group != expected:
                        layer_ok = False
                add(
                    CheckResult(
                        "summand-layer-consistency",
                        sparams,
                        layer_ok and rebuilt == report.total,
                    )
                )
                expected_branch = "even-gap" if (k - n) % 2 == 0 else "odd-gap"
                add(
                    CheckResult(
                        "branch-dispatch",
                        sparams,
                        report.branch == expected_branch,
                        report.branch,
                    )
                )
                suspension = suspension_report(spec)
                add(
                    CheckResult(
                        "suspension-monotone",
                        sparams,
                        suspension.consistent,
                        f"branches {suspension.branch_flip}",
                    )
                )
    return VerificationSummary(tuple(results))
