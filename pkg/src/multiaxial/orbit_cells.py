"""Cell model for the orbit space of the sphere of k defining representations.

Orbits of unit k-tuples of vectors in n-space are indexed by shapes: a
strictly decreasing tuple of pivot positions (m_1 > ... > m_r >= 1 with
m_1 <= k and r <= n), the rank r being the dimension of the span.  The
cell over a shape has dimension

    2*sum(m) - r - 1      over the complex numbers,
    4*sum(m) - 3*r - 1    over the quaternions.

The degree drops by exactly one when the last pivot equals 1, and removing
that pivot gives the unique boundary cell; every other attaching map is
degree zero on cells.  That single rule is the whole differential.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .family import Family
from .homology import ChainComplex


@dataclass(frozen=True)
class Shape:
    pivots: tuple[int, ...]
    family: Family

    def __post_init__(self):
        if not self.pivots:
            raise ValueError("a shape needs at least one pivot")
        previous = None
        for m in self.pivots:
            if m < 1:
                raise ValueError("pivots must be positive")
            if previous is not None and m >= previous:
                raise ValueError("pivots must strictly decrease")
            previous = m

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def dimension(self) -> int:
        return shape_dimension(self)

    def label(self) -> str:
        return "(" + ",".join(str(m) for m in self.pivots) + ")"


def shape_dimension(shape: Shape) -> int:
    total = sum(shape.pivots)
    r = shape.rank
    if shape.family is Family.COMPLEX:
        return 2 * total - r - 1
    return 4 * total - 3 * r - 1


def boundary(shape: Shape) -> dict[Shape, int]:
    """Formal boundary of a cell, as shape -> coefficient.

    Nonzero only for shapes of rank >= 2 whose last pivot is 1.
    """
    if shape.rank >= 2 and shape.pivots[-1] == 1:
        return {Shape(shape.pivots[:-1], shape.family): 1}
    return {}


@dataclass(frozen=True)
class CellFiltration:
    """Restriction of the cell set to a band of ranks.

    None means unbounded on that side; bounds are clamped to [1, n] at
    enumeration time, so a band lying outside the ambient ranks just
    selects nothing.
    """

    min_rank: int | None = None
    max_rank: int | None = None

    def __post_init__(self):
        if (
            self.min_rank is not None
            and self.max_rank is not None
            and self.min_rank > self.max_rank
        ):
            raise ValueError("min_rank must not exceed max_rank")

    @classmethod
    def full(cls) -> "CellFiltration":
        return cls()

    @classmethod
    def exact(cls, rank: int) -> "CellFiltration":
        return cls(rank, rank)

    @classmethod
    def up_to_rank(cls, rank: int) -> "CellFiltration":
        return cls(None, rank)

    def rank_range(self, n: int) -> range:
        lo = 1 if self.min_rank is None else max(1, self.min_rank)
        hi = n if self.max_rank is None else min(n, self.max_rank)
        return range(lo, hi + 1)


def enumerate_shapes(
    family: Family, n: int, k: int, filtration: CellFiltration | None = None
) -> list[Shape]:
    """All shapes for the given ambient bounds, sorted by (dimension, pivots).

    >>> [s.label() for s in enumerate_shapes(Family.COMPLEX, 2, 2)]
    ['(1)', '(2)', '(2,1)']
    """
    if n < 1 or k < n:
        raise ValueError(f"need k >= n >= 1, got n={n}, k={k}")
    if filtration is None:
        filtration = CellFiltration.full()
    shapes = []
    for r in filtration.rank_range(n):
        for pivots in itertools.combinations(range(k, 0, -1), r):
            shapes.append(Shape(pivots, family))
    shapes.sort(key=lambda s: (s.dimension, s.pivots))
    return shapes


def build_chain_complex(
    family: Family, n: int, k: int, filtration: CellFiltration | None = None
) -> ChainComplex:
    """Cellular chain complex of the filtered cell set.

    Boundary terms that leave the filtration are dropped, which is what
    makes the rank-restricted complexes compute relative homology.
    """
    shapes = enumerate_shapes(family, n, k, filtration)
    by_degree: dict[int, list[Shape]] = {}
    for shape in shapes:
        by_degree.setdefault(shape.dimension, []).append(shape)
    generators = {
        p: [s.label() for s in cells] for p, cells in by_degree.items()
    }
    index: dict[int, dict[Shape, int]] = {
        p: {s: i for i, s in enumerate(cells)} for p, cells in by_degree.items()
    }
    boundaries = {}
    for p, cells in by_degree.items():
        targets = index.get(p - 1)
        if not targets:
            continue
        matrix = [[0] * len(cells) for _ in targets]
        for col, shape in enumerate(cells):
            for target, coefficient in boundary(shape).items():
                row = targets.get(target)
                if row is not None:
                    matrix[row][col] = coefficient
        boundaries[p] = matrix
    return ChainComplex(generators, boundaries)


def orbit_space_dimension(family: Family, n: int, k: int) -> int:
    """Dimension of the whole orbit space, which is also its top cell's.

    >>> orbit_space_dimension(Family.COMPLEX, 2, 4)
    11
    """
    if n < 1 or k < n:
        raise ValueError(f"need k >= n >= 1, got n={n}, k={k}")
    if family is Family.COMPLEX:
        return 2 * k * n - 1 - n * n
    return 4 * k * n - 1 - n * (2 * n + 1)
