"""Box-bounded partitions and Schubert cell counts of Grassmannians.

A box partition is a nondecreasing tuple 0 <= mu_1 <= ... <= mu_n <= bound.
These index the Schubert cells of the Grassmannian of n-planes in k-space
(bound = k - n), with the cell over mu having real dimension 2*sum(mu) in
the complex case.  The counts exposed here split the cells by the parity
of their weight, which is what the top-degree assembly consumes.

Counts are obtained from the actual enumeration, never from a formula, so
they double as their own oracle; the closed-form identities they satisfy
are checked in the tests instead.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .family import Family

BoxPartition = tuple[int, ...]


class ParityCount(NamedTuple):
    even_count: int
    odd_count: int

    @property
    def total(self) -> int:
        return self.even_count + self.odd_count


def enumerate_box_partitions(n: int, bound: int) -> list[BoxPartition]:
    """All nondecreasing n-tuples with entries in [0, bound], lex order.

    A negative bound gives an empty list (empty box, no partitions).

    >>> enumerate_box_partitions(2, 2)
    [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
    """
    if n < 1:
        raise ValueError("need at least one part")
    if bound < 0:
        return []
    return list(itertools.combinations_with_replacement(range(bound + 1), n))


def count_A_B(n: int, k: int) -> ParityCount:
    """Schubert cells of the n-planes in k-space, split by weight parity.

    even_count is the number of box partitions in an n by (k-n) box with
    even weight, odd_count the rest.
    """
    _require_valid(n, k)
    even = odd = 0
    for mu in enumerate_box_partitions(n, k - n):
        if sum(mu) % 2 == 0:
            even += 1
        else:
            odd += 1
    return ParityCount(even, odd)


def count_a_b(n: int, k: int, family: Family) -> ParityCount:
    """Cell counts driving the reduced top-degree assembly.

    The box shrinks by one column (bound k - n - 1).  In the complex case
    the parity is offset by k*n; in the quaternionic case every cell lands
    in the even class, so the odd count is zero.
    """
    _require_valid(n, k)
    partitions = enumerate_box_partitions(n, k - n - 1)
    if family is Family.QUATERNIONIC:
        return ParityCount(len(partitions), 0)
    even = odd = 0
    for mu in partitions:
        if (sum(mu) + k * n) % 2 == 0:
            even += 1
        else:
            odd += 1
    return ParityCount(even, odd)


def grassmannian_betti(n: int, k: int) -> dict[int, int]:
    """Betti numbers of the complex Grassmannian of n-planes in k-space.

    Keys are real degrees (all even), values the number of Schubert cells
    of that weight.

    >>> grassmannian_betti(1, 3)
    {0: 1, 2: 1, 4: 1}
    """
    _require_valid(n, k)
    betti: dict[int, int] = {}
    for mu in enumerate_box_partitions(n, k - n):
        degree = 2 * sum(mu)
        betti[degree] = betti.get(degree, 0) + 1
    return dict(sorted(betti.items()))


def _require_valid(n: int, k: int):
    if n < 1:
        raise ValueError("need n >= 1")
    if k < n:
        raise ValueError(f"need k >= n, got n={n}, k={k}")
