"""Finitely generated abelian groups as immutable values.

A group is stored in canonical form: a free rank plus a chain of torsion
orders d_1 | d_2 | ... with every d_i >= 2.  Two groups are isomorphic
exactly when these data agree, so dataclass equality is isomorphism.

>>> FGAbelianGroup.from_orders([0, 4, 2])
FGAbelianGroup(free_rank=1, torsion=(2, 4))
>>> FGAbelianGroup.from_orders([2, 3])
FGAbelianGroup(free_rank=0, torsion=(6,))
>>> print(FGAbelianGroup(4, (2, 2)))
Z^4 ⊕ Z_2^2
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def _prime_power_parts(order: int) -> list[tuple[int, int]]:
    """Split a cyclic order into (prime, exponent) pairs by trial division."""
    parts = []
    n = order
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            parts.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        parts.append((n, 1))
    return parts


@dataclass(frozen=True)
class FGAbelianGroup:
    """Z^free_rank plus one cyclic summand per torsion entry."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        previous = None
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion order {d} is not >= 2")
            if previous is not None and d % previous != 0:
                raise ValueError(
                    f"torsion orders must form a divisibility chain, "
                    f"got {previous} before {d}"
                )
            previous = d

    @classmethod
    def trivial(cls) -> "FGAbelianGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FGAbelianGroup":
        return cls(rank, ())

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "FGAbelianGroup":
        """Canonicalize an arbitrary list of cyclic orders.

        Order 0 means an infinite cyclic summand, order 1 is dropped.
        The torsion orders are recombined into invariant factors, so the
        result does not depend on how the input was split into cyclics.

        >>> FGAbelianGroup.from_orders([2, 2, 4])
        FGAbelianGroup(free_rank=0, torsion=(2, 2, 4))
        >>> FGAbelianGroup.from_orders([6, 4]) == FGAbelianGroup.from_orders([12, 2])
        True
        """
        free = 0
        by_prime: dict[int, list[int]] = {}
        for m in orders:
            m = abs(int(m))
            if m == 0:
                free += 1
            elif m > 1:
                for p, e in _prime_power_parts(m):
                    by_prime.setdefault(p, []).append(e)
        for exponents in by_prime.values():
            exponents.sort(reverse=True)
        depth = max((len(v) for v in by_prime.values()), default=0)
        factors = []
        for layer in range(depth):
            f = 1
            for p, exponents in by_prime.items():
                if layer < len(exponents):
                    f *= p ** exponents[layer]
            factors.append(f)
        factors.reverse()
        return cls(free, tuple(factors))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def invariant_factors(self) -> tuple[int, ...]:
        """Torsion chain followed by one 0 per free summand."""
        return self.torsion + (0,) * self.free_rank

    def direct_sum(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        return FGAbelianGroup.from_orders(
            self.invariant_factors() + other.invariant_factors()
        )

    def two_torsion_rank(self) -> int:
        """Number of cyclic summands of even order."""
        return sum(1 for d in self.torsion if d % 2 == 0)

    def _prime_profile(self) -> dict[int, list[int]]:
        """For each prime, the exponents appearing in the torsion, descending."""
        profile: dict[int, list[int]] = {}
        for d in self.torsion:
            for p, e in _prime_power_parts(d):
                profile.setdefault(p, []).append(e)
        for exponents in profile.values():
            exponents.sort(reverse=True)
        return profile

    def embeds_in(self, other: "FGAbelianGroup") -> bool:
        """Whether an injective homomorphism self -> other exists.

        Injectivity forces the free rank to grow and, prime by prime,
        the count of summands of order at least p^e to grow for every e.

        >>> Z4 = FGAbelianGroup(0, (4,))
        >>> Z2xZ2 = FGAbelianGroup(0, (2, 2))
        >>> Z4.embeds_in(Z2xZ2) or Z2xZ2.embeds_in(Z4)
        False
        >>> FGAbelianGroup(1, (2,)).embeds_in(FGAbelianGroup(2, (2, 4)))
        True
        """
        if self.free_rank > other.free_rank:
            return False
        mine = self._prime_profile()
        theirs = other._prime_profile()
        for p, exponents in mine.items():
            other_exponents = theirs.get(p, [])
            for i, e in enumerate(exponents):
                # exponents are descending, so position i counts summands
                # of order >= p^e on each side
                if i >= len(other_exponents) or other_exponents[i] < e:
                    return False
        return True

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        i = 0
        while i < len(self.torsion):
            d = self.torsion[i]
            count = 1
            while i + count < len(self.torsion) and self.torsion[i + count] == d:
                count += 1
            parts.append(f"Z_{d}" if count == 1 else f"Z_{d}^{count}")
            i += count
        return " ⊕ ".join(parts)
