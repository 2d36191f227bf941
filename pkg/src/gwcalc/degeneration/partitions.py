from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Iterator

__all__ = ["Partition", "enumerate_partitions", "zeta"]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts (contact orders along the divisor)."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in ps):
            raise ValueError(f"partition parts must be positive: {ps}")
        object.__setattr__(self, "parts", ps)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def automorphisms(self) -> int:
        return prod(factorial(k) for k in Counter(self.parts).values())

    def blocks(self) -> list[range]:
        """Index ranges of equal parts; permutations inside a block are automorphisms."""
        out = []
        start = 0
        for i in range(1, len(self.parts) + 1):
            if i == len(self.parts) or self.parts[i] != self.parts[start]:
                out.append(range(start, i))
                start = i
        return out

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order: (n), (n-1, 1), ..., (1, ..., 1)."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    return [Partition(p) for p in _partitions(n, n)]


def zeta(mu: Partition) -> Fraction:
    """|Aut mu| times the product of the parts."""
    if not isinstance(mu, Partition):
        mu = Partition(mu)
    return Fraction(mu.automorphisms() * prod(mu.parts))
