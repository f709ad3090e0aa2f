"""Root posets of Weyl groups and nonnesting partitions (antichains).

>>> from coxcat.core import build_system
>>> P = root_poset(build_system("A2"))
>>> [sorted(a) for a in P.antichains()]
[[], [0], [1], [2], [0, 1]]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .core import CoxeterSystem
from .errors import NotCrystallographic


@dataclass(frozen=True)
class NonnestingPartition:
    roots: frozenset[int]
    support: frozenset[int] = field(compare=False)


class RootPoset:
    """Positive roots ordered by ``alpha <= beta`` when ``beta - alpha`` is a
    nonnegative integer combination of simple roots."""

    def __init__(self, system: CoxeterSystem):
        if not system.crystallographic or system.realization != "vector":
            raise NotCrystallographic(f"{system.label} has no crystallographic root poset")
        self.system = system
        coords = []
        for p in system.roots:
            vec = system.root_coordinates(p)
            if any(x.denominator != 1 for x in vec):
                raise NotCrystallographic("root coordinates are not integral")
            coords.append(tuple(int(x) for x in vec))
        self.coords = coords
        self.heights = [sum(v) for v in coords]
        size = len(coords)
        # comparability masks (roots are sorted by height already)
        self._comparable = [0] * size
        for p in range(size):
            for q in range(size):
                if p != q and (self.leq(p, q) or self.leq(q, p)):
                    self._comparable[p] |= 1 << q

    def __len__(self) -> int:
        return len(self.coords)

    def leq(self, p: int, q: int) -> bool:
        return all(b >= a for a, b in zip(self.coords[p], self.coords[q]))

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        return [
            (p, q)
            for p in range(len(self))
            for q in range(len(self))
            if self.heights[q] == self.heights[p] + 1 and self.leq(p, q)
        ]

    def minimal(self) -> list[int]:
        return [q for q in range(len(self)) if not any(self.leq(p, q) for p in range(len(self)) if p != q)]

    def maximal(self) -> list[int]:
        return [p for p in range(len(self)) if not any(self.leq(p, q) for q in range(len(self)) if p != q)]

    def support(self, antichain) -> frozenset[int]:
        """Simple indices below some root of the antichain."""
        out: set[int] = set()
        for p in antichain:
            out |= {i for i, x in enumerate(self.coords[p]) if x}
        return frozenset(out)

    def antichains(self) -> list[frozenset[int]]:
        """All antichains, ordered by size and then by sorted root list."""
        out: list[tuple[int, ...]] = []
        size = len(self)

        def grow(chosen: tuple[int, ...], start: int, blocked: int):
            out.append(chosen)
            for p in range(start, size):
                if not (blocked >> p) & 1:
                    grow(chosen + (p,), p + 1, blocked | self._comparable[p])

        grow((), 0, 0)
        out.sort(key=lambda a: (len(a), a))
        return [frozenset(a) for a in out]

    def nonnesting_partitions(self) -> list[NonnestingPartition]:
        return [NonnestingPartition(a, self.support(a)) for a in self.antichains()]


def root_poset(system: CoxeterSystem) -> RootPoset:
    return RootPoset(system)


def nonnesting_antichains(system: CoxeterSystem) -> list[NonnestingPartition]:
    return RootPoset(system).nonnesting_partitions()
