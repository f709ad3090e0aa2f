"""Finite posets given by a cover relation on ``0..size-1``.

Vertices must be numbered along a linear extension (every cover ``i < j``
has ``i`` before ``j``), which is how rank-stratified enumerations produce
them anyway.

>>> P = FinitePoset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
>>> P.mobius(0, 3)
1
>>> P.join(1, 2), P.meet(1, 2)
(3, 0)
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence


class FinitePoset:
    def __init__(self, size: int, covers: Iterable[tuple[int, int]]):
        self.size = size
        self.upper: list[list[int]] = [[] for _ in range(size)]
        self.lower: list[list[int]] = [[] for _ in range(size)]
        for a, b in covers:
            if not a < b:
                raise ValueError("vertices must be numbered along a linear extension")
            self.upper[a].append(b)
            self.lower[b].append(a)
        for lst in self.upper:
            lst.sort()
        for lst in self.lower:
            lst.sort()
        up = [0] * size
        for i in reversed(range(size)):
            mask = 1 << i
            for j in self.upper[i]:
                mask |= up[j]
            up[i] = mask
        self._up = up
        self._mobius: dict[int, dict[int, int]] = {}

    @property
    def covers(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.size) for b in self.upper[a]]

    def leq(self, a: int, b: int) -> bool:
        return (self._up[a] >> b) & 1 == 1

    def up_set(self, a: int) -> list[int]:
        m = self._up[a]
        return [i for i in range(a, self.size) if (m >> i) & 1]

    def down_set(self, b: int) -> list[int]:
        return [i for i in range(b + 1) if (self._up[i] >> b) & 1]

    def interval(self, a: int, b: int) -> list[int]:
        return [i for i in self.up_set(a) if self.leq(i, b)]

    def comparable_pairs(self) -> Iterator[tuple[int, int]]:
        for a in range(self.size):
            for b in self.up_set(a):
                yield a, b

    def mobius_from(self, a: int) -> dict[int, int]:
        """``{b: mu(a, b)}`` for every ``b >= a``."""
        if a not in self._mobius:
            mu: dict[int, int] = {}
            for b in self.up_set(a):
                if b == a:
                    mu[b] = 1
                else:
                    mu[b] = -sum(mu[z] for z in mu if self.leq(z, b))
            self._mobius[a] = mu
        return self._mobius[a]

    def mobius(self, a: int, b: int) -> int:
        return self.mobius_from(a).get(b, 0)

    def join(self, a: int, b: int) -> int | None:
        common = self._up[a] & self._up[b]
        if not common:
            return None
        low = (common & -common).bit_length() - 1
        # least index in a linear extension; it is the join iff below all others
        return low if self._up[low] & common == common else None

    def meet(self, a: int, b: int) -> int | None:
        common = [i for i in range(min(a, b) + 1) if self.leq(i, a) and self.leq(i, b)]
        if not common:
            return None
        top = common[-1]
        return top if all(self.leq(i, top) for i in common) else None

    def minimal_elements(self) -> list[int]:
        return [i for i in range(self.size) if not self.lower[i]]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(self.size) if not self.upper[i]]

    def maximal_chains(self, start: int | None = None) -> Iterator[tuple[int, ...]]:
        """Saturated chains from ``start`` (default: the unique minimum) to a maximal element."""
        if start is None:
            mins = self.minimal_elements()
            if len(mins) != 1:
                raise ValueError("poset has no unique minimum")
            start = mins[0]
        stack: list[tuple[int, ...]] = [(start,)]
        while stack:
            chain = stack.pop()
            ups = self.upper[chain[-1]]
            if not ups:
                yield chain
            for b in reversed(ups):
                stack.append(chain + (b,))

    def subposet(self, elements: Sequence[int]) -> FinitePoset:
        """Induced subposet on ``elements`` (sorted), renumbered ``0..k-1``."""
        elements = sorted(elements)
        pos = {e: k for k, e in enumerate(elements)}
        rel = []
        for a in elements:
            for b in elements:
                if a < b and self.leq(a, b):
                    if not any(a < z < b and self.leq(a, z) and self.leq(z, b) for z in elements):
                        rel.append((pos[a], pos[b]))
        return FinitePoset(len(elements), rel)

    @cached_property
    def ranks(self) -> list[int]:
        """Length of the longest chain from a minimal element."""
        r = [0] * self.size
        for i in range(self.size):
            for j in self.upper[i]:
                r[j] = max(r[j], r[i] + 1)
        return r

    def is_boolean(self) -> bool:
        """Isomorphic to the lattice of subsets of its atoms."""
        mins = self.minimal_elements()
        if len(mins) != 1:
            return False
        bottom = mins[0]
        atoms = self.upper[bottom]
        if self.size != 2 ** len(atoms):
            return False
        code = {}
        for x in range(self.size):
            code[x] = frozenset(a for a in atoms if self.leq(a, x))
        if len(set(code.values())) != self.size:
            return False
        return all(
            self.leq(x, y) == (code[x] <= code[y]) for x in range(self.size) for y in range(self.size)
        )

    def to_networkx(self):
        import networkx as nx

        g = nx.DiGraph()
        g.add_nodes_from(range(self.size))
        g.add_edges_from(self.covers)
        return g
