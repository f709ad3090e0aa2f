"""Parabolic subgroups, parabolic closures and the noncrossing relation on
reflections.

Reflections are identified with their positive roots throughout, so a
reflection set is a frozenset of root indices.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .core import CoxeterSystem, Element, lifting_leq


class ParabolicSubgroup:
    """A parabolic subgroup, stored by its reflections and fixed space.

    Elements are only enumerated on demand (:meth:`elements`).
    """

    def __init__(self, system: CoxeterSystem, reflections: frozenset[int], fixed):
        self.system = system
        self.reflections = reflections
        self.fixed = fixed
        self.simple_roots: tuple[int, ...] = simple_system(system, reflections)
        self._elements: list[Element] | None = None
        self._bruhat_memo: dict = {}
        self._full_memo: dict = {}

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def simple_reflections(self) -> tuple[Element, ...]:
        return tuple(self.system.reflections[p] for p in self.simple_roots)

    def __contains__(self, v: Element) -> bool:
        return self.fixed.is_fixed_by(v.perm)

    def __eq__(self, other):
        return isinstance(other, ParabolicSubgroup) and self.reflections == other.reflections

    def __hash__(self):
        return hash(self.reflections)

    def __repr__(self):
        labels = ", ".join(self.system.root_label(p) for p in self.simple_roots)
        return f"ParabolicSubgroup([{labels}])"

    def length(self, v: Element) -> int:
        """Coxeter length of ``v`` with respect to the canonical generators."""
        return sum(1 for p in self.reflections if v.perm[p] < 0)

    def bruhat_leq(self, v: Element, w: Element) -> bool:
        return lifting_leq(v, w, self.simple_reflections, self.length, self._bruhat_memo)

    def elements(self) -> list[Element]:
        if self._elements is None:
            gens = self.simple_reflections
            seen = {self.system.identity.perm: self.system.identity}
            queue = deque([self.system.identity])
            while queue:
                w = queue.popleft()
                for s in gens:
                    u = s * w
                    if u.perm not in seen:
                        seen[u.perm] = u
                        queue.append(u)
            self._elements = list(seen.values())
        return self._elements

    def sub_parabolic(self, roots: Iterable[int]) -> ParabolicSubgroup:
        """Parabolic subgroup generated by a subset of the simple roots."""
        return parabolic_from_roots(self.system, roots)

    def support(self, v: Element) -> frozenset[int]:
        """Simple roots of this subgroup needed to write ``v``."""
        simple = set(self.simple_roots)
        return frozenset(
            p for p in self.simple_roots if v not in parabolic_from_roots(self.system, simple - {p})
        )

    def has_full_support(self, v: Element) -> bool:
        hit = self._full_memo.get(v.perm)
        if hit is None:
            hit = v in self and len(self.support(v)) == self.rank
            self._full_memo[v.perm] = hit
        return hit


def simple_system(system: CoxeterSystem, reflections: frozenset[int]) -> tuple[int, ...]:
    """Roots of the reflections ``t`` in the set with ``Inv_R(t)`` meeting it only in ``t``."""
    out = []
    for q in sorted(reflections):
        perm = system.reflections[q].perm
        if all(perm[p] >= 0 for p in reflections if p != q):
            out.append(q)
    return tuple(out)


def parabolic_closure(w: Element) -> ParabolicSubgroup:
    """The smallest parabolic subgroup containing ``w``."""
    system = w.system
    cache = system._closures
    hit = cache.get(w.perm)
    if hit is None:
        space = system.fixed_space(w)
        hit = ParabolicSubgroup(system, space.orthogonal_roots(), space)
        cache[w.perm] = hit
    return hit


def parabolic_from_roots(system: CoxeterSystem, roots: Iterable[int]) -> ParabolicSubgroup:
    """Smallest parabolic subgroup containing the reflections of ``roots``."""
    key = frozenset(roots)
    cache = system._root_parabolics
    hit = cache.get(key)
    if hit is None:
        space = system.orthogonal_fixed_space(key)
        hit = ParabolicSubgroup(system, space.orthogonal_roots(), space)
        cache[key] = hit
    return hit


def standard_parabolic(system: CoxeterSystem, subset: Iterable[int]) -> ParabolicSubgroup:
    """``W_J`` for a set ``J`` of simple indices (0-based)."""
    return parabolic_from_roots(system, [system.simple_roots[i] for i in subset])


def is_c_noncrossing(t: Element, u: Element, c: Element) -> bool:
    """True when ``tu <= c`` or ``ut <= c`` in absolute order."""
    system = c.system
    return system.absolute_leq(t * u, c) or system.absolute_leq(u * t, c)


def bruhat_graph_restriction_check(P: ParabolicSubgroup) -> bool:
    """Compare Bruhat-graph edge directions inside ``P`` with those in ``W``.

    Lengths in ``P`` are taken as word lengths in the canonical generators
    (breadth-first distances), independently of :meth:`ParabolicSubgroup.length`.
    """
    system = P.system
    gens = P.simple_reflections
    dist = {system.identity.perm: 0}
    queue = deque([system.identity])
    while queue:
        w = queue.popleft()
        for s in gens:
            u = s * w
            if u.perm not in dist:
                dist[u.perm] = dist[w.perm] + 1
                queue.append(u)
    elems = P.elements()
    refl = [system.reflections[p] for p in P.reflections]
    for v in elems:
        for t in refl:
            w = t * v
            if (v.length < w.length) != (dist[v.perm] < dist[w.perm]):
                return False
    return True


def standard_subsystem(system: CoxeterSystem, subset: Iterable[int]) -> CoxeterSystem:
    """The standard parabolic ``W_J`` as a Coxeter system in its own right,
    with generators renumbered in increasing order of ``J`` (nonempty)."""
    keep = sorted(set(subset))
    if not keep:
        raise ValueError("the trivial subgroup is not a Coxeter system of positive rank")
    return CoxeterSystem([[system.matrix[i][j] for j in keep] for i in keep])
