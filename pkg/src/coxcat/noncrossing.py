"""Noncrossing partitions ``NC(W, c)`` and the two refinements of absolute order.

An absolute cover ``v -> w`` is a *square* cover (``SQ``) when it goes up in
Bruhat order and a *long* cover (``LL``) when it goes down.  The transitive
closures of the two kinds are the orders ``sq_leq`` and ``ll_leq``.

>>> from coxcat.core import build_system
>>> W = build_system("A2")
>>> nc = nc_lattice(W, W.linear_coxeter_element())
>>> len(nc), nc.rank_counts()
(5, [1, 3, 1])
>>> sorted(kind for _, _, kind in nc.covers).count("LL")
1
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .catalan import catalan
from .core import CoxeterSystem, Element
from .errors import (
    BoundExceeded,
    NoCommutationNormalForm,
    NotBelowC,
    NotBipartite,
    NotComparableInput,
    NotInNC,
    NotMinimalFactorization,
)
from .parabolic import ParabolicSubgroup, parabolic_closure
from .poset import FinitePoset

SQ = "SQ"
LL = "LL"
DEFAULT_NC_BOUND = 50_000


def cover_kind(v: Element, w: Element) -> str:
    """Kind of the absolute cover ``v < w``."""
    system = v.system
    if w.absolute_length != v.absolute_length + 1 or not system.absolute_leq(v, w):
        raise NotComparableInput(f"{v} is not covered by {w} in absolute order")
    return SQ if v.length < w.length else LL


def _interval(v: Element, w: Element, kind: str | None) -> bool:
    """Whether ``w`` is reachable from ``v`` through absolute covers of ``kind``
    (any kind when None) staying below ``w``."""
    system = v.system
    if not system.absolute_leq(v, w):
        return False
    frontier = {v.perm: v}
    for _ in range(w.absolute_length - v.absolute_length):
        nxt = {}
        for u in frontier.values():
            for t in system.reflections:
                x = u * t
                if x.perm in nxt or x.absolute_length != u.absolute_length + 1:
                    continue
                if not system.absolute_leq(x, w):
                    continue
                if kind is None or (kind == SQ) == (u.length < x.length):
                    nxt[x.perm] = x
        frontier = nxt
    return w.perm in frontier


def sq_leq_generic(v: Element, w: Element) -> bool:
    """``v`` below ``w`` for the square order, on arbitrary group elements."""
    return _interval(v, w, SQ)


def ll_leq_generic(v: Element, w: Element) -> bool:
    return _interval(v, w, LL)


class NCContext:
    """The lattice ``NC(W, c)`` with its cover kinds, complements and interval partitions.

    Elements are numbered by (rank, Coxeter length, least reduced word); the
    identity has id 0 and ``c`` has the last id.
    """

    def __init__(self, system: CoxeterSystem, c: Element, bound: int = DEFAULT_NC_BOUND):
        self.system = system
        self.c = c
        self.word = system.coxeter_word(c)
        n = system.rank
        self.n = n
        expected = catalan(system)
        if expected > bound:
            raise BoundExceeded(f"|NC| = {expected} exceeds the bound {bound}")
        found = {system.identity.perm: system.identity}
        layer = [system.identity]
        for r in range(n):
            nxt: dict = {}
            for u in layer:
                for t in system.reflections:
                    w = u * t
                    if w.perm in nxt or w.absolute_length != r + 1:
                        continue
                    if (w.inverse() * c).absolute_length == n - r - 1:
                        nxt[w.perm] = w
            found.update(nxt)
            layer = list(nxt.values())
        elems = sorted(found.values(), key=lambda w: (w.absolute_length, w.length, w.reduced_word()))
        self.elements: list[Element] = elems
        self.index = {w.perm: i for i, w in enumerate(elems)}
        self.ranks = [w.absolute_length for w in elems]
        covers = []
        for i, u in enumerate(elems):
            for t in system.reflections:
                j = self.index.get((u * t).perm)
                if j is not None and self.ranks[j] == self.ranks[i] + 1:
                    covers.append((i, j, SQ if u.length < elems[j].length else LL))
        covers.sort()
        self.covers: list[tuple[int, int, str]] = covers
        self.kind = {(a, b): k for a, b, k in covers}
        self.poset = FinitePoset(len(elems), [(a, b) for a, b, _ in covers])
        self.krew = [self.index[(w.inverse() * c).perm] for w in elems]
        self.closures: list[ParabolicSubgroup] = [parabolic_closure(w) for w in elems]
        self.simple_sets = [frozenset(P.simple_roots) for P in self.closures]
        self.by_simple_set = {S: i for i, S in enumerate(self.simple_sets)}
        self.bipartition = _bipartition_of(system, self.word)
        self._ll_memo: dict[tuple[int, int], bool] = {}

    # -- basic access --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __contains__(self, w: Element) -> bool:
        return w.perm in self.index

    def id(self, w: Element) -> int:
        i = self.index.get(w.perm)
        if i is None:
            raise NotInNC(f"{w} is not below the Coxeter element")
        return i

    def rank_counts(self) -> list[int]:
        counts = [0] * (self.n + 1)
        for r in self.ranks:
            counts[r] += 1
        return counts

    def full_support_ids(self) -> list[int]:
        full = frozenset(range(self.n))
        return [i for i, w in enumerate(self.elements) if w.support() == full]

    def positive_rank_counts(self) -> list[int]:
        counts = [0] * (self.n + 1)
        for i in self.full_support_ids():
            counts[self.ranks[i]] += 1
        return counts

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    # -- complements ---------------------------------------------------------

    def kreweras(self, w: Element) -> Element:
        return self.elements[self.krew[self.id(w)]]

    def kreweras_inv(self, w: Element) -> Element:
        self.id(w)
        return self.c * w.inverse()

    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    def bipartite_factors(self) -> tuple[Element, Element]:
        if self.bipartition is None:
            raise NotBipartite("the Coxeter element is not bipartite")
        plus, minus = self.bipartition
        return self.system.element(sorted(plus)), self.system.element(sorted(minus))

    def bipartite_complement(self, w: Element) -> Element:
        cp, cm = self.bipartite_factors()
        self.id(w)
        return cp * w * cm

    # -- interval partitions -------------------------------------------------

    def subword(self, subset: Iterable[int]) -> Element:
        keep = set(subset)
        return self.system.element([i for i in self.word if i in keep])

    @cached_property
    def interval_partition_ids(self) -> list[int]:
        return sorted(self.id(self.subword(j)) for j in _subsets(range(self.n)))

    def interval_partitions(self) -> list[Element]:
        return [self.elements[i] for i in self.interval_partition_ids]

    def standard_support(self, w: Element) -> frozenset[int]:
        """Simple indices ``i`` whose simple root is a canonical simple root of ``Gamma(w)``."""
        simple = self.simple_sets[self.id(w)]
        return frozenset(i for i, p in enumerate(self.system.simple_roots) if p in simple)

    def overline(self, w: Element) -> Element:
        self.id(w)
        return self.subword(w.support())

    def underline(self, w: Element) -> Element:
        return self.subword(self.standard_support(w))

    def relative_kreweras(self, w: Element) -> Element:
        return w.inverse() * self.overline(w)

    # -- the two orders ------------------------------------------------------

    def closure(self, w: Element) -> ParabolicSubgroup:
        return self.closures[self.id(w)]

    def sq_leq(self, v: Element, w: Element) -> bool:
        """Square order, via containment of canonical simple systems."""
        return self.simple_sets[self.id(v)] <= self.simple_sets[self.id(w)]

    def ll_leq(self, v: Element, w: Element) -> bool:
        """Long order: ``v`` lies in ``Gamma(w)`` with full support there."""
        i, j = self.id(v), self.id(w)
        hit = self._ll_memo.get((i, j))
        if hit is None:
            hit = self.poset.leq(i, j) and self.closures[j].has_full_support(v)
            self._ll_memo[i, j] = hit
        return hit

    def cover_kind(self, v: Element, w: Element) -> str:
        k = self.kind.get((self.id(v), self.id(w)))
        if k is None:
            raise NotComparableInput(f"{v} is not covered by {w} in NC")
        return k

    @cached_property
    def sq_poset(self) -> FinitePoset:
        """Transitive closure of the square covers."""
        return FinitePoset(len(self), [(a, b) for a, b, k in self.covers if k == SQ])

    @cached_property
    def ll_poset(self) -> FinitePoset:
        return FinitePoset(len(self), [(a, b) for a, b, k in self.covers if k == LL])

    def sq_intervals(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(len(self)) for b in range(len(self)) if self.simple_sets[a] <= self.simple_sets[b]]

    def ll_intervals(self) -> list[tuple[int, int]]:
        els = self.elements
        return [(a, b) for a, b in self.poset.comparable_pairs() if self.ll_leq(els[a], els[b])]

    def sq_lower_ideal(self, w: Element) -> tuple[list[int], FinitePoset]:
        j = self.id(w)
        ids = [i for i in range(len(self)) if self.simple_sets[i] <= self.simple_sets[j]]
        return ids, self.sq_poset.subposet(ids)

    def ll_upper_ideal(self, w: Element) -> tuple[list[int], FinitePoset]:
        i = self.id(w)
        ids = [j for j in self.poset.up_set(i) if self.ll_leq(w, self.elements[j])]
        return ids, self.ll_poset.subposet(ids)

    def ll_components(self) -> list[list[int]]:
        """Elements grouped by their overline, ordered by the overline's id."""
        groups: dict[int, list[int]] = {}
        for i, w in enumerate(self.elements):
            groups.setdefault(self.id(self.overline(w)), []).append(i)
        return [groups[k] for k in sorted(groups)]

    # -- chains --------------------------------------------------------------

    def maximal_chains(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Maximal chains from e to c with their number of long covers."""
        for chain in self.poset.maximal_chains(self.bottom):
            nir = sum(1 for a, b in zip(chain, chain[1:]) if self.kind[(a, b)] == LL)
            yield chain, nir

    def chain_polynomial(self) -> list[int]:
        """Coefficients of ``sum over maximal chains of q^nir``."""
        coeffs = [0] * (self.n + 1)
        for _, nir in self.maximal_chains():
            coeffs[nir] += 1
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs

    # -- the complex of noncrossing simple systems ---------------------------

    def noncrossing(self, p: int, q: int) -> bool:
        """c-noncrossing test for the reflections of roots ``p`` and ``q``
        (same answer as :func:`is_c_noncrossing`, by lookup in the lattice)."""
        t, u = self.system.reflections[p], self.system.reflections[q]
        return (t * u).perm in self.index or (u * t).perm in self.index

    def element_with_simple_set(self, simple: frozenset[int]) -> Element:
        i = self.by_simple_set.get(frozenset(simple))
        if i is None:
            raise NotInNC("no noncrossing partition has this simple system")
        return self.elements[i]

    def xi_edges(self) -> list[tuple[int, int]]:
        """Pairs of roots ``p < q`` whose reflections are c-noncrossing with
        nonpositive scalar product."""
        system = self.system
        return [
            (p, q)
            for p in system.roots
            for q in range(p + 1, system.num_roots)
            if system.scalar_sign(p, q) <= 0 and self.noncrossing(p, q)
        ]

    def xi_faces(self) -> list[frozenset[int]]:
        return cliques(self.system.num_roots, self.xi_edges())


def _subsets(items: Iterable[int]) -> Iterator[frozenset[int]]:
    items = list(items)
    for mask in range(2 ** len(items)):
        yield frozenset(x for k, x in enumerate(items) if (mask >> k) & 1)


def _bipartition_of(system: CoxeterSystem, word: Sequence[int]):
    pos = {s: k for k, s in enumerate(word)}
    sources, sinks = set(range(system.rank)), set(range(system.rank))
    for i, j in system.coxeter_graph_edges():
        a, b = (i, j) if pos[i] < pos[j] else (j, i)
        sources.discard(b)
        sinks.discard(a)
    if sources | sinks != set(range(system.rank)):
        return None
    return frozenset(sources), frozenset(range(system.rank)) - sources


def cliques(num_vertices: int, edges: Iterable[tuple[int, int]]) -> list[frozenset[int]]:
    """All cliques (including the empty one) of a graph, by size then vertex list."""
    nbr = [0] * num_vertices
    for a, b in edges:
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a
    out: list[tuple[int, ...]] = []

    def grow(clique: tuple[int, ...], candidates: int):
        out.append(clique)
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            grow(clique + (v,), candidates & nbr[v])

    grow((), (1 << num_vertices) - 1)
    out.sort(key=lambda f: (len(f), f))
    return [frozenset(f) for f in out]


def nc_lattice(system: CoxeterSystem, c: Element, bound: int = DEFAULT_NC_BOUND) -> NCContext:
    return NCContext(system, c, bound)


def commutation_normal_form(
    factorization: Sequence[Element], c: Element
) -> tuple[list[Element], int]:
    """Reorder a minimal reflection factorization below ``c`` by swapping adjacent
    commuting factors until every square cover precedes every long cover of the
    prefix chain.  Returns the new factorization and the number of square covers.
    """
    system = c.system
    facts = list(factorization)
    prefix = system.identity
    for k, t in enumerate(facts, start=1):
        if not t.is_reflection():
            raise NotMinimalFactorization(f"{t} is not a reflection")
        prefix = prefix * t
        if prefix.absolute_length != k:
            raise NotMinimalFactorization("factorization is not length-additive")
    if not system.absolute_leq(prefix, c):
        raise NotBelowC("product is not below the Coxeter element")

    def kinds(seq):
        out, u = [], system.identity
        for t in seq:
            x = u * t
            out.append(SQ if u.length < x.length else LL)
            u = x
        return out

    ks = kinds(facts)
    for _ in range(len(facts) ** 2 + 1):
        bad = next((i for i in range(len(ks) - 1) if ks[i] == LL and ks[i + 1] == SQ), None)
        if bad is None:
            return facts, ks.count(SQ)
        a, b = facts[bad], facts[bad + 1]
        if not a.commutes(b):
            raise NoCommutationNormalForm("a long cover precedes a square one across non-commuting factors")
        facts[bad], facts[bad + 1] = b, a
        ks = kinds(facts)
    raise NoCommutationNormalForm("reordering did not terminate")
