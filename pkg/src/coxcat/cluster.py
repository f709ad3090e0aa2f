"""Almost positive roots, c-compatibility, the cluster complex and the
bijections between clusters, faces and intervals of the orders on NC(W, c).

A positive face is stored as a frozenset of positive-root indices; a face of
the full complex as a frozenset of :class:`AlmostPositiveRoot`.

>>> from coxcat.core import build_system
>>> from coxcat.noncrossing import NCContext
>>> W = build_system("A2")
>>> cc = ClusterContext(NCContext(W, W.linear_coxeter_element()))
>>> len(cc.clusters()), len(cc.positive_clusters())
(5, 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .core import CoxeterSystem, Element
from .errors import (
    NoValidOrdering,
    NotACluster,
    NotBipartite,
    NotFullSupport,
    NotLLRelated,
    NotPositiveFace,
)
from .noncrossing import LL, SQ, NCContext, cliques, commutation_normal_form
from .parabolic import is_c_noncrossing

NEG, POS = 0, 1


@dataclass(frozen=True, order=True)
class AlmostPositiveRoot:
    """``kind`` is NEG (``index`` is a simple index) or POS (``index`` is a
    positive-root index).  Negative simple roots sort first."""

    kind: int
    index: int

    @property
    def positive(self) -> bool:
        return self.kind == POS

    def label(self, system: CoxeterSystem) -> str:
        if self.kind == NEG:
            return "-" + system.root_label(system.simple_roots[self.index])
        return system.root_label(self.index)


def almost_positive_roots(system: CoxeterSystem) -> list[AlmostPositiveRoot]:
    return [AlmostPositiveRoot(NEG, i) for i in range(system.rank)] + [
        AlmostPositiveRoot(POS, p) for p in system.roots
    ]


def negative(i: int) -> AlmostPositiveRoot:
    return AlmostPositiveRoot(NEG, i)


def positive(p: int) -> AlmostPositiveRoot:
    return AlmostPositiveRoot(POS, p)


def sigma(system: CoxeterSystem, i: int, alpha: AlmostPositiveRoot) -> AlmostPositiveRoot:
    """The bijection of almost positive roots attached to the simple index ``i``."""
    if alpha.kind == NEG:
        return positive(system.simple_roots[i]) if alpha.index == i else alpha
    img, pos = system.simple_reflections[i].apply(alpha.index)
    if pos:
        return positive(img)
    return negative(system.simple_roots.index(img))


def _base_case(system: CoxeterSystem, a: AlmostPositiveRoot, b: AlmostPositiveRoot) -> bool | None:
    if a.kind == NEG and b.kind == NEG:
        return True
    if a.kind == NEG:
        return a.index not in system.root_support(b.index)
    if b.kind == NEG:
        return b.index not in system.root_support(a.index)
    return None


def compatible(a: AlmostPositiveRoot, b: AlmostPositiveRoot, c: Element) -> bool:
    """Direct evaluation of c-compatibility."""
    system = c.system
    base = _base_case(system, a, b)
    if base is not None:
        return base
    p, q = a.index, b.index
    return system.scalar_sign(p, q) >= 0 and is_c_noncrossing(system.reflections[p], system.reflections[q], c)


def compatible_recursive(a: AlmostPositiveRoot, b: AlmostPositiveRoot, word: Sequence[int], system: CoxeterSystem) -> bool:
    """Evaluation through the rotation rule: with ``s`` the first letter of the
    word of ``c``, compatibility for ``c`` equals compatibility of the
    ``sigma_s`` images for ``s c s``, whose word is the rotated one."""
    word = list(word)
    limit = 2 * (system.coxeter_number + 2) * max(1, len(word))
    for _ in range(limit):
        base = _base_case(system, a, b)
        if base is not None:
            return base
        s = word[0]
        a, b = sigma(system, s, a), sigma(system, s, b)
        word = word[1:] + [s]
    raise RuntimeError("recursive compatibility did not reach a base case")


def _ordering(nc: NCContext, face: Iterable[int]) -> list[int] | None:
    """Canonically least ordering of positive roots whose prefix products are
    length-additive below ``c``."""
    remaining = sorted(face)
    system = nc.system
    chosen: list[int] = []

    def search(prefix: Element) -> bool:
        if not remaining:
            return True
        for k, p in enumerate(list(remaining)):
            nxt = prefix * system.reflections[p]
            i = nc.index.get(nxt.perm)
            if i is None or nc.ranks[i] != len(chosen) + 1:
                continue
            chosen.append(p)
            remaining.pop(k)
            if search(nxt):
                return True
            remaining.insert(k, p)
            chosen.pop()
        return False

    return chosen if search(system.identity) else None


class ClusterContext:
    """Cluster complex of ``(W, c)`` built over a noncrossing lattice."""

    def __init__(self, nc: NCContext):
        self.nc = nc
        self.system = nc.system
        self.c = nc.c
        self.n = nc.n
        self.vertices = almost_positive_roots(self.system)

    # -- compatibility -------------------------------------------------------

    def compatible(self, a: AlmostPositiveRoot, b: AlmostPositiveRoot) -> bool:
        base = _base_case(self.system, a, b)
        if base is not None:
            return base
        return self.system.scalar_sign(a.index, b.index) >= 0 and self.nc.noncrossing(a.index, b.index)

    def compatible_recursive(self, a: AlmostPositiveRoot, b: AlmostPositiveRoot) -> bool:
        return compatible_recursive(a, b, self.nc.word, self.system)

    # -- complexes -----------------------------------------------------------

    @cached_property
    def faces(self) -> list[frozenset[AlmostPositiveRoot]]:
        verts = self.vertices
        edges = [
            (i, j)
            for i in range(len(verts))
            for j in range(i + 1, len(verts))
            if self.compatible(verts[i], verts[j])
        ]
        return [frozenset(verts[k] for k in f) for f in cliques(len(verts), edges)]

    @cached_property
    def positive_faces(self) -> list[frozenset[int]]:
        out = [frozenset(a.index for a in f) for f in self.faces if all(a.positive for a in f)]
        out.sort(key=lambda f: (len(f), sorted(f)))
        return out

    def clusters(self) -> list[frozenset[AlmostPositiveRoot]]:
        return [f for f in self.faces if len(f) == self.n]

    def positive_clusters(self) -> list[frozenset[int]]:
        return [f for f in self.positive_faces if len(f) == self.n]

    def f_vector(self, positive_only: bool = False) -> list[int]:
        counts = [0] * (self.n + 1)
        for f in self.positive_faces if positive_only else self.faces:
            counts[len(f)] += 1
        return counts

    def h_vector(self, positive_only: bool = False) -> list[int]:
        return h_vector(self.f_vector(positive_only))

    def is_positive_face(self, face: Iterable[int]) -> bool:
        face = sorted(face)
        return all(
            self.system.scalar_sign(p, q) >= 0 and self.nc.noncrossing(p, q)
            for k, p in enumerate(face)
            for q in face[k + 1 :]
        )

    # -- orderings and the sqr statistic -------------------------------------

    def order_face(self, face: Iterable[int]) -> list[int]:
        """Least ordering (in canonical root order) of a positive face whose
        product is below ``c`` with additive absolute length."""
        face = frozenset(face)
        if not self.is_positive_face(face):
            raise NotPositiveFace("roots are not pairwise compatible")
        order = _ordering(self.nc, face)
        if order is None:
            raise NoValidOrdering(f"no ordering of {sorted(face)} lies below c")
        return order

    def prefix_kinds(self, ordered: Sequence[int]) -> list[str]:
        out, u = [], self.system.identity
        for p in ordered:
            x = u * self.system.reflections[p]
            out.append(SQ if u.length < x.length else LL)
            u = x
        return out

    def sqr(self, face: Iterable) -> int:
        """Number of square covers along an ordered positive part of ``face``."""
        roots = [a.index if isinstance(a, AlmostPositiveRoot) else a for a in face
                 if not isinstance(a, AlmostPositiveRoot) or a.positive]
        return self.prefix_kinds(self.order_face(roots)).count(SQ)

    # -- clusters and full-support elements ----------------------------------

    def psi(self, w: Element) -> frozenset[int]:
        """Positive cluster attached to a full-support noncrossing partition."""
        self.nc.id(w)
        if w.support() != frozenset(range(self.n)):
            raise NotFullSupport(f"{w} does not have full support")
        return self.interval_to_face(w, self.c)

    def psi_inverse(self, face: Iterable[int]) -> Element:
        face = frozenset(face)
        if len(face) != self.n or not self.is_positive_face(face):
            raise NotACluster("not a positive cluster")
        v, w = self.face_to_interval(face)
        return v

    def face_to_interval(self, face: Iterable[int]) -> tuple[Element, Element]:
        """Positive face to the pair ``(v, w)`` with ``v << w``."""
        system = self.system
        ordered = self.order_face(face)
        refl = [system.reflections[p] for p in ordered]
        w = system.identity
        for t in refl:
            w = w * t
        if not refl:
            return w, w
        normal, j = commutation_normal_form(refl, self.c)
        v = system.identity
        for t in normal[:j]:
            v = v * t
        return v, w

    def interval_to_face(self, v: Element, w: Element) -> frozenset[int]:
        """Inverse of :meth:`face_to_interval`."""
        nc = self.nc
        if not nc.ll_leq(v, w):
            raise NotLLRelated(f"{v} is not below {w} in the long order")
        rest = v.inverse() * w
        gv, gr = nc.closure(v), nc.closure(rest)
        return frozenset((v.right_inversions() & gv.reflections) | (rest.left_inversions() & gr.reflections))

    def interval_to_face_explicit(self, v: Element, w: Element) -> frozenset[int]:
        """Same map through products of the canonical simple generators of
        ``v`` and ``v^-1 w`` (conjugates of successive prefixes)."""
        nc, system = self.nc, self.system
        if not nc.ll_leq(v, w):
            raise NotLLRelated(f"{v} is not below {w} in the long order")
        left = [system.reflections[p] for p in simple_generator_order(nc, v)]
        right = [system.reflections[p] for p in simple_generator_order(nc, v.inverse() * w)]
        out = set()
        j = len(left)
        for i in range(1, j + 1):
            # conjugate s_{j+1-i} by s_j s_{j-1} ... s_{j+2-i}
            conj = system.identity
            for idx in range(j - 1, j - i, -1):
                conj = conj * left[idx]
            t = conj * left[j - i] * conj.inverse()
            out.add(system.root_of(t))
        for i in range(len(right)):
            conj = system.identity
            for s in right[:i]:
                conj = conj * s
            out.add(system.root_of(conj * right[i] * conj.inverse()))
        return frozenset(out)

    # -- all noncrossing partitions and all clusters -------------------------

    def extended_psi(self, w: Element) -> frozenset[AlmostPositiveRoot]:
        """Cluster of the full complex attached to any noncrossing partition:
        the relative cluster of ``w`` in ``W_J`` (``J`` its support) padded with
        the negative simple roots outside ``J``."""
        nc = self.nc
        nc.id(w)
        support = w.support()
        face = {positive(p) for p in self.interval_to_face(w, nc.overline(w))}
        face |= {negative(i) for i in range(self.n) if i not in support}
        return frozenset(face)

    # -- bipartite case ------------------------------------------------------

    def _bip(self, part: Iterable[int] | None = None):
        nc = self.nc
        if nc.bipartition is None:
            raise NotBipartite("the Coxeter element is not bipartite")
        plus, minus = nc.bipartition
        keep = set(range(self.n)) if part is None else set(part)
        cp = self.system.element(sorted(plus & keep))
        cm = self.system.element(sorted(minus & keep))
        return cp, cm

    def bipartite_psi(self, u: Element, v: Element) -> tuple[Element, Element]:
        """``(u, v)`` with ``u << v`` to ``(x, y)`` with ``x`` square-below ``y``
        and ``underline(x) = e``."""
        nc = self.nc
        cp, cm = self._bip()
        if not nc.ll_leq(u, v):
            raise NotLLRelated(f"{u} is not below {v} in the long order")
        lu, lv = cp * u * cm, cp * v * cm
        x = nc.element_with_simple_set(nc.simple_sets[nc.id(lu)] - nc.simple_sets[nc.id(lv)])
        return x, lu

    def bipartite_psi_inverse(self, x: Element, y: Element, part: Iterable[int] | None = None) -> tuple[Element, Element]:
        nc = self.nc
        cp, cm = self._bip(part)
        sx, sy = nc.simple_sets[nc.id(x)], nc.simple_sets[nc.id(y)]
        if not sx <= sy:
            raise NotLLRelated(f"{x} is not below {y} in the square order")
        z = nc.element_with_simple_set(sy - sx)
        return cp * y * cm, cp * z * cm

    def sq_interval_to_face(self, x: Element, y: Element) -> frozenset[AlmostPositiveRoot]:
        """Square-order interval of height ``k`` to a face of size ``n - k``
        (bipartite ``c``)."""
        nc = self.nc
        self._bip()
        plus, minus = nc.bipartition
        big_j = nc.standard_support(x)
        rest = [i for i in range(self.n) if i not in big_j]
        gp = self.system.element(sorted(plus & big_j))
        gm = self.system.element(sorted(minus & big_j))
        x1, y1 = gp * x * gm, gp * y * gm
        u, v = self.bipartite_psi_inverse(x1, y1, rest)
        face = {positive(p) for p in self.interval_to_face(u, v)}
        return frozenset(face | {negative(i) for i in big_j})


def simple_generator_order(nc: NCContext, w: Element) -> list[int]:
    """Roots of the canonical simple generators of ``Gamma(w)`` in an order
    whose product is ``w``."""
    system = nc.system
    gens = sorted(nc.simple_sets[nc.id(w)])
    chosen: list[int] = []

    def search(prefix: Element, left: list[int]) -> bool:
        if not left:
            return prefix == w
        for k, p in enumerate(left):
            nxt = prefix * system.reflections[p]
            if system.absolute_leq(nxt, w):
                chosen.append(p)
                if search(nxt, left[:k] + left[k + 1 :]):
                    return True
                chosen.pop()
        return False

    if not search(system.identity, gens):
        raise NoValidOrdering(f"no ordering of the simple generators multiplies to {w}")
    return chosen


def compatible_by_orders(nc: NCContext, p: int, q: int) -> bool:
    """Compatibility of two distinct positive roots read off the orders on
    NC(W, c) alone; valid for simply-laced types."""
    system = nc.system
    i, j = nc.id(system.reflections[p]), nc.id(system.reflections[q])
    v = nc.poset.join(i, j)
    if v is None or nc.ranks[v] != 2:
        return False
    if len(nc.poset.interval(nc.bottom, v)) == 4:
        return True
    top = nc.elements[v]
    return nc.ll_leq(nc.elements[i], top) or nc.ll_leq(nc.elements[j], top)


def h_vector(f: Sequence[int]) -> list[int]:
    """``h`` with ``sum_j f_j x^j = sum_k h_k x^(n-k) (1+x)^k`` (``f_j`` = faces of size ``j``)."""
    from math import comb

    n = len(f) - 1
    # substitute x = 1/(u-1) and multiply by (u-1)^n
    h = [0] * (n + 1)
    for j, fj in enumerate(f):
        m = n - j
        for k in range(m + 1):
            h[k] += fj * comb(m, k) * (-1) ** (m - k)
    return h
