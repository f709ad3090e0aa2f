"""Finite Coxeter systems with exact root arithmetic.

Every group element is stored as a signed permutation of the positive roots:
``perm[p]`` is ``q`` when ``w(root p) = +root q`` and ``~q`` (that is ``-q-1``)
when ``w(root p) = -root q``.  Products compose right-to-left, so
``(u * v)(x) = u(v(x))``.

>>> W = build_system("A2")
>>> s1, s2 = W.simple_reflections
>>> s1 * s2 * s1 == s2 * s1 * s2
True
>>> W.order, W.coxeter_number, len(W.roots)
(6, 3, 3)
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from heapq import heappop, heappush
from typing import Iterable, Sequence

from . import classification as cl
from .errors import (
    BoundExceeded,
    InvalidInput,
    NotAReflection,
    NotCoxeterElement,
    SystemMismatch,
    UnsupportedType,
)
from .linalg import ring_nullspace
from .scalars import GOLDEN_RATIO, QSqrt5, ZPhi, sign, to_ring

DEFAULT_BOUND = 10**6
HARD_BOUND = 10**9

Perm = tuple[int, ...]


def _compose(u: Perm, v: Perm) -> Perm:
    return tuple(u[x] if x >= 0 else ~u[~x] for x in v)


def _invert(w: Perm) -> Perm:
    inv = [0] * len(w)
    for p, x in enumerate(w):
        if x >= 0:
            inv[x] = p
        else:
            inv[~x] = ~p
    return tuple(inv)


# ---------------------------------------------------------------------------
# fixed spaces


class FixedSpace:
    """Fixed subspace of an element in a vector realization."""

    __slots__ = ("dim", "basis", "_system")

    def __init__(self, system: CoxeterSystem, basis: tuple[tuple, ...]):
        self._system = system
        self.basis = basis
        self.dim = len(basis)

    def orthogonal_roots(self) -> frozenset[int]:
        real = self._system._real
        return frozenset(
            p for p in range(len(real.icovectors)) if all(not real.ring_pair(p, f) for f in self.basis)
        )

    def is_fixed_by(self, perm: Perm) -> bool:
        real = self._system._real
        return not any(real.moves(perm, f) for f in self.basis)


class DihedralFixedSpace:
    """Fixed subspace of an element of I2(m): the plane, a line or zero."""

    __slots__ = ("dim", "basis", "_system", "_root")

    def __init__(self, system: CoxeterSystem, dim: int, root: int | None):
        self._system = system
        self.dim = dim
        self._root = root
        self.basis = None

    def orthogonal_roots(self) -> frozenset[int]:
        if self.dim == 2:
            return frozenset()
        if self.dim == 1:
            return frozenset([self._root])
        return frozenset(range(len(self._system.roots)))

    def is_fixed_by(self, perm: Perm) -> bool:
        ident = self._system.identity.perm
        if self.dim == 0 or perm == ident:
            return True
        if self.dim == 1:
            return perm == self._system.reflections[self._root].perm
        return False


# ---------------------------------------------------------------------------
# realizations


class _VectorRealization:
    """Roots in simple-root coordinates over Q, or over Q(sqrt 5) when a bond
    labelled 5 is present."""

    kind = "vector"

    def __init__(self, matrix: cl.Matrix):
        n = len(matrix)
        self.n = n
        golden = any(5 in row for row in matrix)
        conv = (lambda v: QSqrt5(v)) if golden else Fraction
        self.zero, self.one = conv(0), conv(1)
        self.crystallographic = all(v in (1, 2, 3, 4, 6) for row in matrix for v in row)
        lengths = self._squared_lengths(matrix)
        gram = [[self.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                m = matrix[i][j]
                if i == j:
                    gram[i][j] = conv(lengths[i])
                elif m == 2:
                    continue
                elif m == 3:
                    gram[i][j] = conv(-lengths[i] / 2)
                elif m == 4:
                    gram[i][j] = conv(-min(lengths[i], lengths[j]))
                elif m == 6:
                    gram[i][j] = conv(-Fraction(3, 2) * min(lengths[i], lengths[j]))
                elif m == 5:
                    gram[i][j] = -GOLDEN_RATIO * lengths[i] / 2
                else:
                    raise UnsupportedType(f"bond label {m} needs the dihedral realization")
        self.gram = gram
        unit = [tuple(self.one if k == i else self.zero for k in range(n)) for i in range(n)]
        found = {u: None for u in unit}
        queue = deque(unit)
        while queue:
            beta = queue.popleft()
            for i in range(n):
                if beta == unit[i]:
                    continue
                gamma = self._reflect_simple(i, beta)
                if gamma not in found:
                    found[gamma] = None
                    queue.append(gamma)
        roots = sorted(found, key=lambda v: (sum(v, self.zero), tuple(-x for x in v)))
        self.coords = roots
        self.index = {v: p for p, v in enumerate(roots)}
        self.simple = tuple(self.index[u] for u in unit)
        self.covectors = [
            tuple(sum((v[k] * gram[k][j] for k in range(n)), self.zero) for j in range(n))
            for v in roots
        ]
        # integral copies (common positive scale) for fast exact kernels
        self.golden = golden
        self.rzero, self.rone = (ZPhi(0), ZPhi(1)) if golden else (0, 1)
        flat = to_ring([x for v in roots for x in v] + [self.one], golden)
        self.icoords = [tuple(flat[p * n:(p + 1) * n]) for p in range(len(roots))]
        self.iscale = flat[-1]
        flat = to_ring([x for v in self.covectors for x in v], golden)
        self.icovectors = [tuple(flat[p * n:(p + 1) * n]) for p in range(len(roots))]

    @staticmethod
    def _squared_lengths(matrix: cl.Matrix) -> list[Fraction]:
        # the higher-indexed end of a 4- or 6-bond carries the short root
        n = len(matrix)
        lengths: list[Fraction | None] = [None] * n
        for start in range(n):
            if lengths[start] is not None:
                continue
            lengths[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    m = matrix[i][j]
                    if j == i or m == 2 or lengths[j] is not None:
                        continue
                    ratio = {4: 2, 6: 3}.get(m, 1)
                    lengths[j] = lengths[i] / ratio if j > i else lengths[i] * ratio
                    stack.append(j)
        return lengths  # type: ignore[return-value]

    def _bilinear(self, u, v):
        n = self.n
        return sum((u[a] * self.gram[a][b] * v[b] for a in range(n) for b in range(n)), self.zero)

    def _reflect_simple(self, i: int, v: tuple) -> tuple:
        coef = 2 * sum((v[k] * self.gram[k][i] for k in range(self.n)), self.zero) / self.gram[i][i]
        return tuple(x - coef if k == i else x for k, x in enumerate(v))

    def _signed_lookup(self, v: tuple) -> int:
        p = self.index.get(v)
        if p is not None:
            return p
        return ~self.index[tuple(-x for x in v)]

    def reflection_perm(self, p: int) -> Perm:
        alpha = self.coords[p]
        norm = self.pair(p, alpha)
        out = []
        for q, beta in enumerate(self.coords):
            coef = 2 * self.pair(q, alpha) / norm
            out.append(self._signed_lookup(tuple(b - coef * a for a, b in zip(alpha, beta))))
        return tuple(out)

    def pair(self, p: int, vec) -> object:
        cov = self.covectors[p]
        return sum((c * x for c, x in zip(cov, vec)), self.zero)

    def gram_sign(self, p: int, q: int) -> int:
        return sign(self.pair(p, self.coords[q]))

    def support(self, p: int) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.coords[p]) if x != 0)

    def ring_pair(self, p: int, vec):
        """Scaled scalar product of root ``p`` with an integral vector."""
        acc = self.rzero
        for c, x in zip(self.icovectors[p], vec):
            acc = acc + c * x
        return acc

    def _ring_columns(self, perm: Perm) -> list[tuple]:
        cols = []
        for s in self.simple:
            x = perm[s]
            cols.append(self.icoords[x] if x >= 0 else tuple(self.rzero - c for c in self.icoords[~x]))
        return cols

    def _shifted_rows(self, perm: Perm) -> list[list]:
        """Rows of ``scale * (M_w - I)`` in the simple-root basis."""
        cols = self._ring_columns(perm)
        n, one = self.n, self.iscale
        return [[cols[j][i] - one if i == j else cols[j][i] for j in range(n)] for i in range(n)]

    def moves(self, perm: Perm, vec) -> bool:
        """Whether the element moves the integral vector ``vec``."""
        for row in self._shifted_rows(perm):
            acc = self.rzero
            for a, x in zip(row, vec):
                acc = acc + a * x
            if acc:
                return True
        return False

    def fixed_basis(self, perm: Perm) -> tuple[tuple, ...]:
        return tuple(ring_nullspace(self._shifted_rows(perm), self.n, self.rzero, self.rone))

    def common_kernel(self, roots: Sequence[int]) -> tuple[tuple, ...]:
        """Integral basis of the vectors orthogonal to all the given roots."""
        if not roots:
            return tuple(
                tuple(self.rone if i == j else self.rzero for j in range(self.n)) for i in range(self.n)
            )
        rows = [list(self.icovectors[p]) for p in roots]
        return tuple(ring_nullspace(rows, self.n, self.rzero, self.rone))

    def label(self, p: int) -> str:
        terms = []
        for i, x in enumerate(self.coords[p]):
            if x == 0:
                continue
            if x == 1:
                terms.append(f"a{i + 1}")
            elif isinstance(x, Fraction) and x.denominator == 1:
                terms.append(f"{x.numerator}a{i + 1}")
            else:
                terms.append(f"({x})a{i + 1}")
        return "+".join(terms)


class _AngleRealization:
    """Roots of I2(m) indexed by angles k*pi/m, 0 <= k < m.

    Reflection in the root at angle a sends the vector at angle t to the one
    at angle 2a + m - t (all angles in units of pi/m, modulo 2m).
    """

    kind = "angle"
    crystallographic = False

    def __init__(self, m: int):
        self.n = 2
        self.m = m
        angles = sorted(range(m), key=lambda k: (min(k, m - 1 - k), k))
        self.angles = angles
        self.index = {a: p for p, a in enumerate(angles)}
        self.simple = (self.index[0], self.index[m - 1])

    def _signed(self, theta: int) -> int:
        theta %= 2 * self.m
        if theta < self.m:
            return self.index[theta]
        return ~self.index[theta - self.m]

    def reflection_perm(self, p: int) -> Perm:
        a = self.angles[p]
        return tuple(self._signed(2 * a + self.m - t) for t in self.angles)

    def gram_sign(self, p: int, q: int) -> int:
        d = abs(self.angles[p] - self.angles[q])
        return 1 if 2 * d < self.m else (0 if 2 * d == self.m else -1)

    def support(self, p: int) -> frozenset[int]:
        a = self.angles[p]
        if a == 0:
            return frozenset([0])
        if a == self.m - 1:
            return frozenset([1])
        return frozenset([0, 1])

    def label(self, p: int) -> str:
        return f"angle({self.angles[p]}pi/{self.m})"


# ---------------------------------------------------------------------------
# the system


class CoxeterSystem:
    """An immutable finite Coxeter system.  Build with :func:`build_system`."""

    def __init__(self, matrix: cl.Matrix, label: str | None = None, realization: str = "auto"):
        self.matrix = matrix
        self.rank = len(matrix)
        self.components = cl.classify(matrix)
        self.label = label or "x".join(c.label for c in self.components)
        big_dihedral = [c for c in self.components if c.family == "I" and c.m not in (3, 4, 6)]
        use_angle = realization == "angle" or (realization == "auto" and big_dihedral and self.rank == 2)
        if use_angle:
            if self.rank != 2 or len(self.components) != 1:
                raise UnsupportedType("the angle realization covers irreducible rank-2 systems only")
            self._real = _AngleRealization(matrix[0][1])
        else:
            if any(c.m >= 7 for c in big_dihedral):
                raise UnsupportedType("I2(m) with m >= 7 is only supported as an irreducible system")
            self._real = _VectorRealization(matrix)
        self.crystallographic = self._real.crystallographic and all(
            v in (1, 2, 3, 4, 6) for row in matrix for v in row
        )
        real = self._real
        self.num_roots = len(real.index)
        self.simple_roots: tuple[int, ...] = tuple(real.simple)
        self.exponents = tuple(sorted(e for c in self.components for e in c.exponents))
        self.degrees = tuple(e + 1 for e in self.exponents)
        self.coxeter_number = max(self.degrees)
        self.order = math.prod(self.degrees)
        self.identity = Element(self, tuple(range(self.num_roots)))
        self.reflections: tuple[Element, ...] = tuple(
            Element(self, real.reflection_perm(p)) for p in range(self.num_roots)
        )
        self._reflection_index = {t.perm: p for p, t in enumerate(self.reflections)}
        self.simple_reflections = tuple(self.reflections[p] for p in self.simple_roots)
        self._gram = [[real.gram_sign(p, q) for q in range(self.num_roots)] for p in range(self.num_roots)]
        self._supports = [real.support(p) for p in range(self.num_roots)]
        self._fixed: dict[Perm, object] = {}
        self._bruhat_memo: dict[tuple[Perm, Perm], bool] = {}
        self._elements: list[Element] | None = None
        self._closures: dict = {}
        self._root_parabolics: dict = {}

    # -- roots ---------------------------------------------------------------

    @property
    def roots(self) -> range:
        return range(self.num_roots)

    @property
    def realization(self) -> str:
        return self._real.kind

    def root_coordinates(self, p: int) -> tuple:
        """Coordinates of root ``p`` in the basis of simple roots."""
        if self._real.kind != "vector":
            raise UnsupportedType("angle-realized roots have no rational coordinates")
        return self._real.coords[p]

    def root_label(self, p: int) -> str:
        return self._real.label(p)

    def scalar_sign(self, p: int, q: int) -> int:
        """Exact sign of the scalar product of positive roots ``p`` and ``q``."""
        return self._gram[p][q]

    def root_support(self, p: int) -> frozenset[int]:
        return self._supports[p]

    def reflection(self, p: int) -> Element:
        return self.reflections[p]

    def root_of(self, t: Element) -> int:
        """Index of the positive root of reflection ``t``."""
        self._check(t)
        p = self._reflection_index.get(t.perm)
        if p is None:
            raise NotAReflection(f"{t} has absolute length {t.absolute_length}")
        return p

    def is_reflection(self, w: Element) -> bool:
        return w.perm in self._reflection_index

    # -- elements ------------------------------------------------------------

    def element(self, word: Iterable[int]) -> Element:
        """Product of simple reflections, indices 0-based, left to right."""
        w = self.identity
        for i in word:
            if not 0 <= i < self.rank:
                raise InvalidInput(f"simple index {i} out of range")
            w = w * self.simple_reflections[i]
        return w

    def _check(self, *elems: Element) -> None:
        for e in elems:
            if e.system is not self:
                raise SystemMismatch("elements belong to different Coxeter systems")

    def fixed_space(self, w: Element):
        space = self._fixed.get(w.perm)
        if space is None:
            if self._real.kind == "vector":
                space = FixedSpace(self, self._real.fixed_basis(w.perm))
            else:
                length = w.length
                if length == 0:
                    space = DihedralFixedSpace(self, 2, None)
                elif length % 2:
                    space = DihedralFixedSpace(self, 1, self._reflection_index[w.perm])
                else:
                    space = DihedralFixedSpace(self, 0, None)
            self._fixed[w.perm] = space
        return space

    def orthogonal_fixed_space(self, roots: Iterable[int]):
        """The subspace orthogonal to the given roots, i.e. the common fixed
        space of their reflections."""
        roots = sorted(set(roots))
        if self._real.kind == "vector":
            return FixedSpace(self, self._real.common_kernel(roots))
        if not roots:
            return DihedralFixedSpace(self, 2, None)
        if len(roots) == 1:
            return DihedralFixedSpace(self, 1, roots[0])
        return DihedralFixedSpace(self, 0, None)

    def absolute_length(self, w: Element) -> int:
        return self.rank - self.fixed_space(w).dim

    def absolute_leq(self, v: Element, w: Element) -> bool:
        self._check(v, w)
        return v.absolute_length + (v.inverse() * w).absolute_length == w.absolute_length

    def bruhat_leq(self, v: Element, w: Element) -> bool:
        self._check(v, w)
        return lifting_leq(v, w, self.simple_reflections, lambda x: x.length, self._bruhat_memo)

    def elements(self, bound: int = DEFAULT_BOUND) -> list[Element]:
        """All group elements, ordered by length and then by signed permutation."""
        if self.order > bound:
            raise BoundExceeded(f"|W| = {self.order} exceeds the bound {bound}")
        if self._elements is None:
            layer = [self.identity]
            seen = {self.identity.perm}
            out = []
            while layer:
                layer.sort(key=lambda e: e.perm)
                out.extend(layer)
                nxt = []
                for w in layer:
                    for s in self.simple_reflections:
                        u = s * w
                        if u.perm not in seen:
                            seen.add(u.perm)
                            nxt.append(u)
                layer = nxt
            self._elements = out
        return self._elements

    def longest_element(self) -> Element:
        w = self.identity
        while True:
            for s in self.simple_reflections:
                if (s * w).length > w.length:
                    w = s * w
                    break
            else:
                return w

    # -- Coxeter elements ----------------------------------------------------

    def coxeter_graph_edges(self) -> list[tuple[int, int]]:
        n = self.rank
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.matrix[i][j] != 2]

    def coxeter_element(self, word: Sequence[int]) -> Element:
        if sorted(word) != list(range(self.rank)):
            raise NotCoxeterElement(f"word {list(word)} does not use each simple reflection once")
        return self.element(word)

    def coxeter_word(self, c: Element) -> tuple[int, ...]:
        """A word for ``c`` using each simple reflection once (validates ``c``)."""
        self._check(c)
        word = c.reduced_word()
        if sorted(word) != list(range(self.rank)):
            raise NotCoxeterElement(f"{c} is not a standard Coxeter element")
        return word

    def linear_coxeter_element(self) -> Element:
        return self.element(range(self.rank))

    def standard_coxeter_elements(self) -> list[Element]:
        """One element per acyclic orientation of the Coxeter graph, sorted by word."""
        edges = self.coxeter_graph_edges()
        found: dict[Perm, tuple[int, ...]] = {}
        for bits in range(2 ** len(edges)):
            arcs = [(i, j) if not (bits >> k) & 1 else (j, i) for k, (i, j) in enumerate(edges)]
            word = _least_topological_order(self.rank, arcs)
            c = self.element(word)
            found.setdefault(c.perm, word)
        return [self.element(w) for w in sorted(found.values())]

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]]:
        """2-colouring of the Coxeter graph; the first node of each component is "+"."""
        colour: dict[int, int] = {}
        adj = {i: [] for i in range(self.rank)}
        for i, j in self.coxeter_graph_edges():
            adj[i].append(j)
            adj[j].append(i)
        for start in range(self.rank):
            if start in colour:
                continue
            colour[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for u in adj[v]:
                    if u not in colour:
                        colour[u] = 1 - colour[v]
                        queue.append(u)
        plus = frozenset(i for i, col in colour.items() if col == 0)
        return plus, frozenset(range(self.rank)) - plus

    def bipartite_coxeter_element(self) -> tuple[Element, frozenset[int], frozenset[int]]:
        plus, minus = self.bipartition()
        c = self.element(sorted(plus) + sorted(minus))
        return c, plus, minus

    def __repr__(self):
        return f"CoxeterSystem({self.label})"


def _least_topological_order(n: int, arcs: list[tuple[int, int]]) -> tuple[int, ...]:
    indeg = [0] * n
    out: dict[int, list[int]] = {i: [] for i in range(n)}
    for a, b in arcs:
        out[a].append(b)
        indeg[b] += 1
    heap = [i for i in range(n) if indeg[i] == 0]
    order = []
    while heap:
        v = heappop(heap)
        order.append(v)
        for u in out[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                heappush(heap, u)
    return tuple(order)


def lifting_leq(v: Element, w: Element, simples: Sequence[Element], length, memo: dict) -> bool:
    """Bruhat comparison ``v <= w`` by the lifting property.

    ``simples`` are the Coxeter generators and ``length`` the matching length
    function, so the same routine serves reflection subgroups.
    """
    lv, lw = length(v), length(w)
    if lv > lw:
        return False
    if lv == lw:
        return v == w
    if lv == 0:
        return True
    key = (v.perm, w.perm)
    hit = memo.get(key)
    if hit is not None:
        return hit
    for s in simples:
        sw = s * w
        if length(sw) < lw:
            break
    sv = s * v
    if length(sv) < lv:
        result = lifting_leq(sv, sw, simples, length, memo)
    else:
        result = lifting_leq(v, sw, simples, length, memo)
    memo[key] = result
    return result


class Element:
    """A group element, stored as a signed permutation of the positive roots."""

    __slots__ = ("system", "perm", "_length", "_hash", "_word")

    def __init__(self, system: CoxeterSystem, perm: Perm):
        self.system = system
        self.perm = perm
        self._length = sum(1 for x in perm if x < 0)
        self._hash = hash(perm)
        self._word: tuple[int, ...] | None = None

    def __mul__(self, other: Element) -> Element:
        if other.system is not self.system:
            raise SystemMismatch("elements belong to different Coxeter systems")
        return Element(self.system, _compose(self.perm, other.perm))

    def inverse(self) -> Element:
        return Element(self.system, _invert(self.perm))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.perm == other.perm and self.system is other.system

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Element):
        return (self._length, self.reduced_word()) < (other._length, other.reduced_word())

    @property
    def length(self) -> int:
        return self._length

    @property
    def absolute_length(self) -> int:
        return self.system.absolute_length(self)

    @property
    def rank(self) -> int:
        return self.absolute_length

    def apply(self, root: int, positive: bool = True) -> tuple[int, bool]:
        """Image of ``+root`` (or ``-root``) as ``(index, is_positive)``."""
        x = self.perm[root]
        img, pos = (x, True) if x >= 0 else (~x, False)
        return img, pos == positive

    def right_inversions(self) -> frozenset[int]:
        """Roots ``p`` with ``w(p) < 0``, i.e. reflections ``t`` with ``l(wt) < l(w)``."""
        return frozenset(p for p, x in enumerate(self.perm) if x < 0)

    def left_inversions(self) -> frozenset[int]:
        return self.inverse().right_inversions()

    def right_descents(self) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self.system.simple_roots) if self.perm[s] < 0)

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word (0-based simple indices)."""
        if self._word is None:
            word = []
            w = self
            while w._length:
                i = min(w.left_descents())
                word.append(i)
                w = w.system.simple_reflections[i] * w
            self._word = tuple(word)
        return self._word

    def support(self) -> frozenset[int]:
        return frozenset(self.reduced_word())

    def is_reflection(self) -> bool:
        return self.system.is_reflection(self)

    def commutes(self, other: Element) -> bool:
        return self * other == other * self

    def __repr__(self):
        word = self.reduced_word()
        return "e" if not word else "".join(f"s{i + 1}" for i in word)


def build_system(
    spec: str | Sequence[Sequence] | None = None,
    *,
    bound: int = DEFAULT_BOUND,
    realization: str = "auto",
) -> CoxeterSystem:
    """Build a system from a type label (``"B3"``, ``"I2(7)"``, ``"A1xA2"``) or a
    Coxeter matrix.

    ``realization`` may force ``"angle"`` (rank-2 only) or ``"vector"``.
    Raises :class:`NonFiniteType` for infinite types and
    :class:`UnsupportedType` when ``|W|`` exceeds ``bound``.
    """
    if bound > HARD_BOUND:
        raise InvalidInput(f"bound {bound} exceeds the hard cap {HARD_BOUND}")
    if isinstance(spec, str):
        matrix = cl.matrix_for_label(spec)
        label = spec.strip()
    else:
        matrix = cl.normalize_matrix(spec)
        label = None
    comps = cl.classify(matrix)
    order = math.prod(c.order for c in comps)
    if order > bound:
        raise UnsupportedType(f"|W| = {order} exceeds the enumeration bound {bound}")
    return CoxeterSystem(matrix, label=label, realization=realization)

