"""Type labels, Coxeter matrices and the finite classification.

A type label is a string such as ``"A3"``, ``"B4"``, ``"I2(7)"`` or a product
``"A1xA2"``.  :func:`classify` recognises the finite irreducible components of
an arbitrary Coxeter matrix and returns their invariants.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInput, NonFiniteType

INFINITY = 0  # matrix entry standing for m = infinity

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Component:
    """A finite irreducible component: family letter, rank, dihedral order m
    (only for I2) and the indices of its nodes in the ambient matrix."""

    family: str
    rank: int
    nodes: tuple[int, ...]
    m: int = 0

    @property
    def label(self) -> str:
        if self.family == "I":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def exponents(self) -> tuple[int, ...]:
        return exponents(self.family, self.rank, self.m)

    @property
    def coxeter_number(self) -> int:
        return max(self.exponents) + 1

    @property
    def order(self) -> int:
        return math.prod(e + 1 for e in self.exponents)


def exponents(family: str, rank: int, m: int = 0) -> tuple[int, ...]:
    n = rank
    if family == "A":
        return tuple(range(1, n + 1))
    if family == "B":
        return tuple(range(1, 2 * n, 2))
    if family == "D":
        return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
    table = {
        ("E", 6): (1, 4, 5, 7, 8, 11),
        ("E", 7): (1, 5, 7, 9, 11, 13, 17),
        ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
        ("F", 4): (1, 5, 7, 11),
        ("G", 2): (1, 5),
        ("H", 3): (1, 5, 9),
        ("H", 4): (1, 11, 19, 29),
    }
    if family == "I":
        return (1, m - 1)
    return table[(family, n)]


_LABEL = re.compile(r"^(?:([ABCDEFGH])(\d+)|I2?\((\d+|inf|∞)\))$")


def parse_label(label: str) -> list[tuple[str, int, int]]:
    """Split a label into ``(family, rank, m)`` triples.

    >>> parse_label("A1xI2(5)")
    [('A', 1, 0), ('I', 2, 5)]
    """
    parts = [p for p in re.split(r"\s*[x×*]\s*", label.strip()) if p]
    if not parts:
        raise InvalidInput(f"empty type label {label!r}")
    out = []
    for part in parts:
        mt = _LABEL.match(part)
        if not mt:
            raise InvalidInput(f"unrecognised type label {part!r}")
        if mt.group(3) in ("inf", "∞"):
            raise NonFiniteType(f"{part} is the infinite dihedral group")
        if mt.group(3) is not None:
            m = int(mt.group(3))
            if m < 2:
                raise InvalidInput(f"I2(m) needs m >= 2, got {m}")
            if m == 2:
                out += [("A", 1, 0), ("A", 1, 0)]
            else:
                out.append(("I", 2, m))
            continue
        fam, n = mt.group(1), int(mt.group(2))
        if fam == "C":
            fam = "B"
        valid = {
            "A": n >= 1,
            "B": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
            "H": n in (3, 4),
        }[fam]
        # the same diagrams continued past the finite range are infinite
        if not valid and fam in "EFH" and n > {"E": 8, "F": 4, "H": 4}[fam]:
            raise NonFiniteType(f"{part} is an infinite Coxeter group")
        if not valid:
            raise InvalidInput(f"no finite type {part!r}")
        out.append((fam, n, 0))
    return out


def _irreducible_matrix(family: str, n: int, m: int) -> list[list[int]]:
    mat = [[1 if i == j else 2 for j in range(n)] for i in range(n)]

    def bond(i, j, v=3):
        mat[i][j] = mat[j][i] = v

    if family == "I":
        bond(0, 1, m)
    elif family in "ABFGH":
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B":
            bond(n - 2, n - 1, 4)
        elif family == "F":
            bond(1, 2, 4)
        elif family == "G":
            bond(0, 1, 6)
        elif family == "H":
            bond(0, 1, 5)
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif family == "E":
        # Bourbaki labelling: 1-3-4-5-6-..., with 2 attached to 4
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    return mat


def matrix_for_label(label: str) -> Matrix:
    blocks = [_irreducible_matrix(*c) for c in parse_label(label)]
    size = sum(len(b) for b in blocks)
    mat = [[1 if i == j else 2 for j in range(size)] for i in range(size)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                mat[off + i][off + j] = v
        off += len(b)
    return tuple(tuple(r) for r in mat)


def normalize_matrix(raw: Sequence[Sequence]) -> Matrix:
    """Validate a user-supplied matrix; ``inf``, ``None`` and 0 mean infinity."""
    n = len(raw)
    if n == 0 or any(len(r) != n for r in raw):
        raise InvalidInput("Coxeter matrix must be square and non-empty")
    out = []
    for i, row in enumerate(raw):
        new = []
        for j, v in enumerate(row):
            if v is None or v == 0 or (isinstance(v, str) and v.lower() in ("inf", "infinity")):
                v = INFINITY
            elif isinstance(v, float) and math.isinf(v):
                v = INFINITY
            else:
                try:
                    v = int(v)
                except (TypeError, ValueError):
                    raise InvalidInput(f"bad matrix entry {v!r}") from None
            new.append(v)
        out.append(tuple(new))
    for i in range(n):
        if out[i][i] != 1:
            raise InvalidInput("diagonal entries must be 1")
        for j in range(n):
            if out[i][j] != out[j][i]:
                raise InvalidInput("Coxeter matrix must be symmetric")
            if i != j and out[i][j] != INFINITY and out[i][j] < 2:
                raise InvalidInput("off-diagonal entries must be >= 2")
    return tuple(out)


def classify(matrix: Matrix) -> list[Component]:
    """Irreducible components of a finite-type matrix, ordered by first node.

    Raises :class:`NonFiniteType` when some component is not finite.
    """
    n = len(matrix)
    adj = {i: [j for j in range(n) if j != i and matrix[i][j] != 2] for i in range(n)}
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        stack, nodes = [start], []
        seen.add(start)
        while stack:
            v = stack.pop()
            nodes.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(_classify_connected(matrix, tuple(sorted(nodes)), adj))
    return comps


def _classify_connected(matrix: Matrix, nodes: tuple[int, ...], adj) -> Component:
    k = len(nodes)
    edges = [(i, j) for i in nodes for j in adj[i] if i < j]
    labels = [matrix[i][j] for i, j in edges]
    if INFINITY in labels:
        raise NonFiniteType("infinite bond in Coxeter graph")
    if k == 1:
        return Component("A", 1, nodes)
    if len(edges) != k - 1:
        raise NonFiniteType("Coxeter graph contains a cycle")
    if k == 2:
        m = labels[0]
        fam = {3: "A", 4: "B", 6: "G"}.get(m, "I")
        return Component(fam, 2, nodes, m if fam == "I" else 0)
    degree = {v: len(adj[v]) for v in nodes}
    heavy = [(e, m) for e, m in zip(edges, labels) if m > 3]
    ends = [v for v in nodes if degree[v] == 1]
    if max(degree.values()) > 3:
        raise NonFiniteType("node of degree > 3")
    branch = [v for v in nodes if degree[v] == 3]
    if not heavy:
        if not branch:
            return Component("A", k, nodes)
        if len(branch) > 1:
            raise NonFiniteType("more than one branch node")
        arms = sorted(_arm_length(adj, branch[0], u) for u in adj[branch[0]])
        if arms[0] == 1 and arms[1] == 1:
            return Component("D", k, nodes)
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return Component("E", k, nodes)
        raise NonFiniteType(f"simply-laced tree with arms {arms}")
    if len(heavy) > 1 or branch:
        raise NonFiniteType("not a finite Coxeter graph")
    (a, b), m = heavy[0]
    at_end = a in ends or b in ends
    if m == 4:
        if at_end:
            return Component("B", k, nodes)
        if k == 4:
            return Component("F", 4, nodes)
    if m == 5 and at_end and k in (3, 4):
        return Component("H", k, nodes)
    raise NonFiniteType("not a finite Coxeter graph")


def _arm_length(adj, center: int, first: int) -> int:
    length, prev, cur = 1, center, first
    while True:
        nxt = [u for u in adj[cur] if u != prev]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1
