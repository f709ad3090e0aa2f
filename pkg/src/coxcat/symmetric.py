"""Cycle notation for type A: the simple reflection ``s_i`` is the
transposition ``(i, i+1)`` and products compose right-to-left.

>>> from coxcat.core import build_system
>>> W = build_system("A2")
>>> str_cycles(from_cycles(W, "(12)") * from_cycles(W, "(123)"))
'(23)'
"""

from __future__ import annotations

import re
from typing import Sequence

from .core import CoxeterSystem, Element
from .errors import InvalidInput


def _degree(system: CoxeterSystem) -> int:
    comps = system.components
    if len(comps) != 1 or comps[0].family != "A" or system.realization != "vector":
        raise InvalidInput("cycle notation is only available for type A")
    return system.rank + 1


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """``"(1,5)(2,3,4)"`` or ``"(12)(34)"`` into a list of cycles."""
    cycles = []
    for body in re.findall(r"\(([^()]*)\)", text):
        if "," in body:
            cyc = tuple(int(x) for x in body.split(","))
        else:
            cyc = tuple(int(ch) for ch in body.replace(" ", ""))
        cycles.append(cyc)
    if not cycles and text.strip() not in ("", "e", "()"):
        raise InvalidInput(f"cannot parse cycles {text!r}")
    return cycles


def permutation_of(cycles: Sequence[Sequence[int]], degree: int) -> tuple[int, ...]:
    """One-line notation (0-based images) of a product of disjoint cycles."""
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def from_permutation(system: CoxeterSystem, perm: Sequence[int]) -> Element:
    """Element for a permutation given in 0-based one-line notation."""
    degree = _degree(system)
    sigma = list(perm)
    if sorted(sigma) != list(range(degree)):
        raise InvalidInput("not a permutation of the right degree")
    word = []
    # peel off right factors: sigma = sigma' o s_i whenever sigma(i) > sigma(i+1)
    while True:
        for i in range(degree - 1):
            if sigma[i] > sigma[i + 1]:
                sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
                word.append(i)
                break
        else:
            break
    return system.element(reversed(word))


def from_cycles(system: CoxeterSystem, text: str) -> Element:
    return from_permutation(system, permutation_of(parse_cycles(text), _degree(system)))


def to_permutation(w: Element) -> tuple[int, ...]:
    degree = _degree(w.system)
    img = list(range(degree))
    for i in reversed(w.reduced_word()):
        img = [i + 1 if x == i else i if x == i + 1 else x for x in img]
    return tuple(img)


def str_cycles(w: Element) -> str:
    """Cycle notation; digits are run together when the degree is below 10."""
    img = to_permutation(w)
    degree = len(img)
    sep = "" if degree < 10 else ","
    seen, parts = set(), []
    for start in range(degree):
        if start in seen or img[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = img[x]
        parts.append("(" + sep.join(cyc) + ")")
    return "".join(parts) or "e"
