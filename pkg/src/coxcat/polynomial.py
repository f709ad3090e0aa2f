"""Multivariate polynomials with integer coefficients.

A :class:`Poly` carries its tuple of variable names and a dict from exponent
tuples to nonzero integers.  Rational substitutions are never formed; the
identities of the triangles are evaluated with :func:`homogenize_substitute`,
which clears a common denominator through a known degree bound.

>>> x, y = Poly.variables(("x", "y"))
>>> p = (x + y) ** 2
>>> p.coefficient(x=1, y=1)
2
>>> p.subs({"y": x}) == 4 * x ** 2
True
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], int] | None = None):
        self.vars = tuple(variables)
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    # -- construction --------------------------------------------------------

    @classmethod
    def variables(cls, names: Sequence[str]) -> tuple[Poly, ...]:
        n = len(names)
        return tuple(cls(names, {tuple(int(i == k) for i in range(n)): 1}) for k in range(n))

    @classmethod
    def constant(cls, names: Sequence[str], value: int) -> Poly:
        return cls(names, {(0,) * len(names): value})

    @classmethod
    def monomial(cls, names: Sequence[str], exps: Sequence[int], coef: int = 1) -> Poly:
        return cls(names, {tuple(exps): coef})

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError("polynomials over different variables")
            return other
        return Poly.constant(self.vars, int(other))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other) -> Poly:
        other = self._lift(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        result = Poly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.constant(self.vars, other)
        return isinstance(other, Poly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- inspection ----------------------------------------------------------

    def coefficient(self, **exps: int) -> int:
        key = tuple(exps.get(v, 0) for v in self.vars)
        return self.terms.get(key, 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs == {degree})

    def nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in normal form: sorted by exponent tuple."""
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), [-k for k in t[0]])):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- substitution --------------------------------------------------------

    def subs(self, mapping: Mapping[str, Poly | int], target_vars: Sequence[str] | None = None) -> Poly:
        """Replace variables by polynomials (over ``target_vars``, default the same)."""
        target = tuple(target_vars or self.vars)
        images = []
        for v in self.vars:
            img = mapping.get(v)
            if img is None:
                if v not in target:
                    raise ValueError(f"no image for variable {v}")
                img = Poly.variables(target)[target.index(v)]
            elif isinstance(img, int):
                img = Poly.constant(target, img)
            images.append(img)
        return _evaluate(self, images, target)

    def difference_report(self, other: Poly, limit: int = 5) -> list[str]:
        """A few monomials where the two polynomials differ."""
        keys = sorted(set(self.terms) | set(other.terms))
        out = []
        for e in keys:
            a, b = self.terms.get(e, 0), other.terms.get(e, 0)
            if a != b:
                out.append(f"{e}: {a} != {b}")
                if len(out) == limit:
                    break
        return out


def _evaluate(p: Poly, images: Sequence[Poly], target: Sequence[str]) -> Poly:
    powers: list[dict[int, Poly]] = [{} for _ in images]

    def power(i: int, k: int) -> Poly:
        cache = powers[i]
        if k not in cache:
            cache[k] = images[i] ** k
        return cache[k]

    total = Poly(target)
    for e, c in p.terms.items():
        term = Poly.constant(target, c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        total = total + term
    return total


def homogenize_substitute(
    p: Poly, numerators: Mapping[str, Poly], denominator: Poly, degree: int
) -> Poly:
    """``denominator**degree * p(v -> numerators[v] / denominator)``.

    Every monomial of ``p`` must have total degree at most ``degree`` and every
    variable of ``p`` must appear in ``numerators``.
    """
    target = denominator.vars
    images = [numerators[v] for v in p.vars]
    total = Poly(target)
    for e, c in p.terms.items():
        d = sum(e)
        if d > degree:
            raise ValueError("degree bound too small")
        term = Poly.constant(target, c) * denominator ** (degree - d)
        for img, k in zip(images, e):
            if k:
                term = term * img**k
        total = total + term
    return total


def univariate(coeffs: Iterable[int], name: str = "q") -> Poly:
    return Poly((name,), {(k,): c for k, c in enumerate(coeffs)})
