"""Closed product formulas of the Coxeter-Catalan family.

All formulas are products over irreducible components, so reducible systems
are handled too.

>>> from coxcat.core import build_system
>>> W = build_system("A3")
>>> catalan(W), positive_catalan(W), fuss_catalan(W, 2)
(14, 5, 55)
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import CoxeterSystem


def _product(system: CoxeterSystem, shift: int, k: int = 1) -> int:
    total = Fraction(1)
    for comp in system.components:
        h = comp.coxeter_number
        for e in comp.exponents:
            total *= Fraction(k * h + e + shift, e + 1)
    assert total.denominator == 1
    return int(total)


def catalan(system: CoxeterSystem) -> int:
    return _product(system, 1)


def positive_catalan(system: CoxeterSystem) -> int:
    return _product(system, -1)


def fuss_catalan(system: CoxeterSystem, k: int) -> int:
    return _product(system, 1, k)


def fuss_catalan_coefficients(system: CoxeterSystem) -> list[Fraction]:
    """Coefficients (constant term first) of the polynomial ``k -> Cat^(k)(W)``."""
    poly = [Fraction(1)]
    for comp in system.components:
        h = comp.coxeter_number
        for e in comp.exponents:
            # multiply by (h k + e + 1) / (e + 1)
            a, b = Fraction(h, e + 1), Fraction(e + 1, e + 1)
            new = [Fraction(0)] * (len(poly) + 1)
            for i, coef in enumerate(poly):
                new[i] += coef * b
                new[i + 1] += coef * a
            poly = new
    return poly


def full_reflection_formula(system: CoxeterSystem) -> int:
    """``n h / |W| * prod_{i>=2} (e_i - 1)`` for irreducible systems; zero otherwise."""
    if len(system.components) != 1:
        return 0
    n, h = system.rank, system.coxeter_number
    value = Fraction(n * h, system.order) * math.prod(e - 1 for e in system.exponents[1:])
    assert value.denominator == 1
    return int(value)


def chain_polynomial_formula(system: CoxeterSystem) -> list[int]:
    """Coefficients of ``(n!/|W|) prod (d_i + q (h - d_i))`` (irreducible systems)."""
    if len(system.components) != 1:
        raise ValueError("the closed chain formula needs an irreducible system")
    n, h = system.rank, system.coxeter_number
    poly = [Fraction(math.factorial(n), system.order)]
    for d in system.degrees:
        new = [Fraction(0)] * (len(poly) + 1)
        for i, coef in enumerate(poly):
            new[i] += coef * d
            new[i + 1] += coef * (h - d)
        poly = new
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    assert all(c.denominator == 1 for c in poly)
    return [int(c) for c in poly]


def deligne_count(system: CoxeterSystem) -> int:
    """Number of maximal chains ``n! h^n / |W|`` (irreducible systems)."""
    n, h = system.rank, system.coxeter_number
    return math.factorial(n) * h**n // system.order
