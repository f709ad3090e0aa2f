"""Catalan-family counts and the F, M, H and I triangles.

The classical triangles are polynomials in ``x, y``; the multivariate ones
(``bold_*``) live over ``x1..xn, y, z`` with one ``x`` variable per simple
reflection.  :func:`identity_suite` checks every relation between them by
exact coefficient comparison.

>>> from coxcat.core import build_system
>>> from coxcat.noncrossing import NCContext
>>> from coxcat.cluster import ClusterContext
>>> W = build_system("A2")
>>> nc = NCContext(W, W.linear_coxeter_element())
>>> f_triangle(ClusterContext(nc))
1 + 2*x + 3*y + x^2 + 2*x*y + 2*y^2
>>> h_triangle(root_poset(W))
1 + 2*x + y + x^2
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .catalan import (
    catalan,
    full_reflection_formula,
    fuss_catalan_coefficients,
    positive_catalan,
)
from .cluster import ClusterContext
from .core import CoxeterSystem, Element
from .noncrossing import NCContext
from .nonnesting import RootPoset, root_poset
from .parabolic import standard_subsystem
from .polynomial import Poly, homogenize_substitute

XY = ("x", "y")


def bold_vars(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n)) + ("y", "z")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, lhs: Poly, rhs: Poly) -> CheckResult:
    if lhs == rhs:
        return CheckResult(name, True)
    return CheckResult(name, False, "; ".join(lhs.difference_report(rhs)))


# -- counts ------------------------------------------------------------------


@dataclass(frozen=True)
class CatalanNumbers:
    cat: int
    cat_plus: int
    narayana: tuple[int, ...]
    positive_narayana: tuple[int, ...]
    fuss: tuple[Fraction, ...]  # coefficients of k -> Cat^(k)(W), constant first


def catalan_numbers(system: CoxeterSystem, nc: NCContext | None = None) -> CatalanNumbers:
    """Closed formulas together with Narayana numbers read off ``NC(W, c)``."""
    nc = nc or NCContext(system, system.linear_coxeter_element())
    return CatalanNumbers(
        catalan(system),
        positive_catalan(system),
        tuple(nc.rank_counts()),
        tuple(nc.positive_rank_counts()),
        tuple(fuss_catalan_coefficients(system)),
    )


@lru_cache(maxsize=None)
def _narayana_of_matrix(matrix: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    sub = CoxeterSystem([list(r) for r in matrix])
    return tuple(NCContext(sub, sub.linear_coxeter_element()).rank_counts())


def narayana_inclusion_exclusion(system: CoxeterSystem) -> list[int]:
    """``Nar+_k(W) = sum_J (-1)^(n-|J|) Nar_k(W_J)`` with each ``W_J`` built as
    a separate system."""
    n = system.rank
    out = [0] * (n + 1)
    for bits in range(2**n):
        J = [i for i in range(n) if (bits >> i) & 1]
        sign = (-1) ** (n - len(J))
        if not J:
            out[0] += sign
            continue
        sub = standard_subsystem(system, J)
        for k, v in enumerate(_narayana_of_matrix(tuple(map(tuple, sub.matrix)))):
            out[k] += sign * v
    return out


def full_reflection_count(system: CoxeterSystem) -> int:
    """Reflections whose support is every simple reflection."""
    full = frozenset(range(system.rank))
    return sum(1 for p in system.roots if system.root_support(p) == full)


@dataclass(frozen=True)
class FullReflectionRoutes:
    direct: int
    formula: int
    chain_route: Fraction

    @property
    def agree(self) -> bool:
        return self.direct == self.formula == self.chain_route


def full_reflection_routes(nc: NCContext) -> FullReflectionRoutes:
    """The direct count, the closed formula, and the coefficient of
    ``q^(n-1)`` in the chain polynomial divided by ``(n-1)!``."""
    n = nc.n
    chain = nc.chain_polynomial()
    top = chain[n - 1] if n - 1 < len(chain) else 0
    return FullReflectionRoutes(
        full_reflection_count(nc.system),
        full_reflection_formula(nc.system),
        Fraction(top, math.factorial(n - 1)),
    )


# -- classical triangles -----------------------------------------------------


def _mono(names, exps, coef=1) -> Poly:
    return Poly.monomial(names, exps, coef)


def _mobius_table(nc: NCContext) -> dict[tuple[int, int], int]:
    table = {}
    for a in range(len(nc)):
        for b, mu in nc.poset.mobius_from(a).items():
            table[a, b] = mu
    return table


def m_triangle(nc: NCContext) -> Poly:
    terms: dict = {}
    for (a, b), mu in _mobius_table(nc).items():
        ra, rb = nc.ranks[a], nc.ranks[b]
        key = (ra, rb - ra)
        terms[key] = terms.get(key, 0) + mu * (-1) ** (rb - ra)
    return Poly(XY, terms)


def f_triangle(cc: ClusterContext) -> Poly:
    terms: dict = {}
    for face in cc.faces:
        pos = sum(1 for a in face if a.positive)
        key = (len(face) - pos, pos)
        terms[key] = terms.get(key, 0) + 1
    return Poly(XY, terms)


def h_triangle(rp: RootPoset) -> Poly:
    simple = set(rp.system.simple_roots)
    terms: dict = {}
    for A in rp.antichains():
        k = len(A & simple)
        key = (k, len(A) - k)
        terms[key] = terms.get(key, 0) + 1
    return Poly(XY, terms)


def i_polynomial(nc: NCContext) -> Poly:
    terms: dict = {}
    for a, b in nc.ll_intervals():
        ra, rb = nc.ranks[a], nc.ranks[b]
        terms[ra, rb - ra] = terms.get((ra, rb - ra), 0) + 1
    return Poly(XY, terms)


def element_i(nc: NCContext, w: Element) -> Poly:
    """``I_w(x)``: rank generating function of ``{v : v << w}``."""
    b = nc.id(w)
    terms: dict = {}
    for a in nc.poset.down_set(b):
        if nc.ll_leq(nc.elements[a], w):
            terms[(nc.ranks[a],)] = terms.get((nc.ranks[a],), 0) + 1
    return Poly(("x",), terms)


def element_m(nc: NCContext, w: Element, mobius: dict | None = None) -> Poly:
    """``M_w(x) = (-1)^rk(w) sum_{v <= w} mu(v, w) (-x)^rk(v)``."""
    mobius = mobius if mobius is not None else _mobius_table(nc)
    b = nc.id(w)
    rb = nc.ranks[b]
    terms: dict = {}
    for a in nc.poset.down_set(b):
        ra = nc.ranks[a]
        terms[(ra,)] = terms.get((ra,), 0) + (-1) ** (rb + ra) * mobius[a, b]
    return Poly(("x",), terms)


# -- multivariate triangles --------------------------------------------------


def _x_exps(n: int, indices) -> list[int]:
    exps = [0] * (n + 2)
    for s in indices:
        exps[s] += 1
    return exps


def bold_i(nc: NCContext) -> Poly:
    n, names = nc.n, bold_vars(nc.n)
    full = frozenset(range(n))
    terms: dict = {}
    for a, b in nc.ll_intervals():
        exps = _x_exps(n, full - nc.elements[b].support())
        exps[n], exps[n + 1] = nc.ranks[a], nc.ranks[b] - nc.ranks[a]
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + 1
    return Poly(names, terms)


def bold_m(nc: NCContext) -> Poly:
    n, names = nc.n, bold_vars(nc.n)
    full = frozenset(range(n))
    terms: dict = {}
    for (a, b), mu in _mobius_table(nc).items():
        d = nc.ranks[b] - nc.ranks[a]
        exps = _x_exps(n, full - nc.elements[b].support())
        exps[n], exps[n + 1] = nc.ranks[a], d
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + mu * (-1) ** d
    return Poly(names, terms)


def bold_f(cc: ClusterContext) -> Poly:
    n, names = cc.n, bold_vars(cc.n)
    sqr = {f: cc.sqr(f) for f in cc.positive_faces}
    terms: dict = {}
    for face in cc.faces:
        pos = frozenset(a.index for a in face if a.positive)
        exps = _x_exps(n, [a.index for a in face if not a.positive])
        exps[n], exps[n + 1] = sqr[pos], len(pos) - sqr[pos]
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + 1
    return Poly(names, terms)


def bold_h(rp: RootPoset) -> Poly:
    n, names = rp.system.rank, bold_vars(rp.system.rank)
    simple_index = {p: i for i, p in enumerate(rp.system.simple_roots)}
    terms: dict = {}
    for A in rp.antichains():
        simple = [simple_index[p] for p in A if p in simple_index]
        exps = _x_exps(n, simple)
        exps[n] = len(A) - len(simple)
        exps[n + 1] = len(rp.support(A)) - len(A)
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + 1
    return Poly(names, terms)


@dataclass(frozen=True)
class BoldPolynomials:
    F: Poly
    M: Poly
    H: Poly | None
    I: Poly


def bold_polynomials(cc: ClusterContext, rp: RootPoset | None = None) -> BoldPolynomials:
    nc = cc.nc
    return BoldPolynomials(bold_f(cc), bold_m(nc), bold_h(rp) if rp else None, bold_i(nc))


# -- identity suite ----------------------------------------------------------


def _shift_x(names, n, by: Poly) -> dict:
    gens = Poly.variables(names)
    return {names[i]: gens[i] + by for i in range(n)}


def _all_x(names, n, value: Poly | int) -> dict:
    return {names[i]: value for i in range(n)}


def classical_identities(F: Poly, M: Poly, I: Poly, H: Poly | None, n: int) -> list[CheckResult]:
    x, y = Poly.variables(XY)
    one = Poly.constant(XY, 1)
    hs = homogenize_substitute
    out = [
        _check("F(x,y) = (1+x)^n M(x/(1+x), (y-x)/(1+x))", F, hs(M, {"x": x, "y": y - x}, one + x, n)),
        _check("M(x,y) = (1-x)^n F(x/(1-x), (y+x)/(1-x))", M, hs(F, {"x": x, "y": y + x}, one - x, n)),
        _check("I(x,y) = M(x-y, y)", I, M.subs({"x": x - y})),
        _check("M(x,y) = I(x+y, y)", M, I.subs({"x": x + y})),
        _check("I(x,y) = (1-x+y)^n F((x-y)/(1-x+y), x/(1-x+y))", I, hs(F, {"x": x - y, "y": x}, one - x + y, n)),
        _check("F(x,y) = (1+x)^n I(y/(1+x), (y-x)/(1+x))", F, hs(I, {"x": y, "y": y - x}, one + x, n)),
        _check("F(x,y) = (-1)^n F(-1-x, -1-y)", F, (-1) ** n * F.subs({"x": -one - x, "y": -one - y})),
        _check("M(x,y) = x^n M(1/x, y/x)", M, hs(M, {"x": one, "y": y}, x, n)),
        _check("I(x,x) = F(0,x)", I.subs({"y": x}), F.subs({"x": 0, "y": x})),
    ]
    for name, poly in (("F", F), ("M", M), ("I", I), ("H", H)):
        if poly is None:
            continue
        ok = poly.nonnegative() and poly.degree() == n
        out.append(CheckResult(f"{name} has nonnegative coefficients and degree n", ok, repr(poly) if not ok else ""))
    if H is not None:
        out += [
            _check("F(x,y) = (1+y)^n H(x/(1+y), y/(1+y))", F, hs(H, {"x": x, "y": y}, one + y, n)),
            _check("H(x,y) = (1-y)^n F(x/(1-y), y/(1-y))", H, hs(F, {"x": x, "y": y}, one - y, n)),
            _check("H(x,y) = (1+x-y)^n M(x/(1+x-y), (y-x)/(1+x-y))", H, hs(M, {"x": x, "y": y - x}, one + x - y, n)),
            _check("M(x,y) = (1+y)^n H(x/(1+y), (y+x)/(1+y))", M, hs(H, {"x": x, "y": y + x}, one + y, n)),
            _check("I(x,y) = (1+y)^n H((x-y)/(1+y), x/(1+y))", I, hs(H, {"x": x - y, "y": x}, one + y, n)),
            _check("H(x,y) = (1+x-y)^n I(y/(1+x-y), (y-x)/(1+x-y))", H, hs(I, {"x": y, "y": y - x}, one + x - y, n)),
            _check("H(x-1,y) = y^n H((x-y)/y, 1/y)", H.subs({"x": x - one}), hs(H, {"x": x - y, "y": one}, y, n)),
        ]
    return out


def multivariate_identities(B: BoldPolynomials, n: int) -> list[CheckResult]:
    names = bold_vars(n)
    gens = Poly.variables(names)
    y, z = gens[n], gens[n + 1]
    one = Poly.constant(names, 1)
    F, M, H, I = B.F, B.M, B.H, B.I
    out = [
        _check("F(x,y,z) = I(x+1,y,z)", F, I.subs(_shift_x(names, n, one))),
        _check("M(x,y,z) = I(x,y+z,z)", M, I.subs({"y": y + z})),
        _check("F(x,y,z) = M(x+1,y-z,z)", F, M.subs({**_shift_x(names, n, one), "y": y - z})),
    ]
    if H is not None:
        out += [
            _check("H(x,y,z) = I(x-y+1,y,z-1)", H, I.subs({**_shift_x(names, n, one - y), "z": z - one})),
            _check("F(x,y,z) = H(x+y,y,z+1)", F, H.subs({**_shift_x(names, n, y), "z": z + one})),
            _check(
                "H(x,y,z) = M(x-y+1,y-z+1,z-1)",
                H,
                M.subs({**_shift_x(names, n, one - y), "y": y - z + one, "z": z - one}),
            ),
        ]
        shifted = H.subs(_shift_x(names, n, -one))
        out.append(CheckResult("H(x-1,y,z) is homogeneous of degree n", shifted.is_homogeneous(n), repr(shifted)))
        out.append(_check("H(x-1,y,z) is symmetric in y and z", shifted, shifted.subs({"y": z, "z": y})))
    return out


def specialization_checks(B: BoldPolynomials, F: Poly, M: Poly, I: Poly, H: Poly | None, n: int) -> list[CheckResult]:
    names = bold_vars(n)
    x, y = Poly.variables(XY)

    def onto_xy(P: Poly, xs, yv, zv) -> Poly:
        return P.subs({**_all_x(names, n, xs), "y": yv, "z": zv}, XY)

    one = Poly.constant(XY, 1)
    out = [
        _check("F(x,y) = F(x,y,y)", F, onto_xy(B.F, x, y, y)),
        _check("M(x,y) = M(1,x,y)", M, onto_xy(B.M, one, x, y)),
        _check("I(x,y) = I(1,x,y)", I, onto_xy(B.I, one, x, y)),
    ]
    if H is not None and B.H is not None:
        out.append(_check("H(x,y) = H(x,y,1)", H, onto_xy(B.H, x, y, one)))
    return out


def interval_face_statistics(cc: ClusterContext) -> CheckResult:
    """``sum over positive faces of y^sqr z^size`` against
    ``sum over << intervals of y^rk(v) z^rk(w)``."""
    yz = ("y", "z")
    faces: dict = {}
    for f in cc.positive_faces:
        key = (cc.sqr(f), len(f))
        faces[key] = faces.get(key, 0) + 1
    nc = cc.nc
    intervals: dict = {}
    for a, b in nc.ll_intervals():
        key = (nc.ranks[a], nc.ranks[b])
        intervals[key] = intervals.get(key, 0) + 1
    return _check("positive faces by (sqr, size) = << intervals by (rk v, rk w)", Poly(yz, faces), Poly(yz, intervals))


def identity_suite(cc: ClusterContext, rp: RootPoset | None = None) -> list[CheckResult]:
    """Every triangle identity for ``(W, c)``; H-identities only when a root
    poset is supplied."""
    nc = cc.nc
    n = nc.n
    system = nc.system
    F, M, I = f_triangle(cc), m_triangle(nc), i_polynomial(nc)
    H = h_triangle(rp) if rp is not None else None
    out = classical_identities(F, M, I, H, n)

    mobius = _mobius_table(nc)
    xs = Poly.variables(("x",))[0]
    bad = [
        repr(w)
        for w in nc.elements
        if element_i(nc, w).subs({"x": xs + 1}) != element_m(nc, w, mobius)
    ]
    out.append(CheckResult("I_w(x+1) = M_w(x) for every w in NC", not bad, ", ".join(bad[:3])))

    n_ll = len(nc.ll_intervals())
    n_faces = len(cc.positive_faces)
    out.append(CheckResult("#<< intervals = #positive faces", n_ll == n_faces, f"{n_ll} vs {n_faces}"))
    out.append(interval_face_statistics(cc))

    B = bold_polynomials(cc, rp)
    out += multivariate_identities(B, n)
    out += specialization_checks(B, F, M, I, H, n)

    nums = catalan_numbers(system, nc)
    out.append(CheckResult("|NC| = Cat(W)", len(nc) == nums.cat, f"{len(nc)} vs {nums.cat}"))
    out.append(CheckResult("#full support = Cat+(W)", sum(nums.positive_narayana) == nums.cat_plus))
    ie = narayana_inclusion_exclusion(system)
    out.append(
        CheckResult("Nar+ by inclusion-exclusion over standard parabolics", ie == list(nums.positive_narayana), f"{ie}")
    )
    routes = full_reflection_routes(nc)
    out.append(CheckResult("full reflections: direct = formula = chain route", routes.agree, repr(routes)))
    if H is not None:
        dp = H.subs({"x": -1})
        out.append(CheckResult("H(-1,y) (double-positive Narayana)", True, repr(dp)))
    return out
