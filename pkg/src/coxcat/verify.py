"""The property and identity suite behind ``coxcat verify``.

Work is split into one job per ``(type, c)`` plus one job per type for the
checks comparing different Coxeter elements.  Jobs only take plain data
(labels and words), so they can run in worker processes; results are merged in
job order, which keeps the report byte-identical for any number of workers.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Sequence

from .catalan import (
    catalan,
    chain_polynomial_formula,
    deligne_count,
    positive_catalan,
)
from .cluster import (
    ClusterContext,
    almost_positive_roots,
    compatible,
    compatible_by_orders,
    negative,
    positive,
    sigma,
)
from .core import CoxeterSystem, Element, build_system
from .errors import InvalidInput, NotCrystallographic
from .noncrossing import LL, SQ, NCContext
from .nonnesting import RootPoset
from .parabolic import standard_subsystem
from .triangles import (
    CheckResult,
    f_triangle,
    h_triangle,
    i_polynomial,
    identity_suite,
    m_triangle,
)


# -- Coxeter element selection -----------------------------------------------


def select_coxeter_elements(system: CoxeterSystem, selector: str) -> list[Element]:
    """``linear``, ``bipartite``, ``all`` or a comma-separated 1-based word."""
    selector = selector.strip()
    if selector == "linear":
        return [system.linear_coxeter_element()]
    if selector == "bipartite":
        return [system.bipartite_coxeter_element()[0]]
    if selector == "all":
        return system.standard_coxeter_elements()
    try:
        word = [int(tok) - 1 for tok in selector.split(",")]
    except ValueError:
        raise InvalidInput(f"bad Coxeter element selector {selector!r}") from None
    return [system.coxeter_element(word)]


def word_label(word: Sequence[int]) -> str:
    return ",".join(str(i + 1) for i in word)


# -- per (type, c) checks ----------------------------------------------------


def _ok(name: str, bad: list, limit: int = 3) -> CheckResult:
    return CheckResult(name, not bad, "; ".join(str(b) for b in bad[:limit]))


def census_checks(nc: NCContext, cc: ClusterContext) -> list[CheckResult]:
    system, n = nc.system, nc.n
    nar, nar_plus = nc.rank_counts(), nc.positive_rank_counts()
    cat, cat_plus = catalan(system), positive_catalan(system)
    out = [
        CheckResult("|NC(W,c)| = Cat(W)", len(nc) == cat, f"{len(nc)} vs {cat}"),
        CheckResult("#full-support elements = Cat+(W)", sum(nar_plus) == cat_plus, f"{sum(nar_plus)} vs {cat_plus}"),
        CheckResult("#clusters = Cat(W)", len(cc.clusters()) == cat),
        CheckResult("#positive clusters = Cat+(W)", len(cc.positive_clusters()) == cat_plus),
    ]
    for name, f, counts in (
        ("face numbers = sum Nar_k x^(n-k) (1+x)^k", cc.f_vector(), nar),
        ("positive face numbers = sum Nar+_k x^(n-k) (1+x)^k", cc.f_vector(True), nar_plus),
    ):
        expected = [0] * (n + 1)
        for k, v in enumerate(counts):
            for j in range(k + 1):
                expected[n - k + j] += v * comb(k, j)
        out.append(CheckResult(name, f == expected, f"{f} vs {expected}"))
    chain = nc.chain_polynomial()
    if len(system.components) == 1:
        formula = chain_polynomial_formula(system)
        out.append(CheckResult("chain polynomial = (n!/|W|) prod (d_i + q (h - d_i))", chain == formula, f"{chain} vs {formula}"))
        out.append(CheckResult("#maximal chains = n! h^n / |W|", sum(chain) == deligne_count(system)))
    return out


def kreweras_checks(nc: NCContext) -> list[CheckResult]:
    els, krew = nc.elements, nc.krew
    full = set(nc.full_support_ids())
    forward, backward, dichotomy = [], [], []
    for a, b, kind in nc.covers:
        ka, kb = krew[a], krew[b]  # kb is covered by ka
        kv_above = els[ka].length > els[kb].length
        if kind == LL and not kv_above:
            forward.append((els[a], els[b]))
        if a in full and kv_above and kind != LL:
            backward.append((els[a], els[b]))
        if kind != SQ and nc.kind[kb, ka] != SQ:
            dichotomy.append((els[a], els[b]))
    out = [
        _ok("v >B w implies K(v) >B K(w) on covers", forward),
        _ok("K(v) >B K(w) implies v >B w on covers with v of full support", backward),
        _ok("v square-covered by w or K(w) square-covered by K(v)", dichotomy),
    ]
    if nc.is_bipartite():
        cp, cm = nc.bipartite_factors()
        lmap = [nc.id(cp * w * cm) for w in els]
        forward, backward = [], []
        for a, b, kind in nc.covers:
            la, lb = els[lmap[a]], els[lmap[b]]
            above = la.length > lb.length
            if kind == LL and not above:
                forward.append((els[a], els[b]))
            if a in full and above and kind != LL:
                backward.append((els[a], els[b]))
        out += [
            _ok("v >B w implies L(v) >B L(w) on covers", forward),
            _ok("L(v) >B L(w) implies v >B w on covers with v of full support", backward),
        ]
    return out


def order_checks(nc: NCContext) -> list[CheckResult]:
    els, size = nc.elements, len(nc)
    sqp, llp = nc.sq_poset, nc.ll_poset
    sq_bad, ll_bad = [], []
    for a in range(size):
        for b in range(size):
            below = nc.poset.leq(a, b)
            closure = nc.closures[b]
            sq = (sqp.leq(a, b), below and closure.bruhat_leq(els[a], els[b]), nc.simple_sets[a] <= nc.simple_sets[b])
            if len(set(sq)) != 1:
                sq_bad.append((els[a], els[b], sq))
            ll = (llp.leq(a, b), below and closure.bruhat_leq(els[b], els[a]), closure.has_full_support(els[a]))
            if len(set(ll)) != 1:
                ll_bad.append((els[a], els[b], ll))
    out = [
        _ok("square order: closure of covers = absolute and Bruhat in Gamma(w) = simple-root containment", sq_bad),
        _ok("long order: closure of covers = absolute and reverse Bruhat in Gamma(w) = full support in Gamma(w)", ll_bad),
    ]

    import networkx as nx

    graph = nx.Graph()
    graph.add_nodes_from(range(size))
    graph.add_edges_from((a, b) for a, b, k in nc.covers if k == LL)
    comps = sorted(sorted(c) for c in nx.connected_components(graph))
    out.append(CheckResult("long order has 2^n components", len(comps) == 2**nc.n, f"{len(comps)}"))
    out.append(CheckResult("long-order components are the overline classes", comps == sorted(nc.ll_components())))
    maxima = sorted(llp.maximal_elements())
    out.append(CheckResult("interval partitions are the long-order maxima", maxima == sorted(nc.interval_partition_ids)))

    up_bad = [els[a] for a in range(size) if not nc.ll_upper_ideal(els[a])[1].is_boolean()]
    down_bad = [els[a] for a in range(size) if not nc.sq_lower_ideal(els[a])[1].is_boolean()]
    out.append(_ok("every long-order upper ideal is Boolean", up_bad))
    out.append(_ok("every square-order lower ideal is Boolean", down_bad))

    anti_bad = []
    for w in els:
        ids, _ = nc.ll_upper_ideal(w)
        target = nc.relative_kreweras(w)
        images = {nc.id(els[i].inverse() * nc.overline(w)) for i in ids}
        ideal = set(nc.sq_lower_ideal(target)[0])
        if images != ideal or any(
            nc.ll_leq(els[i], els[j]) != nc.sq_leq(els[nc.id(els[j].inverse() * nc.overline(w))],
                                                   els[nc.id(els[i].inverse() * nc.overline(w))])
            for i in ids
            for j in ids
        ):
            anti_bad.append(w)
    out.append(_ok("relative Kreweras complement reverses long upper ideals onto square lower ideals", anti_bad))

    nar = nc.rank_counts()
    heights = [0] * (nc.n + 1)
    for a, b in nc.sq_intervals():
        heights[nc.ranks[b] - nc.ranks[a]] += 1
    expected = [sum(nar[r] * comb(r, k) for r in range(k, nc.n + 1)) for k in range(nc.n + 1)]
    out.append(CheckResult("square intervals of height k = sum_r Nar_r C(r,k)", heights == expected, f"{heights} vs {expected}"))
    return out


def compatibility_checks(nc: NCContext, cc: ClusterContext) -> list[CheckResult]:
    system = nc.system
    verts = cc.vertices
    pairs = list(itertools.combinations(verts, 2))
    mismatch = [(a, b) for a, b in pairs if cc.compatible(a, b) != cc.compatible_recursive(a, b)]
    out = [_ok("direct and recursive compatibility agree", mismatch)]

    transport = []
    word = nc.word
    for s in sorted(nc.c.left_descents()):
        c2 = system.simple_reflections[s] * nc.c * system.simple_reflections[s]
        for a, b in pairs:
            if cc.compatible(a, b) != compatible(sigma(system, s, a), sigma(system, s, b), c2):
                transport.append((s, a, b))
    out.append(_ok("compatibility is transported by sigma_s to s c s", transport))

    if all(comp.family in "ADE" for comp in system.components) and system.realization == "vector":
        bad = [
            (p, q)
            for p, q in itertools.combinations(system.roots, 2)
            if compatible_by_orders(nc, p, q) != cc.compatible(positive(p), positive(q))
        ]
        out.append(_ok("simply-laced compatibility read off the orders", bad))
    del word
    return out


def _product(system: CoxeterSystem, roots: Iterable[int]) -> Element:
    w = system.identity
    for p in roots:
        w = w * system.reflections[p]
    return w


def bijection_checks(nc: NCContext, cc: ClusterContext) -> list[CheckResult]:
    system, n = nc.system, nc.n
    els = nc.elements
    out = []

    ncf = [els[i] for i in nc.full_support_ids()]
    images = {}
    round_trip, products, scalar = [], [], []
    for w in ncf:
        face = cc.psi(w)
        images[face] = w
        if cc.psi_inverse(face) != w:
            round_trip.append(w)
        k = nc.krew[nc.id(w)]
        first = w.right_inversions() & nc.closure(w).reflections
        second = face - first
        if (
            _product(system, cc.order_face(first)) != w
            or _product(system, cc.order_face(second)) != els[k]
            or _product(system, cc.order_face(face)) != nc.c
        ):
            products.append(w)
        if any(system.scalar_sign(p, q) < 0 for p in face for q in face):
            scalar.append(w)
        for t in (system.reflections[p] for p in first):
            if nc.kind.get((nc.id(w * t), nc.id(w))) != SQ:
                scalar.append((w, t))
    clusters = set(cc.positive_clusters())
    out.append(CheckResult("Psi is a bijection from full-support elements onto positive clusters", set(images) == clusters and len(images) == len(ncf)))
    out.append(_ok("Psi inverse undoes Psi", round_trip))
    out.append(_ok("Psi(w) multiplies to w, K(w) and c in blocks", products))
    out.append(_ok("Psi(w) has nonnegative scalar products and w t is square-covered by w", scalar))

    ext = {cc.extended_psi(w) for w in els}
    full_clusters = set(cc.clusters())
    bottom = cc.extended_psi(system.identity) == frozenset(negative(i) for i in range(n))
    out.append(CheckResult("extended Psi is a bijection from NC onto clusters", ext == full_clusters and len(ext) == len(els) and bottom))
    ext_bad = []
    parabolics: dict[tuple[int, ...], ClusterContext] = {}
    for w in els:
        support = sorted(w.support())
        if not support:
            continue
        key = tuple(support)
        if key not in parabolics:
            sub = standard_subsystem(system, support)
            sub_word = [support.index(i) for i in nc.word if i in support]
            parabolics[key] = ClusterContext(NCContext(sub, sub.coxeter_element(sub_word)))
        sub_cc = parabolics[key]
        sub = sub_cc.system
        sub_face = sub_cc.psi(sub.element([support.index(i) for i in w.reduced_word()]))
        # carry each reflection back through a word in the generators
        lifted = {
            system.root_of(system.element([support[i] for i in sub.reflections[p].reduced_word()]))
            for p in sub_face
        }
        if {a.index for a in cc.extended_psi(w) if a.positive} != lifted:
            ext_bad.append(w)
    out.append(_ok("extended Psi agrees with Psi computed in the standard parabolic", ext_bad))

    pf = cc.positive_faces
    intervals = set(nc.ll_intervals())
    to_interval = {}
    stats_bad, explicit_bad, inverse_bad = [], [], []
    for f in pf:
        v, w = cc.face_to_interval(f)
        to_interval[f] = (nc.id(v), nc.id(w))
        if (cc.sqr(f), len(f)) != (v.absolute_length, w.absolute_length):
            stats_bad.append(f)
        if cc.interval_to_face(v, w) != f:
            inverse_bad.append(f)
        if cc.interval_to_face_explicit(v, w) != f:
            explicit_bad.append(f)
    out.append(CheckResult("positive faces correspond to long-order intervals", set(to_interval.values()) == intervals and len(to_interval) == len(pf)))
    out.append(_ok("face to interval and interval to face are mutually inverse", inverse_bad))
    out.append(_ok("interval to face through simple generators agrees", explicit_bad))
    out.append(_ok("(sqr, size) of a face = (rk v, rk w) of its interval", stats_bad))

    swap_bad = []
    for f in pf:
        values = set()
        for order in itertools.permutations(sorted(f)):
            prefix, ok = system.identity, True
            for k, p in enumerate(order):
                prefix = prefix * system.reflections[p]
                i = nc.index.get(prefix.perm)
                if i is None or nc.ranks[i] != k + 1:
                    ok = False
                    break
            if ok:
                values.add(cc.prefix_kinds(order).count(SQ))
        if len(values) != 1:
            swap_bad.append(f)
    out.append(_ok("sqr does not depend on the valid ordering", swap_bad))

    if nc.is_bipartite():
        underline_e = {
            (a, b)
            for a, b in nc.sq_intervals()
            if nc.underline(els[a]) == system.identity
        }
        image = {tuple(nc.id(x) for x in cc.bipartite_psi(els[a], els[b])) for a, b in intervals}
        out.append(CheckResult("bipartite psi is a bijection onto square intervals with trivial underline", image == underline_e and len(image) == len(intervals)))
        faces = {}
        height_bad = []
        for a, b in nc.sq_intervals():
            face = cc.sq_interval_to_face(els[a], els[b])
            faces[face] = (a, b)
            if len(face) != n - (nc.ranks[b] - nc.ranks[a]):
                height_bad.append((els[a], els[b]))
        out.append(CheckResult("square intervals correspond to faces of the cluster complex", set(faces) == set(cc.faces) and len(faces) == len(nc.sq_intervals())))
        out.append(_ok("square intervals of height k go to faces of size n-k", height_bad))
    return out


def _root_poset(system: CoxeterSystem) -> RootPoset | None:
    try:
        return RootPoset(system)
    except NotCrystallographic:
        return None


def case_checks(label: str, word: tuple[int, ...]) -> list[CheckResult]:
    """Every check for one ``(type, c)``."""
    system = build_system(label)
    nc = NCContext(system, system.coxeter_element(word))
    cc = ClusterContext(nc)
    rp = _root_poset(system)
    return (
        census_checks(nc, cc)
        + kreweras_checks(nc)
        + order_checks(nc)
        + compatibility_checks(nc, cc)
        + bijection_checks(nc, cc)
        + identity_suite(cc, rp)
    )


# -- per type checks ---------------------------------------------------------


def nonnesting_checks(system: CoxeterSystem, rp: RootPoset, nc: NCContext) -> list[CheckResult]:
    n = system.rank
    antichains = rp.antichains()
    out = [CheckResult("#antichains = Cat(W)", len(antichains) == catalan(system), f"{len(antichains)}")]
    minimal = sorted(rp.minimal())
    out.append(CheckResult("minimal roots are the simple roots", minimal == sorted(system.simple_roots)))
    if len(system.components) == 1:
        out.append(CheckResult("irreducible root poset has one maximal root", len(rp.maximal()) == 1))
    bad = []
    for s in range(n):
        avoid = sum(1 for A in antichains if s not in rp.support(A))
        rest = [i for i in range(n) if i != s]
        expected = len(RootPoset(standard_subsystem(system, rest)).antichains()) if rest else 1
        if avoid != expected:
            bad.append((s + 1, avoid, expected))
    out.append(_ok("antichains avoiding s = antichains of the parabolic without s", bad))
    full = frozenset(range(n))
    sizes = [0] * (n + 1)
    for A in antichains:
        if rp.support(A) == full:
            sizes[len(A)] += 1
    out.append(CheckResult("full-support antichains by size = Nar+", sizes == nc.positive_rank_counts(), f"{sizes}"))
    return out


def type_checks(label: str, words: list[tuple[int, ...]]) -> list[CheckResult]:
    """Checks comparing the Coxeter elements of one type."""
    system = build_system(label)
    ncs = [NCContext(system, system.coxeter_element(w)) for w in words]
    out = []
    rp = _root_poset(system)
    if rp is not None:
        out += nonnesting_checks(system, rp, ncs[0])
    if len(ncs) > 1:
        import networkx as nx

        ccs = [ClusterContext(nc) for nc in ncs]
        out.append(CheckResult("rank counts do not depend on c", len({tuple(nc.rank_counts()) for nc in ncs}) == 1))
        out.append(CheckResult("F, M and I do not depend on c", len({(f_triangle(cc), m_triangle(cc.nc), i_polynomial(cc.nc)) for cc in ccs}) == 1))
        out.append(CheckResult("positive face numbers do not depend on c", len({tuple(cc.f_vector(True)) for cc in ccs}) == 1))
        hashes = {nx.weisfeiler_lehman_graph_hash(nc.poset.to_networkx(), iterations=4) for nc in ncs}
        out.append(CheckResult("absolute orders have equal Weisfeiler-Lehman hashes across c", len(hashes) == 1))
        if rp is not None:
            h = h_triangle(rp)
            out.append(CheckResult("H has nonnegative coefficients and degree n", h.nonnegative() and h.degree() == system.rank))
    return out


# -- orchestration -----------------------------------------------------------


@dataclass(frozen=True)
class Section:
    label: str
    scope: str
    results: tuple[CheckResult, ...]


@dataclass(frozen=True)
class Report:
    sections: tuple[Section, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for s in self.sections for r in s.results)

    @property
    def failures(self) -> list[tuple[str, str, CheckResult]]:
        return [(s.label, s.scope, r) for s in self.sections for r in s.results if not r.passed]

    def to_text(self) -> str:
        lines = []
        for s in self.sections:
            lines.append(f"== {s.label} [{s.scope}]")
            for r in s.results:
                status = "PASS" if r.passed else "FAIL"
                line = f"{status}  {r.name}"
                if r.detail and (not r.passed or r.name.startswith("H(-1,y)")):
                    line += f"  :: {r.detail}"
                lines.append(line)
        total = sum(len(s.results) for s in self.sections)
        failed = len(self.failures)
        lines.append(f"{total - failed}/{total} checks passed")
        lines.append("RESULT: " + ("PASS" if failed == 0 else "FAIL"))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "sections": [
                {
                    "type": s.label,
                    "scope": s.scope,
                    "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in s.results],
                }
                for s in self.sections
            ],
        }


def _run(job):
    kind, label, payload = job
    if kind == "case":
        return case_checks(label, payload)
    return type_checks(label, list(payload))


def verify(labels: Sequence[str], selector: str = "all", jobs: int = 1) -> Report:
    """Run every check for the given types and Coxeter element selector."""
    work: list[tuple[str, str, object]] = []
    scopes: list[tuple[str, str]] = []
    for label in labels:
        system = build_system(label)
        words = [system.coxeter_word(c) for c in select_coxeter_elements(system, selector)]
        work.append(("type", label, tuple(words)))
        scopes.append((label, "type"))
        for w in words:
            work.append(("case", label, w))
            scopes.append((label, "c=" + word_label(w)))
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, work))
    else:
        results = [_run(job) for job in work]
    return Report(tuple(Section(label, scope, tuple(res)) for (label, scope), res in zip(scopes, results)))
