from __future__ import annotations

import itertools
from math import comb

import networkx as nx
import pytest

from coxcat.catalan import catalan, chain_polynomial_formula, deligne_count, positive_catalan
from coxcat.errors import (
    NoCommutationNormalForm,
    NotBelowC,
    NotBipartite,
    NotComparableInput,
    NotCoxeterElement,
    NotInNC,
    NotMinimalFactorization,
)
from coxcat.noncrossing import LL, SQ, NCContext, commutation_normal_form, cover_kind, sq_leq_generic, ll_leq_generic
from coxcat.symmetric import str_cycles

from conftest import nc_for, s4, system

RANK_3 = [("A3", w) for w in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (2, 1, 0)]] + [
    ("B3", (0, 1, 2)),
    ("B3", (1, 0, 2)),
    ("H3", (0, 1, 2)),
    ("H3", (0, 2, 1)),
    ("A1xA2", (0, 1, 2)),
]


def names(nc, ids):
    return {str_cycles(nc.elements[i]) for i in ids}


def brute_force_nc(W, c):
    return {w.perm for w in W.elements() if W.absolute_leq(w, c)}


@pytest.mark.parametrize("label, word", RANK_3 + [("A4", (0, 1, 2, 3)), ("D4", (1, 0, 2, 3)), ("I2(7)", (1, 0))])
def test_elements_are_exactly_those_below_c(label, word):
    nc = nc_for(label, word)
    assert {w.perm for w in nc.elements} == brute_force_nc(nc.system, nc.c)
    assert len(nc) == catalan(nc.system)
    assert len(nc.full_support_ids()) == positive_catalan(nc.system)
    assert nc.elements[nc.bottom] == nc.system.identity and nc.elements[nc.top] == nc.c


def test_small_lattices():
    nc = nc_for("A2")
    assert names(nc, range(len(nc))) == {"e", "(12)", "(23)", "(13)", "(123)"}
    assert nc_for("A3").rank_counts() == [1, 6, 6, 1]
    assert len(nc_for("A1")) == 2
    with pytest.raises(NotCoxeterElement):
        NCContext(system("A2"), system("A2").identity)


@pytest.mark.parametrize("label, word", RANK_3)
def test_is_a_lattice(label, word):
    nc = nc_for(label, word)
    P = nc.poset
    for a, b in itertools.combinations(range(len(nc)), 2):
        assert P.join(a, b) is not None and P.meet(a, b) is not None


@pytest.mark.parametrize("label, word", RANK_3)
def test_kreweras(label, word):
    nc = nc_for(label, word)
    W, c = nc.system, nc.c
    els = nc.elements
    K = nc.krew
    assert sorted(K) == list(range(len(nc)))
    for i, w in enumerate(els):
        assert w * els[K[i]] == c
        assert nc.kreweras_inv(nc.kreweras(w)) == w
        assert nc.kreweras(nc.kreweras(w)) == c.inverse() * w * c
    for a, b in itertools.product(range(len(nc)), repeat=2):
        assert nc.poset.leq(a, b) == nc.poset.leq(K[b], K[a])


def test_kreweras_examples():
    nc = nc_for("A2")
    W = nc.system
    K = lambda cyc: str_cycles(nc.kreweras(from_a2(cyc)))
    assert K("(12)") == "(23)" and K("(23)") == "(13)" and K("(13)") == "(12)"
    assert nc.kreweras(W.identity) == nc.c and nc.kreweras(nc.c) == W.identity
    with pytest.raises(NotInNC):
        nc.kreweras(nc.c.inverse())


def from_a2(cycles):
    from coxcat.symmetric import from_cycles

    return from_cycles(system("A2"), cycles)


def test_bipartite_complement():
    nc = nc_for("A3", (0, 2, 1))
    assert str_cycles(nc.c) == "(1243)"
    W = nc.system
    L = nc.bipartite_complement
    for w in nc.elements:
        assert L(L(w)) == w
    for v, w in itertools.product(nc.elements, repeat=2):
        assert W.absolute_leq(v, w) == W.absolute_leq(L(w), L(v))
    # on interval partitions L complements the support
    for g in nc.interval_partitions():
        assert L(g).support() == frozenset(range(3)) - g.support()
    assert L(W.identity) == nc.c and L(nc.c) == W.identity
    a2 = nc_for("A2")
    assert a2.bipartite_complement(a2.system.simple_reflections[0]) == a2.system.simple_reflections[1]
    with pytest.raises(NotBipartite):
        nc_for("A3").bipartite_factors()


@pytest.mark.parametrize("label, word", RANK_3 + [("A4", (0, 1, 2, 3))])
def test_interval_partitions(label, word):
    nc = nc_for(label, word)
    W = nc.system
    INT = nc.interval_partitions()
    assert len(INT) == 2**nc.n
    assert {g.perm for g in INT} == {w.perm for w in nc.elements if W.bruhat_leq(w, nc.c)}
    for g, h in itertools.product(INT, repeat=2):
        assert W.absolute_leq(g, h) == W.bruhat_leq(g, h)
    for w in nc.elements:
        below = [g for g in INT if W.bruhat_leq(g, w)]
        top = nc.overline(w)
        assert top in below and all(W.bruhat_leq(g, top) for g in below)
        under = nc.underline(w)
        assert set(nc.closure(under).simple_roots) == set(nc.closure(w).simple_roots) & set(W.simple_roots)
        for g in INT:
            assert W.absolute_leq(g, w) == nc.sq_leq(g, w)


def test_interval_partition_examples():
    nc = nc_for("A3")
    assert names(nc, nc.interval_partition_ids) == {"e", "(12)", "(23)", "(34)", "(123)", "(234)", "(12)(34)", "(1234)"}
    assert str_cycles(nc.overline(s4("(13)"))) == "(123)"
    assert nc.underline(s4("(13)")) == nc.system.identity


@pytest.mark.parametrize("label, word", RANK_3)
def test_order_characterizations(label, word):
    nc = nc_for(label, word)
    els = nc.elements
    for a, b in itertools.product(range(len(nc)), repeat=2):
        v, w = els[a], els[b]
        assert nc.sq_leq(v, w) == nc.sq_poset.leq(a, b) == sq_leq_generic(v, w)
        assert nc.ll_leq(v, w) == nc.ll_poset.leq(a, b) == ll_leq_generic(v, w)
        if nc.poset.leq(a, b):
            P = nc.closure(w)
            assert nc.sq_leq(v, w) == P.bruhat_leq(v, w)
            assert nc.ll_leq(v, w) == P.bruhat_leq(w, v)


def test_cover_kinds():
    nc = nc_for("A2")
    W = nc.system
    kinds = sorted(k for *_, k in nc.covers)
    assert kinds.count(SQ) == 5 and kinds.count(LL) == 1
    assert nc.cover_kind(from_a2("(13)"), nc.c) == LL
    assert nc.cover_kind(from_a2("(12)"), nc.c) == SQ
    assert all(nc.sq_leq(W.identity, t) for t in W.reflections)
    assert all(nc.ll_leq(t, t) for t in W.reflections)
    with pytest.raises(NotComparableInput):
        nc.cover_kind(W.identity, nc.c)
    with pytest.raises(NotComparableInput):
        cover_kind(W.identity, nc.c)


@pytest.mark.parametrize("label, word", RANK_3 + [("A4", (0, 1, 2, 3)), ("B4", (0, 2, 1, 3))])
def test_ideals_are_boolean(label, word):
    nc = nc_for(label, word)
    for w in nc.elements:
        ids, P = nc.sq_lower_ideal(w)
        assert len(ids) == 2 ** w.absolute_length and P.is_boolean()
        ids, P = nc.ll_upper_ideal(w)
        assert P.is_boolean()
        top = nc.overline(w)
        images = {nc.id(nc.elements[j].inverse() * top) for j in ids}
        assert images == set(nc.sq_lower_ideal(nc.relative_kreweras(w))[0])


def test_ideal_examples():
    nc = nc_for("A3")
    ids, _ = nc.sq_lower_ideal(nc.c)
    assert sorted(ids) == nc.interval_partition_ids
    ids, P = nc.ll_upper_ideal(s4("(14)"))
    # oracle: transitive closure of the classified covers
    expected = {j for j in range(len(nc)) if nc.ll_poset.leq(nc.id(s4("(14)")), j)}
    assert set(ids) == expected and P.is_boolean() and len(ids) == 4
    ids, _ = nc.sq_lower_ideal(nc.system.identity)
    assert ids == [0]


@pytest.mark.parametrize("label, word", RANK_3 + [("A1", (0,)), ("A4", (1, 0, 3, 2))])
def test_long_order_components(label, word):
    nc = nc_for(label, word)
    G = nx.Graph()
    G.add_nodes_from(range(len(nc)))
    G.add_edges_from((a, b) for a, b, k in nc.covers if k == LL)
    comps = sorted(sorted(c) for c in nx.connected_components(G))
    assert comps == sorted(nc.ll_components())
    assert len(comps) == 2**nc.n


def test_component_examples():
    nc = nc_for("A2")
    assert sorted(sorted(names(nc, c)) for c in nc.ll_components()) == sorted(
        [["e"], ["(12)"], ["(23)"], ["(123)", "(13)"]]
    )
    nc = nc_for("A3")
    assert max(len(c) for c in nc.ll_components()) == positive_catalan(nc.system) == 5


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B3", "H3", "A4", "D4", "I2(9)"])
def test_chain_polynomial(label):
    nc = nc_for(label)
    assert nc.chain_polynomial() == chain_polynomial_formula(nc.system)
    assert sum(nc.chain_polynomial()) == deligne_count(nc.system)
    for chain, nir in nc.maximal_chains():
        assert 0 <= nir <= nc.n and len(chain) == nc.n + 1


def test_chain_polynomial_values():
    assert nc_for("A1").chain_polynomial() == [1]
    assert nc_for("A2").chain_polynomial() == [2, 1]
    assert nc_for("A3").chain_polynomial() == [6, 8, 2]
    assert deligne_count(system("A3")) == 16


@pytest.mark.parametrize("label, word", RANK_3 + [("A4", (0, 1, 2, 3)), ("B4", (3, 2, 1, 0))])
def test_square_intervals_by_height(label, word):
    nc = nc_for(label, word)
    heights = [0] * (nc.n + 1)
    for a, b in nc.sq_intervals():
        heights[nc.ranks[b] - nc.ranks[a]] += 1
    nar = nc.rank_counts()
    assert heights == [sum(nar[r] * comb(r, k) for r in range(k, nc.n + 1)) for k in range(nc.n + 1)]


def test_xi_complex():
    nc = nc_for("A2")
    assert [(str_cycles(nc.system.reflections[p]), str_cycles(nc.system.reflections[q])) for p, q in nc.xi_edges()] == [("(12)", "(23)")]
    assert len(nc.xi_faces()) == 5


@pytest.mark.parametrize("label, word", RANK_3 + [("D4", (0, 1, 2, 3))])
def test_xi_faces_are_the_simple_systems(label, word):
    nc = nc_for(label, word)
    faces = nc.xi_faces()
    assert sorted(map(sorted, faces)) == sorted(map(sorted, nc.simple_sets))
    for a, b in itertools.product(range(len(nc)), repeat=2):
        assert nc.sq_leq(nc.elements[a], nc.elements[b]) == (nc.simple_sets[a] <= nc.simple_sets[b])


def test_commutation_normal_form():
    W = system("A2")
    c = nc_for("A2").c
    t23, t13, t12 = from_a2("(23)"), from_a2("(13)"), from_a2("(12)")
    facts, j = commutation_normal_form([t23, t13], c)
    assert facts == [t23, t13] and j == 2
    facts, j = commutation_normal_form([t13, t12], c)
    assert facts == [t13, t12] and j == 1
    facts, j = commutation_normal_form([t12], c)
    assert j == 1
    with pytest.raises(NotMinimalFactorization):
        commutation_normal_form([t12, t12], c)
    with pytest.raises(NotBelowC):
        commutation_normal_form([t23, t12], c)


@pytest.mark.parametrize("label, word", [("A3", (0, 1, 2)), ("A3", (0, 2, 1)), ("B3", (0, 1, 2))])
def test_commutation_normal_form_over_all_factorizations(label, word):
    nc = nc_for(label, word)
    W = nc.system
    for w in nc.elements:
        k = w.absolute_length
        for facts in itertools.product(W.reflections, repeat=k):
            prefix, ok = W.identity, True
            for i, t in enumerate(facts, start=1):
                prefix = prefix * t
                if prefix.absolute_length != i:
                    ok = False
                    break
            if not ok or prefix != w:
                continue
            try:
                out, j = commutation_normal_form(list(facts), nc.c)
            except NoCommutationNormalForm:
                continue
            u = W.identity
            for i, t in enumerate(out):
                x = u * t
                assert (u.length < x.length) == (i < j)
                u = x
            assert u == w
