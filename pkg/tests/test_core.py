from __future__ import annotations

import itertools
import math

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation

from coxcat.core import build_system
from coxcat.errors import (
    BoundExceeded,
    InvalidInput,
    NonFiniteType,
    NotCoxeterElement,
    SystemMismatch,
    UnsupportedType,
)
from coxcat.symmetric import from_permutation, to_permutation

from conftest import system

TYPES = ["A1", "A3", "B3", "D4", "G2", "H3", "I2(5)", "I2(8)", "A1xA2", "A1xB2", "F4"]


def poincare(degrees):
    q = sympy.Symbol("q")
    return sympy.Poly(sympy.prod([sum(q**k for k in range(d)) for d in degrees]), q)


@pytest.mark.parametrize("label", TYPES)
def test_length_generating_function_is_product_of_q_integers(label):
    W = system(label)
    q = sympy.Symbol("q")
    elements = W.elements()
    assert len(elements) == W.order == len({w.perm for w in elements})
    counts = sympy.Poly(sum(q**w.length for w in elements), q)
    assert counts == poincare(W.degrees)


@pytest.mark.parametrize("label", TYPES)
def test_roots_and_longest_element(label):
    W = system(label)
    assert W.num_roots == sum(W.exponents)
    w0 = W.longest_element()
    assert w0.length == W.num_roots
    assert w0 * w0 == W.identity


@pytest.mark.parametrize("label", TYPES)
def test_braid_relations(label):
    W = system(label)
    s = W.simple_reflections
    for i, j in itertools.product(range(W.rank), repeat=2):
        m = W.matrix[i][j]
        prod = W.identity
        for k in range(1, m + 1):
            prod = prod * s[i] * s[j]
            assert (prod == W.identity) == (k == m)


@pytest.mark.parametrize("label", TYPES)
def test_reflection_lengths_are_odd_and_absolute_length_one(label):
    W = system(label)
    for p, t in enumerate(W.reflections):
        assert t.length % 2 == 1
        assert t.absolute_length == 1
        assert W.root_of(t) == p
        assert t.right_inversions() == t.left_inversions()


@pytest.mark.parametrize("label", ["A3", "B3", "H3", "I2(7)", "A1xA2"])
def test_absolute_length_counts_reflection_factorizations(label):
    # breadth-first search over the reflection Cayley graph
    W = system(label)
    dist = {W.identity.perm: 0}
    layer = [W.identity]
    while layer:
        nxt = []
        for w in layer:
            for t in W.reflections:
                u = w * t
                if u.perm not in dist:
                    dist[u.perm] = dist[w.perm] + 1
                    nxt.append(u)
        layer = nxt
    assert all(w.absolute_length == dist[w.perm] for w in W.elements())


def _cycles_count(perm):
    return len(Permutation(list(perm)).full_cyclic_form)


perms5 = st.permutations(range(5))


@settings(max_examples=200)
@given(perms5, perms5)
def test_type_a_matches_permutations(p, q):
    W = system("A4")
    u, v = from_permutation(W, p), from_permutation(W, q)
    assert to_permutation(u) == tuple(p)
    # right-to-left composition
    assert to_permutation(u * v) == tuple(p[q[i]] for i in range(5))
    assert u.length == Permutation(list(p)).inversions()
    assert u.absolute_length == 5 - _cycles_count(p)


def _tableau_criterion(p, q):
    n = len(p)
    for k in range(1, n):
        a, b = sorted(p[:k]), sorted(q[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


@settings(max_examples=200)
@given(perms5, perms5)
def test_bruhat_order_type_a_tableau_criterion(p, q):
    W = system("A4")
    u, v = from_permutation(W, p), from_permutation(W, q)
    assert W.bruhat_leq(u, v) == _tableau_criterion(p, q)


@settings(max_examples=200)
@given(perms5, perms5)
def test_absolute_order_type_a(p, q):
    W = system("A4")
    u, v = from_permutation(W, p), from_permutation(W, q)
    pu, pv = Permutation(list(p)), Permutation(list(q))
    lt = lambda x: 5 - len(x.full_cyclic_form)
    # sympy multiplies left-to-right: (pu^-1 * pv) here means "apply pv then pu^-1"
    quotient = Permutation([pu.array_form.index(pv.array_form[i]) for i in range(5)])
    assert W.absolute_leq(u, v) == (lt(pu) + lt(quotient) == lt(pv))


def _subword_products(W, word):
    out = set()
    for mask in range(2 ** len(word)):
        w = W.identity
        for k, i in enumerate(word):
            if mask >> k & 1:
                w = w * W.simple_reflections[i]
        out.add(w.perm)
    return out


@pytest.mark.parametrize("label", ["B3", "H3", "G2", "A1xA2"])
def test_bruhat_order_subword_property(label):
    W = system(label)
    elements = W.elements()
    for w in elements[:: max(1, len(elements) // 25)]:
        below = _subword_products(W, w.reduced_word())
        for v in elements:
            assert W.bruhat_leq(v, w) == (v.perm in below)


def test_angle_and_vector_realizations_agree_for_i2_5():
    angle = build_system("I2(5)")
    vector = build_system("I2(5)", realization="vector")
    assert angle.realization == "angle" and vector.realization == "vector"
    for word in itertools.chain.from_iterable(itertools.product(range(2), repeat=k) for k in range(6)):
        a, b = angle.element(word), vector.element(word)
        assert a.length == b.length
        assert a.absolute_length == b.absolute_length
        assert a.reduced_word() == b.reduced_word()


def test_reduced_word_is_lex_least():
    W = system("A3")
    for w in W.elements():
        words = [wd for wd in itertools.product(range(3), repeat=w.length) if W.element(wd) == w]
        assert w.reduced_word() == min(words)


def test_standard_coxeter_elements():
    for label, count in [("A3", 4), ("A4", 8), ("D4", 8), ("A1xA2", 2), ("A1xA1", 1)]:
        W = system(label)
        cs = W.standard_coxeter_elements()
        assert len(cs) == count
        for c in cs:
            power, k = c, 1
            while power != W.identity:
                power, k = power * c, k + 1
            assert k == math.lcm(*(comp.coxeter_number for comp in W.components))
            assert c.absolute_length == W.rank


def test_bipartite_coxeter_element():
    W = system("A3")
    c, plus, minus = W.bipartite_coxeter_element()
    assert plus == frozenset({0, 2}) and minus == frozenset({1})
    assert W.coxeter_word(c) == (0, 2, 1)


def test_errors():
    W, V = system("A2"), system("B2")
    with pytest.raises(SystemMismatch):
        W.simple_reflections[0] * V.simple_reflections[0]
    with pytest.raises(NotCoxeterElement):
        W.coxeter_element([0, 0])
    with pytest.raises(NotCoxeterElement):
        W.coxeter_word(W.identity)
    with pytest.raises(InvalidInput):
        W.element([5])
    with pytest.raises(UnsupportedType):
        build_system("E8")
    with pytest.raises(UnsupportedType):
        build_system("A5", bound=100)
    with pytest.raises(BoundExceeded):
        build_system("A5").elements(bound=100)
    with pytest.raises(NonFiniteType):
        build_system([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    with pytest.raises(InvalidInput):
        build_system("A2", bound=10**12)


def test_matrix_input_matches_label():
    W = build_system([[1, 3, 2], [3, 1, 4], [2, 4, 1]])
    assert W.label == "B3"
    assert W.order == 48


@pytest.mark.parametrize("label", TYPES)
def test_reflection_length_generating_function(label):
    W = system(label)
    t = sympy.Symbol("t")
    counts = sympy.Poly(sum(t**w.absolute_length for w in W.elements()), t)
    assert counts == sympy.Poly(sympy.prod([1 + e * t for e in W.exponents]), t)


@pytest.mark.parametrize("label", ["A3", "B3", "H3", "A1xA2"])
def test_commuting_reflections_preserve_inversions(label):
    W = system(label)
    refl = W.reflections
    pairs = [(p, q) for p in W.roots for q in W.roots if p != q and refl[p].commutes(refl[q])]
    for w in W.elements():
        inv = w.right_inversions()
        for p, q in pairs:
            assert (p in inv) == (p in (w * refl[q]).right_inversions())


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_absolute_order_invariant_under_conjugation_and_inversion(data):
    W = system(data.draw(st.sampled_from(["A3", "B3", "H3"])))
    els = W.elements()
    u, v, x = (els[data.draw(st.integers(0, len(els) - 1))] for _ in range(3))
    xi = x.inverse()
    assert W.absolute_leq(u, v) == W.absolute_leq(x * u * xi, x * v * xi)
    assert W.absolute_leq(u, v) == W.absolute_leq(u.inverse(), v.inverse())


def test_inversions_and_descents_examples():
    W = system("A2")
    c = W.element([0, 1])
    s1, s2 = W.simple_reflections
    assert c.length == 2
    assert c.left_inversions() == frozenset({W.root_of(s1), W.root_of(s1 * s2 * s1)})
    w0 = W.longest_element()
    assert w0.right_inversions() == frozenset(W.roots)
    assert not W.bruhat_leq(s1, s2) and not W.bruhat_leq(s2, s1)
    A3 = system("A3")
    lin = A3.linear_coxeter_element()
    assert lin.support() == frozenset({0, 1, 2}) and lin.left_descents() == frozenset({0})
    assert lin.absolute_length == 3
    e = A3.identity
    assert e.reduced_word() == () and e.support() == frozenset() and not e.left_descents()


@pytest.mark.parametrize("label", ["A3", "B3", "H3", "G2", "I2(7)"])
def test_supports_of_inversions(label):
    W = system(label)
    for w in W.elements():
        for p in w.right_inversions():
            assert W.reflections[p].support() <= w.support()
        # conjugation maps left inversions onto right inversions
        left = {W.root_of(W.reflections[p]) for p in w.left_inversions()}
        right = {W.root_of(w.inverse() * W.reflections[p] * w) for p in left}
        assert right == set(w.right_inversions())
