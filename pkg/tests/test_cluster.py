from __future__ import annotations

import itertools

import pytest

from coxcat.catalan import catalan, positive_catalan
from coxcat.cluster import (
    almost_positive_roots,
    compatible,
    compatible_by_orders,
    compatible_recursive,
    h_vector,
    negative,
    positive,
    sigma,
)
from coxcat.errors import NotACluster, NotBipartite, NotFullSupport, NotLLRelated, NotPositiveFace
from coxcat.symmetric import str_cycles
from coxcat.noncrossing import LL, SQ

from conftest import cc_for, nc_for, system

CASES = [("A3", w) for w in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (2, 1, 0)]] + [
    ("B3", (0, 1, 2)),
    ("B3", (0, 2, 1)),
    ("H3", (2, 1, 0)),
    ("A1xA2", (1, 0, 2)),
    ("G2", (1, 0)),
    ("I2(7)", (0, 1)),
]


def root(W, cycles):
    from coxcat.symmetric import from_cycles

    return W.root_of(from_cycles(W, cycles))


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def faces_from_narayana(nar, n):
    # coefficient list of sum_k nar_k x^(n-k) (1+x)^k
    total = [0] * (n + 1)
    for k, v in enumerate(nar):
        term = [0] * (n - k) + [1]
        for _ in range(k):
            term = poly_mul(term, [1, 1])
        for i, x in enumerate(term):
            total[i] += v * x
    return total


@pytest.mark.parametrize("label, word", CASES)
def test_direct_and_recursive_compatibility_agree(label, word):
    cc = cc_for(label, word)
    verts = cc.vertices
    assert len(verts) == cc.system.num_roots + cc.n
    for a, b in itertools.product(verts, repeat=2):
        direct = cc.compatible(a, b)
        assert direct == compatible(a, b, cc.c) == cc.compatible_recursive(a, b) == cc.compatible(b, a)


@pytest.mark.parametrize("label, word", CASES)
def test_sigma_transport(label, word):
    W = system(label)
    cc = cc_for(label, word)
    s = word[0]
    rotated = word[1:] + (s,)
    other = cc_for(label, rotated)
    assert other.c == W.simple_reflections[s] * cc.c * W.simple_reflections[s]
    for a in cc.vertices:
        assert sigma(W, s, sigma(W, s, a)) == a
    images = {sigma(W, s, a) for a in cc.vertices}
    assert images == set(cc.vertices)
    for a, b in itertools.product(cc.vertices, repeat=2):
        assert cc.compatible(a, b) == other.compatible(sigma(W, s, a), sigma(W, s, b))


def test_sigma_examples():
    W = system("A2")
    a1, a2 = W.simple_roots
    assert sigma(W, 0, negative(1)) == negative(1)
    assert sigma(W, 0, negative(0)) == positive(a1)
    assert W.root_label(sigma(W, 0, positive(a2)).index) == W.root_label(root(W, "(13)"))


def test_compatibility_examples_a2():
    cc = cc_for("A2")
    W = cc.system
    a1, a2, a12 = root(W, "(12)"), root(W, "(23)"), root(W, "(13)")
    assert cc.compatible(negative(0), negative(1))
    assert cc.compatible(negative(0), positive(a2))
    assert not cc.compatible(negative(0), positive(a12))
    assert cc.compatible(positive(a1), positive(a12))
    assert not cc.compatible(positive(a1), positive(a2))
    assert sorted(map(sorted, cc.positive_clusters())) == sorted([sorted([a1, a12]), sorted([a12, a2])])


@pytest.mark.parametrize("label, word", CASES + [("A4", (0, 1, 2, 3)), ("D4", (0, 1, 2, 3)), ("F4", (0, 1, 2, 3))])
def test_face_numbers(label, word):
    cc = cc_for(label, word)
    nc = cc.nc
    assert len(cc.clusters()) == catalan(cc.system)
    assert len(cc.positive_clusters()) == positive_catalan(cc.system)
    assert all(len(f) <= cc.n for f in cc.faces)
    # every face lies in a cluster
    clusters = cc.clusters()
    assert all(any(f <= C for C in clusters) for f in cc.faces)
    assert cc.f_vector() == faces_from_narayana(nc.rank_counts(), cc.n)
    assert cc.f_vector(True) == faces_from_narayana(nc.positive_rank_counts(), cc.n)
    assert cc.h_vector() == nc.rank_counts()
    assert cc.h_vector(True) == nc.positive_rank_counts()


def test_a1_and_a3_complexes():
    cc = cc_for("A1")
    assert sorted(map(sorted, cc.clusters())) == [[negative(0)], [positive(0)]]
    lin, bip = cc_for("A3"), cc_for("A3", (0, 2, 1))
    assert len(lin.clusters()) == len(bip.clusters()) == 14
    assert len(lin.positive_clusters()) == len(bip.positive_clusters()) == 5
    assert lin.f_vector() == bip.f_vector()


def test_h_vector_of_simplex_boundary():
    assert h_vector([1, 3, 3]) == [1, 1, 1]
    assert h_vector([1, 5, 5]) == [1, 3, 1]


@pytest.mark.parametrize("label, word", [("A2", (0, 1)), ("A3", (0, 1, 2)), ("A3", (1, 0, 2)), ("D4", (0, 1, 2, 3)), ("A4", (0, 1, 2, 3))])
def test_simply_laced_compatibility_by_orders(label, word):
    cc = cc_for(label, word)
    W = cc.system
    for p, q in itertools.combinations(W.roots, 2):
        assert compatible_by_orders(cc.nc, p, q) == cc.compatible(positive(p), positive(q))


def test_order_face_and_sqr_examples():
    cc = cc_for("A2")
    W = cc.system
    a1, a2, a12 = root(W, "(12)"), root(W, "(23)"), root(W, "(13)")
    refl = lambda ps: [str_cycles(W.reflections[p]) for p in ps]
    assert refl(cc.order_face({a12, a2})) == ["(23)", "(13)"]
    assert refl(cc.order_face({a12, a1})) == ["(13)", "(12)"]
    assert cc.sqr({a12, a2}) == 2 and cc.sqr({a12, a1}) == 1 and cc.sqr(set()) == 0
    assert cc.order_face({a1}) == [a1]
    with pytest.raises(NotPositiveFace):
        cc.order_face({a1, a2})


@pytest.mark.parametrize("label, word", CASES)
def test_sqr_does_not_depend_on_ordering(label, word):
    cc = cc_for(label, word)
    W = cc.system
    for face in cc.positive_faces:
        values = set()
        for perm in itertools.permutations(face):
            u, ok = W.identity, True
            for k, p in enumerate(perm, start=1):
                u = u * W.reflections[p]
                ok = ok and u.absolute_length == k
            if ok and W.absolute_leq(u, cc.c):
                values.add(cc.prefix_kinds(perm).count(SQ))
        assert values == {cc.sqr(face)}
        assert 0 <= cc.sqr(face) <= len(face)


def psi_by_inversions(nc, w):
    """Right inversions of w inside its closure, plus left inversions of K(w)
    inside the closure of K(w)."""
    kw = nc.kreweras(w)
    first = w.right_inversions() & nc.closure(w).reflections
    second = kw.left_inversions() & nc.closure(kw).reflections
    return frozenset(first | second)


def product(W, roots):
    u = W.identity
    for p in roots:
        u = u * W.reflections[p]
    return u


@pytest.mark.parametrize("label, word", CASES + [("D4", (3, 1, 0, 2)), ("B4", (0, 1, 2, 3))])
def test_psi(label, word):
    cc = cc_for(label, word)
    nc, W = cc.nc, cc.system
    images = set()
    for i in nc.full_support_ids():
        w = nc.elements[i]
        face = cc.psi(w)
        assert face == psi_by_inversions(nc, w)
        assert face in set(cc.positive_clusters())
        assert cc.psi_inverse(face) == w
        k = w.absolute_length
        assert any(
            product(W, perm[:k]) == w and product(W, perm[k:]) == nc.kreweras(w)
            for perm in itertools.permutations(face)
        )
        assert product(W, cc.order_face(face)) == cc.c
        assert all(W.scalar_sign(p, q) >= 0 for p in face for q in face)
        for t in w.right_inversions() & nc.closure(w).reflections:
            assert nc.cover_kind(w * W.reflections[t], w) == SQ
        images.add(face)
    assert len(images) == positive_catalan(W)


def test_psi_examples():
    cc = cc_for("A2")
    W = cc.system
    a1, a2, a12 = root(W, "(12)"), root(W, "(23)"), root(W, "(13)")
    assert cc.psi(cc.c) == {a12, a2}
    assert cc.psi(W.reflections[a12]) == {a12, a1}
    with pytest.raises(NotFullSupport):
        cc.psi(W.reflections[a1])
    with pytest.raises(NotACluster):
        cc.psi_inverse({a1})


@pytest.mark.parametrize("label, word", CASES + [("D4", (0, 1, 2, 3))])
def test_extended_psi(label, word):
    cc = cc_for(label, word)
    nc, W = cc.nc, cc.system
    images = [cc.extended_psi(w) for w in nc.elements]
    assert len(set(images)) == len(nc) == len(cc.clusters())
    assert set(images) == set(cc.clusters())
    for i in nc.full_support_ids():
        assert images[i] == frozenset(positive(p) for p in cc.psi(nc.elements[i]))
    assert images[0] == frozenset(negative(i) for i in range(cc.n))


def test_extended_psi_example():
    cc = cc_for("A2")
    W = cc.system
    assert cc.extended_psi(W.simple_reflections[0]) == {positive(W.simple_roots[0]), negative(1)}
    a3 = cc_for("A3")
    assert len({a3.extended_psi(w) for w in a3.nc.elements}) == 14


@pytest.mark.parametrize("label, word", CASES + [("A4", (0, 1, 2, 3)), ("D4", (0, 1, 2, 3))])
def test_faces_and_long_intervals(label, word):
    cc = cc_for(label, word)
    nc = cc.nc
    intervals = set()
    for face in cc.positive_faces:
        v, w = cc.face_to_interval(face)
        assert nc.ll_leq(v, w)
        assert cc.interval_to_face(v, w) == face
        assert cc.interval_to_face_explicit(v, w) == face
        assert (cc.sqr(face), len(face)) == (v.absolute_length, w.absolute_length)
        intervals.add((nc.id(v), nc.id(w)))
    assert intervals == set(nc.ll_intervals())


def test_face_to_interval_examples():
    cc = cc_for("A2")
    W = cc.system
    a1, a2, a12 = root(W, "(12)"), root(W, "(23)"), root(W, "(13)")
    assert cc.face_to_interval(set()) == (W.identity, W.identity)
    assert cc.face_to_interval({a12, a1}) == (W.reflections[a12], cc.c)
    assert cc.face_to_interval({a12, a2}) == (cc.c, cc.c)
    assert len(cc.nc.ll_intervals()) == len(cc.positive_faces) == 6
    with pytest.raises(NotLLRelated):
        cc.interval_to_face(W.reflections[a1], cc.c)


@pytest.mark.parametrize("label", ["A2", "A3", "B3", "H3", "A1xA2", "D4", "B4"])
def test_bipartite_bijections(label):
    W = system(label)
    c, plus, minus = W.bipartite_coxeter_element()
    nc = nc_for(label, W.coxeter_word(c))
    cc = cc_for(label, W.coxeter_word(c))
    els = nc.elements
    targets = {
        (a, b)
        for a, b in nc.sq_intervals()
        if nc.underline(els[a]) == W.identity
    }
    images = set()
    for a, b in nc.ll_intervals():
        x, y = cc.bipartite_psi(els[a], els[b])
        assert nc.sq_leq(x, y) and nc.underline(x) == W.identity
        assert cc.bipartite_psi_inverse(x, y) == (els[a], els[b])
        images.add((nc.id(x), nc.id(y)))
    assert images == targets
    by_size = [0] * (nc.n + 1)
    faces = set()
    for a, b in nc.sq_intervals():
        face = cc.sq_interval_to_face(els[a], els[b])
        assert len(face) == nc.n - (nc.ranks[b] - nc.ranks[a])
        faces.add(face)
    assert faces == set(cc.faces)


def test_bipartite_maps_need_bipartite_c():
    cc = cc_for("A3")
    W = cc.system
    with pytest.raises(NotBipartite):
        cc.bipartite_psi(W.identity, W.identity)
