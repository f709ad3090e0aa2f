from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation

from coxcat.core import build_system
from coxcat.errors import InvalidInput
from coxcat.symmetric import (
    from_cycles,
    from_permutation,
    parse_cycles,
    permutation_of,
    str_cycles,
    to_permutation,
)

from conftest import system


def test_parse_both_notations():
    assert parse_cycles("(1,5)(2,3,4)") == [(1, 5), (2, 3, 4)]
    assert parse_cycles("(15)(234)") == [(1, 5), (2, 3, 4)]
    assert parse_cycles("e") == []
    with pytest.raises(InvalidInput):
        parse_cycles("1 2 3")


def test_round_trip_over_s4():
    W = system("A3")
    seen = set()
    for perm in itertools.permutations(range(4)):
        w = from_permutation(W, perm)
        assert to_permutation(w) == perm
        assert from_cycles(W, str_cycles(w)) == w
        seen.add(w)
    assert len(seen) == 24


def test_identity_prints_as_e():
    W = system("A2")
    assert str_cycles(W.identity) == "e"
    assert from_cycles(W, "e") == W.identity


def test_simple_reflections_are_adjacent_transpositions():
    W = system("A3")
    for i in range(3):
        assert str_cycles(W.element([i])) == f"({i + 1}{i + 2})"


def test_product_example():
    W = system("A2")
    assert str_cycles(from_cycles(W, "(12)") * from_cycles(W, "(123)")) == "(23)"


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(5)), st.permutations(range(5)))
def test_composition_matches_sympy(p, q):
    W = system("A4")
    u, v = from_permutation(W, p), from_permutation(W, q)
    # right-to-left: (u v)(i) = u(v(i)); sympy's p*q applies p first
    expected = Permutation(list(q)) * Permutation(list(p))
    assert to_permutation(u * v) == tuple(expected.array_form)
    assert (u * v).length == Permutation(list(expected.array_form)).inversions()


def test_wide_degree_uses_commas():
    W = build_system("A9", bound=10**7)
    w = from_cycles(W, "(1,10)")
    assert str_cycles(w) == "(1,10)"
    assert permutation_of([(1, 10)], 10)[0] == 9


def test_rejects_other_types():
    with pytest.raises(InvalidInput):
        str_cycles(system("B3").element([0]))
    with pytest.raises(InvalidInput):
        from_cycles(system("A1xA1"), "(12)")
    with pytest.raises(InvalidInput):
        from_permutation(system("A2"), (0, 0, 1))
