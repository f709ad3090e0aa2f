from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coxcat.classification import (
    INFINITY,
    classify,
    matrix_for_label,
    normalize_matrix,
    parse_label,
)
from coxcat.errors import InvalidInput, NonFiniteType


def positive_definite(matrix) -> bool:
    n = len(matrix)
    gram = np.array(
        [
            [1.0 if i == j else (-1.0 if matrix[i][j] == INFINITY else -math.cos(math.pi / matrix[i][j])) for j in range(n)]
            for i in range(n)
        ]
    )
    return bool(np.linalg.eigvalsh(gram).min() > 1e-9)


@st.composite
def coxeter_matrices(draw):
    n = draw(st.integers(1, 5))
    mat = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(st.sampled_from([2, 2, 2, 3, 3, 4, 5, 6, 7, INFINITY]))
            mat[i][j] = mat[j][i] = v
    return tuple(tuple(r) for r in mat)


@settings(max_examples=300)
@given(coxeter_matrices())
def test_finite_exactly_when_form_is_positive_definite(matrix):
    try:
        comps = classify(matrix)
    except NonFiniteType:
        assert not positive_definite(matrix)
    else:
        assert positive_definite(matrix)
        assert sorted(v for c in comps for v in c.nodes) == list(range(len(matrix)))


@pytest.mark.parametrize(
    "label, order, h",
    [
        ("A1", 2, 2),
        ("A4", 120, 5),
        ("B3", 48, 6),
        ("C3", 48, 6),
        ("D4", 192, 6),
        ("E6", 51840, 12),
        ("E8", 696729600, 30),
        ("F4", 1152, 12),
        ("G2", 12, 6),
        ("H3", 120, 10),
        ("H4", 14400, 30),
        ("I2(7)", 14, 7),
    ],
)
def test_orders_and_coxeter_numbers(label, order, h):
    (comp,) = classify(matrix_for_label(label))
    assert comp.order == order
    assert comp.coxeter_number == h
    # number of reflections = n h / 2 = sum of exponents
    assert sum(comp.exponents) == comp.rank * h // 2


def test_classification_ignores_node_order():
    # D4 with the branch node last, E6 relabelled
    d4 = normalize_matrix([[1, 2, 2, 3], [2, 1, 2, 3], [2, 2, 1, 3], [3, 3, 3, 1]])
    assert [c.label for c in classify(d4)] == ["D4"]
    f4 = normalize_matrix([[1, 4, 3, 2], [4, 1, 2, 3], [3, 2, 1, 2], [2, 3, 2, 1]])
    assert [c.label for c in classify(f4)] == ["F4"]


def test_products_and_aliases():
    assert parse_label("A1xI2(5)") == [("A", 1, 0), ("I", 2, 5)]
    assert parse_label("I2(2)") == [("A", 1, 0), ("A", 1, 0)]
    assert [c.label for c in classify(matrix_for_label("I2(3)"))] == ["A2"]
    assert [c.label for c in classify(matrix_for_label("I2(6)"))] == ["G2"]
    assert [c.label for c in classify(matrix_for_label("B2xA1"))] == ["B2", "A1"]


@pytest.mark.parametrize("bad", ["", "A0", "D3", "G3", "I2(1)", "Q3", "A~2"])
def test_bad_labels(bad):
    with pytest.raises(InvalidInput):
        parse_label(bad)


@pytest.mark.parametrize("label", ["E9", "E10", "F5", "H5", "I2(inf)", "A2xE9"])
def test_labels_of_infinite_groups(label):
    with pytest.raises(NonFiniteType):
        parse_label(label)


@pytest.mark.parametrize(
    "raw",
    [
        [[1, 3, 3], [3, 1, 3], [3, 3, 1]],  # affine A2
        [[1, "inf"], ["inf", 1]],
        [[1, 4, 2], [4, 1, 4], [2, 4, 1]],  # affine C2
        [[1, 6, 2], [6, 1, 3], [2, 3, 1]],  # affine G2
    ],
)
def test_infinite_types(raw):
    with pytest.raises(NonFiniteType):
        classify(normalize_matrix(raw))


@pytest.mark.parametrize("raw", [[], [[1, 3], [2, 1]], [[2, 3], [3, 1]], [[1, 1], [1, 1]], [[1, "x"], ["x", 1]]])
def test_invalid_matrices(raw):
    with pytest.raises(InvalidInput):
        normalize_matrix(raw)
