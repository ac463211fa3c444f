from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equipartition.dynamics import SignedWord
from equipartition.errors import InconsistencyError
from equipartition.jacobian import (
    bareiss_determinant,
    block_diagonal_sign,
    build_configuration,
    det_sign,
    eta,
    permutation_sign,
    sign_matrix,
)
from equipartition.obstruction import generating_classes


def fraction_det(m):
    """Independent oracle: Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if a[r][k]), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
    return int(det)


matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


@given(matrices)
def test_bareiss_matches_rational_elimination(m):
    assert bareiss_determinant(m) == fraction_det(m)


@given(st.permutations(list(range(6))))
def test_permutation_sign_matches_inversions(p):
    inversions = sum(1 for i, k in itertools.combinations(range(len(p)), 2) if p[i] > p[k])
    assert permutation_sign(p) == (-1) ** inversions


def test_sign_anchors():
    # (-1)^(7+19) and (-1)^(7+30)
    assert eta("AAABBB") == 1
    assert eta("ABABAB") == -1


def test_row_order_flips_every_sign():
    for gc in generating_classes(5) + generating_classes(7):
        w = gc.canonical
        assert eta(w, "swapped") == -eta(w, "standard")


def test_curve_order_for_aaabbb():
    config = build_configuration("AAABBB")
    assert config.d == 8
    assert " ".join(config.curve_order) == "x2 y1 x3 x4 y2 x5 y3 x6 y4 y5 x7 y6 y7 x8 y8"


def test_matrix_shape_and_sparsity():
    config = build_configuration(SignedWord("AABABB", "++"))
    m = sign_matrix(config)
    assert len(m.rows) == len(m.columns) == 3 * config.j
    assert m.rows[:3] == ("b1^++", "b1^+-", "b1^-+")
    for c in range(len(m.columns)):
        assert 1 <= sum(1 for r in m.entries if r[c]) <= 2


@pytest.mark.parametrize("j", [5, 7, 9])
def test_block_diagonal_agrees(j):
    for gc in generating_classes(j):
        if gc.components == 2:
            config = build_configuration(gc.canonical)
            for order in ("standard", "swapped"):
                assert block_diagonal_sign(config, order) == det_sign(sign_matrix(config, order))


@pytest.mark.parametrize("bad", ["BAABBA", "AAAB", "AABB+-"])
def test_rejects_noncanonical(bad):
    with pytest.raises(ValueError):
        build_configuration(bad)


def test_singular_matrix_raises():
    with pytest.raises(InconsistencyError):
        det_sign([[1, 1], [1, 1]])
    with pytest.raises(InconsistencyError):
        det_sign([[2, 0], [0, 1]])
