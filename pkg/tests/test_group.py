from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equipartition.group import (
    ALPHA,
    BETA,
    E,
    ELEMENTS,
    GAMMA,
    NAMES,
    X,
    X_AB,
    X_CA,
    Y,
    Z,
    Coefficients,
    HomologyClass,
    abelianized_class,
    compose,
    element_from_name,
    inverse,
    subgroup_generated,
)

elements = st.sampled_from(ELEMENTS)


def matrix(g):
    """Independent model: signed 2x2 permutation matrices."""
    a = ((-1, 0), (0, 1))
    b = ((1, 0), (0, -1))
    s = ((0, 1), (1, 0))
    m = ((1, 0), (0, 1))
    for flag, factor in ((g.swap, s), (g.flip1, a), (g.flip2, b)):
        if flag:
            m = matmul(m, factor)
    return m


def matmul(p, q):
    return tuple(tuple(sum(p[i][k] * q[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def test_eight_distinct_elements():
    assert len(set(ELEMENTS)) == 8
    assert [g.name for g in ELEMENTS] == list(NAMES)
    assert len({matrix(g) for g in ELEMENTS}) == 8


@given(elements, elements)
def test_compose_matches_matrix_model(g, h):
    assert matrix(compose(g, h)) == matmul(matrix(g), matrix(h))


@given(elements, elements, elements)
def test_associative(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(elements)
def test_inverse(g):
    assert compose(g, inverse(g)) == E == compose(inverse(g), g)


@given(elements, st.sampled_from([(1, 1), (1, -1), (-1, 1), (-1, -1)]))
def test_action_on_signs_is_matrix_action(g, signs):
    m = matrix(g)
    expected = tuple(m[i][0] * signs[0] + m[i][1] * signs[1] for i in range(2))
    assert g.act_on_signs(signs) == expected


def test_swap_conjugates_reversals():
    assert compose(ALPHA, GAMMA) == compose(GAMMA, BETA)
    assert compose(BETA, GAMMA) == compose(GAMMA, ALPHA)


def test_gamma_alpha_generates_cyclic_four():
    ga = compose(GAMMA, ALPHA)
    sub = subgroup_generated([ga])
    assert sub.names() == ["e", "ab", "ga", "gb"]
    powers = [E]
    for _ in range(4):
        powers.append(compose(ga, powers[-1]))
    assert powers[4] == E and len(set(powers[:4])) == 4
    # the other composition order generates the same subgroup
    assert subgroup_generated([compose(ALPHA, GAMMA)]) == sub


def test_element_names_round_trip():
    for g in ELEMENTS:
        assert element_from_name(g.name) == g
    with pytest.raises(ValueError):
        element_from_name("ba")


@given(elements, elements)
def test_abelianization_is_homomorphism(g, h):
    assert abelianized_class(compose(g, h)) == abelianized_class(g) + abelianized_class(h)


def test_abelianization_values():
    assert abelianized_class(ALPHA) == X == abelianized_class(BETA)
    assert abelianized_class(GAMMA) == Y
    assert abelianized_class(compose(GAMMA, ALPHA)) == Z
    assert abelianized_class(compose(ALPHA, BETA)) == HomologyClass.zero(Coefficients.TRIVIAL)


def test_twisted_arithmetic():
    assert X_CA + X_CA == X_AB
    assert (-X_CA).token == "-Xca"
    assert X_AB + X_AB == HomologyClass.zero(Coefficients.TWISTED)
    assert 4 * X_CA == HomologyClass.zero(Coefficients.TWISTED)
    assert [HomologyClass(Coefficients.TWISTED, i).token for i in range(4)] == [
        "0",
        "+Xca",
        "Xab",
        "-Xca",
    ]


def test_trivial_tokens_and_yz():
    assert [c.token for c in (HomologyClass.zero(Coefficients.TRIVIAL), X, Y, Z)] == [
        "0",
        "X",
        "Y",
        "Z",
    ]
    # X = Y + Z
    assert X.yz_coordinates() == (1, 1)
    assert Y.yz_coordinates() == (1, 0)
    assert Z.yz_coordinates() == (0, 1)
    for cy, cz in itertools.product((0, 1), repeat=2):
        c = cy * Y + cz * Z
        assert c.yz_coordinates() == (cy, cz)


def test_mixed_coefficients_rejected():
    with pytest.raises(TypeError):
        X + X_CA
    with pytest.raises(TypeError):
        X_CA.yz_coordinates()
