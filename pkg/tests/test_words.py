from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equipartition.words import (
    canonical_rotation,
    circular_class,
    conjugate,
    count_balanced_circular,
    count_primitive_balanced,
    count_primitive_circular,
    count_star_primitive,
    divisors,
    is_balanced,
    is_primitive,
    is_special,
    mobius,
    period,
    rotate,
    special_representation,
    totient,
)

words = st.text(alphabet="AB", min_size=1, max_size=16)


@given(words, st.integers(0, 40))
def test_conjugate_commutes_with_rotate(w, r):
    assert conjugate(rotate(w, r)) == rotate(conjugate(w), r)


@given(words)
def test_period_divides_length(w):
    p = period(w)
    assert len(w) % p == 0
    assert w == w[:p] * (len(w) // p)


@given(words, st.integers(0, 40))
def test_canonical_rotation_is_class_invariant(w, r):
    assert canonical_rotation(rotate(w, r)) == canonical_rotation(w)
    assert canonical_rotation(w) == min(rotate(w, i) for i in range(len(w)))


def test_rotate_direction():
    assert rotate("ABB") == "BBA"


def test_circular_class():
    c = circular_class("BABA")
    assert c.canonical == "ABAB" and c.period == 2 and not c.primitive
    with pytest.raises(ValueError):
        circular_class("")


def naive_mobius(n):
    ps = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    for p in ps:
        if n % (p * p) == 0:
            return 0
    return (-1) ** len(ps)


def naive_totient(n):
    from math import gcd

    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@pytest.mark.parametrize("n", range(1, 60))
def test_arithmetic_kernels(n):
    assert mobius(n) == naive_mobius(n)
    assert totient(n) == naive_totient(n)
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


@pytest.mark.parametrize("n", range(1, 9))
def test_formulas_match_brute_force(n):
    assert count_balanced_circular(n) == count_balanced_circular(n, "brute")
    assert count_primitive_circular(n) == count_primitive_circular(n, "brute")
    assert count_primitive_balanced(n) == count_primitive_balanced(n, "brute")


def test_documented_values():
    assert [count_balanced_circular(n) for n in (1, 2, 3)] == [1, 2, 4]
    assert count_primitive_circular(2) == 1
    assert count_primitive_circular(4) == 3
    assert count_primitive_circular(8) == 30
    assert [count_primitive_balanced(m) for m in (1, 2, 3)] == [1, 1, 3]
    assert [count_star_primitive(m) for m in (1, 2)] == [1, 1]


@pytest.mark.parametrize("m", range(1, 13))
def test_divisor_identities(m):
    assert sum(k * count_primitive_circular(k) for k in divisors(m)) == 2**m
    assert sum(2 * k * count_primitive_balanced(k) for k in divisors(m)) == comb(2 * m, m)


@pytest.mark.parametrize("m", range(1, 9))
def test_star_primitive_parity_and_oracle(m):
    a = count_star_primitive(m)
    assert a == count_star_primitive(m, "brute")
    assert a % 2 == count_primitive_circular(2 * m) % 2


def test_unknown_method():
    with pytest.raises(ValueError):
        count_primitive_circular(3, "guess")
    with pytest.raises(ValueError):
        count_balanced_circular(20, "brute")


def test_special_words():
    assert is_special("AABB") and special_representation("AABB") == "AA"
    assert is_special("ABAB") and special_representation("ABAB") == "A"
    assert not is_special("AABABB") and special_representation("AABABB") is None
    assert special_representation("AAB") is None


@given(st.text(alphabet="AB", min_size=1, max_size=6), st.integers(1, 3), st.integers(0, 40))
def test_special_representation_is_a_factorisation(a, r, shift):
    w = rotate((a + conjugate(a)) * r, shift)
    assert is_special(w)
    factor = special_representation(w)
    assert factor is not None
    reps = len(w) // (2 * len(factor))
    assert any(rotate(w, i) == (factor + conjugate(factor)) * reps for i in range(len(w)))


@given(st.text(alphabet="AB", min_size=2, max_size=12))
def test_special_iff_representation(w):
    if is_balanced(w):
        assert is_special(w) == (special_representation(w) is not None)


@given(st.text(alphabet="AB", min_size=1, max_size=12))
def test_primitive_iff_period_is_length(w):
    assert is_primitive(w) == all(rotate(w, r) != w for r in range(1, len(w)))
