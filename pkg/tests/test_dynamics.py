from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equipartition.dynamics import (
    SignedWord,
    SolutionState,
    act,
    all_states,
    check_j,
    compress,
    enumerate_circles,
    parse_state,
    state_count,
    step,
)
from equipartition.group import ELEMENTS

TAU = [
    "B(++)aab", "(+-)bAab", "(+-)baAb", "(+-)baaB",
    "B(+-)baa", "(++)bBaa", "(++)bbAa", "(++)bbaA",
    "A(++)bba", "(-+)aBba", "(-+)abBa", "(-+)abbA",
    "A(-+)abb", "(++)aAbb", "(++)aaBb", "(++)aabB",
]  # fmt: skip

STATES = {j: all_states(j) for j in (1, 3, 5)}
CIRCLES = {j: enumerate_circles(j) for j in (1, 3, 5)}


def states_for(j):
    return st.sampled_from(STATES[j])


def test_sixteen_step_cycle():
    s = parse_state(TAU[0])
    seen = []
    for _ in range(16):
        seen.append(str(s))
        s = step(s)
    assert seen == TAU
    assert str(s) == TAU[0]


@pytest.mark.parametrize("text", TAU)
def test_parse_round_trip(text):
    assert str(parse_state(text)) == text


def test_parse_accepts_unicode_minus():
    assert parse_state("(+−)bAab") == parse_state("(+-)bAab")


@pytest.mark.parametrize("bad", ["B(++)aaa", "(++)aab", "C(++)aab", "B(+)aab", "B(++)aa"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_state(bad)


@pytest.mark.parametrize("j", [1, 3, 5])
def test_state_count_and_validity(j):
    states = STATES[j]
    assert len(states) == len(set(states)) == state_count(j)
    for s in states:
        s.validate()


@pytest.mark.parametrize("j", [1, 3, 5])
def test_step_is_a_permutation(j):
    states = set(STATES[j])
    assert {step(s) for s in states} == states


@given(states_for(5), st.sampled_from(ELEMENTS))
def test_step_is_equivariant(s, g):
    assert step(act(g, s)) == act(g, step(s))


@given(states_for(3), st.sampled_from(ELEMENTS), st.sampled_from(ELEMENTS))
def test_action_is_a_group_action(s, g, h):
    from equipartition.group import compose

    assert act(compose(g, h), s) == act(g, act(h, s))


@pytest.mark.parametrize("j", [1, 3, 5])
def test_circles_partition_states(j):
    circles = CIRCLES[j]
    covered = [s for c in circles for s in c.states]
    assert len(covered) == len(set(covered)) == state_count(j)
    for c in circles:
        assert c.length % (j + 1) == 0
        assert c.states[0] == min(c.states)


@pytest.mark.parametrize("j", [3, 5])
def test_compressed_cycle_follows_shift_rule(j):
    for c in CIRCLES[j]:
        words = c.compressed()
        assert len(words) == c.length // (j + 1)
        for w, nxt in zip(words, words[1:] + words[:1]):
            assert w.shift() == nxt


def test_j3_circle_through_tau1():
    circle = next(c for c in CIRCLES[3] if parse_state(TAU[0]) in c)
    assert circle.length == 16
    expected = [SignedWord.parse(w) for w in ("BAAB+-", "BBAA++", "ABBA-+", "AABB++")]
    assert circle.compressed_from(expected[0]) == expected


def test_compress_inserts_capital():
    assert compress(parse_state("(+-)bAab")) == SignedWord("BAAB", "+-")
    assert compress(parse_state("B(++)aab")) == SignedWord("BAAB", "++")


def test_signed_word_parse():
    assert SignedWord.parse("AABB(-+)") == SignedWord("AABB", "-+")
    assert str(SignedWord("AABB", "-+")) == "AABB-+"
    with pytest.raises(ValueError):
        SignedWord.parse("AAB+")


def test_check_j():
    assert check_j(5) == 3
    for bad in (0, 2, 17):
        with pytest.raises(ValueError):
            check_j(bad)


def test_state_ordering():
    assert SolutionState("A", 0, "++", "b") < SolutionState("B", 0, "++", "a")
    assert SolutionState("A", 0, "++", "b") < SolutionState("A", 0, "+-", "b")
