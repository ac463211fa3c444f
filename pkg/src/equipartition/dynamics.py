"""Solution types on the moment curve for two hyperplanes and ``2d - 3j = 1``.

A state records one equipartition of ``j`` interval measures (``j`` odd,
``n = (j + 1) / 2``):

* ``capital`` -- ``"A"`` if the free intersection point lies on the first
  hyperplane, ``"B"`` for the second;
* ``position`` -- gap index of the free point, ``0`` before the first interval,
  ``j`` after the last;
* ``signs`` -- sign vector at the start of the first interval, as a two
  character string over ``"+-"``;
* ``pattern`` -- per-interval partition letters over ``"ab"``.

Balance: ``pattern.count("a") + (capital == "A") == n``.

Text form: ``B(++)aab`` for position 0, otherwise ``(+-)bAab`` with the capital
written in its gap.  ``step`` moves the free point across the next interval, or
through the point at infinity when it is already past the last one.  Cycles of
``step`` are the connected components (circles) of the solution manifold.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, NamedTuple

from .group import ELEMENTS, DihedralElement
from .words import conjugate

__all__ = [
    "SolutionState",
    "SignedWord",
    "Circle",
    "parse_state",
    "step",
    "act",
    "compress",
    "all_states",
    "state_count",
    "enumerate_circles",
    "check_j",
    "MAX_J",
]

MAX_J = 15

_FLIP = {"+": "-", "-": "+"}
_UPPER = str.maketrans("ab", "AB")
_LOWER = str.maketrans("AB", "ab")


class SolutionState(NamedTuple):
    capital: str
    position: int
    signs: str
    pattern: str

    @property
    def j(self) -> int:
        return len(self.pattern)

    def __str__(self) -> str:
        if self.position == 0:
            return f"{self.capital}({self.signs}){self.pattern}"
        p = self.position
        return f"({self.signs}){self.pattern[:p]}{self.capital}{self.pattern[p:]}"

    def validate(self) -> None:
        j = len(self.pattern)
        if j % 2 == 0:
            raise ValueError(f"pattern length must be odd, got {j}")
        if self.capital not in ("A", "B") or set(self.pattern) - {"a", "b"}:
            raise ValueError(f"malformed state {self!r}")
        if len(self.signs) != 2 or set(self.signs) - {"+", "-"}:
            raise ValueError(f"malformed signs {self.signs!r}")
        if not 0 <= self.position <= j:
            raise ValueError(f"position {self.position} outside 0..{j}")
        if self.pattern.count("a") + (self.capital == "A") != (j + 1) // 2:
            raise ValueError(f"unbalanced state {self}")


class SignedWord(NamedTuple):
    word: str
    signs: str

    def __str__(self) -> str:
        return f"{self.word}{self.signs}"

    @classmethod
    def parse(cls, text: str) -> SignedWord:
        m = re.fullmatch(r"([AB]+)\(?([+-]{2})\)?", text.strip())
        if not m:
            raise ValueError(f"cannot parse signed word {text!r}")
        return cls(m.group(1), m.group(2))

    def shift(self) -> SignedWord:
        """Move the last letter to the front (one step along a circle).

        Letter ``A`` carries a flip of the first sign, ``B`` of the second.
        """
        last = self.word[-1]
        e1, e2 = self.signs
        if last == "A":
            e1 = _FLIP[e1]
        else:
            e2 = _FLIP[e2]
        return SignedWord(last + self.word[:-1], e1 + e2)


_STATE_RE = re.compile(r"^(?:([AB])\(([+-]{2})\)([ab]*)|\(([+-]{2})\)([ab]*)([AB])([ab]*))$")


def parse_state(text: str) -> SolutionState:
    """Parse ``B(++)aab`` / ``(+-)bAab`` notation (unicode minus accepted)."""
    m = _STATE_RE.match(text.strip().replace("−", "-"))
    if not m:
        raise ValueError(f"cannot parse solution type {text!r}")
    if m.group(1):
        s = SolutionState(m.group(1), 0, m.group(2), m.group(3))
    else:
        s = SolutionState(m.group(6), len(m.group(5)), m.group(4), m.group(5) + m.group(7))
    s.validate()
    return s


def step(s: SolutionState) -> SolutionState:
    """Move the free point one interval to the right.

    Signs change only when the free point crosses the first interval: a free
    ``A`` flips the first sign, a free ``B`` the second.  Past the last interval
    the free point passes through infinity back to position 0 unchanged.
    """
    capital, pos, signs, pattern = s
    if pos == len(pattern):
        return SolutionState(capital, 0, signs, pattern)
    letter = pattern[pos]
    new_pattern = pattern[:pos] + capital.lower() + pattern[pos + 1 :]
    if pos == 0:
        if capital == "A":
            signs = _FLIP[signs[0]] + signs[1]
        else:
            signs = signs[0] + _FLIP[signs[1]]
    return SolutionState(letter.upper(), pos + 1, signs, new_pattern)


def act(g: DihedralElement, s: SolutionState) -> SolutionState:
    """D8 action: a flips the first sign, b the second; g conjugates letters and swaps signs."""
    capital, pos, signs, pattern = s
    e1, e2 = signs
    if g.flip1:
        e1 = _FLIP[e1]
    if g.flip2:
        e2 = _FLIP[e2]
    if g.swap:
        return SolutionState(conjugate(capital), pos, e2 + e1, conjugate(pattern))
    return SolutionState(capital, pos, e1 + e2, pattern)


def compress(s: SolutionState) -> SignedWord:
    """Upper-case the pattern and insert the capital letter at its gap."""
    capital, pos, signs, pattern = s
    up = pattern.translate(_UPPER)
    return SignedWord(up[:pos] + capital + up[pos:], signs)


def check_j(j: int, bound: int | None = MAX_J) -> int:
    if j < 1 or j % 2 == 0:
        raise ValueError(f"j must be an odd positive integer, got {j}")
    if bound is not None and j > bound:
        raise ValueError(f"j={j} exceeds the enumeration bound {bound}")
    return (j + 1) // 2


def state_count(j: int) -> int:
    n = check_j(j, None)
    return (j + 1) * 4 * comb(j + 1, n)


def _patterns(j: int, a_count: int) -> Iterator[str]:
    for positions in combinations(range(j), a_count):
        p = ["b"] * j
        for i in positions:
            p[i] = "a"
        yield "".join(p)


def all_states(j: int, bound: int | None = MAX_J) -> list[SolutionState]:
    """Every valid state for ``j`` intervals, sorted."""
    n = check_j(j, bound)
    states = [
        SolutionState(capital, pos, e1 + e2, pattern)
        for capital in "AB"
        for pattern in _patterns(j, n - (capital == "A"))
        for pos in range(j + 1)
        for e1, e2 in product("+-", repeat=2)
    ]
    states.sort()
    return states


@dataclass(frozen=True)
class Circle:
    """A cycle of ``step``, listed from its least state."""

    states: tuple[SolutionState, ...]

    @property
    def length(self) -> int:
        return len(self.states)

    @property
    def j(self) -> int:
        return self.states[0].j

    @cached_property
    def index(self) -> dict[SolutionState, int]:
        return {s: i for i, s in enumerate(self.states)}

    def __contains__(self, s: object) -> bool:
        return s in self.index

    def compressed(self) -> list[SignedWord]:
        """Signed words sampled at position ``j``, in circle order."""
        j = self.j
        return [compress(s) for s in self.states if s.position == j]

    def compressed_from(self, start: SignedWord) -> list[SignedWord]:
        """Compressed cycle rotated to begin at ``start``."""
        words = self.compressed()
        i = words.index(start)
        return words[i:] + words[:i]


def _trace(start: SolutionState) -> tuple[SolutionState, ...]:
    states = [start]
    s = step(start)
    while s != start:
        states.append(s)
        s = step(s)
    return tuple(states)


def enumerate_circles(j: int, bound: int | None = MAX_J) -> list[Circle]:
    """Partition all states into step-cycles, sorted by least state."""
    seen: set[SolutionState] = set()
    circles = []
    for s in all_states(j, bound):
        if s in seen:
            continue
        cycle = _trace(s)
        seen.update(cycle)
        # all_states is sorted, so s is the least state of its cycle
        circles.append(Circle(cycle))
    return circles


def orbit(s: SolutionState, group: Iterable[DihedralElement] = ELEMENTS) -> set[SolutionState]:
    return {act(g, s) for g in group}
