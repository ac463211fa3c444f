"""The dihedral group D8 of an ordered pair of oriented hyperplanes.

Generators: ``a`` (alpha) reverses the orientation of the first hyperplane,
``b`` (beta) the second, ``g`` (gamma) swaps the two hyperplanes.  They satisfy

    a^2 = b^2 = g^2 = 1,   ab = ba,   ag = gb,   bg = ga.

Composition convention, used everywhere in this package: ``compose(g, h)`` is
``g o h``, i.e. *h acts first*.  Every element is stored in the normal form
``g^swap o a^flip1 o b^flip2`` (flips act first, then the swap), which makes the
canonical names read left to right: ``ga`` is gamma o alpha.

First homology classes are hard-coded:

* trivial coefficients, ``H_1(D8; Z) = Z/2 + Z/2`` with basis ``X`` (class of a,
  b) and ``Y`` (class of g); ``Z = X + Y``;
* twisted coefficients (a, b, g all act by -1), ``H_1(D8; Z~) = Z/4`` generated
  by ``X_ca = X_bc``; ``X_ab = 2 X_ca``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

__all__ = [
    "DihedralElement",
    "ELEMENTS",
    "E",
    "ALPHA",
    "BETA",
    "GAMMA",
    "compose",
    "inverse",
    "element_from_name",
    "Subgroup",
    "subgroup_generated",
    "Coefficients",
    "HomologyClass",
    "abelianized_class",
]


@dataclass(frozen=True)
class DihedralElement:
    """``g^swap o a^flip1 o b^flip2``."""

    flip1: bool = False
    flip2: bool = False
    swap: bool = False

    @property
    def name(self) -> str:
        s = ("g" if self.swap else "") + ("a" if self.flip1 else "") + ("b" if self.flip2 else "")
        return s or "e"

    def __repr__(self) -> str:
        return f"DihedralElement({self.name})"

    def __str__(self) -> str:
        return self.name

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        return compose(self, other)

    def act_on_signs(self, signs: tuple[int, int]) -> tuple[int, int]:
        """Action on a sign vector (eps1, eps2) of +/-1 entries."""
        e1, e2 = signs
        if self.flip1:
            e1 = -e1
        if self.flip2:
            e2 = -e2
        if self.swap:
            e1, e2 = e2, e1
        return e1, e2

    @property
    def sort_key(self) -> int:
        return NAMES.index(self.name)


def compose(g: DihedralElement, h: DihedralElement) -> DihedralElement:
    """Return ``g o h`` (``h`` acts first)."""
    # moving the flips of g past the swap of h exchanges them: a o g = g o b
    if h.swap:
        f1, f2 = g.flip2, g.flip1
    else:
        f1, f2 = g.flip1, g.flip2
    return DihedralElement(f1 ^ h.flip1, f2 ^ h.flip2, g.swap ^ h.swap)


def inverse(g: DihedralElement) -> DihedralElement:
    for h in ELEMENTS:
        if compose(g, h) == E:
            return h
    raise AssertionError("unreachable: D8 is a group")


NAMES = ("e", "a", "b", "ab", "g", "ga", "gb", "gab")

E = DihedralElement()
ALPHA = DihedralElement(flip1=True)
BETA = DihedralElement(flip2=True)
GAMMA = DihedralElement(swap=True)

ELEMENTS: tuple[DihedralElement, ...] = tuple(
    sorted(
        (DihedralElement(f1, f2, s) for s, f1, f2 in itertools.product((False, True), repeat=3)),
        key=lambda g: g.sort_key,
    )
)


def element_from_name(name: str) -> DihedralElement:
    if name not in NAMES:
        raise ValueError(f"unknown D8 element {name!r}; expected one of {', '.join(NAMES)}")
    return DihedralElement(flip1="a" in name, flip2="b" in name, swap="g" in name)


@dataclass(frozen=True)
class Subgroup:
    elements: frozenset[DihedralElement]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self.elements

    def __iter__(self) -> Iterator[DihedralElement]:
        return iter(sorted(self.elements, key=lambda g: g.sort_key))

    def names(self) -> list[str]:
        return [g.name for g in self]

    def __str__(self) -> str:
        return "{" + ",".join(self.names()) + "}"


def subgroup_generated(gens: Iterable[DihedralElement]) -> Subgroup:
    """Smallest subgroup containing ``gens``."""
    found = {E}
    frontier = list(gens)
    while frontier:
        g = frontier.pop()
        if g in found:
            continue
        found.add(g)
        frontier.extend(compose(g, h) for h in list(found))
        frontier.extend(compose(h, g) for h in list(found))
    return Subgroup(frozenset(found))


class Coefficients(Enum):
    TRIVIAL = "TrivialZ"
    TWISTED = "TwistedZ"


_TRIVIAL_TOKENS = {(0, 0): "0", (1, 0): "X", (0, 1): "Y", (1, 1): "Z"}
_TWISTED_TOKENS = {0: "0", 1: "+Xca", 2: "Xab", 3: "-Xca"}


@dataclass(frozen=True)
class HomologyClass:
    """A first-homology class of D8.

    For trivial coefficients ``value`` is a bit pair ``(x, y)`` meaning
    ``x X + y Y``; for twisted coefficients it is a residue mod 4 in units of
    ``X_ca`` (so ``-X_ca`` is stored as 3 and ``X_ab`` as 2).
    """

    coefficients: Coefficients
    value: tuple[int, int] | int

    def __post_init__(self) -> None:
        if self.coefficients is Coefficients.TRIVIAL:
            x, y = self.value  # type: ignore[misc]
            object.__setattr__(self, "value", (x % 2, y % 2))
        else:
            object.__setattr__(self, "value", int(self.value) % 4)  # type: ignore[arg-type]

    @classmethod
    def zero(cls, coefficients: Coefficients) -> HomologyClass:
        return cls(coefficients, (0, 0) if coefficients is Coefficients.TRIVIAL else 0)

    def __add__(self, other: HomologyClass) -> HomologyClass:
        if self.coefficients is not other.coefficients:
            raise TypeError("cannot add classes with different coefficient modules")
        if self.coefficients is Coefficients.TRIVIAL:
            (x1, y1), (x2, y2) = self.value, other.value  # type: ignore[misc]
            return HomologyClass(self.coefficients, (x1 + x2, y1 + y2))
        return HomologyClass(self.coefficients, self.value + other.value)  # type: ignore[operator]

    def __neg__(self) -> HomologyClass:
        if self.coefficients is Coefficients.TRIVIAL:
            return self
        return HomologyClass(self.coefficients, -self.value)  # type: ignore[operator]

    def __rmul__(self, n: int) -> HomologyClass:
        if self.coefficients is Coefficients.TRIVIAL:
            x, y = self.value  # type: ignore[misc]
            return HomologyClass(self.coefficients, (n * x, n * y))
        return HomologyClass(self.coefficients, n * self.value)  # type: ignore[operator]

    def __bool__(self) -> bool:
        return self != HomologyClass.zero(self.coefficients)

    @property
    def token(self) -> str:
        if self.coefficients is Coefficients.TRIVIAL:
            return _TRIVIAL_TOKENS[self.value]  # type: ignore[index]
        return _TWISTED_TOKENS[self.value]  # type: ignore[index]

    def __str__(self) -> str:
        return self.token

    def yz_coordinates(self) -> tuple[int, int]:
        """Coordinates ``(c_Y, c_Z)`` in the basis ``{Y, Z}`` (trivial case only)."""
        if self.coefficients is not Coefficients.TRIVIAL:
            raise TypeError("Y/Z coordinates exist only for trivial coefficients")
        x, y = self.value  # type: ignore[misc]
        return (x ^ y, x)


X = HomologyClass(Coefficients.TRIVIAL, (1, 0))
Y = HomologyClass(Coefficients.TRIVIAL, (0, 1))
Z = X + Y
X_CA = HomologyClass(Coefficients.TWISTED, 1)
X_BC = X_CA
X_AB = HomologyClass(Coefficients.TWISTED, 2)


def abelianized_class(g: DihedralElement) -> HomologyClass:
    """Image of ``g`` in ``H_1(D8; Z) = D8^ab``: a, b -> X and g -> Y."""
    return HomologyClass(Coefficients.TRIVIAL, (int(g.flip1 ^ g.flip2), int(g.swap)))
