"""Circular {A, B}-words: conjugation, periods, special words and counting.

Words are plain strings over ``"AB"``; the canonical name of a circular word is
its lexicographically least rotation (``A < B``).

Counting functions (exact integer formulas, each with a brute-force twin):

* ``R(n)``: balanced circular words of length ``2n``;
* ``P(m)``: primitive circular words of length ``m``;
* ``Q(m)``: primitive balanced circular words of length ``2m``;
* ``A(m)``: *-primitive circular words of length ``2m`` (primitive and equal to
  their own conjugate up to rotation).  No closed formula is known for ``A``;
  it is computed by enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator

__all__ = [
    "conjugate",
    "rotate",
    "period",
    "canonical_rotation",
    "CircularClass",
    "circular_class",
    "is_primitive",
    "is_balanced",
    "divisors",
    "mobius",
    "totient",
    "count_balanced_circular",
    "count_primitive_circular",
    "count_primitive_balanced",
    "is_special",
    "special_representation",
    "count_star_primitive",
    "all_words",
    "balanced_words",
]

_CONJ = str.maketrans("ABab", "BAba")


def conjugate(w: str) -> str:
    """Swap ``A`` and ``B`` letterwise (lower case letters too)."""
    return w.translate(_CONJ)


def rotate(w: str, r: int = 1) -> str:
    """Cyclic permutation: ``rotate(x1 x2 ... xn) = x2 ... xn x1``."""
    if not w:
        return w
    r %= len(w)
    return w[r:] + w[:r]


def period(w: str) -> int:
    """Least ``l > 0`` with ``rotate(w, l) == w``."""
    n = len(w)
    for l in divisors(n):
        if w[l:] + w[:l] == w:
            return l
    return n


def canonical_rotation(w: str) -> str:
    return min(w[i:] + w[:i] for i in range(len(w))) if w else w


@dataclass(frozen=True)
class CircularClass:
    canonical: str
    period: int

    @property
    def length(self) -> int:
        return len(self.canonical)

    @property
    def primitive(self) -> bool:
        return self.period == self.length


def circular_class(w: str) -> CircularClass:
    if not w:
        raise ValueError("words have length >= 1")
    return CircularClass(canonical_rotation(w), period(w))


def is_primitive(w: str) -> bool:
    return period(w) == len(w)


def is_balanced(w: str) -> bool:
    return w.count("A") == w.count("B")


# -- arithmetic kernels -------------------------------------------------------


def _factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def mobius(n: int) -> int:
    factors = _factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def totient(n: int) -> int:
    result = n
    for p in _factorize(n):
        result -= result // p
    return result


# -- enumeration helpers ------------------------------------------------------


def all_words(length: int) -> Iterator[str]:
    for letters in itertools.product("AB", repeat=length):
        yield "".join(letters)


def balanced_words(n: int) -> Iterator[str]:
    """All words with ``n`` letters A and ``n`` letters B, in lexicographic order."""
    for positions in itertools.combinations(range(2 * n), n):
        w = ["B"] * (2 * n)
        for p in positions:
            w[p] = "A"
        yield "".join(w)


def _circular_classes(words: Iterator[str]) -> set[str]:
    return {canonical_rotation(w) for w in words}


def _check_bound(value: int, bound: int | None, name: str) -> None:
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    if bound is not None and value > bound:
        raise ValueError(f"{name}={value} exceeds the brute-force bound {bound}")


# -- counting functions -------------------------------------------------------

BRUTE_FORCE_BOUND = 12


def count_balanced_circular(n: int, method: str = "formula") -> int:
    """``R(n) = 1/(2n) sum_{m | n} C(2m, m) phi(n/m)``."""
    if method == "formula":
        _check_bound(n, None, "n")
        total = sum(comb(2 * m, m) * totient(n // m) for m in divisors(n))
        q, r = divmod(total, 2 * n)
        assert r == 0
        return q
    if method == "brute":
        _check_bound(n, BRUTE_FORCE_BOUND, "n")
        return len(_circular_classes(balanced_words(n)))
    raise ValueError(f"unknown method {method!r}")


def count_primitive_circular(m: int, method: str = "formula") -> int:
    """``P(m) = 1/m sum_{k | m} 2^k mu(m/k)``."""
    if method == "formula":
        _check_bound(m, None, "m")
        q, r = divmod(sum(2**k * mobius(m // k) for k in divisors(m)), m)
        assert r == 0
        return q
    if method == "brute":
        _check_bound(m, 2 * BRUTE_FORCE_BOUND, "m")
        return len(_circular_classes(w for w in all_words(m) if is_primitive(w)))
    raise ValueError(f"unknown method {method!r}")


def count_primitive_balanced(m: int, method: str = "formula") -> int:
    """``Q(m) = 1/(2m) sum_{k | m} C(2k, k) mu(m/k)``."""
    if method == "formula":
        _check_bound(m, None, "m")
        q, r = divmod(sum(comb(2 * k, k) * mobius(m // k) for k in divisors(m)), 2 * m)
        assert r == 0
        return q
    if method == "brute":
        _check_bound(m, BRUTE_FORCE_BOUND, "m")
        return len(_circular_classes(w for w in balanced_words(m) if is_primitive(w)))
    raise ValueError(f"unknown method {method!r}")


def is_special(w: str) -> bool:
    """True iff some rotation of ``w`` equals its conjugate."""
    c = conjugate(w)
    return any(rotate(w, r) == c for r in range(len(w)))


def special_representation(w: str) -> str | None:
    """A factor ``a`` such that ``w`` rotates to ``(a a*)^r``, or ``None``.

    The returned factor is the shortest one, read from the rotation that starts
    at the smallest possible offset.
    """
    if not is_balanced(w):
        return None
    n2 = len(w)
    for half in range(1, n2 // 2 + 1):
        if n2 % (2 * half):
            continue
        for r in range(n2):
            v = rotate(w, r)
            a = v[:half]
            if (a + conjugate(a)) * (n2 // (2 * half)) == v:
                return a
    return None


def count_star_primitive(m: int, method: str = "fast") -> int:
    """``A(m)``: circular *-primitive words of length ``2m``.

    ``fast`` uses that a primitive special word of length ``2m`` rotates to
    ``b b*`` with ``|b| = m``, so only ``2^m`` candidates are inspected;
    ``brute`` scans every balanced word.
    """
    if method == "fast":
        _check_bound(m, 24, "m")
        found = set()
        for b in all_words(m):
            w = b + conjugate(b)
            if is_primitive(w):
                found.add(canonical_rotation(w))
        return len(found)
    if method == "brute":
        _check_bound(m, BRUTE_FORCE_BOUND, "m")
        return len(
            _circular_classes(w for w in balanced_words(m) if is_primitive(w) and is_special(w))
        )
    raise ValueError(f"unknown method {method!r}")
