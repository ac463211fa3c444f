"""Jacobian sign of the quadrant-mass map at a canonical solution.

The canonical signed word ``C1 C2 ... C2n (++)`` with ``C1 = A`` is realised by
the position-0 state ``A(++)c2...c2n``: the free point ``x1`` of the first
hyperplane sits before every interval, and interval ``i`` is cut by the
hyperplane sequence ``(1, 2, 1)`` for letter ``a`` and ``(2, 1, 2)`` for ``b``.
The segment between the free point and the first interval lies in quadrant
``(+, +)``; crossing a point of hyperplane 1 flips the first sign, of
hyperplane 2 the second.

Rows of the matrix are the quadrant masses ``b_i^{++}, b_i^{+-}, b_i^{-+}`` of
every interval (the ``(-, -)`` quadrant is dependent and dropped); columns are
the cut coordinates ``x2 .. xd`` then ``y1 .. yd``.  Moving a cut to the right
grows the quadrant on its left and shrinks the one on its right, so entries are
``+1``, ``-1`` or ``0``.  Masses are uniform, so these unit entries carry the
full sign information.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynamics import SignedWord
from .errors import InconsistencyError

__all__ = [
    "CutConfiguration",
    "SignMatrix",
    "ROW_ORDERS",
    "build_configuration",
    "sign_matrix",
    "bareiss_determinant",
    "det_sign",
    "permutation_sign",
    "block_diagonal_sign",
    "eta",
]

ROW_ORDERS = {
    "standard": ("++", "+-", "-+"),
    "swapped": ("++", "-+", "+-"),
}

_CUTS = {"a": (1, 2, 1), "b": (2, 1, 2)}


def _flip(label: str, hyperplane: int) -> str:
    flipped = "-" if label[hyperplane - 1] == "+" else "+"
    return flipped + label[1] if hyperplane == 1 else label[0] + flipped


@dataclass(frozen=True)
class CutConfiguration:
    word: SignedWord
    intervals: tuple[str, ...]
    # per interval: the three cut names in curve order, e.g. ("x2", "y1", "x3")
    cuts: tuple[tuple[str, str, str], ...]
    # per interval: the quadrant labels of its four quarter segments
    segments: tuple[tuple[str, str, str, str], ...]
    d: int

    @property
    def j(self) -> int:
        return len(self.intervals)

    @property
    def columns(self) -> list[str]:
        return [f"x{i}" for i in range(2, self.d + 1)] + [f"y{i}" for i in range(1, self.d + 1)]

    @property
    def curve_order(self) -> list[str]:
        return [c for triple in self.cuts for c in triple]


@dataclass(frozen=True)
class SignMatrix:
    rows: tuple[str, ...]
    columns: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def build_configuration(w: SignedWord | str) -> CutConfiguration:
    if isinstance(w, str):
        w = SignedWord.parse(w) if w[-1] in "+-" else SignedWord(w, "++")
    if not w.word or w.word[0] != "A":
        raise ValueError(f"canonical word must start with A, got {w.word!r}")
    if w.signs != "++":
        raise ValueError(f"canonical word must carry signs (++), got {w.signs!r}")
    if w.word.count("A") != w.word.count("B") or set(w.word) - {"A", "B"}:
        raise ValueError(f"word must be a balanced {{A,B}}-word, got {w.word!r}")
    intervals = tuple(w.word[1:].lower())
    j = len(intervals)
    if j % 2 == 0:
        raise ValueError("word length must be even")
    d = (3 * j + 1) // 2

    counters = {1: 1, 2: 0}  # x1 is the free point
    label = "++"
    cuts = []
    segments = []
    for letter in intervals:
        names = []
        labels = [label]
        for h in _CUTS[letter]:
            counters[h] += 1
            names.append(("x" if h == 1 else "y") + str(counters[h]))
            label = _flip(label, h)
            labels.append(label)
        if len(set(labels)) != 4:
            raise InconsistencyError(f"interval does not meet all four quadrants: {labels}")
        cuts.append(tuple(names))
        segments.append(tuple(labels))
    if counters[1] != d or counters[2] != d:
        raise InconsistencyError(f"point counts {counters} do not match d={d}")
    return CutConfiguration(w, intervals, tuple(cuts), tuple(segments), d)  # type: ignore[arg-type]


def _entry(config: CutConfiguration, interval: int, quadrant: str, column: str) -> int:
    cuts = config.cuts[interval]
    if column not in cuts:
        return 0
    k = cuts.index(column)
    left, right = config.segments[interval][k], config.segments[interval][k + 1]
    return (quadrant == left) - (quadrant == right)


def sign_matrix(config: CutConfiguration, row_order: str = "standard") -> SignMatrix:
    quadrants = ROW_ORDERS[row_order]
    columns = config.columns
    rows = []
    labels = []
    for i in range(config.j):
        for q in quadrants:
            labels.append(f"b{i + 1}^{q}")
            rows.append(tuple(_entry(config, i, q, c) for c in columns))
    for c in range(len(columns)):
        if sum(1 for r in rows if r[c]) > 2:
            raise InconsistencyError(f"column {columns[c]} has more than two nonzero entries")
    return SignMatrix(tuple(labels), tuple(columns), tuple(rows))


def bareiss_determinant(matrix: list[list[int]] | tuple[tuple[int, ...], ...]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for jj in range(k + 1, n):
                a[i][jj] = (a[i][jj] * a[k][k] - a[i][k] * a[k][jj]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_sign(m: SignMatrix | list[list[int]]) -> int:
    entries = m.entries if isinstance(m, SignMatrix) else m
    det = bareiss_determinant(entries)
    if det == 0:
        raise InconsistencyError("Jacobian is singular: degenerate cut configuration")
    if abs(det) != 1:
        raise InconsistencyError(f"Jacobian is not unimodular: det = {det}")
    return det


def permutation_sign(perm: list[int]) -> int:
    """Sign of a permutation of ``range(len(perm))`` from its cycle count."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        k = i
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _det3(b: list[list[int]]) -> int:
    return (
        b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0])
    )


def block_diagonal_sign(config: CutConfiguration, row_order: str = "standard") -> int:
    """Same sign via curve-ordered columns: product of 3x3 block determinants
    times the sign of the column shuffle."""
    quadrants = ROW_ORDERS[row_order]
    sign = 1
    for i, cuts in enumerate(config.cuts):
        block = [[_entry(config, i, q, c) for c in cuts] for q in quadrants]
        det = _det3(block)
        if det == 0:
            raise InconsistencyError(f"block {i + 1} is not invertible")
        sign *= 1 if det > 0 else -1
    position = {c: k for k, c in enumerate(config.columns)}
    shuffle = [position[c] for c in config.curve_order]
    return sign * permutation_sign(shuffle)


def eta(w: SignedWord | str, row_order: str = "standard") -> int:
    return det_sign(sign_matrix(build_configuration(w), row_order))
