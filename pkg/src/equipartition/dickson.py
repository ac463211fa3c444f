"""Ideal-valued index bounds: Dickson polynomials over F2 and bound synthesis.

``(d, j, k)`` is admissible when ``P_k^j`` has a monomial with every exponent at
most ``d`` (it then survives reduction modulo ``(x_1^{d+1}, ..., x_k^{d+1})``).
Reduction modulo that monomial ideal is plain monomial filtering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .errors import ResourceLimitError

__all__ = [
    "SparsePolyF2",
    "DEFAULT_PRODUCT_CAP",
    "poly_mul",
    "poly_pow",
    "variable",
    "dickson",
    "dickson_product_form",
    "admissible_fh",
    "minimal_d_star",
    "index_formula_bound",
    "lower_bound",
    "BoundsReport",
    "bounds_report",
    "closing_table",
    "CLOSING_TABLE_ROWS",
]

DEFAULT_PRODUCT_CAP = 10**7

# exponents are packed into one integer, FIELD bits per variable
FIELD = 24
_MASK = (1 << FIELD) - 1


def _pack(exps: Iterable[int]) -> int:
    code = 0
    for i, e in enumerate(exps):
        if not 0 <= e <= _MASK:
            raise ResourceLimitError(f"exponent {e} does not fit the packed representation")
        code |= e << (FIELD * i)
    return code


def _unpack(code: int, nvars: int) -> tuple[int, ...]:
    return tuple((code >> (FIELD * i)) & _MASK for i in range(nvars))


@dataclass(frozen=True)
class SparsePolyF2:
    """Polynomial over F2 in ``nvars`` variables as a set of exponent vectors."""

    nvars: int
    codes: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def from_monomials(cls, nvars: int, monomials: Iterable[Iterable[int]]) -> SparsePolyF2:
        acc: set[int] = set()
        for m in monomials:
            m = tuple(m)
            if len(m) != nvars:
                raise ValueError(f"exponent vector {m} has wrong length for {nvars} variables")
            acc ^= {_pack(m)}
        return cls(nvars, frozenset(acc))

    @property
    def monomials(self) -> set[tuple[int, ...]]:
        return {_unpack(c, self.nvars) for c in self.codes}

    def sorted_monomials(self) -> list[tuple[int, ...]]:
        return sorted(self.monomials)

    def __len__(self) -> int:
        return len(self.codes)

    def __add__(self, other: SparsePolyF2) -> SparsePolyF2:
        self._check(other)
        return SparsePolyF2(self.nvars, self.codes ^ other.codes)

    def __mul__(self, other: SparsePolyF2) -> SparsePolyF2:
        return poly_mul(self, other)

    def __pow__(self, e: int) -> SparsePolyF2:
        return poly_pow(self, e)

    def _check(self, other: SparsePolyF2) -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def square(self) -> SparsePolyF2:
        # Frobenius: (sum m)^2 = sum m^2 in characteristic 2
        self._check_degree(2)
        return SparsePolyF2(self.nvars, frozenset(c << 1 for c in self.codes))

    def _check_degree(self, factor: int) -> None:
        top = max((max(_unpack(c, self.nvars)) for c in self.codes), default=0)
        if top * factor > _MASK:
            raise ResourceLimitError("exponents would overflow the packed representation")

    def max_exponents(self) -> list[int]:
        return [max(_unpack(c, self.nvars)) for c in self.codes]

    def __str__(self) -> str:
        if not self.codes:
            return "0"
        terms = []
        for m in sorted(self.monomials, reverse=True):
            factors = [
                f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
            ]
            terms.append("*".join(factors) or "1")
        return " + ".join(terms)


def variable(i: int, nvars: int) -> SparsePolyF2:
    """The variable ``x_{i+1}`` (0-based ``i``)."""
    return SparsePolyF2.from_monomials(nvars, [[1 if k == i else 0 for k in range(nvars)]])


def poly_mul(p: SparsePolyF2, q: SparsePolyF2, cap: int = DEFAULT_PRODUCT_CAP) -> SparsePolyF2:
    p._check(q)
    if len(p) * len(q) > cap:
        raise ResourceLimitError(
            f"product needs {len(p) * len(q)} monomial products, above the cap {cap}"
        )
    top = sum(max(p.max_exponents(), default=0) for p in (p, q))
    if top > _MASK:
        raise ResourceLimitError("exponents would overflow the packed representation")
    acc: set[int] = set()
    for a in p.codes:
        for b in q.codes:
            c = a + b
            if c in acc:
                acc.remove(c)
            else:
                acc.add(c)
    return SparsePolyF2(p.nvars, frozenset(acc))


def poly_pow(p: SparsePolyF2, e: int, cap: int = DEFAULT_PRODUCT_CAP) -> SparsePolyF2:
    """``p**e`` by binary exponentiation; squarings are exact Frobenius doublings."""
    if e < 0:
        raise ValueError("negative exponent")
    result = SparsePolyF2.from_monomials(p.nvars, [[0] * p.nvars])
    base = p
    while e:
        if e & 1:
            result = poly_mul(result, base, cap)
        e >>= 1
        if e:
            base = base.square()
    return result


def _check_k(k: int) -> None:
    if not 1 <= k <= 6:
        raise ValueError(f"k must be between 1 and 6, got {k}")


def dickson(k: int) -> SparsePolyF2:
    """``P_k = sum over permutations s of prod_i x_{s(i)}^{2^{k-i}}`` (a Moore determinant)."""
    _check_k(k)
    monomials = []
    for perm in itertools.permutations(range(k)):
        exps = [0] * k
        for i, var in enumerate(perm):
            exps[var] = 2 ** (k - 1 - i)
        monomials.append(exps)
    return SparsePolyF2.from_monomials(k, monomials)


def dickson_product_form(k: int) -> SparsePolyF2:
    """Product of all nonzero linear forms ``sum_{i in S} x_i`` over F2."""
    _check_k(k)
    result = SparsePolyF2.from_monomials(k, [[0] * k])
    for mask in range(1, 2**k):
        form = SparsePolyF2.from_monomials(
            k, [[1 if i == v else 0 for i in range(k)] for v in range(k) if mask >> v & 1]
        )
        result = poly_mul(result, form)
    return result


def _check_jk(j: int, k: int) -> None:
    if j < 1 or k < 1:
        raise ValueError(f"j and k must be positive, got j={j}, k={k}")


# keyed by the cap too, so a cached power never bypasses a smaller guard
_POWER_CACHE: dict[tuple[int, int, int], SparsePolyF2] = {}


def dickson_power(j: int, k: int, cap: int = DEFAULT_PRODUCT_CAP) -> SparsePolyF2:
    _check_jk(j, k)
    key = (j, k, cap)
    if key not in _POWER_CACHE:
        _POWER_CACHE[key] = poly_pow(dickson(k), j, cap)
    return _POWER_CACHE[key]


def admissible_fh(d: int, j: int, k: int, cap: int = DEFAULT_PRODUCT_CAP) -> bool:
    """True iff ``P_k^j`` is not in the ideal ``(x_1^{d+1}, ..., x_k^{d+1})``."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return any(e <= d for e in dickson_power(j, k, cap).max_exponents())


def minimal_d_star(j: int, k: int, cap: int = DEFAULT_PRODUCT_CAP) -> int:
    """Least ``d`` passing ``admissible_fh``: min over monomials of the largest exponent."""
    return min(dickson_power(j, k, cap).max_exponents())


def index_formula_bound(j: int, k: int) -> int:
    """``2^{k+q-1} + r`` for ``j = 2^q + r``, ``0 <= r < 2^q``."""
    _check_jk(j, k)
    q = j.bit_length() - 1
    r = j - 2**q
    return 2 ** (k + q - 1) + r


def lower_bound(j: int, k: int) -> int:
    """``ceil(j (2^k - 1) / k)`` from counting moment-curve intersections."""
    _check_jk(j, k)
    return -(-j * (2**k - 1) // k)


PROVENANCES = (
    "dickson-minimal-d",
    "index-formula",
    "delta0-parity",
    "delta1-obstruction",
    "corollary-closed-form",
)


@dataclass
class BoundsReport:
    j: int
    k: int
    lower: int
    upper: list[tuple[int, str]]
    notes: list[str] = field(default_factory=list)

    @property
    def best(self) -> int | None:
        return min((v for v, _ in self.upper), default=None)

    @property
    def exact(self) -> bool:
        return self.best == self.lower

    def summary(self) -> str:
        if self.best is None:
            return f"{self.lower} ≤ Δ({self.j},{self.k})"
        if self.exact:
            return f"Δ({self.j},{self.k}) = {self.lower}"
        return f"{self.lower} ≤ Δ({self.j},{self.k}) ≤ {self.best}"

    def to_dict(self) -> dict:
        return {
            "j": self.j,
            "k": self.k,
            "lower": self.lower,
            "upper": [{"value": v, "provenance": p} for v, p in self.upper],
            "best": self.best,
            "exact": self.exact,
            "summary": self.summary(),
            "notes": list(self.notes),
        }


DELTA1_REPORT_BOUND = 11


def bounds_report(
    j: int,
    k: int,
    *,
    cap: int = DEFAULT_PRODUCT_CAP,
    delta1_bound: int = DELTA1_REPORT_BOUND,
    epsilon_convention: str = "quarter",
    row_order: str = "standard",
) -> BoundsReport:
    """Lower bound plus every applicable upper bound, each tagged with its source."""
    from .obstruction import closed_form_z2z2, obstruction_delta0, obstruction_delta1

    _check_jk(j, k)
    report = BoundsReport(j, k, lower_bound(j, k), [])
    try:
        report.upper.append((minimal_d_star(j, k, cap), "dickson-minimal-d"))
    except ResourceLimitError as exc:
        report.notes.append(f"dickson-minimal-d skipped: {exc}")
    report.upper.append((index_formula_bound(j, k), "index-formula"))

    if k == 2 and j % 2 == 0:
        m = j // 2
        if m <= 8:
            odd = obstruction_delta0(m).admissible
        else:
            odd = comb(2 * m - 1, m - 1) % 2 == 1
        if odd:
            report.upper.append((3 * m, "delta0-parity"))
    if k == 2 and j % 2 == 1:
        d = (3 * j + 1) // 2
        if j <= delta1_bound:
            result = obstruction_delta1(
                j, epsilon_convention=epsilon_convention, row_order=row_order
            )
            if result.admissible:
                report.upper.append((d, "delta1-obstruction"))
        else:
            report.notes.append(f"delta1-obstruction skipped: j={j} above bound {delta1_bound}")
        if (j + 1) % 4 == 0 and closed_form_z2z2((j + 1) // 4) != (0, 0):
            report.upper.append((d, "corollary-closed-form"))

    report.upper.sort(key=lambda t: (t[0], PROVENANCES.index(t[1])))
    best = report.best
    if best is not None and best < report.lower:
        from .errors import InconsistencyError

        raise InconsistencyError(f"upper bound {best} below lower bound {report.lower}")
    return report


CLOSING_TABLE_ROWS = (7, 6, 15, 14)


def closing_table(k: int, js: Iterable[int] = CLOSING_TABLE_ROWS, cap: int = DEFAULT_PRODUCT_CAP) -> list[dict]:
    """Rows ``lower <= Delta(j, k) <= index-formula`` plus the computed minimal d*."""
    rows = []
    for j in js:
        row = {
            "j": j,
            "k": k,
            "lower": lower_bound(j, k),
            "upper": index_formula_bound(j, k),
            "previous_upper": j * 2 ** (k - 1),
        }
        try:
            row["dickson_min_d"] = minimal_d_star(j, k, cap)
        except ResourceLimitError:
            row["dickson_min_d"] = None
        rows.append(row)
    return rows
