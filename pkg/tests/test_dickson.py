from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equipartition.dickson import (
    SparsePolyF2,
    admissible_fh,
    bounds_report,
    closing_table,
    dickson,
    dickson_product_form,
    index_formula_bound,
    lower_bound,
    minimal_d_star,
    poly_mul,
    poly_pow,
    variable,
)
from equipartition.errors import ResourceLimitError

exps = st.lists(st.integers(0, 6), min_size=2, max_size=2)
polys = st.lists(exps, max_size=6).map(lambda ms: SparsePolyF2.from_monomials(2, ms))


def dense_mul(p, q):
    """Oracle: multiply with explicit integer coefficients, then reduce mod 2."""
    coeffs = {}
    for a in p.monomials:
        for b in q.monomials:
            m = tuple(x + y for x, y in zip(a, b))
            coeffs[m] = coeffs.get(m, 0) + 1
    return {m for m, c in coeffs.items() if c % 2}


@given(polys, polys)
def test_mul_matches_dense_oracle(p, q):
    assert poly_mul(p, q).monomials == dense_mul(p, q)


@given(polys, st.integers(0, 6))
@settings(max_examples=50)
def test_pow_matches_repeated_mul(p, e):
    acc = SparsePolyF2.from_monomials(2, [[0, 0]])
    for _ in range(e):
        acc = poly_mul(acc, p)
    assert poly_pow(p, e) == acc


@given(polys)
def test_square_doubles_exponents(p):
    assert p.square().monomials == {tuple(2 * x for x in m) for m in p.monomials}
    assert p.square() == poly_mul(p, p)


def test_duplicates_cancel():
    assert len(SparsePolyF2.from_monomials(2, [[1, 0], [1, 0], [0, 1]])) == 1


def test_frobenius_example():
    s = variable(0, 2) + variable(1, 2)
    assert poly_pow(s, 2).sorted_monomials() == [(0, 2), (2, 0)]


def test_dickson_small():
    assert dickson(1).sorted_monomials() == [(1,)]
    assert dickson(2).sorted_monomials() == [(1, 2), (2, 1)]
    assert str(dickson(2)) == "x1^2*x2 + x1*x2^2"
    p3 = dickson(3)
    assert len(p3) == 6 and all(sorted(m) == [1, 2, 4] for m in p3.monomials)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_dickson_product_form(k):
    assert dickson(k) == dickson_product_form(k)


def test_p2_fifth_power():
    assert poly_pow(dickson(2), 5).sorted_monomials() == [(5, 10), (6, 9), (9, 6), (10, 5)]


def test_admissible_fh_examples():
    assert admissible_fh(9, 5, 2) and not admissible_fh(8, 5, 2)
    for d in range(1, 6):
        assert admissible_fh(d, 1, 1)


def test_minimal_d():
    assert minimal_d_star(5, 2) == 9
    assert minimal_d_star(2, 2) == 4
    assert minimal_d_star(7, 3) <= 19


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_dickson_bounds_between_lower_and_formula(k):
    for j in range(1, 16):
        d = minimal_d_star(j, k)
        assert lower_bound(j, k) <= d <= index_formula_bound(j, k)
        assert admissible_fh(d, j, k) and (d == 1 or not admissible_fh(d - 1, j, k))
        assert admissible_fh(d + 1, j, k)


def test_index_formula_examples():
    assert index_formula_bound(7, 3) == 19
    assert index_formula_bound(15, 4) == 71
    for q in range(4):
        for k in range(1, 5):
            assert index_formula_bound(2**q, k) == 2 ** (k + q - 1)


def test_lower_bound_examples():
    assert lower_bound(5, 2) == 8
    assert lower_bound(7, 3) == 17
    assert all(lower_bound(d, 1) == d for d in range(1, 10))


def test_bounds_report_52():
    r = bounds_report(5, 2)
    assert r.lower == 8 and r.best == 8 and r.exact
    assert (9, "dickson-minimal-d") in r.upper
    assert (8, "delta1-obstruction") in r.upper
    assert r.summary() == "Δ(5,2) = 8"


def test_bounds_report_general_k():
    assert bounds_report(7, 3).summary() == "17 ≤ Δ(7,3) ≤ 19"
    r = bounds_report(15, 3)
    assert r.lower == 35 and (39, "index-formula") in r.upper


@pytest.mark.parametrize("q", [1, 2, 3])
def test_corollary_equality(q):
    j = 2 ** (q + 1) - 1
    r = bounds_report(j, 2)
    assert r.exact and r.best == 3 * 2**q - 1
    assert (3 * 2**q - 1, "corollary-closed-form") in r.upper


def test_bounds_report_delta0():
    r = bounds_report(8, 2)
    assert (12, "delta0-parity") in r.upper and r.exact
    assert all(p != "delta0-parity" for _, p in bounds_report(6, 2).upper)


def test_closing_table():
    rows = {r["j"]: r for r in closing_table(3)}
    assert (rows[7]["lower"], rows[7]["upper"], rows[7]["previous_upper"]) == (17, 19, 28)


def test_resource_guard():
    with pytest.raises(ResourceLimitError):
        poly_pow(dickson(3), 15, cap=10)
    r = bounds_report(15, 4, cap=10)
    assert any("skipped" in n for n in r.notes)
    assert r.best == 71


def test_k_bounds():
    with pytest.raises(ValueError):
        dickson(0)
    with pytest.raises(ValueError):
        lower_bound(0, 2)
