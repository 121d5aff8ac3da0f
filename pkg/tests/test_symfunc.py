import pytest

from superhowe.combinatorics import partitions
from superhowe.symfunc import (
    char_table,
    complete_h,
    geometric,
    hook_schur,
    hook_tableaux_polynomial,
    mul_trunc,
    schur,
    skew_schur,
    truncate,
    verify_classical_quartet,
    verify_s2_characters,
    verify_super_cauchy,
    verify_super_dual_cauchy,
)
from oracles import hook_schur_by_tableaux


def as_counts(f, m, n):
    t = f.table
    out = {}
    for (exps, mask), c in f.terms.items():
        assert mask == 0
        xs = tuple(exps[t.slot[t.lookup("x", i)]] for i in range(1, m + 1))
        ys = tuple(exps[t.slot[t.lookup("y", j)]] for j in range(1, n + 1))
        out[(xs, ys)] = c
    return out


CASES = [(lam, m, n) for k in range(0, 7) for lam in partitions(k) for m in range(0, 3) for n in range(0, 3)]


@pytest.mark.parametrize("lam,m,n", CASES, ids=lambda v: str(v))
def test_hook_schur_matches_independent_tableaux(lam, m, n):
    expected = hook_schur_by_tableaux(lam, m, n)
    got = as_counts(hook_schur(lam, m, n), m, n)
    assert got == expected
    if not lam.in_hook(m, n):
        assert not got


@pytest.mark.parametrize("lam", [l for k in range(5) for l in partitions(k)])
def test_hook_schur_matches_library_tableaux(lam):
    assert hook_schur(lam, 2, 1) == hook_tableaux_polynomial(lam, 2, 1)


def test_small_values():
    t = char_table(1, 1)
    x, y = t.var("x", 1), t.var("y", 1)
    assert hook_schur((1,), 1, 1) == x + y
    assert hook_schur((2,), 1, 1) == x * x + x * y
    assert hook_schur((1, 1), 1, 1) == x * y + y * y
    assert hook_schur((2, 2), 1, 1) == 0


def test_classical_schur_and_complete():
    t = char_table(3, 0)
    xs = [t.var("x", i) for i in (1, 2, 3)]
    assert complete_h(1, xs, t) == xs[0] + xs[1] + xs[2]
    e3 = xs[0] * xs[1] * xs[2]
    assert schur((1, 1, 1), xs, t) == e3
    assert schur((1, 1, 1, 1), xs, t) == 0
    # Pieri: s_1 * s_21 = s_31 + s_22 + s_211
    assert schur((1,), xs, t) * schur((2, 1), xs, t) == schur((3, 1), xs, t) + schur((2, 2), xs, t) + schur((2, 1, 1), xs, t)


def test_skew_schur_basic():
    t = char_table(2, 0)
    xs = [t.var("x", i) for i in (1, 2)]
    assert skew_schur((2, 1), (1,), xs, t) == schur((2,), xs, t) + schur((1, 1), xs, t)
    assert skew_schur((2,), (2,), xs, t) == 1


def test_series_helpers():
    t = char_table(1, 0)
    x = t.var("x", 1)
    g = geometric(x, 4)
    assert g == 1 + x + x ** 2 + x ** 3 + x ** 4
    assert mul_trunc(g, 1 - x, 4) == 1
    assert truncate(g, 2) == 1 + x + x ** 2


@pytest.mark.parametrize("pqmn", [(1, 0, 1, 0), (1, 1, 1, 1), (2, 1, 1, 1), (1, 1, 2, 1), (2, 1, 2, 1), (2, 0, 0, 2)])
def test_super_cauchy_pair(pqmn):
    assert verify_super_cauchy(*pqmn, 6).passed
    assert verify_super_dual_cauchy(*pqmn, 6).passed


@pytest.mark.parametrize("m", [1, 2, 3])
def test_classical_quartet(m):
    reports = verify_classical_quartet(m, 6)
    assert [r.name for r in reports] == ["sym-sym", "sym-skew", "skew-sym", "skew-skew"]
    assert all(r.passed for r in reports), [r.as_dict() for r in reports]


@pytest.mark.parametrize("mn", [(1, 1), (1, 2), (2, 2), (2, 1), (0, 2)])
def test_s2_character_identities(mn):
    assert all(r.passed for r in verify_s2_characters(*mn, 4))


def test_report_records_failure_monomial():
    from superhowe.symfunc import _compare

    t = char_table(1, 0)
    x = t.var("x", 1)
    rep = _compare("demo", {"m": 1}, 2, 1 + x, 1 + 2 * x)
    assert not rep.passed
    assert "x[1]" in rep.first_failure
    assert rep.as_dict()["status"] == "fail"
