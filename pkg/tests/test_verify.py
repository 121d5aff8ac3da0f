import json

import pytest

import superhowe.verify as V
from superhowe.algebra import monomial_basis, s2_table, tensor_table
from superhowe.combinatorics import FLAVOR_WIDE, Partition, enumerate_nested_hook_partitions, partitions
from superhowe.symfunc import char_table, schur


@pytest.mark.parametrize("params", V.DEFAULT_TENSOR_GRID, ids=str)
def test_tensor_and_skew_duality_default_grid(params):
    for fn in (V.verify_tensor_duality, V.verify_skew_duality):
        rep = fn(*params, 4)
        assert rep.passed, rep.as_dict()
        assert rep.counterexample is None


@pytest.mark.parametrize("params", V.DEFAULT_S2_GRID, ids=str)
def test_s2_decompositions_default_grid(params):
    for fn in (V.verify_s2_decomposition, V.verify_lambda_s2_decomposition):
        rep = fn(*params, 4)
        assert rep.passed, rep.as_dict()


def test_low_degree_slices():
    t = char_table(1, 1)
    target = V.even_table(x=1, y=1, u=1, v=1)
    base = tensor_table(1, 1, 1, 1)
    images = V.tensor_character_images(base, target)
    assert V._monomial_character(base, 0, images, target) == 1
    one = V._monomial_character(base, 1, images, target)
    x, y, u, v = (target.var(f, 1) for f in "xyuv")
    assert one == (x + y) * (u + v)
    assert t.n_even == 2


def _classical_corner(m, n, k, exterior):
    """Character of S^k or L^k of S^2 C^{m|n} with m or n zero, from classical Schur sums."""
    t = char_table(m, n)
    if n == 0:
        xs = [t.var("x", i) for i in range(1, m + 1)]
        if not exterior:  # S(S^2): even partitions
            lams = [Partition(2 * a for a in mu) for mu in partitions(k)]
        else:  # L(S^2): nested wide hooks
            lams = enumerate_nested_hook_partitions(2 * k, 99, 0, FLAVOR_WIDE)
        return sum((schur(l, xs, t) for l in lams), t.zero())
    ys = [t.var("y", j) for j in range(1, n + 1)]
    # S^2 of a purely odd space is L^2 of an even one; characters see transposed shapes
    if not exterior:  # S(L^2): even columns
        lams = [Partition(2 * a for a in mu).conjugate() for mu in partitions(k)]
    else:  # L(L^2): nested tall hooks
        lams = [l.conjugate() for l in enumerate_nested_hook_partitions(2 * k, 99, 0, FLAVOR_WIDE)]
    return sum((schur(l, ys, t) for l in lams), t.zero())


@pytest.mark.parametrize("mn", [(2, 0), (3, 0), (0, 2), (0, 3)], ids=str)
@pytest.mark.parametrize("exterior", [False, True])
def test_classical_corners(mn, exterior):
    m, n = mn
    base = s2_table(m, n)
    target = char_table(m, n)
    images = V.s2_character_images(base, target)
    table = V._flip_parity(base) if exterior else base
    if exterior:
        images = {V.Var(w.family, w.index, not w.odd, w.aux): vec for w, vec in images.items()}
    for k in range(5):
        lhs = V._monomial_character(table, k, images, target)
        assert lhs == _classical_corner(m, n, k, exterior), (m, n, k)
    fn = V.verify_lambda_s2_decomposition if exterior else V.verify_s2_decomposition
    assert fn(m, n, 4).passed


@pytest.mark.parametrize("pqmn", [(2, 0, 2, 0), (2, 0, 0, 2), (0, 2, 2, 0), (0, 2, 0, 2), (3, 0, 2, 0)], ids=str)
def test_tensor_corners(pqmn):
    assert V.verify_tensor_duality(*pqmn, 4).passed
    assert V.verify_skew_duality(*pqmn, 4).passed


@pytest.mark.parametrize("e,o", [(0, 0), (2, 0), (0, 3), (2, 2), (3, 1)])
def test_super_dimension_formula(e, o):
    from superhowe.algebra import Var, VarTable

    vs = [Var("a", (i,), False) for i in range(e)] + [Var("b", (i,), True) for i in range(o)]
    t = VarTable(vs)
    for k in range(5):
        assert V._super_dim(e, o, k) == len(list(monomial_basis(t, k)))


def test_dropping_a_constituent_is_detected(monkeypatch):
    real = V.partitions
    monkeypatch.setattr(V, "partitions", lambda k: real(k)[:-1] if k >= 2 else real(k))
    rep = V.verify_tensor_duality(2, 1, 2, 1, 3)
    assert rep.status == "fail"
    assert rep.counterexample["where"] == "degree 2"
    assert "monomial" in rep.counterexample


def test_wrong_hook_flavor_is_detected(monkeypatch):
    from superhowe.combinatorics import FLAVOR_TALL

    real = V.enumerate_nested_hook_partitions
    monkeypatch.setattr(V, "enumerate_nested_hook_partitions", lambda k2, m, n, flavor: real(k2, m, n, FLAVOR_TALL))
    assert V.verify_lambda_s2_decomposition(1, 2, 2).status == "fail"


def test_hwv_suite_reports_counterexample(monkeypatch):
    monkeypatch.setattr(V, "hwv_general", lambda lam, p, q, m, n: tensor_table(p, q, m, n).var("x", 1, p))
    rep = V.run_hwv_suite(V.CaseGrid("tensor", [(2, 0, 1, 1)], 2))
    assert rep.status == "fail"
    # the empty partition comes first and already fails the weight check
    assert rep.counterexample["lambda"] == "0"
    assert "weight" in rep.counterexample["reason"]


def test_hwv_suites_default_grids():
    for grid in (V.default_tensor_grid(), V.default_s2_grid()):
        rep = V.run_hwv_suite(grid)
        assert rep.passed, rep.counterexample
        assert len(rep.children) == len(grid.params)


def test_budget_gives_over_budget_status():
    rep = V.verify_s2_decomposition(2, 2, 4, budget=5)
    assert rep.status == "over-budget"
    assert "ceiling" in rep.counterexample["reason"]
    suite = V.run_hwv_suite(V.CaseGrid("s2", [(1, 2)], 6), budget=1)
    assert suite.status == "over-budget"


def test_report_json_is_stable():
    a = json.dumps(V.verify_skew_duality(1, 1, 1, 1, 3).as_dict(), sort_keys=True)
    b = json.dumps(V.verify_skew_duality(1, 1, 1, 1, 3).as_dict(), sort_keys=True)
    assert a == b
    d = json.loads(a)
    assert d["version"] and d["status"] == "pass" and "wall_time" not in d
    assert "wall_time" in V.verify_skew_duality(1, 1, 1, 1, 1).as_dict(timing=True)


def test_report_absorb_precedence():
    top = V.VerificationReport("top", {})
    ok = V.VerificationReport("a", {}, checks=2)
    bad = V.VerificationReport("b", {}, checks=1)
    bad.fail(reason="x")
    top.absorb(ok)
    top.absorb(bad)
    assert top.status == "fail" and top.checks == 3
    assert top.summary_lines()[2].startswith("    counterexample")
