"""Theorem-level checks: joint characters, highest weight suites, counting."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import __version__
from .algebra import (
    NotDivisible,
    OverBudget,
    Poly,
    Var,
    VarTable,
    even_table,
    mono_degree,
    s2_table,
    tensor_table,
    term_ceiling,
    to_text,
)
from .combinatorics import (
    FLAVOR_WIDE,
    Partition,
    enumerate_even_partitions,
    enumerate_hook_partitions,
    enumerate_nested_hook_partitions,
    partitions,
)
from .hwv import AuxiliaryResidue, hwv_general, hwv_s2
from .operators import (
    NotAWeightVector,
    build_glmn,
    build_glpq,
    build_s2_glmn,
    diagram_to_hw,
    first_nonannihilating,
    weight_of,
)
from .symfunc import char_table, hook_schur

DEFAULT_TENSOR_GRID: Tuple[Tuple[int, int, int, int], ...] = (
    (1, 1, 1, 1),
    (2, 1, 1, 1),
    (1, 1, 2, 1),
    (2, 1, 2, 1),
    (2, 2, 1, 1),
    (3, 0, 1, 2),
    (2, 0, 1, 1),
)
DEFAULT_S2_GRID: Tuple[Tuple[int, int], ...] = ((1, 2), (2, 2), (1, 4), (2, 3))
TENSOR_MAX_SIZE = 5
S2_MAX_SIZE = 8


@dataclass
class CaseGrid:
    model: str  # "tensor" or "s2"
    params: List[Tuple[int, ...]]
    max_size: int


@dataclass
class VerificationReport:
    theorem: str
    params: Dict[str, object]
    degree: Optional[int] = None
    status: str = "pass"  # pass | fail | over-budget
    checks: int = 0
    counterexample: Optional[Dict[str, str]] = None
    wall_time: float = 0.0
    children: List["VerificationReport"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, **counterexample: str) -> None:
        if self.status == "pass":
            self.status = "fail"
            self.counterexample = {k: str(v) for k, v in counterexample.items()}

    def absorb(self, child: "VerificationReport") -> None:
        self.children.append(child)
        self.checks += child.checks
        if child.status == "over-budget" and self.status == "pass":
            self.status = "over-budget"
            self.counterexample = child.counterexample
        elif child.status == "fail" and self.status != "fail":
            self.status = "fail"
            self.counterexample = child.counterexample

    def as_dict(self, timing: bool = False) -> Dict[str, object]:
        out: Dict[str, object] = {
            "version": __version__,
            "theorem": self.theorem,
            "params": self.params,
            "degree": self.degree,
            "status": self.status,
            "checks": self.checks,
            "counterexample": self.counterexample,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        if self.children:
            out["cases"] = [c.as_dict(timing) for c in self.children]
        return out

    def summary_lines(self) -> List[str]:
        lines = []
        for c in self.children or [self]:
            ps = ",".join(f"{k}={v}" for k, v in c.params.items())
            deg = "" if c.degree is None else f" deg<={c.degree}"
            lines.append(f"{c.theorem:<28} {ps:<24}{deg:<9} {c.status:<11} checks={c.checks}")
            if c.counterexample:
                lines.append("    counterexample: " + "; ".join(f"{k}={v}" for k, v in c.counterexample.items()))
        return lines


def _guarded(report: VerificationReport, budget: Optional[int], body: Callable[[], None]) -> VerificationReport:
    start = time.perf_counter()
    try:
        with term_ceiling(budget):
            body()
    except OverBudget as exc:
        report.status = "over-budget"
        report.counterexample = {"reason": str(exc)}
    report.wall_time = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# characters from monomial bases


def _monomial_character(table: VarTable, k: int, images: Dict[Var, Tuple[int, ...]], target: VarTable) -> Poly:
    """Sum over degree-k monomials of ``table`` of the product of variable weights.

    ``images`` gives, for every variable, an exponent vector on ``target``'s
    even slots.  Odd variables may appear at most once.
    """
    evens = [images[v] for v in table.evens]
    odds = [images[v] for v in table.odds]
    width = target.n_even
    out: Dict[Tuple[int, ...], int] = {}

    def add(vec, img, times):
        return tuple(a + times * b for a, b in zip(vec, img))

    def rec_even(i: int, left: int, vec):
        if i == len(evens):
            if left == 0:
                out[vec] = out.get(vec, 0) + 1
            return
        if i == len(evens) - 1:
            rec_even(i + 1, 0, add(vec, evens[i], left))
            return
        for e in range(left, -1, -1):
            rec_even(i + 1, left - e, add(vec, evens[i], e))

    def rec_odd(j: int, left: int, vec):
        if j == len(odds):
            if evens:
                rec_even(0, left, vec)
            elif left == 0:
                out[vec] = out.get(vec, 0) + 1
            return
        rec_odd(j + 1, left, vec)
        if left:
            rec_odd(j + 1, left - 1, add(vec, odds[j], 1))

    rec_odd(0, k, (0,) * width)
    return Poly(target, {(vec, 0): c for vec, c in out.items()})


def _slot_vec(target: VarTable, *names: Tuple[str, int]) -> Tuple[int, ...]:
    vec = [0] * target.n_even
    for fam, i in names:
        vec[target.slot[target.lookup(fam, i)]] += 1
    return tuple(vec)


def _flip_parity(table: VarTable) -> VarTable:
    vs = [Var(v.family, v.index, not v.odd, v.aux) for v in table.variables]
    # keep the even variables first for readability
    vs.sort(key=lambda v: v.odd)
    return VarTable(vs, table.name + "^flip")


def tensor_character_images(table: VarTable, target: VarTable) -> Dict[Var, Tuple[int, ...]]:
    img = {}
    for v in table.variables:
        a, b = v.index
        if v.family == "x":
            img[v] = _slot_vec(target, ("x", b), ("u", a))
        elif v.family == "xi":
            img[v] = _slot_vec(target, ("y", b), ("u", a))
        elif v.family == "h":
            img[v] = _slot_vec(target, ("x", b), ("v", a))
        else:
            img[v] = _slot_vec(target, ("y", b), ("v", a))
    return img


def s2_character_images(table: VarTable, target: VarTable) -> Dict[Var, Tuple[int, ...]]:
    img = {}
    for v in table.variables:
        a, b = v.index
        if v.family == "x":
            img[v] = _slot_vec(target, ("x", a), ("x", b))
        elif v.family == "y":
            img[v] = _slot_vec(target, ("y", a), ("y", b))
        else:
            img[v] = _slot_vec(target, ("y", a), ("x", b))
    return img


def _compare_into(report: VerificationReport, lhs: Poly, rhs: Poly, label: str) -> None:
    report.checks += 1
    diff = lhs - rhs
    if diff:
        mono = min(diff.terms, key=lambda m: (mono_degree(m), m))
        report.fail(where=label, monomial=to_text(Poly(diff.table, {mono: 1})),
                    lhs=str(lhs.terms.get(mono, 0)), rhs=str(rhs.terms.get(mono, 0)))


def _tensor_duality(p: int, q: int, m: int, n: int, k: int, skew: bool, budget: Optional[int]) -> VerificationReport:
    name = "skew-duality" if skew else "tensor-duality"
    report = VerificationReport(name, {"p": p, "q": q, "m": m, "n": n}, k)

    def body():
        base = tensor_table(p, q, m, n)
        table = _flip_parity(base) if skew else base
        target = even_table(x=p, y=q, u=m, v=n)
        x = [target.var("x", i) for i in range(1, p + 1)]
        y = [target.var("y", j) for j in range(1, q + 1)]
        u = [target.var("u", l) for l in range(1, m + 1)]
        v = [target.var("v", l) for l in range(1, n + 1)]
        images = tensor_character_images(base, target)
        images = {Var(w.family, w.index, not w.odd, w.aux) if skew else w: vec for w, vec in images.items()}
        for deg in range(k + 1):
            lhs = _monomial_character(table, deg, images, target)
            rhs = target.zero()
            labels = []
            for lam in partitions(deg):
                other = lam.conjugate() if skew else lam
                if not (lam.in_hook(p, q) and other.in_hook(m, n)):
                    continue
                left = hook_schur(lam, p, q, x=x, y=y, table=target)
                right = hook_schur(other, m, n, x=u, y=v, table=target)
                report.checks += 1
                if not left or not right:
                    report.fail(where=f"degree {deg}", reason=f"vanishing hook Schur factor for {lam}")
                rhs = rhs + left * right
                labels.append((diagram_to_hw(lam, p, q), diagram_to_hw(other, m, n)))
            report.checks += 1
            if len(set(labels)) != len(labels):
                report.fail(where=f"degree {deg}", reason="repeated joint highest weight")
            _compare_into(report, lhs, rhs, f"degree {deg}")
            # dimension count at x = y = u = v = 1
            e_dim = p * m + q * n
            o_dim = q * m + p * n
            if skew:
                e_dim, o_dim = o_dim, e_dim
            expected = _super_dim(e_dim, o_dim, deg)
            report.checks += 1
            if sum(rhs.terms.values()) != expected or sum(lhs.terms.values()) != expected:
                report.fail(where=f"degree {deg}", reason=f"dimension mismatch, expected {expected}")

    return _guarded(report, budget, body)


def _super_dim(e: int, o: int, k: int) -> int:
    """Dimension of S^k of a space with ``e`` even and ``o`` odd basis vectors."""
    total = 0
    for j in range(0, min(o, k) + 1):
        rest = k - j
        even_part = comb(e + rest - 1, rest) if e else (1 if rest == 0 else 0)
        total += comb(o, j) * even_part
    return total


def verify_tensor_duality(p: int, q: int, m: int, n: int, k: int, budget: Optional[int] = None) -> VerificationReport:
    return _tensor_duality(p, q, m, n, k, False, budget)


def verify_skew_duality(p: int, q: int, m: int, n: int, k: int, budget: Optional[int] = None) -> VerificationReport:
    return _tensor_duality(p, q, m, n, k, True, budget)


def _s2_decomposition(m: int, n: int, k: int, exterior: bool, budget: Optional[int]) -> VerificationReport:
    name = "lambda-s2-decomposition" if exterior else "s2-decomposition"
    report = VerificationReport(name, {"m": m, "n": n}, k)

    def body():
        base = s2_table(m, n)
        table = _flip_parity(base) if exterior else base
        target = char_table(m, n)
        images = s2_character_images(base, target)
        if exterior:
            images = {Var(w.family, w.index, not w.odd, w.aux): vec for w, vec in images.items()}
        e_dim = m * (m + 1) // 2 + n * (n - 1) // 2
        o_dim = m * n
        if exterior:
            e_dim, o_dim = o_dim, e_dim
        for deg in range(k + 1):
            lhs = _monomial_character(table, deg, images, target)
            if exterior:
                lams = enumerate_nested_hook_partitions(2 * deg, m, n, FLAVOR_WIDE)
            else:
                lams = enumerate_even_partitions(2 * deg, m, n)
            rhs = target.zero()
            for lam in lams:
                hs = hook_schur(lam, m, n, table=target)
                report.checks += 1
                if not hs:
                    report.fail(where=f"degree {deg}", reason=f"vanishing hook Schur function for {lam}")
                rhs = rhs + hs
            _compare_into(report, lhs, rhs, f"degree {deg}")
            report.checks += 1
            expected = _super_dim(e_dim, o_dim, deg)
            if sum(lhs.terms.values()) != expected:
                report.fail(where=f"degree {deg}", reason=f"dimension mismatch, expected {expected}")

    return _guarded(report, budget, body)


def verify_s2_decomposition(m: int, n: int, k: int, budget: Optional[int] = None) -> VerificationReport:
    return _s2_decomposition(m, n, k, False, budget)


def verify_lambda_s2_decomposition(m: int, n: int, k: int, budget: Optional[int] = None) -> VerificationReport:
    return _s2_decomposition(m, n, k, True, budget)


# ---------------------------------------------------------------------------
# highest weight vector suites


def check_tensor_vector(f: Poly, lam: Partition, p: int, q: int, m: int, n: int) -> Optional[Dict[str, str]]:
    """None if ``f`` is a nonzero joint highest weight vector of the right weight."""
    if not f:
        return {"lambda": str(lam), "reason": "zero vector"}
    Rs = [build_glpq(p, q, m, n, f.table), build_glmn(p, q, m, n, f.table)]
    expected = [diagram_to_hw(lam, p, q).entries(), diagram_to_hw(lam, m, n).entries()]
    for R, want in zip(Rs, expected):
        try:
            got = weight_of(f, R).entries
        except NotAWeightVector as exc:
            return {"lambda": str(lam), "reason": f"{R.name}: {exc}"}
        if got != want:
            return {"lambda": str(lam), "reason": f"{R.name} weight {got} != {want}"}
    bad = first_nonannihilating(f, Rs)
    if bad:
        return {"lambda": str(lam), "operator": f"{bad[0]} {bad[1]}", "residual": to_text(bad[2])}
    return None


def check_s2_vector(f: Poly, lam: Partition, m: int, n: int) -> Optional[Dict[str, str]]:
    if not f:
        return {"lambda": str(lam), "reason": "zero vector"}
    R = build_s2_glmn(m, n, f.table)
    want = diagram_to_hw(lam, m, n).entries()
    try:
        got = weight_of(f, R).entries
    except NotAWeightVector as exc:
        return {"lambda": str(lam), "reason": str(exc)}
    if got != want:
        return {"lambda": str(lam), "reason": f"weight {got} != {want}"}
    bad = first_nonannihilating(f, [R])
    if bad:
        return {"lambda": str(lam), "operator": bad[1], "residual": to_text(bad[2])}
    return None


def tensor_cases(params: Sequence[int], max_size: int) -> Iterator[Partition]:
    p, q, m, n = params
    for k in range(max_size + 1):
        yield from enumerate_hook_partitions(k, p, q, m, n)


def s2_cases(params: Sequence[int], max_size: int) -> Iterator[Partition]:
    m, n = params
    for k in range(0, max_size + 1, 2):
        yield from enumerate_even_partitions(k, m, n)


def hwv_corpus(tensor_grid=DEFAULT_TENSOR_GRID, s2_grid=DEFAULT_S2_GRID,
               tensor_size: int = TENSOR_MAX_SIZE, s2_size: int = S2_MAX_SIZE) -> Iterator[Tuple[str, Tuple[int, ...], Partition, Poly]]:
    """Every vector of the default suites as ``(model, params, lambda, vector)``."""
    for params in tensor_grid:
        for lam in tensor_cases(params, tensor_size):
            yield "tensor", params, lam, hwv_general(lam, *params)
    for params in s2_grid:
        for lam in s2_cases(params, s2_size):
            yield "s2", params, lam, hwv_s2(lam, *params)


def _hwv_cell(model: str, params: Tuple[int, ...], max_size: int, budget: Optional[int]) -> VerificationReport:
    names = ("p", "q", "m", "n") if model == "tensor" else ("m", "n")
    theorem = "hwv-tensor" if model == "tensor" else "hwv-s2"
    report = VerificationReport(theorem, dict(zip(names, params)), max_size)

    def body():
        cases = tensor_cases(params, max_size) if model == "tensor" else s2_cases(params, max_size)
        for lam in cases:
            report.checks += 1
            try:
                if model == "tensor":
                    f = hwv_general(lam, *params)
                    bad = check_tensor_vector(f, lam, *params)
                else:
                    f = hwv_s2(lam, *params)
                    bad = check_s2_vector(f, lam, *params)
            except (NotDivisible, AuxiliaryResidue) as exc:
                bad = {"lambda": str(lam), "reason": f"{type(exc).__name__}: {exc}"}
            if bad:
                report.fail(**bad)

    return _guarded(report, budget, body)


def run_hwv_suite(grid: CaseGrid, budget: Optional[int] = None) -> VerificationReport:
    report = VerificationReport(f"hwv-suite-{grid.model}", {"cells": len(grid.params)}, grid.max_size)
    start = time.perf_counter()
    for params in grid.params:
        report.absorb(_hwv_cell(grid.model, tuple(params), grid.max_size, budget))
    report.wall_time = time.perf_counter() - start
    return report


def default_tensor_grid() -> CaseGrid:
    return CaseGrid("tensor", list(DEFAULT_TENSOR_GRID), TENSOR_MAX_SIZE)


def default_s2_grid() -> CaseGrid:
    return CaseGrid("s2", list(DEFAULT_S2_GRID), S2_MAX_SIZE)


def run_default_suite(max_degree: int = 4, budget: Optional[int] = None) -> VerificationReport:
    """Both HWV grids plus the character decompositions up to ``max_degree``."""
    report = VerificationReport("default-suite", {}, max_degree)
    start = time.perf_counter()
    report.absorb(run_hwv_suite(default_tensor_grid(), budget))
    report.absorb(run_hwv_suite(default_s2_grid(), budget))
    for params in DEFAULT_TENSOR_GRID:
        report.absorb(verify_tensor_duality(*params, max_degree, budget=budget))
        report.absorb(verify_skew_duality(*params, max_degree, budget=budget))
    for params in DEFAULT_S2_GRID:
        report.absorb(verify_s2_decomposition(*params, max_degree, budget=budget))
        report.absorb(verify_lambda_s2_decomposition(*params, max_degree, budget=budget))
    report.wall_time = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# the gl(1|1) aside and a relation among S^2 highest weight vectors


def gl11_aside(i: int, j: int, p: int) -> Tuple[Poly, Poly, Poly]:
    """``(source, image, target)`` for the odd lowering operator of gl(1|1).

    ``source`` is (x_1^1)^i * Delta_{1,j} on C^{p|0} x C^{1|1}; ``image`` is
    its image under sum_l eta_1^l d/dx_1^l; ``target`` is
    (x_1^1)^i * eta_1^1 ... eta_1^j.  The image is a nonzero multiple of the target.
    """
    if not 1 <= j <= p:
        raise ValueError("need 1 <= j <= p")
    from .hwv import delta_kr
    from .operators import SuperDerivation

    t = tensor_table(p, 0, 1, 1)
    x11 = t.var("x", 1, 1)
    source = x11 ** i * delta_kr(1, j, 1, t)
    lower = SuperDerivation(
        [(1, t.lookup("h", 1, l), t.lookup("x", 1, l)) for l in range(1, p + 1)], t, "f_odd")
    image = lower(source)
    target = x11 ** i
    for l in range(1, j + 1):
        target = target * t.var("h", 1, l)
    return source, image, target


def proportional(f: Poly, g: Poly) -> bool:
    if not f or not g:
        return not f and not g
    return f.normalized() == g.normalized()


def _row_sum(a: Partition, b: Partition) -> Tuple[int, ...]:
    width = max(len(a), len(b))
    return tuple(a.row(r) + b.row(r) for r in range(1, width + 1))


def s2_generators(m: int, n: int, max_size: int = 6) -> List[Partition]:
    """Even partitions whose vector is not proportional to a product of two smaller ones."""
    lams = [lam for k in range(2, max_size + 1, 2) for lam in enumerate_even_partitions(k, m, n)]
    vecs = {lam: hwv_s2(lam, m, n) for lam in lams}
    gens = []
    for lam in lams:
        split = any(
            _row_sum(a, b) == tuple(lam) and proportional(vecs[a] * vecs[b], vecs[lam])
            for ia, a in enumerate(lams) if a.size < lam.size
            for b in lams[ia:] if a.size + b.size == lam.size
        )
        if not split:
            gens.append(lam)
    return gens


def find_s2_relation(m: int, n: int, max_size: int = 6) -> Optional[Tuple[Tuple[Partition, Partition], Tuple[Partition, Partition]]]:
    """First pair of distinct two-factor products of indecomposable S^2 vectors that are proportional.

    Pairs ``{a, b}`` and ``{c, d}`` are compared only when the products share
    a weight.  Such a relation shows that the
    algebra spanned by the vectors is not freely generated by them.
    """
    gens = s2_generators(m, n, max_size)
    vecs = {lam: hwv_s2(lam, m, n) for lam in gens}
    hw = {lam: diagram_to_hw(lam, m, n).entries() for lam in gens}
    by_weight: Dict[Tuple[int, ...], List[Tuple[Partition, Partition]]] = {}
    for ia, a in enumerate(gens):
        for b in gens[ia:]:
            w = tuple(u + v for u, v in zip(hw[a], hw[b]))
            by_weight.setdefault(w, []).append((a, b))
    for w in sorted(by_weight, key=lambda w: (sum(w), w)):
        group = by_weight[w]
        prods = [vecs[a] * vecs[b] for a, b in group]
        for x in range(len(group)):
            for y in range(x + 1, len(group)):
                if prods[x] and proportional(prods[x], prods[y]):
                    return group[x], group[y]
    return None


def from_identity(rep) -> VerificationReport:
    """Wrap a symmetric-function ``IdentityReport`` in the common report shape."""
    out = VerificationReport(rep.name, dict(rep.params), rep.max_degree,
                             "pass" if rep.passed else "fail", rep.terms_compared)
    if not rep.passed:
        out.counterexample = {"first_failure": str(rep.first_failure)}
    return out
