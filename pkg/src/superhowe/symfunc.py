"""Schur, skew Schur and hook Schur polynomials, and truncated identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Mono, Poly, VarTable, _norm, even_table, mono_degree, superdet, to_text
from .combinatorics import (
    FLAVOR_TALL,
    FLAVOR_WIDE,
    Partition,
    is_nested_hook,
    partitions,
)


class NotContained(ValueError):
    pass


# ---------------------------------------------------------------------------
# Schur functions over an arbitrary list of commuting variables


def _key(vars_: Sequence[Poly]):
    return (vars_[0].table if vars_ else None, tuple(tuple(sorted(v.terms.items())) for v in vars_))


_H_CACHE: Dict = {}


def complete_h(k: int, vars_: Sequence[Poly], table: VarTable) -> Poly:
    """Complete homogeneous symmetric polynomial h_k."""
    if k < 0:
        return table.zero()
    if k == 0:
        return table.one()
    if not vars_:
        return table.zero()
    key = (table, _key(vars_), k)
    hit = _H_CACHE.get(key)
    if hit is not None:
        return hit
    last = vars_[-1]
    head = vars_[:-1]
    out = table.zero()
    power = table.one()
    for j in range(k + 1):
        out = out + power * complete_h(k - j, head, table)
        power = power * last
    _H_CACHE[key] = out
    return out


def _jacobi_trudi(lam: Partition, mu: Partition, vars_: Sequence[Poly], table: VarTable) -> Poly:
    n = max(len(lam), len(mu))
    if n == 0:
        return table.one()
    rows = [[complete_h(lam.row(i) - mu.row(j) - i + j, vars_, table) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return superdet(rows, table)


def schur(lam, vars_: Sequence[Poly], table: Optional[VarTable] = None) -> Poly:
    """Schur polynomial s_lam(vars) by the Jacobi-Trudi determinant."""
    lam = Partition(lam)
    table = table if table is not None else vars_[0].table
    if len(lam) > len(vars_):
        return table.zero()
    return _jacobi_trudi(lam, Partition(()), vars_, table)


def skew_schur(lam, mu, vars_: Sequence[Poly], table: Optional[VarTable] = None) -> Poly:
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    table = table if table is not None else vars_[0].table
    return _jacobi_trudi(lam, mu, vars_, table)


def sub_partitions(lam: Partition):
    """All partitions contained in ``lam``."""
    lam = Partition(lam)

    def rec(i: int, bound: int):
        if i > len(lam):
            yield ()
            return
        for a in range(min(bound, lam.row(i)), -1, -1):
            if a == 0:
                yield ()
            else:
                for rest in rec(i + 1, a):
                    yield (a,) + rest

    for parts in rec(1, lam.row(1)):
        yield Partition(parts)


def char_table(m: int, n: int) -> VarTable:
    return even_table(x=m, y=n)


_HS_CACHE: Dict = {}


def hook_schur(lam, m: int, n: int, *, x: Optional[Sequence[Poly]] = None, y: Optional[Sequence[Poly]] = None,
               table: Optional[VarTable] = None) -> Poly:
    """HS_lam(x; y) = sum over mu in lam, l(mu) <= m, of s_mu(x) s_{lam'/mu'}(y)."""
    lam = Partition(lam)
    if x is None and y is None:
        table = table or char_table(m, n)
        x = [table.var("x", i) for i in range(1, m + 1)]
        y = [table.var("y", j) for j in range(1, n + 1)]
    table = table or (x[0].table if x else y[0].table)
    key = (lam, table, _key(x), _key(y))
    hit = _HS_CACHE.get(key)
    if hit is not None:
        return hit
    conj = lam.conjugate()
    out = table.zero()
    for mu in sub_partitions(lam):
        if len(mu) > len(x):
            continue
        sx = schur(mu, x, table) if len(x) else (table.one() if not mu else table.zero())
        if not sx:
            continue
        if len(y):
            sy = skew_schur(conj, mu.conjugate(), y, table)
        else:
            sy = table.one() if mu == lam else table.zero()
        if sy:
            out = out + sx * sy
    _HS_CACHE[key] = out
    return out


def hook_tableaux_polynomial(lam, m: int, n: int, table: Optional[VarTable] = None) -> Poly:
    """Generating polynomial of (m,n)-hook semistandard tableaux of shape ``lam``.

    Letters 1..m (weight x_i) precede 1'..n' (weight y_j).  Unprimed letters
    weakly increase along rows and strictly down columns; primed letters
    strictly increase along rows and weakly down columns.
    """
    lam = Partition(lam)
    table = table or char_table(m, n)
    cells = list(lam.cells())
    letters = list(range(m + n))  # 0..m-1 unprimed, m..m+n-1 primed
    filling: Dict[Tuple[int, int], int] = {}
    counts: Dict[Tuple[int, ...], int] = {}
    weight = [0] * (m + n)

    def ok(i: int, j: int, a: int) -> bool:
        primed = a >= m
        left = filling.get((i, j - 1))
        if left is not None and (left > a or (left == a and primed)):
            return False
        up = filling.get((i - 1, j))
        if up is not None and (up > a or (up == a and not primed)):
            return False
        return True

    def rec(idx: int):
        if idx == len(cells):
            key = tuple(weight)
            counts[key] = counts.get(key, 0) + 1
            return
        i, j = cells[idx]
        for a in letters:
            if ok(i, j, a):
                filling[(i, j)] = a
                weight[a] += 1
                rec(idx + 1)
                weight[a] -= 1
                del filling[(i, j)]

    rec(0)
    terms: Dict[Mono, int] = {}
    # the character table lists x_1..x_m then y_1..y_n as its even slots
    for w, c in counts.items():
        exps = [0] * table.n_even
        for a, e in enumerate(w):
            v = table.lookup("x", a + 1) if a < m else table.lookup("y", a - m + 1)
            exps[table.slot[v]] = e
        terms[(tuple(exps), 0)] = c
    return Poly(table, terms)


# ---------------------------------------------------------------------------
# truncated series


def truncate(f: Poly, maxdeg: int) -> Poly:
    return Poly(f.table, {k: v for k, v in f.terms.items() if mono_degree(k) <= maxdeg})


def mul_trunc(f: Poly, g: Poly, maxdeg: int) -> Poly:
    out: Dict[Mono, object] = {}
    fd = [(k, v, mono_degree(k)) for k, v in f.terms.items()]
    gd = [(k, v, mono_degree(k)) for k, v in g.terms.items()]
    for (ea, _), ca, da in fd:
        for (eb, _), cb, db in gd:
            if da + db > maxdeg:
                continue
            key = (tuple(a + b for a, b in zip(ea, eb)), 0)
            out[key] = out.get(key, 0) + ca * cb
    return Poly(f.table, {k: _norm(v) for k, v in out.items() if v})


def geometric(a: Poly, maxdeg: int) -> Poly:
    """Truncation of (1 - a)^{-1} for ``a`` without constant term."""
    out = a.table.one()
    power = a.table.one()
    while True:
        power = mul_trunc(power, a, maxdeg)
        if not power:
            return out
        out = out + power


def product_series(factors: Sequence[Tuple[str, Poly]], maxdeg: int, table: VarTable) -> Poly:
    """Multiply factors ``(1 + a)`` (kind "+") or ``(1 - a)^{-1}`` (kind "-") up to ``maxdeg``."""
    out = table.one()
    for kind, a in factors:
        factor = table.one() + a if kind == "+" else geometric(a, maxdeg)
        out = mul_trunc(out, factor, maxdeg)
    return out


@dataclass
class IdentityReport:
    name: str
    params: Dict[str, int]
    max_degree: int
    passed: bool
    terms_compared: int = 0
    first_failure: Optional[str] = None
    details: Dict[str, object] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, object]:
        return {
            "identity": self.name,
            "params": dict(self.params),
            "max_degree": self.max_degree,
            "status": "pass" if self.passed else "fail",
            "terms_compared": self.terms_compared,
            "first_failure": self.first_failure,
        }


def _compare(name: str, params, maxdeg: int, lhs: Poly, rhs: Poly) -> IdentityReport:
    diff = lhs - rhs
    first = None
    if diff:
        mono = min(diff.terms, key=lambda k: (mono_degree(k), k))
        first = f"monomial {to_text(Poly(diff.table, {mono: 1}))}: lhs {lhs.terms.get(mono, 0)} rhs {rhs.terms.get(mono, 0)}"
    return IdentityReport(name, dict(params), maxdeg, not diff, len(set(lhs.terms) | set(rhs.terms)), first)


def _four_table(p: int, q: int, m: int, n: int) -> VarTable:
    return even_table(x=p, y=q, u=m, v=n)


def _vars(t: VarTable, fam: str, k: int) -> List[Poly]:
    return [t.var(fam, i) for i in range(1, k + 1)]


def verify_super_cauchy(p: int, q: int, m: int, n: int, maxdeg: int) -> IdentityReport:
    """sum HS_lam(x,y) HS_lam(u,v) against the product side, up to (x,y)-degree ``maxdeg``."""
    t = _four_table(p, q, m, n)
    x, y, u, v = _vars(t, "x", p), _vars(t, "y", q), _vars(t, "u", m), _vars(t, "v", n)
    factors = [("-", xi * uk) for xi in x for uk in u]
    factors += [("-", yj * vl) for yj in y for vl in v]
    factors += [("+", xi * vl) for xi in x for vl in v]
    factors += [("+", yj * uk) for yj in y for uk in u]
    rhs = product_series(factors, 2 * maxdeg, t)
    lhs = t.zero()
    for k in range(maxdeg + 1):
        for lam in partitions(k):
            if not (lam.in_hook(p, q) and lam.in_hook(m, n)):
                continue
            lhs = lhs + hook_schur(lam, p, q, x=x, y=y, table=t) * hook_schur(lam, m, n, x=u, y=v, table=t)
    return _compare("super-cauchy", {"p": p, "q": q, "m": m, "n": n}, maxdeg, lhs, rhs)


def verify_super_dual_cauchy(p: int, q: int, m: int, n: int, maxdeg: int) -> IdentityReport:
    t = _four_table(p, q, m, n)
    x, y, u, v = _vars(t, "x", p), _vars(t, "y", q), _vars(t, "u", m), _vars(t, "v", n)
    factors = [("+", xi * uk) for xi in x for uk in u]
    factors += [("+", yj * vl) for yj in y for vl in v]
    factors += [("-", xi * vl) for xi in x for vl in v]
    factors += [("-", yj * uk) for yj in y for uk in u]
    rhs = product_series(factors, 2 * maxdeg, t)
    lhs = t.zero()
    for k in range(maxdeg + 1):
        for lam in partitions(k):
            conj = lam.conjugate()
            if not (lam.in_hook(p, q) and conj.in_hook(m, n)):
                continue
            lhs = lhs + hook_schur(lam, p, q, x=x, y=y, table=t) * hook_schur(conj, m, n, x=u, y=v, table=t)
    return _compare("super-dual-cauchy", {"p": p, "q": q, "m": m, "n": n}, maxdeg, lhs, rhs)


def s2_series(m: int, n: int, maxdeg: int, exterior: bool, table: VarTable) -> Poly:
    """Character of S(S^2 C^{m|n}) (or of its exterior algebra) up to ``maxdeg``."""
    x, y = _vars(table, "x", m), _vars(table, "y", n)
    even_kind, odd_kind = ("+", "-") if exterior else ("-", "+")
    factors = [(even_kind, x[i] * x[j]) for i in range(m) for j in range(i, m)]
    factors += [(even_kind, y[i] * y[j]) for i in range(n) for j in range(i + 1, n)]
    factors += [(odd_kind, xi * yj) for xi in x for yj in y]
    return product_series(factors, maxdeg, table)


def verify_s2_characters(m: int, n: int, maxdeg: int) -> List[IdentityReport]:
    """Both symmetric-square identities: even-rowed sum and nested (k+1,k)-hook sum."""
    t = char_table(m, n)
    reports = []
    lhs = t.zero()
    for k in range(maxdeg + 1):
        for lam in partitions(k):
            if lam.is_even_rowed() and lam.in_hook(m, n):
                lhs = lhs + hook_schur(lam, m, n, table=t)
    reports.append(_compare("s2-symmetric", {"m": m, "n": n}, maxdeg, lhs, s2_series(m, n, maxdeg, False, t)))
    lhs = t.zero()
    for k in range(maxdeg + 1):
        for lam in partitions(k):
            if is_nested_hook(lam, FLAVOR_WIDE) and lam.in_hook(m, n):
                lhs = lhs + hook_schur(lam, m, n, table=t)
    reports.append(_compare("s2-exterior", {"m": m, "n": n}, maxdeg, lhs, s2_series(m, n, maxdeg, True, t)))
    return reports


def verify_classical_quartet(m: int, maxdeg: int) -> List[IdentityReport]:
    """The four classical Schur identities for S and Lambda of S^2 and Lambda^2 of C^m."""
    t = even_table(x=m)
    x = _vars(t, "x", m)
    sq = [x[i] * x[j] for i in range(m) for j in range(i, m)]
    alt = [x[i] * x[j] for i in range(m) for j in range(i + 1, m)]
    sums = {"sym-sym": t.zero(), "sym-skew": t.zero(), "skew-sym": t.zero(), "skew-skew": t.zero()}
    for k in range(maxdeg + 1):
        for lam in partitions(k):
            conj = lam.conjugate()
            if lam.is_even_rowed() and len(lam) <= m:
                sums["sym-sym"] = sums["sym-sym"] + schur(lam, x, t)
            if conj.is_even_rowed() and len(lam) <= m:
                sums["sym-skew"] = sums["sym-skew"] + schur(lam, x, t)
            arms, _ = lam.frobenius()
            if is_nested_hook(lam, FLAVOR_WIDE) and all(a <= m for a in arms):
                sums["skew-sym"] = sums["skew-sym"] + schur(lam, x, t)
            if is_nested_hook(lam, FLAVOR_TALL) and all(a + 1 <= m - 1 for a in arms):
                sums["skew-skew"] = sums["skew-skew"] + schur(lam, x, t)
    rhs = {
        "sym-sym": product_series([("-", a) for a in sq], maxdeg, t),
        "sym-skew": product_series([("-", a) for a in alt], maxdeg, t),
        "skew-sym": product_series([("+", a) for a in sq], maxdeg, t),
        "skew-skew": product_series([("+", a) for a in alt], maxdeg, t),
    }
    return [_compare(name, {"m": m}, maxdeg, truncate(sums[name], maxdeg), rhs[name]) for name in sums]
