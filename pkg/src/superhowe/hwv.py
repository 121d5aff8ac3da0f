"""Explicit highest weight vectors and the determinant identities behind them.

Two models are covered.  The tensor model lives in C[x, xi, eta, y]
(see :func:`superhowe.algebra.tensor_table`; the eta family is named ``h``),
the symmetric-square model in C[x, y, eta] (:func:`superhowe.algebra.s2_table`).
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .algebra import (
    Poly,
    Var,
    VarTable,
    divide_exact,
    project,
    s2_table,
    substitute,
    superdet,
    tensor_table,
)
from .combinatorics import (
    MarkedDiagram,
    Partition,
    enumerate_marked_diagrams,
    enumerate_marked_families,
    enumerate_pairings,
    perm_sign,
)
from .operators import HookViolation


class AuxiliaryResidue(ArithmeticError):
    """The purified vector still depends on auxiliary variables."""


class BoundsError(ValueError):
    pass


def _ordered_product(factors: Iterable[Poly], table: VarTable) -> Poly:
    out = table.one()
    for f in factors:
        out = out * f
    return out


# ---------------------------------------------------------------------------
# tensor model: minors and mixed determinants


def delta_r(r: int, table: VarTable) -> Poly:
    """Leading r x r minor of the x-matrix; entry (i, j) is x_j^i."""
    rows = [[table.var("x", j, i) for j in range(1, r + 1)] for i in range(1, r + 1)]
    return superdet(rows, table)


def delta_kr(k: int, r: int, m: int, table: VarTable) -> Poly:
    """m rows (x_j^1..x_j^r) followed by r - m copies of (eta_k^1..eta_k^r)."""
    if r < m:
        raise BoundsError(f"need r >= m, got r={r}, m={m}")
    rows = [[table.var("x", j, i) for i in range(1, r + 1)] for j in range(1, m + 1)]
    eta = [table.var("h", k, i) for i in range(1, r + 1)]
    rows += [eta] * (r - m)
    return superdet(rows, table)


def x_matrix(p: int, table: VarTable) -> List[List[Poly]]:
    """The p x p matrix with rows (x_l^1..x_l^p), l = 1..p (auxiliary rows included)."""
    return [[table.var("x", l, i) for i in range(1, p + 1)] for l in range(1, p + 1)]


def x_sub_matrix(I: Iterable[int], j: int, p: int, table: VarTable) -> List[List[Poly]]:
    """X with every row in ``I`` replaced by (eta_j^1..eta_j^p)."""
    I = set(I)
    if any(i < 1 or i > p for i in I):
        raise BoundsError(f"row set {sorted(I)} outside 1..{p}")
    eta = [table.var("h", j, i) for i in range(1, p + 1)]
    return [eta if l in I else row for l, row in enumerate(x_matrix(p, table), 1)]


def x_sub_det(I: Iterable[int], j: int, p: int, table: VarTable) -> Poly:
    return superdet(x_sub_matrix(I, j, p, table), table)


def verify_keylemma(p: int) -> bool:
    """prod_i det X_1(i) == (det X)^{p-1} det X_1(1..p) / p!"""
    t = tensor_table(p, 0, p, 1)
    lhs = _ordered_product((x_sub_det([i], 1, p, t) for i in range(1, p + 1)), t)
    detx = superdet(x_matrix(p, t), t)
    rhs = (detx ** (p - 1)) * x_sub_det(range(1, p + 1), 1, p, t) * Fraction(1, factorial(p))
    return lhs == rhs


def merge_sign(I: Sequence[int], J: Sequence[int]) -> int:
    return perm_sign(list(I) + list(J))


def verify_maincor(p: int, I: Sequence[int], J: Sequence[int]) -> Dict[str, bool]:
    """Check the three parts for the pair (I, J); returns which parts held."""
    I, J = sorted(I), sorted(J)
    t = tensor_table(p, 0, p, 1)
    detx = superdet(x_matrix(p, t), t)
    dI, dJ = x_sub_det(I, 1, p, t), x_sub_det(J, 1, p, t)
    prodIJ = dI * dJ
    out = {"i": (not prodIJ) == bool(set(I) & set(J))}
    ok_ii = True
    for S in (I, J):
        if S:
            lhs = _ordered_product((x_sub_det([i], 1, p, t) for i in S), t)
            rhs = (detx ** (len(S) - 1)) * x_sub_det(S, 1, p, t) * Fraction(1, factorial(len(S)))
            ok_ii = ok_ii and lhs == rhs
    out["ii"] = ok_ii
    if set(I) & set(J):
        out["iii"] = True
    else:
        coeff = Fraction(merge_sign(I, J) * factorial(len(I)) * factorial(len(J)), factorial(len(I) + len(J)))
        out["iii"] = prodIJ == detx * x_sub_det(set(I) | set(J), 1, p, t) * coeff
    return out


def identity_cor_factors(p: int, q: int, m: int) -> Tuple[Poly, Poly]:
    """The two mixed determinants whose product vanishes when p >= q > m."""
    if not (p >= q > m >= 0):
        raise BoundsError("need p >= q > m")
    t = tensor_table(p, 0, m, 2)
    a = delta_kr(1, p, m, t)
    rows = [[t.var("x", j, i) for i in range(1, q + 1)] for j in range(1, m + 1)]
    rows.append([t.var("h", 1, i) for i in range(1, q + 1)])
    rows += [[t.var("h", 2, i) for i in range(1, q + 1)]] * (q - m - 1)
    b = superdet(rows, t)
    return a, b


def verify_identity_cor(p: int, q: int, m: int) -> bool:
    a, b = identity_cor_factors(p, q, m)
    return bool(a) and bool(b) and not (a * b)


# ---------------------------------------------------------------------------
# q = 0


def _r_index(lam: Partition, bound: int) -> int:
    """Number of columns of ``lam`` longer than ``bound``."""
    return sum(1 for c in lam.conjugate() if c > bound)


def hwv_q_zero(lam, p: int, m: int, n: int, table: Optional[VarTable] = None) -> Poly:
    lam = Partition(lam)
    if len(lam) > p or lam.row(m + 1) > n:
        raise HookViolation(f"{lam} not admissible for gl({p}) x gl({m}|{n})")
    t = table if table is not None else tensor_table(p, 0, m, n)
    conj = lam.conjugate()
    r = _r_index(lam, m)
    factors = [delta_kr(k, conj[k - 1], m, t) for k in range(1, r + 1)]
    factors += [delta_r(c, t) for c in conj[r:]]
    return _ordered_product(factors, t)


# ---------------------------------------------------------------------------
# p = m


def y_marked_matrix(D: MarkedDiagram, table: VarTable) -> List[List[Poly]]:
    """Y (r x r, entries y_k^j) with row c replaced by (xi_j^1..xi_j^r) when column c is marked at row j."""
    r = D.r
    rows = []
    for c in range(1, r + 1):
        mark = D.marks[c - 1]
        fam, lead = ("y", c) if mark is None else ("xi", mark)
        rows.append([table.var(fam, lead, j) for j in range(1, r + 1)])
    return rows


def gamma_r_pm(r: int, m: int, q: int, n: int, table: Optional[VarTable] = None) -> Poly:
    """Signed sum over marked m x r diagrams of det X_D det Y_D (the p = m case)."""
    if r > min(q, n):
        raise BoundsError(f"need r <= min(q, n), got r={r}")
    t = table if table is not None else tensor_table(m, q, m, n)
    cache: Dict[Tuple[int, Optional[int]], Poly] = {}

    def det_x(col: int, mark: Optional[int]) -> Poly:
        key = (col, mark)
        if key not in cache:
            cache[key] = x_sub_det([] if mark is None else [mark], col, m, t)
        return cache[key]

    total = t.zero()
    for D in enumerate_marked_diagrams(m, r):
        d = D.size
        sign = -1 if (d * (d - 1) // 2) & 1 else 1
        xd = _ordered_product((det_x(c, D.marks[c - 1]) for c in range(1, r + 1)), t)
        if not xd:
            continue
        yd = superdet(y_marked_matrix(D, t), t)
        total = total + (xd * yd).scale(sign)
    return total


def hwv_p_equals_m(lam, m: int, q: int, n: int, table: Optional[VarTable] = None) -> Poly:
    lam = Partition(lam)
    if lam.row(m + 1) > min(q, n):
        raise HookViolation(f"{lam}: lambda_{m + 1} exceeds min(q, n)")
    t = table if table is not None else tensor_table(m, q, m, n)
    conj = lam.conjugate()
    if len(lam) <= m:
        return _ordered_product((delta_r(c, t) for c in conj), t)
    rows = lam[m:]
    gammas = _ordered_product((gamma_r_pm(w, m, q, n, t) for w in rows), t)
    exponent = sum(rows[1:])
    if exponent:
        gammas = divide_exact(gammas, delta_r(m, t) ** exponent)
    r = lam.row(m + 1)
    return gammas * _ordered_product((delta_r(c, t) for c in conj[r:]), t)


# ---------------------------------------------------------------------------
# general case


def gamma_general(widths: Sequence[int], p: int, m: int, q: int, n: int, table: Optional[VarTable] = None) -> Poly:
    """The purified marked-family vector for rows lambda_{p+1..p+s} = ``widths``.

    Computed over the table with auxiliary rows x_l^i (m < l <= p), divided by
    (det X)^{widths[0]} and projected back; raises :class:`AuxiliaryResidue`
    if auxiliary variables survive.
    """
    widths = tuple(widths)
    if not widths:
        base = table if table is not None else tensor_table(p, q, m, n)
        return base.one()
    if p < m:
        raise BoundsError("gamma_general needs p >= m")
    if widths[0] > min(q, n):
        raise BoundsError("widths exceed min(q, n)")
    aux = tensor_table(p, q, m, n, aux=p > m)
    base = table if table is not None else tensor_table(p, q, m, n)
    w1 = widths[0]
    upper = list(range(m + 1, p + 1))
    cache: Dict[Tuple[int, FrozenSet[int]], Poly] = {}

    def det_x(col: int, rows: FrozenSet[int]) -> Poly:
        key = (col, rows)
        if key not in cache:
            cache[key] = x_sub_det(rows, col, p, aux)
        return cache[key]

    ycache: Dict[MarkedDiagram, Poly] = {}

    def det_y(D: MarkedDiagram) -> Poly:
        if D not in ycache:
            ycache[D] = superdet(y_marked_matrix(D, aux), aux)
        return ycache[D]

    z = _ordered_product((det_x(c, frozenset(upper)) for c in range(1, w1 + 1)), aux)
    total = aux.zero()
    for fam in enumerate_marked_families(widths, m):
        size = fam.size
        sign = -1 if ((size * size - size) // 2) & 1 else 1
        sign *= fam.epsilon()
        denom = 1
        for e in fam.e():
            denom *= factorial(e)
        xd = z
        for c in range(1, w1 + 1):
            xd = xd * det_x(c, frozenset(fam.column_rows(c)))
            if not xd:
                break
        if not xd:
            continue
        yd = _ordered_product((det_y(D) for D in fam.diagrams), aux)
        total = total + (xd * yd) * Fraction(sign, denom)
    detx = superdet(x_matrix(p, aux), aux)
    purified = divide_exact(total, detx ** w1)
    leftovers = [v for v in purified.variables() if v.aux]
    if leftovers:
        raise AuxiliaryResidue(f"auxiliary variables remain: {sorted(map(str, leftovers))}")
    return project(purified, base)


def _swap_back(f: Poly, p: int, q: int, m: int, n: int) -> Poly:
    """Map a vector of the (m,n,p,q) model back to the (p,q,m,n) model."""
    target = tensor_table(p, q, m, n)
    mapping: Dict[Var, Poly] = {}
    for v in f.table.variables:
        a, b = v.index
        if v.family == "x":
            mapping[v] = target.var("x", b, a)
        elif v.family == "xi":
            mapping[v] = target.var("h", b, a)
        elif v.family == "h":
            mapping[v] = target.var("xi", b, a)
        else:
            mapping[v] = -target.var("y", b, a)
    return substitute(f, mapping, target)


def hwv_general(lam, p: int, q: int, m: int, n: int) -> Poly:
    """Highest weight vector of V^lam_{p|q} (x) V^lam_{m|n} inside C[x, xi, eta, y]."""
    lam = Partition(lam)
    if lam.row(m + 1) > n or lam.row(p + 1) > q:
        raise HookViolation(f"{lam} violates lambda_{m + 1} <= {n} or lambda_{p + 1} <= {q}")
    if p < m:
        return _swap_back(hwv_general(lam, m, n, p, q), p, q, m, n)
    t = tensor_table(p, q, m, n)
    conj = lam.conjugate()
    if lam.row(m + 1) == 0:
        return _ordered_product((delta_r(c, t) for c in conj), t)
    r_m = _r_index(lam, m)
    if lam.row(p + 1) == 0:
        factors = [delta_kr(k, conj[k - 1], m, t) for k in range(1, r_m + 1)]
        factors += [delta_r(c, t) for c in conj[r_m:]]
        return _ordered_product(factors, t)
    r_p = _r_index(lam, p)
    head = gamma_general(lam[p:], p, m, q, n, t)
    factors = [delta_kr(k, conj[k - 1], m, t) for k in range(r_p + 1, r_m + 1)]
    factors += [delta_r(c, t) for c in conj[r_m:]]
    return head * _ordered_product(factors, t)


# ---------------------------------------------------------------------------
# symmetric-square model


def s2_x(i: int, j: int, table: VarTable) -> Poly:
    return table.var("x", min(i, j), max(i, j))


def s2_xi_xi(a: int, b: int, table: VarTable) -> Poly:
    """The quadratic coordinate xi_a xi_b."""
    if a == b:
        return table.zero()
    if a < b:
        return table.var("y", a, b)
    return -table.var("y", b, a)


def s2_x_matrix(m: int, table: VarTable) -> List[List[Poly]]:
    return [[s2_x(i, j, table) for j in range(1, m + 1)] for i in range(1, m + 1)]


def s2_delta(r: int, table: VarTable) -> Poly:
    """Leading r x r minor of the symmetric matrix (x_ij)."""
    return superdet([[s2_x(i, j, table) for j in range(1, r + 1)] for i in range(1, r + 1)], table)


def s2_x_sub_det(i: int, k: int, m: int, table: VarTable) -> Poly:
    """det X_i(xi_k): row i of X replaced by (eta_k1..eta_km)."""
    rows = s2_x_matrix(m, table)
    rows[i - 1] = [table.var("h", k, j) for j in range(1, m + 1)]
    return superdet(rows, table)


def delta_xi(a: int, b: int, m: int, table: VarTable) -> Poly:
    """-(det X)(xi_a xi_b) + sum_i det X_i(xi_a) (xi_b x_i)."""
    out = -(s2_delta(m, table) * s2_xi_xi(a, b, table))
    for i in range(1, m + 1):
        out = out + s2_x_sub_det(i, a, m, table) * table.var("h", b, i)
    return out


def gamma_2l(l: int, m: int, n: int, table: Optional[VarTable] = None) -> Poly:
    if 2 * l > n:
        raise BoundsError(f"need 2l <= n, got l={l}, n={n}")
    t = table if table is not None else s2_table(m, n)
    cache: Dict[Tuple[int, int], Poly] = {}
    total = t.zero()
    for sigma in enumerate_pairings(2 * l):
        term = t.one()
        for a, b in sigma.pairs:
            if (a, b) not in cache:
                cache[(a, b)] = delta_xi(a, b, m, t)
            term = term * cache[(a, b)]
        total = total + term.scale(sigma.sign)
    return total


def hwv_s2(lam, m: int, n: int, table: Optional[VarTable] = None) -> Poly:
    """Highest weight vector of V^lam_{m|n} inside S(S^2 C^{m|n})."""
    lam = Partition(lam)
    if not lam.is_even_rowed():
        raise HookViolation(f"{lam} does not have even rows")
    if lam.row(m + 1) > n:
        raise HookViolation(f"{lam} violates lambda_{m + 1} <= {n}")
    t = table if table is not None else s2_table(m, n)
    conj = lam.conjugate()
    if len(lam) <= m:
        return _ordered_product((s2_delta(conj[2 * i - 1], t) for i in range(1, len(conj) // 2 + 1)), t)
    rows = lam[m:]
    head = _ordered_product((gamma_2l(w // 2, m, n, t) for w in rows), t)
    exponent = sum(rows[1:]) // 2
    if exponent:
        head = divide_exact(head, s2_delta(m, t) ** exponent)
    r = lam.row(m + 1)
    tail = [s2_delta(conj[r + 2 * i - 1], t) for i in range(1, (len(conj) - r) // 2 + 1)]
    return head * _ordered_product(tail, t)


def verify_auxilary(m: int) -> bool:
    """Bordered symmetric determinant [[0, theta], [theta^t, A]] vanishes."""
    t = s2_table(m, 1)
    theta = [t.var("h", 1, i) for i in range(1, m + 1)]
    rows = [[t.zero()] + theta]
    for i in range(1, m + 1):
        rows.append([theta[i - 1]] + [s2_x(i, j, t) for j in range(1, m + 1)])
    return not superdet(rows, t)


def verify_s2_relations(m: int, n: int) -> Dict[str, bool]:
    """The four relations satisfied by the vectors Delta(xi_a, xi_b)."""
    from .operators import induced_derivation

    t = s2_table(m, n)
    deltas = {(a, b): delta_xi(a, b, m, t) for a in range(1, n + 1) for b in range(1, n + 1)}
    res = {"id1": True, "id2": True, "id3": True, "id4": True}
    for i in range(2, m + 1):
        op = induced_derivation(t, ("x", i - 1), ("x", i))
        res["id1"] = res["id1"] and all(not op.apply(f) for f in deltas.values())
    for j in range(2, n + 1):
        op = induced_derivation(t, ("xi", j - 1), ("xi", j))
        for l in range(1, n + 1):
            if l != j:
                res["id2"] = res["id2"] and op.apply(deltas[(j, l)]) == deltas[(j - 1, l)]
                res["id3"] = res["id3"] and op.apply(deltas[(l, j)]) == deltas[(l, j - 1)]
    res["id4"] = all(not deltas[(j, j)] for j in range(1, n + 1))
    return res
