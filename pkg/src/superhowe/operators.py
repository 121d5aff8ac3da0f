"""First-order superderivations and the Lie superalgebra actions built from them."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Mono, Poly, Rational, Var, VarTable, _check_budget, _norm, as_rational, s2_table, tensor_table
from .combinatorics import Partition


class NotAWeightVector(ValueError):
    pass


class HookViolation(ValueError):
    pass


class SuperDerivation:
    """A finite sum ``sum c * u d/dv`` of single-variable derivations.

    ``d/dv`` is the left derivative: for odd ``v`` it is moved past the odd
    factors standing to the left of ``v`` before it acts.
    """

    def __init__(self, terms: Sequence[Tuple[Rational, Var, Var]], table: VarTable, name: str = ""):
        self.table = table
        self.name = name
        acc: Dict[Tuple[Var, Var], Rational] = {}
        for c, u, v in terms:
            c = as_rational(c)
            acc[(u, v)] = acc.get((u, v), 0) + c
        self.terms: List[Tuple[Rational, Var, Var]] = [(_norm(c), u, v) for (u, v), c in acc.items() if c]
        parities = {int(u.odd) ^ int(v.odd) for _, u, v in self.terms}
        if len(parities) > 1:
            raise ValueError("derivation terms of mixed parity")
        self.parity = parities.pop() if parities else 0
        # group by the variable being differentiated
        self._by_diff: Dict[Var, List[Tuple[Rational, Mono, Var]]] = {}
        for c, u, v in self.terms:
            self._by_diff.setdefault(v, []).append((c, table.mono_of(u), u))

    def __repr__(self) -> str:
        return f"SuperDerivation({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, u, v in self.terms:
            coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{coef}{u}*d/d{v}")
        return " + ".join(parts).replace("+ -", "- ")

    def __call__(self, f: Poly) -> Poly:
        return self.apply(f)

    def apply(self, f: Poly) -> Poly:
        if f.table is not self.table and f.table != self.table:
            raise ValueError("derivation and polynomial live over different tables")
        t = self.table
        out: Dict[Mono, Rational] = {}
        for v, images in self._by_diff.items():
            s = t.slot[v]
            if v.odd:
                bit = 1 << s
                below = bit - 1
                for (exps, mask), c in f.terms.items():
                    if not mask & bit:
                        continue
                    coeff = -c if (mask & below).bit_count() & 1 else c
                    rest = (exps, mask ^ bit)
                    self._insert(out, rest, coeff, images)
            else:
                for (exps, mask), c in f.terms.items():
                    e = exps[s]
                    if not e:
                        continue
                    ne = list(exps)
                    ne[s] = e - 1
                    self._insert(out, (tuple(ne), mask), c * e, images)
        res = {k: _norm(v) for k, v in out.items() if v}
        _check_budget(len(res))
        return Poly(t, res)

    @staticmethod
    def _insert(out, rest: Mono, coeff, images) -> None:
        exps, mask = rest
        for c, (ue, um), u in images:
            if um:
                if mask & um:
                    continue
                sign = -1 if (mask & (um - 1)).bit_count() & 1 else 1
                key = (exps, mask | um)
                val = sign * c * coeff
            else:
                key = (tuple(a + b for a, b in zip(exps, ue)), mask)
                val = c * coeff
            out[key] = out.get(key, 0) + val


def supercommutator_apply(a: SuperDerivation, b: SuperDerivation, f: Poly) -> Poly:
    """``[a, b] f = a(b f) - (-1)^{|a||b|} b(a f)``."""
    sign = -1 if a.parity and b.parity else 1
    return a.apply(b.apply(f)) - b.apply(a.apply(f)).scale(sign)


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class WeightVector:
    entries: Tuple[int, ...]
    labels: Tuple[str, ...] = ()

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a + b for a, b in zip(self.entries, other.entries)), self.labels)

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a - b for a, b in zip(self.entries, other.entries)), self.labels)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class HighestWeight:
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def entries(self) -> Tuple[int, ...]:
        return self.a + self.b

    def __str__(self) -> str:
        return f"({','.join(map(str, self.a))}; {','.join(map(str, self.b))})"


@dataclass
class AlgebraRealization:
    name: str
    table: VarTable
    cartan: List[SuperDerivation]
    raising: List[SuperDerivation]
    labels: Tuple[str, ...]
    roots: List[WeightVector] = field(default_factory=list)

    def __post_init__(self):
        if not self.roots:
            self.roots = [_root_of(d, self) for d in self.raising]

    def var_weight(self, v: Var) -> WeightVector:
        return weight_of(self.table.poly_of(v), self)


def _root_of(d: SuperDerivation, r: AlgebraRealization) -> WeightVector:
    c, u, v = d.terms[0]
    return r.var_weight(u) - r.var_weight(v)


def weight_of(f: Poly, R: AlgebraRealization) -> WeightVector:
    """Common Cartan eigenvalues of ``f``; raises :class:`NotAWeightVector` otherwise."""
    if not f:
        raise NotAWeightVector("the zero polynomial has no weight")
    mono, c = next(iter(f.terms.items()))
    entries = []
    for h in R.cartan:
        g = h.apply(f)
        lam = Fraction(g.terms.get(mono, 0), 1) / c
        if g != f.scale(lam):
            raise NotAWeightVector(f"not an eigenvector of {h.name or h}")
        if lam.denominator != 1:
            raise NotAWeightVector("non-integral eigenvalue")
        entries.append(int(lam))
    return WeightVector(tuple(entries), R.labels)


def joint_weight(f: Poly, Rs: Sequence[AlgebraRealization]) -> Tuple[WeightVector, ...]:
    return tuple(weight_of(f, R) for R in Rs)


def is_highest(f: Poly, Rs: Sequence[AlgebraRealization]) -> bool:
    return first_nonannihilating(f, Rs) is None


def first_nonannihilating(f: Poly, Rs: Sequence[AlgebraRealization]) -> Optional[Tuple[str, str, Poly]]:
    """``(realization, operator, residual)`` for the first raising operator not killing ``f``."""
    for R in Rs:
        for d in R.raising:
            g = d.apply(f)
            if g:
                return R.name, d.name or str(d), g
    return None


# ---------------------------------------------------------------------------
# the tensor model


def _labels(tag_even: str, a: int, tag_odd: str, b: int) -> Tuple[str, ...]:
    return tuple(f"{tag_even}{i}" for i in range(1, a + 1)) + tuple(f"{tag_odd}{j}" for j in range(1, b + 1))


def _get(table: VarTable, fam: str, *idx: int) -> Optional[Var]:
    return table.lookup(fam, *idx) if table.has(fam, *idx) else None


def _deriv(table: VarTable, pairs, name: str) -> SuperDerivation:
    terms = []
    for c, u, v in pairs:
        if u is not None and v is not None:
            terms.append((c, u, v))
    return SuperDerivation(terms, table, name)


def build_glpq(p: int, q: int, m: int, n: int, table: Optional[VarTable] = None) -> AlgebraRealization:
    """gl(p|q) acting on the second tensor factor (upper indices)."""
    t = table if table is not None else tensor_table(p, q, m, n)
    rows_x = sorted({v.index[0] for v in t.variables if v.family == "x"})
    cartan = []
    for i in range(1, p + 1):
        pairs = [(1, _get(t, "x", l, i), _get(t, "x", l, i)) for l in rows_x]
        pairs += [(1, _get(t, "h", k, i), _get(t, "h", k, i)) for k in range(1, n + 1)]
        cartan.append(_deriv(t, pairs, f"E~{i}"))
    for j in range(1, q + 1):
        pairs = [(1, _get(t, "xi", l, j), _get(t, "xi", l, j)) for l in range(1, m + 1)]
        pairs += [(1, _get(t, "y", k, j), _get(t, "y", k, j)) for k in range(1, n + 1)]
        cartan.append(_deriv(t, pairs, f"F~{j}"))
    raising = []
    for i in range(2, p + 1):
        pairs = [(1, _get(t, "x", l, i - 1), _get(t, "x", l, i)) for l in rows_x]
        pairs += [(1, _get(t, "h", k, i - 1), _get(t, "h", k, i)) for k in range(1, n + 1)]
        raising.append(_deriv(t, pairs, f"e~{i - 1},{i}"))
    for j in range(2, q + 1):
        pairs = [(1, _get(t, "xi", l, j - 1), _get(t, "xi", l, j)) for l in range(1, m + 1)]
        pairs += [(1, _get(t, "y", k, j - 1), _get(t, "y", k, j)) for k in range(1, n + 1)]
        raising.append(_deriv(t, pairs, f"f~{j - 1},{j}"))
    if p >= 1 and q >= 1:
        pairs = [(1, _get(t, "x", l, p), _get(t, "xi", l, 1)) for l in range(1, m + 1)]
        pairs += [(1, _get(t, "h", k, p), _get(t, "y", k, 1)) for k in range(1, n + 1)]
        raising.append(_deriv(t, pairs, "odd~"))
    labels = _labels("e~", p, "d~", q)
    return AlgebraRealization(f"gl({p}|{q})", t, cartan, raising, labels)


def build_glmn(p: int, q: int, m: int, n: int, table: Optional[VarTable] = None) -> AlgebraRealization:
    """gl(m|n) acting on the first tensor factor (lower indices)."""
    t = table if table is not None else tensor_table(p, q, m, n)
    cartan = []
    for s in range(1, m + 1):
        pairs = [(1, _get(t, "x", s, j), _get(t, "x", s, j)) for j in range(1, p + 1)]
        pairs += [(1, _get(t, "xi", s, j), _get(t, "xi", s, j)) for j in range(1, q + 1)]
        cartan.append(_deriv(t, pairs, f"E{s}"))
    for k in range(1, n + 1):
        pairs = [(1, _get(t, "h", k, j), _get(t, "h", k, j)) for j in range(1, p + 1)]
        pairs += [(1, _get(t, "y", k, j), _get(t, "y", k, j)) for j in range(1, q + 1)]
        cartan.append(_deriv(t, pairs, f"F{k}"))
    raising = []
    for s in range(2, m + 1):
        pairs = [(1, _get(t, "x", s - 1, j), _get(t, "x", s, j)) for j in range(1, p + 1)]
        pairs += [(1, _get(t, "xi", s - 1, j), _get(t, "xi", s, j)) for j in range(1, q + 1)]
        raising.append(_deriv(t, pairs, f"e{s - 1},{s}"))
    for k in range(2, n + 1):
        pairs = [(1, _get(t, "h", k - 1, j), _get(t, "h", k, j)) for j in range(1, p + 1)]
        pairs += [(1, _get(t, "y", k - 1, j), _get(t, "y", k, j)) for j in range(1, q + 1)]
        raising.append(_deriv(t, pairs, f"f{k - 1},{k}"))
    if m >= 1 and n >= 1:
        pairs = [(1, _get(t, "x", m, j), _get(t, "h", 1, j)) for j in range(1, p + 1)]
        pairs += [(-1, _get(t, "xi", m, j), _get(t, "y", 1, j)) for j in range(1, q + 1)]
        raising.append(_deriv(t, pairs, "odd"))
    labels = _labels("e", m, "d", n)
    return AlgebraRealization(f"gl({m}|{n})", t, cartan, raising, labels)


# ---------------------------------------------------------------------------
# the S^2 model
#
# Linear symbols are ("x", i) (even) and ("xi", k) (odd).  A quadratic
# coordinate is the product of two of them, and an operator u d/dv on the
# linear symbols induces a derivation of the quadratic coordinates.


def _quad(table: VarTable, a, b) -> Tuple[int, Optional[Var]]:
    """Express the product ``a*b`` of linear symbols as ``sign * variable``."""
    (fa, ia), (fb, ib) = a, b
    if fa == "x" and fb == "x":
        return 1, table.lookup("x", min(ia, ib), max(ia, ib))
    if fa == "xi" and fb == "xi":
        if ia == ib:
            return 0, None
        if ia < ib:
            return 1, table.lookup("y", ia, ib)
        return -1, table.lookup("y", ib, ia)
    if fa == "xi":
        return 1, table.lookup("h", ia, ib)
    return 1, table.lookup("h", ib, ia)


def _linear_factors(v: Var):
    if v.family == "x":
        return ("x", v.index[0]), ("x", v.index[1])
    if v.family == "y":
        return ("xi", v.index[0]), ("xi", v.index[1])
    return ("xi", v.index[0]), ("x", v.index[1])


def induced_derivation(table: VarTable, u, v, name: str = "") -> SuperDerivation:
    """Derivation of C[x, y, eta] induced by ``u d/dv`` on the linear symbols."""
    odd_of = lambda s: s[0] == "xi"
    d_par = int(odd_of(u)) ^ int(odd_of(v))
    terms: Dict[Tuple[Var, Var], Rational] = {}
    for w in table.variables:
        a, b = _linear_factors(w)
        # D(ab) = D(a) b + (-1)^{|D||a|} a D(b)
        if a == v:
            s, img = _quad(table, u, b)
            if img is not None and s:
                terms[(img, w)] = terms.get((img, w), 0) + s
        if b == v:
            sign = -1 if d_par and odd_of(a) else 1
            s, img = _quad(table, a, u)
            if img is not None and s:
                terms[(img, w)] = terms.get((img, w), 0) + sign * s
    return SuperDerivation([(c, img, w) for (img, w), c in terms.items()], table, name)


def build_s2_glmn(m: int, n: int, table: Optional[VarTable] = None) -> AlgebraRealization:
    """gl(m|n) acting on S(S^2 C^{m|n}) with the standard Borel."""
    t = table if table is not None else s2_table(m, n)
    cartan = [induced_derivation(t, ("x", i), ("x", i), f"E{i}") for i in range(1, m + 1)]
    cartan += [induced_derivation(t, ("xi", k), ("xi", k), f"F{k}") for k in range(1, n + 1)]
    raising = [induced_derivation(t, ("x", i), ("x", i + 1), f"e{i},{i + 1}") for i in range(1, m)]
    raising += [induced_derivation(t, ("xi", j), ("xi", j + 1), f"f{j},{j + 1}") for j in range(1, n)]
    if m >= 1 and n >= 1:
        raising.append(induced_derivation(t, ("x", m), ("xi", 1), "odd"))
    labels = _labels("e", m, "d", n)
    return AlgebraRealization(f"gl({m}|{n}) on S^2", t, cartan, raising, labels)


# ---------------------------------------------------------------------------


def _bracket(k: int) -> int:
    return k if k > 0 else 0


def diagram_to_hw(lam, m: int, n: int) -> HighestWeight:
    """Highest weight ``(lam_1..lam_m; <lam'_1 - m>..<lam'_n - m>)`` of V^lam_{m|n}."""
    lam = Partition(lam)
    if lam.row(m + 1) > n:
        raise HookViolation(f"{lam} violates lambda_{m + 1} <= {n}")
    conj = lam.conjugate()
    return HighestWeight(tuple(lam.row(i) for i in range(1, m + 1)), tuple(_bracket(conj.row(j) - m) for j in range(1, n + 1)))
