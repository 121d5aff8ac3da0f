"""Sparse supercommutative polynomials with exact rational coefficients.

A :class:`VarTable` fixes the variables of one polynomial ring together with
their parities and the canonical order of the odd ones.  A :class:`Poly` maps
monomials to nonzero coefficients.  A monomial is stored as a pair
``(exps, mask)``: ``exps`` is the dense exponent tuple of the even variables
and ``mask`` is a bitmask of the odd variables present, bit ``b`` being the
``b``-th odd variable in canonical order.  The coefficient of a term is the
coefficient of the product written with odd factors in increasing order.
"""
from __future__ import annotations

import contextvars
import heapq
import re
from contextlib import contextmanager
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

Rational = Union[int, Fraction]
Mono = Tuple[Tuple[int, ...], int]


class AlgebraError(Exception):
    pass


class TableMismatch(AlgebraError):
    pass


class NotDivisible(AlgebraError, ArithmeticError):
    pass


class OddDivisor(AlgebraError, ArithmeticError):
    pass


class NonSquareMatrix(AlgebraError, ValueError):
    pass


class OverBudget(AlgebraError):
    """Raised when a product exceeds the active term ceiling."""


class ParseError(AlgebraError, ValueError):
    pass


_TERM_CEILING: contextvars.ContextVar[Optional[int]] = contextvars.ContextVar("term_ceiling", default=None)


@contextmanager
def term_ceiling(limit: Optional[int]):
    """Abort any product or sum whose result exceeds ``limit`` terms."""
    token = _TERM_CEILING.set(limit)
    try:
        yield
    finally:
        _TERM_CEILING.reset(token)


def _check_budget(n: int) -> None:
    limit = _TERM_CEILING.get()
    if limit is not None and n > limit:
        raise OverBudget(f"{n} terms exceeds ceiling {limit}")


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def as_rational(c) -> Rational:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


# ---------------------------------------------------------------------------
# variables


class Var(NamedTuple):
    family: str
    index: Tuple[int, ...]
    odd: bool
    aux: bool = False

    def __str__(self) -> str:
        if not self.index:
            return self.family
        return f"{self.family}[{','.join(map(str, self.index))}]"


class VarTable:
    """An ordered collection of even and odd variables.

    The order of the odd variables in ``variables`` is the canonical odd order
    used for all signs.
    """

    def __init__(self, variables: Iterable[Var], name: str = ""):
        self.variables: Tuple[Var, ...] = tuple(variables)
        self.name = name
        self.evens: Tuple[Var, ...] = tuple(v for v in self.variables if not v.odd)
        self.odds: Tuple[Var, ...] = tuple(v for v in self.variables if v.odd)
        self.slot: Dict[Var, int] = {}
        for i, v in enumerate(self.evens):
            self.slot[v] = i
        for b, v in enumerate(self.odds):
            self.slot[v] = b
        if len(self.slot) != len(self.variables):
            raise ValueError("duplicate variable in table")
        self._by_key = {(v.family, v.index): v for v in self.variables}
        self.order = {v: k for k, v in enumerate(self.variables)}
        self._hash = hash(self.variables)
        self.n_even = len(self.evens)
        self.n_odd = len(self.odds)
        self.zero_exps = (0,) * self.n_even

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, VarTable) and self.variables == other.variables

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"VarTable({self.name or len(self.variables)})"

    def __contains__(self, key) -> bool:
        if isinstance(key, Var):
            return key in self.slot
        return key in self._by_key

    def lookup(self, family: str, *index: int) -> Var:
        try:
            return self._by_key[(family, tuple(index))]
        except KeyError:
            raise KeyError(f"{family}{list(index)} not in {self!r}") from None

    def has(self, family: str, *index: int) -> bool:
        return (family, tuple(index)) in self._by_key

    def var(self, family: str, *index: int) -> "Poly":
        return self.poly_of(self.lookup(family, *index))

    def poly_of(self, v: Var) -> "Poly":
        return Poly(self, {self.mono_of(v): 1})

    def mono_of(self, v: Var) -> Mono:
        s = self.slot[v]
        if v.odd:
            return (self.zero_exps, 1 << s)
        exps = list(self.zero_exps)
        exps[s] = 1
        return (tuple(exps), 0)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(self.zero_exps, 0): 1})

    def const(self, c) -> "Poly":
        c = as_rational(c)
        return Poly(self, {(self.zero_exps, 0): c} if c else {})

    def families(self) -> Tuple[str, ...]:
        seen = []
        for v in self.variables:
            if v.family not in seen:
                seen.append(v.family)
        return tuple(seen)


def tensor_table(p: int, q: int, m: int, n: int, aux: bool = False) -> VarTable:
    """Variables of C[x, xi, eta, y] for S(C^{p|q} (x) C^{m|n}).

    ``x[l,i]`` (even), ``xi[l,j]`` (odd), ``h[k,i]`` (odd, the eta family) and
    ``y[k,j]`` (even) with ``l <= m``, ``k <= n``, ``i <= p``, ``j <= q``.
    With ``aux`` the even rows ``x[l,i]`` for ``m < l <= p`` are added.
    Odd order: xi lexicographic in (l, j), then eta lexicographic in (k, i).
    """
    vs = [Var("x", (l, i), False) for l in range(1, m + 1) for i in range(1, p + 1)]
    if aux:
        vs += [Var("x", (l, i), False, True) for l in range(m + 1, p + 1) for i in range(1, p + 1)]
    vs += [Var("y", (k, j), False) for k in range(1, n + 1) for j in range(1, q + 1)]
    vs += [Var("xi", (l, j), True) for l in range(1, m + 1) for j in range(1, q + 1)]
    vs += [Var("h", (k, i), True) for k in range(1, n + 1) for i in range(1, p + 1)]
    tag = f"tensor({p},{q},{m},{n}{',aux' if aux else ''})"
    return VarTable(vs, tag)


def s2_table(m: int, n: int) -> VarTable:
    """Variables of C[x, y, eta] for S(S^2 C^{m|n}).

    ``x[i,j] = x_i x_j`` (i <= j, even), ``y[k,l] = xi_k xi_l`` (k < l, even),
    ``h[k,i] = xi_k x_i`` (odd, lexicographic in (k, i)).
    """
    vs = [Var("x", (i, j), False) for i in range(1, m + 1) for j in range(i, m + 1)]
    vs += [Var("y", (k, l), False) for k in range(1, n + 1) for l in range(k + 1, n + 1)]
    vs += [Var("h", (k, i), True) for k in range(1, n + 1) for i in range(1, m + 1)]
    return VarTable(vs, f"s2({m},{n})")


def even_table(**families: int) -> VarTable:
    """Commuting variables ``name[1..count]`` for each keyword, in keyword order."""
    vs = [Var(name, (i,), False) for name, count in families.items() for i in range(1, count + 1)]
    return VarTable(vs, "even(" + ",".join(f"{k}={v}" for k, v in families.items()) + ")")


# ---------------------------------------------------------------------------
# monomials


def _merge_sign(a: int, b: int) -> int:
    """Number of transpositions needed to sort the odd factors of a*b."""
    count = 0
    while b:
        low = b & -b
        count += (a >> low.bit_length()).bit_count()
        b ^= low
    return count


def mono_mul(a: Mono, b: Mono) -> Optional[Tuple[int, Mono]]:
    """Multiply two canonical monomials: ``(sign, product)`` or ``None`` for zero."""
    ma, mb = a[1], b[1]
    if ma & mb:
        return None
    sign = -1 if _merge_sign(ma, mb) & 1 else 1
    return sign, (tuple(x + y for x, y in zip(a[0], b[0])), ma | mb)


def mono_degree(mono: Mono) -> int:
    return sum(mono[0]) + mono[1].bit_count()


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """An element of the supercommutative polynomial ring of ``table``."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Optional[Dict[Mono, Rational]] = None):
        self.table = table
        self.terms: Dict[Mono, Rational] = terms if terms is not None else {}

    # construction helpers
    @classmethod
    def from_terms(cls, table: VarTable, items: Iterable[Tuple[Mono, Rational]]) -> "Poly":
        acc: Dict[Mono, Rational] = {}
        for mono, c in items:
            acc[mono] = acc.get(mono, 0) + c
        return cls(table, {k: _norm(v) for k, v in acc.items() if v})

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.table is not self.table and other.table != self.table:
                raise TableMismatch(f"{self.table!r} vs {other.table!r}")
            return other
        return self.table.const(other)

    # basic protocol
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.table == other.table and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(self.table.zero_exps, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.table, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Poly({to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)

    # arithmetic
    def __neg__(self) -> "Poly":
        return Poly(self.table, {k: -v for k, v in self.terms.items()})

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = _norm(s)
            else:
                out.pop(k, None)
        _check_budget(len(out))
        return Poly(self.table, out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        c = as_rational(c)
        if not c:
            return self.table.zero()
        return Poly(self.table, {k: _norm(v * c) for k, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        out: Dict[Mono, Rational] = {}
        get = out.get
        for (ea, ma), ca in self.terms.items():
            for (eb, mb), cb in other.terms.items():
                if ma & mb:
                    continue
                c = ca * cb
                if mb and ma:
                    if _merge_sign(ma, mb) & 1:
                        c = -c
                key = (tuple(x + y for x, y in zip(ea, eb)) if eb else ea, ma | mb)
                out[key] = get(key, 0) + c
        res = {k: _norm(v) for k, v in out.items() if v}
        _check_budget(len(res))
        return Poly(self.table, res)

    def __rmul__(self, other) -> "Poly":
        # scalars commute with everything
        return self.scale(other)

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.table.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return divide_exact(self, other)
        c = as_rational(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(Fraction(1) / c)

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self.terms}) <= 1

    def parity(self) -> Optional[int]:
        """0 or 1 if parity-homogeneous (zero counts as even), else None."""
        ps = {m[1].bit_count() & 1 for m in self.terms}
        if not ps:
            return 0
        if len(ps) == 1:
            return ps.pop()
        return None

    def is_even_only(self) -> bool:
        """True if no odd variable occurs."""
        return all(m[1] == 0 for m in self.terms)

    def variables(self) -> set:
        t = self.table
        used = set()
        for exps, mask in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(t.evens[i])
            b = 0
            while mask:
                if mask & 1:
                    used.add(t.odds[b])
                mask >>= 1
                b += 1
        return used

    def coefficient(self, mono: Mono) -> Rational:
        return self.terms.get(mono, 0)

    def leading(self) -> Tuple[Mono, Rational]:
        """Term whose monomial is least in the canonical text order."""
        key = min(self.terms, key=lambda m: mono_sort_key(self.table, m))
        return key, self.terms[key]

    def normalized(self) -> "Poly":
        """Scale so that the least monomial (text order) has coefficient 1."""
        if not self.terms:
            return self
        _, c = self.leading()
        return self.scale(Fraction(1) / c)

    def monomials(self) -> Iterator[Mono]:
        return iter(self.terms)


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def prod(factors: Iterable[Poly], table: VarTable) -> Poly:
    """Ordered product, left to right."""
    out = table.one()
    for f in factors:
        out = out * f
    return out


# ---------------------------------------------------------------------------
# determinants


def superdet(matrix: Sequence[Sequence[Poly]], table: Optional[VarTable] = None) -> Poly:
    """Row-ordered determinant ``sum_s sgn(s) a_{1 s(1)} a_{2 s(2)} ... a_{r s(r)}``.

    Expanded along the first row with memoisation on the set of columns still
    free, so factors are always multiplied in row order.
    """
    r = len(matrix)
    if any(len(row) != r for row in matrix):
        raise NonSquareMatrix(f"expected {r}x{r} matrix")
    if table is None:
        if r == 0:
            raise ValueError("table required for the empty matrix")
        table = matrix[0][0].table
    if r == 0:
        return table.one()
    memo: Dict[int, Poly] = {}

    def minor(row: int, cols: int) -> Poly:
        # determinant of rows row.. with the columns in bitmask ``cols``
        if row == r:
            return table.one()
        hit = memo.get(cols)
        if hit is not None:
            return hit
        acc: Dict[Mono, Rational] = {}
        pos = 0
        for c in range(r):
            if not cols >> c & 1:
                continue
            entry = matrix[row][c]
            if entry:
                sub = minor(row + 1, cols & ~(1 << c))
                if sub:
                    term = entry * sub
                    sign = -1 if pos & 1 else 1
                    for k, v in term.terms.items():
                        acc[k] = acc.get(k, 0) + sign * v
            pos += 1
        res = Poly(table, {k: _norm(v) for k, v in acc.items() if v})
        _check_budget(len(res))
        memo[cols] = res
        return res

    return minor(0, (1 << r) - 1)


class SuperMatrix:
    """Square grid of polynomials whose determinant is the row-ordered one."""

    def __init__(self, rows: Sequence[Sequence[Poly]], table: Optional[VarTable] = None):
        self.rows = [list(r) for r in rows]
        self.table = table if table is not None else (self.rows[0][0].table if self.rows else None)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def transpose(self) -> "SuperMatrix":
        n = len(self.rows)
        return SuperMatrix([[self.rows[i][j] for i in range(n)] for j in range(len(self.rows[0]))], self.table)

    def det(self) -> Poly:
        return superdet(self.rows, self.table)


# ---------------------------------------------------------------------------
# exact division by an even polynomial


def _commutative_divide(num: Dict[Tuple[int, ...], Rational], den: Dict[Tuple[int, ...], Rational]):
    lead = max(den)
    lead_c = den[lead]
    rem = dict(num)
    heap = [tuple(-e for e in k) for k in rem]
    heapq.heapify(heap)
    quot: Dict[Tuple[int, ...], Rational] = {}
    while heap:
        top = tuple(-e for e in heapq.heappop(heap))
        c = rem.get(top)
        if not c:
            continue
        shift = tuple(a - b for a, b in zip(top, lead))
        if any(s < 0 for s in shift):
            raise NotDivisible("leading term not divisible by divisor's leading term")
        qc = _norm(Fraction(c) / lead_c) if isinstance(c, Fraction) or c % lead_c else c // lead_c
        quot[shift] = qc
        for k, v in den.items():
            key = tuple(a + b for a, b in zip(k, shift))
            new = rem.get(key, 0) - qc * v
            if new:
                if key not in rem or not rem[key]:
                    heapq.heappush(heap, tuple(-e for e in key))
                rem[key] = _norm(new)
            else:
                rem.pop(key, None)
    return quot


def divide_exact(num: Poly, den: Poly) -> Poly:
    """Return ``g`` with ``den * g == num``; ``den`` must be a nonzero even polynomial."""
    den = num._coerce(den)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not den.is_even_only():
        raise OddDivisor("division by a polynomial with odd variables is not supported")
    if not num:
        return num.table.zero()
    dd = {exps: c for (exps, _), c in den.terms.items()}
    groups: Dict[int, Dict[Tuple[int, ...], Rational]] = {}
    for (exps, mask), c in num.terms.items():
        groups.setdefault(mask, {})[exps] = c
    out: Dict[Mono, Rational] = {}
    for mask, part in groups.items():
        for exps, c in _commutative_divide(part, dd).items():
            out[(exps, mask)] = c
    res = Poly(num.table, out)
    return res


poly_divide_exact = divide_exact


# ---------------------------------------------------------------------------
# substitution and table changes


def substitute(f: Poly, mapping: Mapping[Var, Poly], target: VarTable) -> Poly:
    """Apply the algebra homomorphism sending each variable ``v`` to ``mapping[v]``.

    Variables missing from ``mapping`` are sent to the same-named variable of
    ``target``.  The images of odd variables must be odd for the result to be a
    homomorphism; this is not checked.
    """
    src = f.table
    images: Dict[Var, Poly] = {}
    for v in src.variables:
        if v in mapping:
            images[v] = mapping[v]
        elif target.has(v.family, *v.index):
            images[v] = target.var(v.family, *v.index)
    out = target.zero()
    cache: Dict[Tuple[Var, int], Poly] = {}
    for (exps, mask), c in f.terms.items():
        term = target.const(c)
        for i, e in enumerate(exps):
            if e:
                v = src.evens[i]
                if v not in images:
                    raise KeyError(f"no image for {v}")
                key = (v, e)
                if key not in cache:
                    cache[key] = images[v] ** e
                term = term * cache[key]
        b = 0
        while mask:
            if mask & 1:
                v = src.odds[b]
                if v not in images:
                    raise KeyError(f"no image for {v}")
                term = term * images[v]
            mask >>= 1
            b += 1
        out = out + term
    return out


def project(f: Poly, target: VarTable) -> Poly:
    """Re-express ``f`` in ``target``, matching variables by family and index."""
    if f.table == target:
        return f
    src = f.table
    even_map = []
    for v in src.evens:
        even_map.append(target.slot[target.lookup(v.family, *v.index)] if target.has(v.family, *v.index) else None)
    odd_map = []
    for v in src.odds:
        odd_map.append(target.slot[target.lookup(v.family, *v.index)] if target.has(v.family, *v.index) else None)
    # the odd order must be preserved for coefficients to carry over unchanged
    kept = [b for b in odd_map if b is not None]
    if kept != sorted(kept):
        return substitute(f, {}, target)
    out: Dict[Mono, Rational] = {}
    for (exps, mask), c in f.terms.items():
        new = [0] * target.n_even
        for i, e in enumerate(exps):
            if e:
                j = even_map[i]
                if j is None:
                    raise KeyError(f"{src.evens[i]} not in {target!r}")
                new[j] = e
        nm = 0
        b = 0
        while mask:
            if mask & 1:
                j = odd_map[b]
                if j is None:
                    raise KeyError(f"{src.odds[b]} not in {target!r}")
                nm |= 1 << j
            mask >>= 1
            b += 1
        out[(tuple(new), nm)] = c
    return Poly(target, out)


# ---------------------------------------------------------------------------
# text serialisation


def mono_sort_key(table: VarTable, mono: Mono):
    exps, mask = mono
    seq = []
    for i, e in enumerate(exps):
        if e:
            seq.extend([table.order[table.evens[i]]] * e)
    b = 0
    while mask:
        if mask & 1:
            seq.append(table.order[table.odds[b]])
        mask >>= 1
        b += 1
    seq.sort()
    return (len(seq), tuple(seq))


def mono_factors(table: VarTable, mono: Mono) -> Iterator[Tuple[Var, int]]:
    """Even factors in table order, then odd factors in canonical order."""
    exps, mask = mono
    for i, e in enumerate(exps):
        if e:
            yield table.evens[i], e
    b = 0
    while mask:
        if mask & 1:
            yield table.odds[b], 1
        mask >>= 1
        b += 1


def _coeff_text(c: Rational) -> str:
    c = _norm(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def mono_text(table: VarTable, mono: Mono) -> str:
    parts = [str(v) if e == 1 else f"{v}^{e}" for v, e in mono_factors(table, mono)]
    return "*".join(parts) if parts else "1"


def to_text(f: Poly) -> str:
    """Canonical text form, terms sorted by (total degree, monomial lex)."""
    if not f.terms:
        return "0"
    t = f.table
    out = []
    for mono in sorted(f.terms, key=lambda m: mono_sort_key(t, m)):
        c = f.terms[mono]
        body = mono_text(t, mono)
        neg = c < 0
        a = -c if neg else c
        if body == "1":
            piece = _coeff_text(a)
        elif a == 1:
            piece = body
        else:
            piece = f"{_coeff_text(a)}*{body}"
        if not out:
            out.append(("-" if neg else "") + piece)
        else:
            out.append((" - " if neg else " + ") + piece)
    return "".join(out)


_FACTOR = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)(?:\[([\d,\s]*)\])?)\s*(?:\^\s*(\d+))?\s*$")


def _split_terms(text: str) -> Iterator[Tuple[int, str]]:
    depth = 0
    start = 0
    sign = 1
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = start = 1
    while i < len(s):
        ch = s[i]
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif depth == 0 and ch in "+-" and i > start:
            yield sign, s[start:i]
            sign = -1 if ch == "-" else 1
            start = i + 1
        i += 1
    yield sign, s[start:]


def parse_poly(text: str, table: VarTable) -> Poly:
    """Inverse of :func:`to_text`; factors are multiplied in the order written."""
    total = table.zero()
    for sign, body in _split_terms(text):
        term = table.const(sign)
        if not body.strip():
            raise ParseError(f"empty term in {text!r}")
        for factor in body.split("*"):
            mt = _FACTOR.match(factor)
            if not mt:
                raise ParseError(f"bad factor {factor!r}")
            num, name, idx, power = mt.groups()
            e = int(power) if power else 1
            if num is not None:
                term = term * (Fraction(num) ** e)
                continue
            index = tuple(int(x) for x in idx.split(",")) if idx and idx.strip() else ()
            try:
                v = table.var(name, *index)
            except KeyError as exc:
                raise ParseError(str(exc)) from None
            term = term * (v ** e)
        total = total + term
    return total


def monomial_basis(table: VarTable, degree: int) -> Iterator[Poly]:
    """All monomials of the given total degree, each with coefficient 1."""
    ne, no = table.n_even, table.n_odd
    for k_odd in range(min(degree, no) + 1):
        k_even = degree - k_odd
        for odd_bits in _subsets(no, k_odd):
            for exps in _compositions(k_even, ne):
                yield Poly(table, {(exps, odd_bits): 1})


def _subsets(n: int, k: int) -> Iterator[int]:
    from itertools import combinations

    for combo in combinations(range(n), k):
        mask = 0
        for b in combo:
            mask |= 1 << b
        yield mask


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
