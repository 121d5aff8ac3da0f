"""Partitions, hook conditions, nested hooks, marked diagrams and pairings."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        parts = tuple(x for x in parts if x > 0)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "0", "()", "-"):
            return cls(())
        return cls(int(x) for x in text.replace(" ", "").split(","))

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def row(self, i: int) -> int:
        """1-based part, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def col(self, j: int) -> int:
        return sum(1 for x in self if x >= j)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition(())
        return Partition(self.col(j) for j in range(1, self[0] + 1))

    transpose = conjugate

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def in_hook(self, m: int, n: int) -> bool:
        return self.row(m + 1) <= n

    def is_even_rowed(self) -> bool:
        return all(x % 2 == 0 for x in self)

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, r in enumerate(self, 1):
            for j in range(1, r + 1):
                yield i, j

    def frobenius(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Arms and legs ``(a_i, b_i)`` of the diagonal cells."""
        conj = self.conjugate()
        d = sum(1 for i, r in enumerate(self, 1) if r >= i)
        return tuple(self[i] - i - 1 for i in range(d)), tuple(conj[i] - i - 1 for i in range(d))


def transpose(lam) -> Partition:
    return Partition(lam).conjugate()


@lru_cache(maxsize=None)
def _partitions(k: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in _partitions(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(k: int) -> List[Partition]:
    """All partitions of ``k`` in reverse lexicographic order."""
    if k < 0:
        return []
    return [Partition(p) for p in _partitions(k, k)]


def enumerate_hook_partitions(k: int, p: int, q: int, m: int, n: int) -> List[Partition]:
    """Partitions of ``k`` lying in both the (p,q)- and the (m,n)-hook."""
    return [lam for lam in partitions(k) if lam.in_hook(p, q) and lam.in_hook(m, n)]


def enumerate_even_partitions(k2: int, m: int, n: int) -> List[Partition]:
    if k2 % 2:
        raise ValueError("size must be even")
    return [lam for lam in partitions(k2) if lam.is_even_rowed() and lam.in_hook(m, n)]


FLAVOR_WIDE = "wide"    # (k+1, k) hooks: arm = leg + 1
FLAVOR_TALL = "tall"    # (k, k+1) hooks: leg = arm + 1


def _flavor(flavor) -> str:
    if flavor in (FLAVOR_WIDE, "(l+1,l)", "k+1,k", (1, 0)):
        return FLAVOR_WIDE
    if flavor in (FLAVOR_TALL, "(l,l+1)", "k,k+1", (0, 1)):
        return FLAVOR_TALL
    raise ValueError(f"unknown hook flavor {flavor!r}")


def is_nested_hook(lam, flavor=FLAVOR_WIDE) -> bool:
    """True if every principal hook of ``lam`` has the requested shape.

    A (k+1,k)-hook has arm k and leg k-1; a (k,k+1)-hook has arm k-1 and leg k.
    Strictness of the nesting is automatic for Frobenius coordinates.
    """
    arms, legs = Partition(lam).frobenius()
    if _flavor(flavor) == FLAVOR_WIDE:
        return all(a == b + 1 for a, b in zip(arms, legs))
    return all(b == a + 1 for a, b in zip(arms, legs))


def nest_hooks(ks: Sequence[int], flavor=FLAVOR_WIDE) -> Partition:
    """Partition obtained by nesting hooks with strictly decreasing parameters ``ks``.

    The ``i``-th hook has its corner on the ``i``-th diagonal cell.
    """
    ks = list(ks)
    if any(ks[i] <= ks[i + 1] for i in range(len(ks) - 1)) or any(k < 1 for k in ks):
        raise ValueError("hook parameters must be positive and strictly decreasing")
    wide = _flavor(flavor) == FLAVOR_WIDE
    cells = set()
    for d, k in enumerate(ks):
        # corner on the diagonal; arm and leg measured from the corner
        arm, leg = (k, k - 1) if wide else (k - 1, k)
        c = d + 1
        for j in range(c, c + arm + 1):
            cells.add((c, j))
        for i in range(c, c + leg + 1):
            cells.add((i, c))
    rows = {}
    for i, j in cells:
        rows[i] = max(rows.get(i, 0), j)
    lam = Partition(sorted(rows.values(), reverse=True))
    if lam.size != len(cells):
        raise ValueError(f"hook parameters {ks} do not nest")
    return lam


def enumerate_nested_hook_partitions(k2: int, m: int, n: int, flavor=FLAVOR_WIDE) -> List[Partition]:
    """Partitions of ``k2`` built from nested hooks of the given flavor, inside the (m,n)-hook."""
    return [lam for lam in partitions(k2) if is_nested_hook(lam, flavor) and lam.in_hook(m, n)]


# ---------------------------------------------------------------------------
# permutations


def perm_sign(seq: Sequence) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    inv = 0
    n = len(seq)
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1


# ---------------------------------------------------------------------------
# marked diagrams


@dataclass(frozen=True)
class MarkedDiagram:
    """An m x r rectangle with at most one marked box per column.

    ``marks[c]`` is the marked row (1-based) of column ``c+1`` or ``None``.
    """

    m: int
    marks: Tuple[Optional[int], ...]

    @property
    def r(self) -> int:
        return len(self.marks)

    @property
    def size(self) -> int:
        return sum(1 for x in self.marks if x is not None)

    def __len__(self) -> int:
        return self.size

    def marked_boxes(self) -> List[Tuple[int, int]]:
        """``(row, col)`` pairs, by column."""
        return [(row, c) for c, row in enumerate(self.marks, 1) if row is not None]

    def to_ascii(self) -> str:
        lines = ["   " + "".join(f" {c} " for c in range(1, self.r + 1))]
        for i in range(1, self.m + 1):
            lines.append(f"{i:2d} " + "".join("[X]" if mk == i else "[ ]" for mk in self.marks))
        return "\n".join(lines)

    __str__ = to_ascii


def enumerate_marked_diagrams(m: int, r: int) -> Iterator[MarkedDiagram]:
    choices = [None] + list(range(1, m + 1))
    for marks in _cartesian(choices, repeat=r):
        yield MarkedDiagram(m, tuple(marks))


@dataclass(frozen=True)
class MarkedFamily:
    """Marked diagrams D_1..D_s of widths w_1 >= ... >= w_s, all with m rows."""

    m: int
    diagrams: Tuple[MarkedDiagram, ...]

    @property
    def widths(self) -> Tuple[int, ...]:
        return tuple(d.r for d in self.diagrams)

    @property
    def d(self) -> Tuple[int, ...]:
        return tuple(D.size for D in self.diagrams)

    @property
    def size(self) -> int:
        return sum(self.d)

    def e(self) -> Tuple[int, ...]:
        """Marks per column, columns 1..w_1."""
        width = self.widths[0] if self.diagrams else 0
        counts = [0] * width
        for D in self.diagrams:
            for _, c in D.marked_boxes():
                counts[c - 1] += 1
        return tuple(counts)

    def f(self) -> Tuple[int, ...]:
        """Marks per row, rows 1..m."""
        counts = [0] * self.m
        for D in self.diagrams:
            for row, _ in D.marked_boxes():
                counts[row - 1] += 1
        return tuple(counts)

    def column_rows(self, col: int) -> Tuple[int, ...]:
        """Sorted marked rows in column ``col`` across the family."""
        return tuple(sorted(D.marks[col - 1] for D in self.diagrams if D.r >= col and D.marks[col - 1] is not None))

    def is_valid(self) -> bool:
        seen = set()
        for D in self.diagrams:
            for box in D.marked_boxes():
                if box in seen:
                    return False
                seen.add(box)
        return True

    def epsilon(self) -> int:
        """Sign between the (i,s,k)- and (s,k,i)-lexicographic orders of the marks."""
        triples = [(i, s, k) for i, D in enumerate(self.diagrams, 1) for k, s in D.marked_boxes()]
        triples.sort()
        keyed = [(s, k, i) for i, s, k in triples]
        return perm_sign(keyed)


def enumerate_marked_families(widths: Sequence[int], m: int) -> Iterator[MarkedFamily]:
    widths = tuple(widths)
    if any(widths[i] < widths[i + 1] for i in range(len(widths) - 1)):
        raise ValueError("widths must be weakly decreasing")

    def rec(i: int, used: frozenset, acc: Tuple[MarkedDiagram, ...]):
        if i == len(widths):
            yield MarkedFamily(m, acc)
            return
        for D in enumerate_marked_diagrams(m, widths[i]):
            boxes = D.marked_boxes()
            if any(b in used for b in boxes):
                continue
            yield from rec(i + 1, used | frozenset(boxes), acc + (D,))

    yield from rec(0, frozenset(), ())


# ---------------------------------------------------------------------------
# pairings


@dataclass(frozen=True)
class Pairing:
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def sign(self) -> int:
        return perm_sign([i for pr in self.pairs for i in pr])

    def __str__(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.pairs)


def enumerate_pairings(size: int) -> Iterator[Pairing]:
    """Perfect matchings of {1..size}, pairs sorted internally and by first entry."""
    if size % 2:
        raise ValueError("size must be even")

    def rec(rest: Tuple[int, ...]):
        if not rest:
            yield ()
            return
        a = rest[0]
        for idx in range(1, len(rest)):
            b = rest[idx]
            remaining = rest[1:idx] + rest[idx + 1:]
            for tail in rec(remaining):
                yield ((a, b),) + tail

    for prs in rec(tuple(range(1, size + 1))):
        yield Pairing(prs)


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out
