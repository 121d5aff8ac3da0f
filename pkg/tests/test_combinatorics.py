from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superhowe.combinatorics import (
    FLAVOR_TALL,
    FLAVOR_WIDE,
    MarkedDiagram,
    MarkedFamily,
    Partition,
    double_factorial,
    enumerate_even_partitions,
    enumerate_hook_partitions,
    enumerate_marked_diagrams,
    enumerate_marked_families,
    enumerate_nested_hook_partitions,
    enumerate_pairings,
    is_nested_hook,
    nest_hooks,
    partitions,
    perm_sign,
    transpose,
)
from oracles import partition_count

partition_st = st.lists(st.integers(1, 7), max_size=6).map(lambda xs: Partition(sorted(xs, reverse=True)))


@pytest.mark.parametrize("k", range(0, 13))
def test_partition_counts(k):
    assert len(partitions(k)) == partition_count(k)
    assert len(set(partitions(k))) == len(partitions(k))


def test_partitions_reverse_lex():
    assert [tuple(p) for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partition_validation_and_text():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    assert str(Partition(())) == "0"
    assert Partition.parse("3, 2,2") == (3, 2, 2)
    assert Partition.parse("0") == ()
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_transpose_example():
    assert transpose((5, 3, 2, 1)) == (4, 3, 2, 1, 1)


@settings(max_examples=200)
@given(partition_st)
def test_conjugate_involution(lam):
    conj = lam.conjugate()
    assert conj.conjugate() == lam
    assert conj.size == lam.size
    assert sorted(lam.cells()) == sorted((j, i) for i, j in conj.cells())


@settings(max_examples=200)
@given(partition_st, st.integers(0, 3), st.integers(0, 3))
def test_hook_condition_conjugates(lam, m, n):
    # lam in the (m,n)-hook iff lam' in the (n,m)-hook
    assert lam.in_hook(m, n) == lam.conjugate().in_hook(n, m)
    assert lam.in_hook(m, n) == all(i <= m or j <= n for i, j in lam.cells())


def test_enumerators_filter():
    assert enumerate_hook_partitions(3, 1, 0, 2, 1) == [(3,)]
    assert enumerate_even_partitions(4, 1, 0) == [(4,)]
    assert enumerate_even_partitions(4, 1, 2) == [(4,), (2, 2)]
    with pytest.raises(ValueError):
        enumerate_even_partitions(3, 1, 1)


def test_nest_hooks_examples():
    assert nest_hooks([1]) == (2,)
    assert nest_hooks([2]) == (3, 1)
    assert nest_hooks([2, 1]) == (3, 3)
    assert nest_hooks([1], FLAVOR_TALL) == (1, 1)
    assert nest_hooks([2], FLAVOR_TALL) == (2, 1, 1)
    assert nest_hooks([3, 1]) == (4, 3, 1)
    with pytest.raises(ValueError):
        nest_hooks([1, 1])


def _hook_subsets(k2, flavor):
    """All nestings of hooks with sizes summing to k2, built independently of Frobenius coordinates."""
    out = set()

    def rec(prev, total, ks):
        if total == k2:
            out.add(nest_hooks(ks, flavor))
            return
        for k in range(1, prev):
            if total + 2 * k <= k2:
                rec(k, total + 2 * k, ks + [k])

    rec(k2 + 1, 0, [])
    return out


@pytest.mark.parametrize("k2", [0, 2, 4, 6, 8, 10, 12])
@pytest.mark.parametrize("flavor", [FLAVOR_WIDE, FLAVOR_TALL])
def test_nested_hooks_match_constructive_enumeration(k2, flavor):
    got = set(enumerate_nested_hook_partitions(k2, 9, 9, flavor))
    assert got == _hook_subsets(k2, flavor)
    assert all(is_nested_hook(l, flavor) for l in got)


def test_nested_hook_flavors_are_conjugate():
    for k2 in range(0, 13, 2):
        wide = {l.conjugate() for l in enumerate_nested_hook_partitions(k2, 20, 20, FLAVOR_WIDE)}
        assert wide == set(enumerate_nested_hook_partitions(k2, 20, 20, FLAVOR_TALL))


@pytest.mark.parametrize("n", range(1, 7))
def test_perm_sign_matches_cycle_count(n):
    for perm in permutations(range(n)):
        seen, cycles = set(), 0
        for i in range(n):
            if i not in seen:
                cycles += 1
                while i not in seen:
                    seen.add(i)
                    i = perm[i]
        assert perm_sign(perm) == (-1) ** (n - cycles)


def test_marked_diagram_counts_and_ascii():
    assert len(list(enumerate_marked_diagrams(2, 3))) == 3 ** 3
    D = MarkedDiagram(2, (1, None, 2))
    assert D.size == 2
    assert D.marked_boxes() == [(1, 1), (2, 3)]
    assert D.to_ascii().splitlines()[1] == " 1 [X][ ][ ]"


def test_marked_family_statistics():
    F = MarkedFamily(2, (MarkedDiagram(2, (1, 2)), MarkedDiagram(2, (2,))))
    assert F.d == (2, 1)
    assert F.e() == (2, 1)
    assert F.f() == (1, 2)
    assert F.column_rows(1) == (1, 2)
    assert F.is_valid()
    bad = MarkedFamily(2, (MarkedDiagram(2, (1,)), MarkedDiagram(2, (1,))))
    assert not bad.is_valid()


def test_marked_family_epsilon():
    # marks (i,s,k): (1,1,1), (1,2,2), (2,2,1); sorted by (s,k,i): (1,1,1), (2,1,2), (2,2,1)
    # the sequence of (s,k,i) keys in (i,s,k) order is (1,1,1), (2,2,1), (2,1,2): one inversion
    F = MarkedFamily(2, (MarkedDiagram(2, (1, 2)), MarkedDiagram(2, (2,))))
    assert F.epsilon() == -1
    G = MarkedFamily(2, (MarkedDiagram(2, (1, None)), MarkedDiagram(2, (2,))))
    assert G.epsilon() == 1


def test_marked_families_are_disjoint():
    fams = list(enumerate_marked_families((2, 1), 2))
    assert all(F.is_valid() for F in fams)
    # D1 unmarked in column 1: 3*3 choices; marked: 2 rows * 3 * 2 left for D2
    assert len(fams) == 3 * 3 + 2 * 3 * 2
    with pytest.raises(ValueError):
        list(enumerate_marked_families((1, 2), 2))


@pytest.mark.parametrize("size", [0, 2, 4, 6, 8])
def test_pairing_counts(size):
    ps = list(enumerate_pairings(size))
    assert len(ps) == double_factorial(size - 1) if size else len(ps) == 1
    assert len({p.pairs for p in ps}) == len(ps)


def test_pairing_signs_of_four():
    assert [p.sign for p in enumerate_pairings(4)] == [1, -1, 1]
    # Pfaffian of the all-ones skew matrix
    assert sum(p.sign for p in enumerate_pairings(6)) == 1
