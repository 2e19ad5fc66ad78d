import bisect

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rollercoaster.errors import AllEmpty, DuplicateValue, IndexOutOfRange
from rollercoaster.rng import SplitMix64
from rollercoaster.structures import AggregateSearchTree, PermFindMax, SuccessorDict, SuffixMaxStructure


def _filled_tree(values):
    t = AggregateSearchTree(len(values))
    for l, x in enumerate(values, start=1):
        t.update(l, x)
    return t


def test_ast_update_and_overwrite():
    t = _filled_tree([5, 1, 7, 3])
    t.update(2, 6)
    assert t.cells() == [5, 6, 7, 3]
    t.update(2, 9)
    t.update(2, 4)
    assert t.get(2) == 4


def test_ast_queries():
    assert AggregateSearchTree(4).find_largest(0, "above") is None
    assert _filled_tree([5, 1, 7, 3]).find_largest(4, "below") == 4
    assert _filled_tree([5, 6, 7, 3]).find_largest(6, "above") == 3


def test_ast_empty_cells_never_match():
    t = _filled_tree([5, 1, 7, 3])
    t.clear(4)
    t.clear(2)
    assert t.find_largest(4, "below") is None
    assert t.get(4) is None


def test_ast_bounds():
    t = AggregateSearchTree(3)
    with pytest.raises(IndexOutOfRange):
        t.update(4, 1)
    with pytest.raises(IndexOutOfRange):
        t.update(0, 1)
    with pytest.raises(ValueError):
        t.find_largest(1, "sideways")


def test_successor_dict_basics():
    d = SuccessorDict(100)
    for key in (3, 50, 7, 0, 100):
        d.add(key)
    assert list(d) == [0, 3, 7, 50, 100]
    assert d.successor(7) == 50 and d.predecessor(7) == 3
    assert d.successor(100) is None and d.predecessor(0) is None
    assert d.ceiling(8) == 50 and d.floor(8) == 7
    d.discard(50)
    assert d.successor(7) == 100 and 50 not in d and len(d) == 4
    with pytest.raises(IndexOutOfRange):
        d.add(101)


@given(st.integers(0, 3000), st.lists(st.tuples(st.booleans(), st.integers(0, 3000)), max_size=200))
def test_successor_dict_against_sorted_list(u, ops):
    d = SuccessorDict(u)
    ref = []
    for add, key in ops:
        key %= u + 1
        pos = bisect.bisect_left(ref, key)
        present = pos < len(ref) and ref[pos] == key
        if add:
            d.add(key)
            if not present:
                ref.insert(pos, key)
        else:
            d.discard(key)
            if present:
                ref.pop(pos)
        j = bisect.bisect_right(ref, key)
        assert d.successor(key) == (ref[j] if j < len(ref) else None)
        i = bisect.bisect_left(ref, key)
        assert d.predecessor(key) == (ref[i - 1] if i else None)
    assert list(d) == ref
    assert d.min() == (ref[0] if ref else None) and d.max() == (ref[-1] if ref else None)


def _smq(values, prefix=False):
    s = SuffixMaxStructure(len(values), prefix)
    for l, x in enumerate(values, start=1):
        if x:
            s.update(l, x)
    return s


def test_smq_examples():
    s = _smq([2, 9, 4, 1])
    assert s.query(3) == 3
    assert s.query(2) == 2
    assert s.query(1) == 2


def test_smq_new_global_max_removes_dominated_records():
    s = _smq([2, 9, 4, 1])
    assert s.records() == [2, 3, 4]
    s.update(3, 0)
    s.update(4, 0)
    s.update(4, 10)
    assert s.records() == [4]
    assert s.query(1) == 4


def test_smq_dominated_update_leaves_records_alone():
    s = _smq([2, 0, 9, 0, 4])
    before = s.records()
    s.update(2, 5)
    # 5 at position 2 is below the record 9 further right
    assert s.records() == before


def test_smq_errors():
    s = _smq([0, 3, 0])
    with pytest.raises(AllEmpty):
        s.query(3)
    with pytest.raises(DuplicateValue):
        s.update(1, 3)
    with pytest.raises(IndexOutOfRange):
        s.query(4)


def test_prefix_variant():
    s = _smq([2, 9, 4, 1], prefix=True)
    assert s.query(1) == 1
    assert s.query(4) == 2


def test_relocate_keeps_answers():
    s = _smq([0, 6, 0, 2, 0])
    s.relocate(2, 5)
    assert s[5] == 6 and s[2] == 0 and s.query(1) == 5
    s.relocate(5, 1)
    assert s.query(1) == 1 and s.query(2) == 4


@given(st.integers(1, 60), st.lists(st.tuples(st.integers(0, 2), st.integers(1, 60), st.integers(0, 60)), max_size=300),
       st.booleans())
def test_smq_against_scan(n, ops, prefix):
    s = SuffixMaxStructure(n, prefix)
    B = [0] * (n + 1)
    for op, l, x in ops:
        l = (l - 1) % n + 1
        x %= n + 1
        if op == 0 and x and x not in B:
            s.update(l, x)
            B[l] = x
        elif op == 1:
            s.update(l, 0)
            B[l] = 0
        elif op == 2:
            span = range(1, l + 1) if prefix else range(l, n + 1)
            best = max(span, key=lambda i: B[i])
            if B[best] == 0:
                with pytest.raises(AllEmpty):
                    s.query(l)
            else:
                assert s.query(l) == best
        recs = s.records()
        vals = [B[r] for r in recs]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert len(set(recs)) == len(recs)
    assert s.deletes <= s.inserts


def test_pfm_scenarios():
    p = PermFindMax(4)
    assert p.find_largest(2, "above") is None
    for l, x in enumerate([4, 1, 3, 2], start=1):
        p.update(l, x)
    assert p.find_largest(3, "below") == 4
    assert p.find_largest(3, "above") == 1
    p.update(1, 0)
    assert 4 not in p
    assert p.find_largest(3, "above") is None
    with pytest.raises(DuplicateValue):
        p.update(2, 3)


def test_pfm_inverse_tracks_updates():
    p = PermFindMax(5)
    p.update(2, 5)
    p.update(4, 1)
    p.update(2, 3)
    assert p.inverse().tolist() == [0, 4, 0, 2, 0, 0]


def test_pfm_single_direction():
    p = PermFindMax(3, above=False)
    p.update(1, 2)
    assert p.find_largest(3, "below") == 1
    with pytest.raises(ValueError):
        p.find_largest(1, "above")


@given(st.integers(1, 40), st.lists(st.tuples(st.integers(0, 3), st.integers(1, 40), st.integers(0, 42)), max_size=300))
def test_pfm_against_scan(n, ops):
    p = PermFindMax(n)
    A = np.zeros(n + 1, dtype=np.int64)
    for op, l, x in ops:
        l = (l - 1) % n + 1
        if op == 0:
            x = x % n + 1
            if x in A[1:] and A[l] != x:
                continue
            p.update(l, x)
            A[l] = x
        elif op == 1:
            p.update(l, 0)
            A[l] = 0
        else:
            hit = (A > 0) & ((A < x) if op == 2 else (A > x))
            want = int(np.flatnonzero(hit)[-1]) if hit.any() else None
            assert p.find_largest(x, "below" if op == 2 else "above") == want
    B = p.inverse()
    assert all(B[A[l]] == l for l in range(1, n + 1) if A[l])


def test_ast_long_replay_matches_array():
    rng = SplitMix64(11)
    n = 300
    t = AggregateSearchTree(n)
    ref = [None] * (n + 1)
    for _ in range(100_000):
        l = rng.below(n) + 1
        x = rng.below(10**9)
        t.update(l, x)
        ref[l] = x
    assert t.cells() == ref[1:]
