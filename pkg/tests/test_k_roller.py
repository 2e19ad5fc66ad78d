from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from rollercoaster.core import validate
from rollercoaster.errors import BadK, EmptyWindow, TooShort
from rollercoaster.k_roller import (
    _strip_first_run,
    k_rollercoaster,
    longest_monotone,
    proof_bound,
    theorem_bound,
)
from rollercoaster.rng import SplitMix64


def test_increasing_input_is_one_run():
    assert k_rollercoaster(list(range(10)), 4).indices == tuple(range(10))


def test_bound_at_n200():
    rng = SplitMix64(200)
    for _ in range(50):
        perm = rng.permutation(200)
        rc = k_rollercoaster(perm, 4)
        assert validate(perm, rc.indices, 4)
        assert len(rc) >= 28


def test_preconditions():
    with pytest.raises(TooShort):
        k_rollercoaster(list(range(9)), 4)
    with pytest.raises(BadK):
        k_rollercoaster(list(range(50)), 3)


def test_longest_monotone_examples():
    asc, desc = longest_monotone((1, 2, 3))
    assert asc == [0, 1, 2] and len(desc) == 1
    asc, desc = longest_monotone((5, 2, 6, 3, 7, 1, 4))
    assert len(asc) == 3 and len(desc) == 3
    assert longest_monotone((42,)) == ([0], [0])
    with pytest.raises(EmptyWindow):
        longest_monotone(())


def _brute_longest(vals, up):
    for size in range(len(vals), 0, -1):
        for combo in combinations(range(len(vals)), size):
            picked = [vals[i] for i in combo]
            if all((a < b) == up for a, b in zip(picked, picked[1:])):
                return list(combo)
    return []


@given(st.lists(st.integers(-50, 50), unique=True, min_size=1, max_size=11))
def test_longest_monotone_against_enumeration(vals):
    asc, desc = longest_monotone(vals)
    # enumeration in lexicographic order finds the lexicographically smallest longest chain
    assert asc == _brute_longest(vals, True)
    assert desc == _brute_longest(vals, False)


def test_strip_removes_all_but_one_point_of_a_short_first_run():
    v = [1, 2, 3, 0, -1, -2, -3, -4]
    # first run 1,2,3 has k' = 3 < 4 points; k' - 1 = 2 of them go
    assert _strip_first_run(v, list(range(8)), 4) == [2, 3, 4, 5, 6, 7]
    assert _strip_first_run(v, list(range(8)), 3) == list(range(8))


@given(st.integers(0, 2**63), st.sampled_from([4, 5, 6]), st.integers(0, 400))
def test_window_stats_and_bound(seed, k, extra):
    n = (k - 1) ** 2 + 1 + extra
    perm = SplitMix64(seed).permutation(n)
    trace = []
    rc = k_rollercoaster(perm, k, trace)
    assert validate(perm, rc.indices, k)
    assert len(rc) >= theorem_bound(n, k)
    assert sum(w.m for w in trace) == n - 1
    for w in trace:
        assert (w.alpha - 1) * (k - 1) < w.m - 1 <= w.alpha * (k - 1) or w.m == 1
        if not w.last:
            assert w.ascent >= k and w.descent >= k
            assert (w.ascent + w.descent) * (k - 1) >= w.m


def test_proof_bound_is_the_stronger_one():
    for k in (4, 5, 6):
        for n in (100, 1000):
            assert proof_bound(n, k) > theorem_bound(n, k)
