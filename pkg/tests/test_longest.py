from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rollercoaster.core import validate
from rollercoaster.errors import DuplicateValue, NotAPermutation
from rollercoaster.longest import (
    ARRAY_NAMES,
    KEEPS_SMALLEST,
    RaceTable,
    longest_increasing,
    longest_rollercoaster,
    longest_rollercoaster_perm,
    normalize_to_permutation,
    process_element,
)
from rollercoaster.oracle import longest_quadratic_dp
from rollercoaster.rng import SplitMix64

CLASS_OF = {"inc,2": "inc2", "inc,3+": "inc3", "inc,3+'": "inc3", "dec,2": "dec2", "dec,3+": "dec3", "dec,3+'": "dec3"}


def _length(rc):
    return 0 if rc is None else len(rc)


@pytest.mark.parametrize("solver", [longest_rollercoaster, longest_rollercoaster_perm])
def test_examples(solver):
    assert solver((3, 4, 1, 2)) is None
    assert _length(solver((5, 2, 6, 3, 7, 1, 4))) == 3
    rc = solver((8, 5, 1, 3, 4, 7, 6, 2))
    assert rc.indices == tuple(range(8))


def test_short_inputs():
    assert longest_rollercoaster(()) is None
    assert longest_rollercoaster((1, 2)) is None
    assert longest_rollercoaster((2, 1, 3)) is None


def test_identity_permutation():
    assert _length(longest_rollercoaster_perm(np.arange(1, 501))) == 500


def test_perm_path_requires_a_permutation():
    with pytest.raises(NotAPermutation):
        longest_rollercoaster_perm((1, 2, 4))


def test_non_integer_values():
    seq = [0.5, 0.25, 0.125, 3.5, 7.25, 9.0]
    from rollercoaster.core import NumberSequence

    assert _length(longest_rollercoaster(NumberSequence.from_reals(seq))) == 6


def test_paths_agree_on_all_small_permutations():
    for n in range(1, 9):
        for perm in permutations(range(1, n + 1)):
            assert _length(longest_rollercoaster(perm)) == _length(longest_rollercoaster_perm(perm))


@settings(max_examples=400)
@given(st.integers(0, 2**63), st.integers(9, 200))
def test_exact_against_quadratic_oracle(seed, n):
    perm = SplitMix64(seed).permutation(n)
    fast = longest_rollercoaster(perm)
    quick = longest_rollercoaster_perm(perm)
    assert _length(fast) == _length(longest_quadratic_dp(perm)) == _length(quick)
    for rc in (fast, quick):
        assert rc is None or validate(perm, rc.indices)


@given(st.lists(st.integers(-10**12, 10**12), unique=True, max_size=120))
def test_general_values_match_normalized_permutation(vals):
    expect = _length(longest_rollercoaster(vals))
    perm = normalize_to_permutation(vals) if vals else []
    assert expect == (_length(longest_rollercoaster_perm(perm)) if vals else 0)


def test_normalize_examples():
    assert normalize_to_permutation((30, 10, 20)).tolist() == [3, 1, 2]
    assert normalize_to_permutation((2, 3, 1)).tolist() == [2, 3, 1]
    with pytest.raises(DuplicateValue):
        normalize_to_permutation((5, 1, 5))


def test_normalize_random_64_bit():
    rng = SplitMix64(64)
    raw = rng.next_block(5000).view(np.int64)
    perm = normalize_to_permutation(raw)
    order = np.argsort(raw, kind="stable")
    assert (perm[order] == np.arange(1, 5001)).all()


def test_longest_increasing():
    assert len(longest_increasing((5, 2, 6, 3, 7, 1, 4))) == 3
    assert longest_increasing(range(1, 21)) == list(range(20))
    assert len(longest_increasing(range(20, 0, -1))) == 1
    assert longest_increasing(()) == []


@given(st.lists(st.integers(-1000, 1000), unique=True, max_size=12))
def test_longest_increasing_is_longest(vals):
    got = longest_increasing(vals)
    picked = [vals[i] for i in got]
    assert picked == sorted(picked) and got == sorted(got)
    best = 0
    for mask in range(1 << len(vals)):
        sub = [vals[i] for i in range(len(vals)) if mask >> i & 1]
        if all(a < b for a, b in zip(sub, sub[1:])):
            best = max(best, len(sub))
    assert len(got) == best


def _class_of(vals):
    """Class of a partial rollercoaster given by its values, or None."""
    if len(vals) == 1:
        return None
    runs, cur = [], 2
    up = vals[1] > vals[0]
    for a, b in zip(vals[1:], vals[2:]):
        if (b > a) == up:
            cur += 1
        else:
            runs.append(cur)
            cur, up = 2, b > a
    if any(r < 3 for r in runs):
        return None
    return ("inc" if up else "dec") + ("2" if cur == 2 else "3")


def _definition_lengths(vals):
    """Longest partial rollercoaster of each class ending at each element."""
    out = []
    for i in range(len(vals)):
        best = {"inc2": 1, "dec2": 1, "inc3": 0, "dec3": 0}
        for mask in range(1 << i):
            sub = [vals[j] for j in range(i) if mask >> j & 1] + [vals[i]]
            c = _class_of(sub)
            if c is not None:
                best[c] = max(best[c], len(sub))
        out.append(best)
    return out


@pytest.mark.parametrize("seed", range(40))
def test_array_semantics_by_enumeration(seed):
    rng = SplitMix64(900 + seed)
    n = 4 + rng.below(7)
    vals = rng.permutation(n).tolist()
    table = RaceTable(n)
    lengths = _definition_lengths(vals)
    for p, x in enumerate(vals, start=1):
        process_element(table, x)
        for i in range(p):
            assert table.class_lengths(i) == lengths[i]
        for a, name in enumerate(ARRAY_NAMES):
            pick = min if KEEPS_SMALLEST[a] else max
            want = {}
            for i in range(p):
                l = lengths[i][CLASS_OF[name]]
                if l:
                    want[l] = pick(want.get(l, vals[i]), vals[i])
            assert table.cells(name) == want, (vals[:p], name)


@given(st.integers(0, 2**63), st.integers(1, 80))
def test_writes_only_improve(seed, n):
    vals = SplitMix64(seed).permutation(n).tolist()
    table = RaceTable(n)
    for x in vals:
        table.process(x)
    last = {}
    for name, l, x, i, pred in table.history:
        a = ARRAY_NAMES.index(name)
        if (name, l) in last:
            prev = last[name, l]
            assert x < prev if KEEPS_SMALLEST[a] else x > prev
        last[name, l] = x
    for name in ARRAY_NAMES:
        assert table.cells(name) == {l: x for (nm, l), x in last.items() if nm == name}


def test_race_table_best_and_errors():
    table = RaceTable(8)
    for x in (8, 5, 1, 3, 4, 7, 6, 2):
        table.process(x)
    assert len(table) == 8
    assert table.best().indices == tuple(range(8))
    with pytest.raises(DuplicateValue):
        table.process(5)


def test_first_elements_bootstrap():
    table = RaceTable(3)
    table.process(5)
    assert table.cells("inc,2") == {1: 5} and table.cells("dec,2") == {1: 5}
    table.process(7)
    assert table.cells("inc,2") == {1: 5, 2: 7}
    assert table.cells("inc,3+") == {}


def test_large_permutation_paths_agree():
    perm = SplitMix64(77).permutation(20_000)
    a = longest_rollercoaster(perm)
    b = longest_rollercoaster_perm(perm)
    assert len(a) == len(b)
    assert validate(perm, a.indices) and validate(perm, b.indices)
