import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intcyc.cyclic import (
    ChainError,
    ColorSet,
    chained_union,
    dif,
    intcyc_closed_1,
    intcyc_closed_2,
    intcyc_open_1,
    intcyc_open_2,
    is_cyclic_interval,
    is_interval,
)
from oracles import cyc_closed_sets, is_cyclic_by_witness


def S(t, *members):
    return ColorSet.of(t, members)


def test_intcyc_examples():
    assert set(intcyc_closed_1(2, 4, 5)) == {2, 3, 4}
    assert set(intcyc_open_1(2, 4, 5)) == {3}
    assert set(intcyc_open_2(2, 4, 5)) == {1, 5}
    assert set(intcyc_closed_2(2, 4, 5)) == {1, 2, 4, 5}
    assert set(intcyc_closed_1(3, 3, 7)) == {3}
    assert set(intcyc_closed_2(3, 3, 7)) == set(range(1, 8))


def test_dif_examples():
    assert dif(2, 4, 5) == 2
    assert dif(1, 5, 5) == 1
    for t in range(1, 9):
        for i in range(1, t + 1):
            assert dif(i, i, t) == 0


@pytest.mark.parametrize("f", [intcyc_closed_1, intcyc_open_1, intcyc_open_2, intcyc_closed_2, dif])
def test_out_of_range(f):
    with pytest.raises(ValueError):
        f(0, 2, 5)
    with pytest.raises(ValueError):
        f(2, 6, 5)


def test_partition_identities():
    for t in range(1, 11):
        full = ColorSet.full(t)
        for i1, i2 in itertools.product(range(1, t + 1), repeat=2):
            c1, o1 = intcyc_closed_1(i1, i2, t), intcyc_open_1(i1, i2, t)
            o2, c2 = intcyc_open_2(i1, i2, t), intcyc_closed_2(i1, i2, t)
            assert (c1 | o2) == full and len(c1 & o2) == 0
            assert c2 == full - o1
            assert o1 <= c1
            assert dif(i1, i2, t) == dif(i2, i1, t)
            # dif is the shorter way round the color cycle
            assert dif(i1, i2, t) == min(abs(i1 - i2), t - abs(i1 - i2))


def test_is_interval():
    assert is_interval(S(7, 3, 4, 5))
    assert not is_interval(S(5, 1, 3))
    assert not is_interval(ColorSet(5))


def test_is_cyclic_interval_examples():
    assert is_cyclic_interval(S(5, 4, 5, 1))
    assert set(intcyc_closed_2(1, 4, 5)) == {4, 5, 1}
    assert not is_cyclic_interval(S(5, 1, 3))
    assert not is_cyclic_interval(ColorSet(5))
    for t in range(1, 10):
        assert is_cyclic_interval(ColorSet.full(t))


def test_cyclic_matches_definition_t_le_8():
    # the t <= 12 sweep lives in the acceptance suite
    for t in range(1, 9):
        witnessed = cyc_closed_sets(t)
        for mask in range(1 << t):
            s = ColorSet(t, mask)
            assert is_cyclic_interval(s) == (frozenset(s) in witnessed and mask != 0)


@given(st.integers(1, 20), st.data())
def test_interval_is_cyclic(t_extra, data):
    lo = data.draw(st.integers(1, 10))
    hi = data.draw(st.integers(lo, 10))
    t = hi + t_extra - 1
    s = ColorSet.of(t, range(lo, hi + 1))
    assert is_interval(s) and is_cyclic_interval(s)


def test_colorset_basics():
    s = S(6, 2, 5)
    assert len(s) == 2 and 5 in s and 3 not in s and 7 not in s
    assert s.complement() == S(6, 1, 3, 4, 6)
    assert s.members == {2, 5}
    with pytest.raises(ValueError):
        S(4, 5)
    with pytest.raises(ValueError):
        s | S(5, 1)
    with pytest.raises(ValueError):
        ColorSet(65)


def test_chained_union_examples():
    assert set(chained_union([S(4, 1, 2), S(4, 2, 3)], 4)) == {1, 2, 3}
    u = chained_union([S(4, 4, 1), S(4, 1, 2)], 4)
    assert set(u) == {4, 1, 2} and is_cyclic_interval(u)
    with pytest.raises(ChainError):
        chained_union([S(4, 1, 2), S(4, 3, 4)], 4)
    with pytest.raises(ChainError):
        chained_union([S(5, 1, 3), S(5, 3)], 5)
    with pytest.raises(ChainError):
        chained_union([], 4)


@st.composite
def cyclic_chains(draw):
    t = draw(st.integers(1, 10))
    arcs = sorted(cyc_closed_sets(t), key=sorted)
    first = draw(st.sampled_from(arcs))
    chain = [first]
    for _ in range(draw(st.integers(1, 5))):
        nxt = [a for a in arcs if a & chain[-1]]
        chain.append(draw(st.sampled_from(nxt)))
    return t, chain


@settings(max_examples=300)
@given(cyclic_chains())
def test_union_of_overlapping_chain_is_cyclic(case):
    t, chain = case
    u = chained_union([ColorSet.of(t, q) for q in chain], t)
    assert is_cyclic_by_witness(set(u), t)
    assert set(u) == set().union(*chain)
