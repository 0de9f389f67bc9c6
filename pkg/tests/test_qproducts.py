import itertools

import pytest
from hypothesis import given, settings, strategies as st

from overspt.qproducts import (
    DivergentProduct,
    Monomial,
    apply_pochhammer,
    overpartition_gf,
    pochhammer_finite,
    pochhammer_infinite,
    pochhammer_ratio,
    q,
)
from overspt.series import Series, mul, one, times_binomial

from conftest import naive_product


def factor(sign, e, order):
    # 1 - sign*q^e as a coefficient list
    f = [0] * (order + 1)
    f[0] += 1
    if e <= order:
        f[e] -= sign
    return f


def distinct_part_counts(order):
    counts = [0] * (order + 1)
    for r in range(order + 1):
        for combo in itertools.combinations(range(1, order + 1), r):
            s = sum(combo)
            if s <= order:
                counts[s] += 1
    return counts


def test_finite_examples():
    assert list(pochhammer_finite(q(1), 1, 2, 3)) == naive_product([factor(1, 1, 3), factor(1, 2, 3)], 3)
    assert list(pochhammer_finite(q(1), 1, 2, 3)) == [1, -1, -1, 1]
    assert pochhammer_finite(q(3, -1), 1, 0, 5) == one(5)
    assert list(pochhammer_finite(q(1, -1), 1, 2, 3)) == [1, 1, 1, 1]


def test_euler_function():
    got = pochhammer_infinite(q(1), 1, 8)
    assert list(got) == naive_product([factor(1, e, 8) for e in range(1, 9)], 8)
    assert list(got) == [1, -1, -1, 0, 0, 1, 0, 1, 0]


def test_distinct_parts():
    assert list(pochhammer_infinite(q(1, -1), 1, 7)) == distinct_part_counts(7) == [1, 1, 1, 2, 2, 3, 4, 5]


def test_product_beyond_order_is_one():
    assert pochhammer_infinite(q(6), 1, 5) == one(5)


def test_divergent():
    with pytest.raises(DivergentProduct):
        pochhammer_infinite(Monomial(-1, 0), 1, 5)


def test_zero_exponent_finite():
    # (1;q)_n vanishes for n >= 1, (-1;q)_1 = 2
    assert list(pochhammer_finite(Monomial(1, 0), 1, 3, 4)) == [0] * 5
    assert list(pochhammer_finite(Monomial(-1, 0), 1, 1, 2)) == [2, 0, 0]


def test_base_two():
    order = 10
    expected = naive_product([factor(-1, e, order) for e in range(3, order + 1, 2)], order)
    assert list(pochhammer_infinite(q(3, -1), 2, order)) == expected


def test_overpartition_gf():
    assert list(overpartition_gf(5)) == [1, 2, 4, 8, 14, 24]


def test_ratio_roundtrip():
    r = pochhammer_ratio(q(1, -1), q(1), 1, 20)
    assert mul(r, pochhammer_infinite(q(1), 1, 20)) == pochhammer_infinite(q(1, -1), 1, 20)


monomials = st.builds(Monomial, st.sampled_from([1, -1]), st.integers(0, 6))


@settings(max_examples=250, deadline=None)
@given(monomials, st.integers(1, 3), st.integers(0, 8), st.integers(0, 20))
def test_incremental_factor(a, m, length, order):
    step = pochhammer_finite(a, m, length + 1, order)
    prev = pochhammer_finite(a, m, length, order)
    e = a.exponent + m * length
    if e == 0:
        expected = Series((1 - a.sign) * c for c in prev)
    elif e > order:
        expected = prev
    else:
        expected = times_binomial(prev, -a.sign, e)
    assert step == expected


@settings(max_examples=250, deadline=None)
@given(st.sampled_from([1, -1]), st.integers(1, 6), st.integers(1, 3), st.integers(0, 25))
def test_infinite_equals_long_finite(sign, e, m, order):
    a = Monomial(sign, e)
    K = order // m + 2
    assert pochhammer_infinite(a, m, order) == pochhammer_finite(a, m, K, order)


def test_pentagonal_signs():
    order = 60
    got = pochhammer_infinite(q(1), 1, order)
    # oracle: signed count of partitions into distinct parts, sign (-1)^(number of parts)
    signed = [0] * (order + 1)

    def walk(rem, largest, parts):
        signed[order - rem] += (-1) ** parts
        for v in range(min(rem, largest - 1), 0, -1):
            walk(rem - v, v, parts + 1)

    walk(order, order + 1, 0)
    assert list(got) == signed
    pent = {}
    for j in range(-10, 11):
        pent[j * (3 * j - 1) // 2] = (-1) ** j
    assert list(got) == [pent.get(n, 0) for n in range(order + 1)]


def test_apply_inverse_matches_ratio():
    s = apply_pochhammer(one(15), q(2, -1), 2)
    assert apply_pochhammer(s, q(2), 2, inverse=True) == pochhammer_ratio(q(2, -1), q(2), 2, 15)
