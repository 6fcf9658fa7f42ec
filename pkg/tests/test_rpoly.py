import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bruhatcubes.errors import OrderError, WordError
from bruhatcubes.interval import comparable_pairs, interval
from bruhatcubes.permutations import identity, longest_element, reflections
from bruhatcubes.polynomials import ONE, ZERO, degree, monomial, padd, pmul, poly_str, pshift
from bruhatcubes.rpoly import (
    ReflectionOrder,
    all_reflection_orders,
    canonical_orders,
    constrained_orders,
    increasing_path_counts,
    is_reflection_order,
    reflection_order_from_word,
    rtilde,
    rtilde_dyer,
    rtilde_recurrence,
    staircase_word,
)

from oracles import rtilde_brute_by_hand_s3

E3 = identity(3)
W3 = longest_element(3)


# ---------------------------------------------------------------------------
# polynomials


def test_poly_arithmetic():
    assert padd((0, 1), (1,)) == (1, 1)
    assert padd((0, 1), ()) == (0, 1)
    assert pmul((0, 1), (0, 1)) == (0, 0, 1)
    assert pmul((1, 1), (1, 1)) == (1, 2, 1)
    assert pmul(ZERO, (5,)) == ZERO
    assert pshift((1,), 3) == (0, 0, 0, 1)
    assert pshift(ZERO, 3) == ZERO
    assert monomial(2, 3) == (0, 0, 3)
    assert degree(ZERO) == -1 and degree((0, 1)) == 1


def test_poly_str():
    assert poly_str(()) == "0"
    assert poly_str((1,)) == "1"
    assert poly_str((0, 1, 0, 1)) == "q^3+q"
    assert poly_str((0, 2, 0, 3, 0, 1)) == "q^5+3q^3+2q"


# ---------------------------------------------------------------------------
# recurrence


def test_rtilde_examples():
    assert rtilde_recurrence((2, 3, 1), (2, 3, 1)) == ONE
    assert rtilde_recurrence(E3, (1, 3, 2)) == (0, 1)
    assert rtilde_recurrence(E3, W3) == (0, 1, 0, 1)
    assert rtilde_recurrence((2, 1, 3), (1, 3, 2)) == ZERO


def test_rtilde_matches_hand_unfolded_values():
    for (u, v), expect in rtilde_brute_by_hand_s3().items():
        assert rtilde(u, v) == expect, (u, v)


def test_rtilde_shape_s4():
    from bruhatcubes.permutations import length

    for u, v in comparable_pairs(4):
        p = rtilde(u, v)
        gap = length(v) - length(u)
        assert degree(p) == gap
        assert p[-1] == 1 if p else u == v
        if u != v:
            assert not p or p[0] == 0
        # only degrees of the right parity occur
        for d, c in enumerate(p):
            if c:
                assert (gap - d) % 2 == 0


# ---------------------------------------------------------------------------
# reflection orders


def test_order_from_word_examples():
    o = reflection_order_from_word(3, (1, 2, 1))
    assert o.sequence == ((1, 2), (1, 3), (2, 3))
    o = reflection_order_from_word(3, (2, 1, 2))
    assert o.sequence == ((2, 3), (1, 3), (1, 2))


def test_order_from_word_rejects_bad_words():
    with pytest.raises(WordError):
        reflection_order_from_word(3, (1, 1, 2))
    with pytest.raises(WordError):
        reflection_order_from_word(3, (1, 2))
    with pytest.raises(WordError):
        reflection_order_from_word(4, (1, 2, 1))


def test_is_reflection_order():
    assert is_reflection_order(ReflectionOrder(((1, 2), (1, 3), (2, 3))))
    assert not is_reflection_order(ReflectionOrder(((1, 2), (2, 3), (1, 3))))
    valid = [
        perm
        for perm in itertools.permutations(reflections(3))
        if is_reflection_order(ReflectionOrder(perm))
    ]
    assert len(valid) == 2


def test_all_reflection_orders_counts():
    assert len(all_reflection_orders(3)) == 2
    assert len(all_reflection_orders(4)) == 16
    for o in all_reflection_orders(4):
        assert is_reflection_order(o)


def test_staircase_word_is_reduced():
    for n in (2, 3, 4, 5):
        orders = canonical_orders(n, 3)
        for o in orders:
            assert is_reflection_order(o)
    assert staircase_word(4) == (1, 2, 1, 3, 2, 1)


# ---------------------------------------------------------------------------
# increasing paths


def test_dyer_examples():
    I = interval(E3, (1, 3, 2))
    for o in all_reflection_orders(3):
        assert rtilde_dyer(I, o) == (0, 1)
    I = interval(E3, W3)
    for o in all_reflection_orders(3):
        assert rtilde_dyer(I, o) == (0, 1, 0, 1)


def test_dyer_rejects_wrong_rank():
    I = interval(identity(4), longest_element(4))
    with pytest.raises(OrderError):
        rtilde_dyer(I, all_reflection_orders(3)[0])


def test_dyer_equals_recurrence_s3_all_orders():
    for u, v in comparable_pairs(3):
        I = interval(u, v)
        for o in all_reflection_orders(3):
            assert rtilde_dyer(I, o) == rtilde(u, v), (u, v, str(o))


def test_dyer_order_invariance_all_s4_orders():
    orders = all_reflection_orders(4)
    assert len(orders) == 16
    for u, v in comparable_pairs(4):
        I = interval(u, v)
        expected = rtilde(u, v)
        for o in orders:
            assert rtilde_dyer(I, o) == expected, (u, v, str(o))


def test_increasing_path_counts_examples():
    I = interval(E3, W3)
    o = reflection_order_from_word(3, (2, 1, 2))
    table = increasing_path_counts(I, (2, 3, 1), o)
    assert table[(2, 3, 1)] == {2: 1}
    assert table[W3] == {1: 1}
    # z at the top: the table row reproduces the polynomial coefficients
    for order in all_reflection_orders(3):
        row = increasing_path_counts(I, W3, order)[W3]
        poly = rtilde(E3, W3)
        assert row == {d: c for d, c in enumerate(poly) if c}
    # z at the bottom: a single empty path
    assert increasing_path_counts(I, E3, o) == {
        p: ({0: 1} if p == E3 else {}) for p in I.elements
    }


def test_increasing_path_counts_zero_below_distance():
    I = interval(identity(4), longest_element(4))
    o = canonical_orders(4, 1)[0]
    z = (2, 3, 4, 1)
    table = increasing_path_counts(I, z, o)
    for p, row in table.items():
        for k in row:
            assert k >= I.distance(I.u, p)


# ---------------------------------------------------------------------------
# constrained search


def test_constrained_orders_examples():
    hits = constrained_orders(3, {((2, 3), (1, 2))})
    assert [o.sequence for o in hits] == [((2, 3), (1, 3), (1, 2))]
    assert constrained_orders(3, {((1, 2), (2, 3)), ((2, 3), (1, 2))}) == []
    assert len(constrained_orders(3)) == 2


def test_constrained_orders_limit():
    assert len(constrained_orders(4, limit=5)) == 5


def test_constrained_orders_all_valid():
    for o in constrained_orders(4, {((3, 4), (1, 2))}):
        assert is_reflection_order(o)
        assert o.position[(3, 4)] < o.position[(1, 2)]


@given(seed=st.integers(min_value=0, max_value=10**6))
@settings(max_examples=25, deadline=None)
def test_random_reduced_words_give_valid_orders(seed):
    import random

    rng = random.Random(seed)
    n = rng.choice([3, 4, 5])
    sigma = identity(n)
    word = []
    while True:
        ascents = [i for i in range(1, n) if sigma[i - 1] < sigma[i]]
        if not ascents:
            break
        i = rng.choice(ascents)
        word.append(i)
        from bruhatcubes.permutations import right_multiply_simple

        sigma = right_multiply_simple(sigma, i)
    order = reflection_order_from_word(n, word)
    assert is_reflection_order(order)
