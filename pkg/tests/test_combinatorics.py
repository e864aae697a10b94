from fractions import Fraction
from itertools import permutations as iter_perms

import pytest
from hypothesis import given, strategies as st

from nsjack.combinatorics import (Interval, ParameterSet, Permutation, b_part, check_disjoint,
                                  dominance_compare, eps_product, eps_reversed_closed, full_orbit_size,
                                  h_part, hook_product, is_b_partition, kappa, kappa_prime,
                                  lambda_factor, longest_element, orbit, orbit_size, partitions,
                                  permutation_to, reverse_on_interval, shifted_factorial,
                                  sort_to_partition, standardize, staircase, subgroup_elements,
                                  to_fraction, total_order_key, w_subset)
from nsjack.errors import SingularParameterError, UserInputError

from strategies import compositions, couplings, permutations

K = Fraction(1, 2)


def test_sort_examples():
    assert sort_to_partition((1, 2, 1)) == (2, 1, 1)
    assert sort_to_partition((0, 0)) == (0, 0)
    assert sort_to_partition((4, 5, 3, 4, 2, 0, 1)) == (5, 4, 4, 3, 2, 1, 0)


@given(compositions(4, 6), permutations(4))
def test_sort_is_idempotent_and_permutation_invariant(alpha, w):
    lam = sort_to_partition(alpha)
    assert sort_to_partition(lam) == lam
    assert sort_to_partition(w.act(alpha)) == lam


def test_dominance_examples():
    assert dominance_compare((2, 0), (1, 1)) == "succeeds"
    assert dominance_compare((1, 1), (2, 0)) == "precedes"
    assert dominance_compare((1, 1), (1, 1)) == "equal"
    assert dominance_compare((2, 0, 1), (1, 2, 0)) == "incomparable"
    with pytest.raises(UserInputError):
        dominance_compare((1, 0), (1, 1))


@given(compositions(3, 4), compositions(3, 4), compositions(3, 4))
def test_dominance_is_a_partial_order(a, b, c):
    def ge(x, y):
        return sum(x) == sum(y) and dominance_compare(x, y) in ("succeeds", "equal")

    assert ge(a, a)
    if ge(a, b) and ge(b, a):
        assert a == b
    if ge(a, b) and ge(b, c):
        assert ge(a, c)


@given(compositions(3, 4), compositions(3, 4))
def test_total_order_refines_the_sorted_order(a, b):
    if sum(a) == sum(b) and sort_to_partition(a) != sort_to_partition(b) and \
            dominance_compare(sort_to_partition(a), sort_to_partition(b)) == "succeeds":
        assert total_order_key(a) > total_order_key(b)


def test_orbit_examples():
    I12 = Interval(1, 2)
    assert orbit((1, 0), [I12]) == {(1, 0), (0, 1)}
    assert orbit((2, 2), [I12]) == {(2, 2)}
    assert orbit((1, 0, 3, 3), [I12, Interval(3, 4)]) == {(1, 0, 3, 3), (0, 1, 3, 3)}
    assert orbit_size((1, 0, 3, 3), [I12, Interval(3, 4)]) == 2


def test_intervals_parse_and_validate():
    assert Interval.parse("2..4") == Interval(2, 4)
    assert str(Interval(2, 4)) == "2..4"
    for bad in ("3", "a..b", "0..2", "3..2"):
        with pytest.raises(UserInputError):
            Interval.parse(bad)
    with pytest.raises(UserInputError):
        check_disjoint([Interval(1, 2), Interval(2, 3)])
    with pytest.raises(UserInputError):
        Interval(1, 5).check(4)


def test_parameters_reject_floats():
    with pytest.raises(UserInputError):
        ParameterSet(2, 0.5)
    assert ParameterSet(2, "1/2").k == Fraction(1, 2)
    assert to_fraction("5/3") == Fraction(5, 3)
    with pytest.raises(UserInputError):
        to_fraction("1/0")


def test_kappa_examples():
    p = ParameterSet(2, 1)
    assert kappa((1, 0), 1, p) == 4
    assert kappa((1, 0), 2, p) == 2
    assert kappa((0, 1), 2, p) == 4


@given(st.integers(1, 4), st.integers(0, 5), couplings)
def test_kappa_on_partitions(N, d, k):
    p = ParameterSet(N, k)
    for lam in partitions(N, d):
        for i in range(1, N + 1):
            assert kappa(lam, i, p) == N * k - k * (i - 1) + lam[i - 1] + 1


def test_kappa_prime_examples():
    p2, p3 = ParameterSet(2, 1), ParameterSet(3, 1)
    assert kappa_prime((1, 0), 1, Interval(1, 2), p2) == 4
    assert kappa_prime((2, 1, 1), 2, Interval(2, 3), p3) == 4
    # one part exceeds 1 and no equal part sits left of the interval, so 3 - 1 + 1 + 1
    assert kappa_prime((2, 1, 1), 3, Interval(2, 3), p3) == 4


def test_hook_and_shifted_factorial_examples():
    p = ParameterSet(2, K)
    t = Fraction(7, 3)
    assert hook_product((2, 0), t, p) == t * (t + 1)
    assert hook_product((1, 1), t, p) == t * (t + K)
    assert hook_product((), t, p) == 1
    assert shifted_factorial(t, 0) == 1
    assert shifted_factorial(3, 2) == 12
    assert shifted_factorial(t, (1, 1), p) == t * (t - K)


def test_eps_product_examples():
    p = ParameterSet(2, K)
    I = Interval(1, 2)
    assert eps_product((1, 0), I, 1, p) == 1
    assert eps_product((0, 1), I, -1, p) == 1 / (K + 1)
    assert eps_product((0, 1), I, 1, p) == (2 * K + 1) / (K + 1)


def test_eps_product_names_colliding_pair():
    # kappa_1 = kappa_2 for (0, 1) at k = -1
    with pytest.raises(SingularParameterError) as info:
        eps_product((0, 1), Interval(1, 2), 1, ParameterSet(2, -1))
    assert info.value.pair == (1, 2)


@given(compositions(4, 5), couplings, st.sampled_from([Interval(1, 3), Interval(2, 4), Interval(1, 4)]))
def test_eps_reflection_product(alpha, k, I):
    p = ParameterSet(4, k)
    if any(alpha[i - 1] <= alpha[i] for i in range(I.lo, I.hi)):
        return
    rev = reverse_on_interval(alpha, I)
    sigma = longest_element(4, I)
    for eps in (1, -1):
        assert eps_reversed_closed(alpha, I, eps, p) == eps_product(rev, I, eps, p)
        for w in subgroup_elements(4, [I]):
            assert eps_product(w.act(alpha), I, eps, p) * eps_product((sigma * w).act(alpha), I, eps, p) \
                == eps_product(rev, I, eps, p)


@given(st.integers(1, 4), st.integers(0, 5), couplings)
def test_hook_identity(N, d, k):
    p = ParameterSet(N, k)
    full = Interval(1, N)
    for lam in partitions(N, d):
        lhs = hook_product(lam, k, p) * shifted_factorial(N * k + 1, lam, p) * full_orbit_size(lam)
        rhs = shifted_factorial(N * k, lam, p) * eps_product(lam[::-1], full, 1, p) * hook_product(lam, k + 1, p)
        assert lhs == rhs


def test_reverse_on_interval_examples():
    assert reverse_on_interval((3, 2, 1), Interval(1, 3)) == (1, 2, 3)
    assert reverse_on_interval((5, 1, 0, 7), Interval(2, 3)) == (5, 0, 1, 7)
    assert reverse_on_interval((5, 1, 0, 7), Interval(2, 2)) == (5, 1, 0, 7)


def test_b_partition_example():
    alpha = (4, 5, 3, 4, 2, 0, 1)
    assert h_part(alpha) == (2, 2, 1, 2, 1, 0, 0)
    assert b_part(alpha) == (2, 3, 2, 2, 1, 0, 1)
    assert is_b_partition(alpha)
    std, w = standardize(alpha)
    assert std == (5, 3, 1, 4, 4, 2, 0)
    assert w.act(std) == alpha
    assert not is_b_partition((1, 3))


def test_w_subset_examples():
    assert w_subset({2}, 2) == Permutation((2, 1))
    assert w_subset({1, 2}, 4).is_identity()


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_w_subset_unique_by_search(N):
    from itertools import combinations

    perms = [Permutation(im) for im in iter_perms(range(1, N + 1))]
    for ell in range(N + 1):
        for A in combinations(range(1, N + 1), ell):
            found = [w for w in perms if {w(i) for i in range(1, ell + 1)} == set(A)
                     and all(w(i) < w(i + 1) for i in range(1, N) if i != ell)]
            assert found == [w_subset(A, N)]


def test_lambda_factor_examples():
    k, k1 = Fraction(1, 2), Fraction(2)
    p = ParameterSet(2, k, k1)
    assert lambda_factor((0, 0), p) == 1
    assert lambda_factor((1, 0), p) == k + k1 + Fraction(1, 2)
    # b((2,0)) = (1,0), so the second factor does not drop out
    assert lambda_factor((2, 0), p) == (2 * k + 1) * (k + k1 + Fraction(1, 2))


def test_staircase():
    assert staircase([3, 2], 5) == (2, 1, 1, 0, 0)
    assert staircase([1, 1], 3) == (0, 0, 0)


@given(permutations(4), permutations(4), compositions(4, 5))
def test_permutation_action_composes(w1, w2, alpha):
    assert (w1 * w2).act(alpha) == w1.act(w2.act(alpha))
    assert w1.inverse().act(w1.act(alpha)) == alpha
    assert (w1 * w2).sign() == w1.sign() * w2.sign()


@given(compositions(4, 5), permutations(4))
def test_permutation_to_hits_target(alpha, w):
    beta = w.act(alpha)
    assert permutation_to(alpha, beta).act(alpha) == beta
