from fractions import Fraction

import pytest
from hypothesis import given

from nsjack.combinatorics import Interval, ParameterSet, Permutation, shifted_factorial
from nsjack.errors import NotDivisibleError, UserInputError
from nsjack.polyalg import (Poly, SignedPermutation, act, alternating_poly, change_to_p_basis,
                            evaluate, evaluate_ones, exact_divide, from_p_basis, p_basis,
                            parity_decompose, parse_poly, substitute_squares, to_text, translate,
                            x_subset)

from strategies import couplings, permutations, polys, scalars, signed_permutations


def xs(N):
    return [Poly.var(N, i) for i in range(1, N + 1)]


def test_arithmetic_examples():
    x1, x2 = xs(2)
    assert (x1 + (-x1)).is_zero()
    assert (x1 + x2) * (x1 - x2) == x1 ** 2 - x2 ** 2
    assert x1.scale(Fraction(3, 2)).coeff((1, 0)) == Fraction(3, 2)


def test_zero_coefficients_are_dropped():
    f = Poly(2, {(1, 0): 0, (0, 1): Fraction(2)})
    assert list(f.terms) == [(0, 1)]
    assert Poly(2, {(1, 0): 1}) != Poly(3, {(1, 0, 0): 1})


def test_rejects_floats():
    with pytest.raises(UserInputError):
        Poly(1, {(1,): 0.5})


@given(polys(3, 3), polys(3, 3), polys(3, 3))
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Poly.zero(3)


def test_group_action_examples():
    x1, x2 = xs(2)
    assert act(Permutation((2, 1)), x1 ** 2 * x2) == x1 * x2 ** 2
    assert act(SignedPermutation.sigma(2, 1), x1 * x2) == -(x1 * x2)
    assert act(SignedPermutation.tau_ij(2, 1, 2), x1 ** 2 + x2 ** 2) == x1 ** 2 + x2 ** 2
    assert act(SignedPermutation.tau_ij(2, 1, 2), x1) == -x2


def test_action_matches_substitution():
    # (w f)(x) = f(x w): x w = (x_{w(1)}, ..., x_{w(N)})
    x1, x2, x3 = xs(3)
    w = Permutation((2, 3, 1))
    f = x1 ** 3 + 2 * x2 + x1 * x3 ** 2
    pt = [Fraction(2), Fraction(3), Fraction(5)]
    moved = [pt[w(i) - 1] for i in range(1, 4)]
    assert evaluate(act(w, f), pt) == evaluate(f, moved)


@given(signed_permutations(3), signed_permutations(3), polys(3, 3))
def test_signed_action_is_a_left_action(u, v, f):
    assert act(u * v, f) == act(u, act(v, f))


@given(permutations(3), polys(3, 3), polys(3, 3))
def test_action_is_multiplicative(w, f, g):
    assert act(w, f * g) == act(w, f) * act(w, g)


def test_evaluate_examples():
    x1, x2 = xs(2)
    assert evaluate(x1 * x2, (1, 1)) == 1
    assert evaluate(2 * x1 + x2, (1, 1)) == 3
    assert evaluate(Poly.const(2, 5), (Fraction(7, 3), -4)) == 5
    assert evaluate_ones(2 * x1 + x2) == 3
    with pytest.raises(UserInputError):
        evaluate(x1, (1,))


def test_exact_divide_examples():
    x1, x2, x3 = xs(3)
    assert exact_divide(x1 ** 2 - x2 ** 2, x1 - x2) == x1 + x2
    f = x1 ** 2 * x3 + 3
    assert exact_divide(f, Poly.const(3)) == f
    a = alternating_poly(Interval(1, 3), 3)
    assert exact_divide(a, x1 - x2) == (x1 - x3) * (x2 - x3)
    with pytest.raises(NotDivisibleError):
        exact_divide(x1 ** 2 + x2, x1 - x2)


@given(polys(3, 3), polys(3, 2))
def test_divide_inverts_multiply(f, g):
    if g.is_zero():
        return
    assert exact_divide(f * g, g) == f


def test_alternating_poly():
    x1, x2, x3 = xs(3)
    assert alternating_poly(Interval(2, 2), 3) == Poly.const(3)
    assert alternating_poly(Interval(1, 2), 2) == Poly(2, {(1, 0): 1, (0, 1): -1})
    expected = (x1 ** 2 * x2 - x1 ** 2 * x3 - x1 * x2 ** 2 + x1 * x3 ** 2 + x2 ** 2 * x3 - x2 * x3 ** 2)
    assert alternating_poly(Interval(1, 3), 3) == expected


def test_p_basis_examples():
    p0 = ParameterSet(3, 0)
    for alpha in [(1, 0, 2), (0, 0, 0), (3, 1, 0)]:
        assert p_basis(alpha, p0) == Poly.monomial(alpha)
    k = Fraction(2, 3)
    p1 = ParameterSet(1, k)
    for n in range(5):
        c = shifted_factorial(k + 1, n) / shifted_factorial(1, n)
        assert p_basis((n,), p1) == Poly.monomial((n,), c)
    assert p_basis((0, 0), ParameterSet(2, k)) == Poly.const(2)


def test_change_to_p_basis_examples():
    k = Fraction(1, 2)
    assert change_to_p_basis(Poly.var(1, 1), ParameterSet(1, k)) == {(1,): 1 / (k + 1)}
    p = ParameterSet(3, k)
    assert change_to_p_basis(p_basis((2, 0, 1), p), p) == {(2, 0, 1): 1}
    f = Poly(3, {(1, 1, 0): 3, (0, 0, 2): -1})
    assert change_to_p_basis(f, ParameterSet(3, 0)) == {(1, 1, 0): 3, (0, 0, 2): -1}


@given(polys(3, 3), couplings)
def test_p_basis_round_trip(f, k):
    p = ParameterSet(3, k)
    assert from_p_basis(change_to_p_basis(f, p), p) == f


def test_p_basis_generating_function_two_variables():
    # coefficient extraction from prod (1 - x_i y_i)^{-1} prod_{i,j} (1 - x_i y_j)^{-k} by series expansion
    k = Fraction(1, 3)
    p = ParameterSet(2, k)
    d = 3

    def series(c, order):
        # (1 - t)^{-c} = sum (c)_n t^n / n!
        return [shifted_factorial(c, n) / shifted_factorial(1, n) for n in range(order + 1)]

    # variables in order x1, x2, y1, y2
    total = {(0, 0, 0, 0): Fraction(1)}
    for i in range(2):
        for j in range(2):
            c = k + 1 if i == j else k
            coeffs = series(c, d)
            nxt = {}
            for e, v in total.items():
                for n, cn in enumerate(coeffs):
                    if e[2] + e[3] + n > d:
                        break
                    e2 = list(e)
                    e2[i] += n
                    e2[2 + j] += n
                    nxt[tuple(e2)] = nxt.get(tuple(e2), 0) + v * cn
            total = nxt
    for a in range(d + 1):
        for b in range(d + 1 - a):
            expected = Poly(2, {(e[0], e[1]): v for e, v in total.items() if (e[2], e[3]) == (a, b)})
            assert p_basis((a, b), p) == expected


def test_text_examples():
    x1, x2 = xs(2)
    assert to_text(2 * x1 + x2) == "2*x1 + 1*x2"
    assert to_text(Poly.zero(2)) == "0"
    assert to_text(x1 ** 2 * x2.scale(Fraction(-1, 3)) + 5) == "-1/3*x1^2*x2 + 5"
    assert parse_poly("x1 - x2", 2) == x1 - x2
    for bad in ("", "x3", "2**x1", "1.5*x1"):
        with pytest.raises(UserInputError):
            parse_poly(bad, 2)


@given(polys(3, 4, max_terms=6))
def test_text_round_trip(f):
    assert parse_poly(to_text(f), 3) == f


@given(polys(3, 4))
def test_parity_decomposition_reassembles(f):
    parts = parity_decompose(f)
    total = Poly.zero(3)
    for A, g in parts.items():
        total = total + x_subset(A, 3) * substitute_squares(g)
    assert total == f


@given(polys(2, 3), scalars, scalars)
def test_translate_matches_evaluation(f, a, b):
    g = translate(f, (a, b))
    pt = (Fraction(1, 3), Fraction(-2))
    assert evaluate(g, pt) == evaluate(f, (pt[0] + a, pt[1] + b))
