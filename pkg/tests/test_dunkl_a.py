from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nsjack.combinatorics import Interval, ParameterSet, subgroup_elements
from nsjack.dunkl_a import (OperatorName, a_pairing_at_zero, apply_dunkl, apply_named, apply_psi,
                            apply_U, divided_difference, divided_difference_by_division, inner_A,
                            inner_p, inner_torus_on_Elambda, symmetrize_div)
from nsjack.errors import SingularParameterError, UserInputError
from nsjack.jack import zeta
from nsjack.polyalg import Poly, act, alternating_poly, p_basis, swap

from strategies import couplings, polys

K = Fraction(1, 2)
P2 = ParameterSet(2, K)


def xs(N):
    return [Poly.var(N, i) for i in range(1, N + 1)]


def test_dunkl_examples():
    x1, x2 = xs(2)
    assert apply_dunkl(x1, 1, P2) == Poly.const(2, 1 + K)
    assert apply_dunkl(x2, 1, P2) == Poly.const(2, -K)
    assert apply_dunkl(Poly.const(2, 7), 2, P2).is_zero()


@given(polys(3, 4), st.integers(1, 3), st.integers(1, 3))
def test_divided_difference_routes_agree(f, i, j):
    if i == j:
        return
    assert divided_difference(f, i, j) == divided_difference_by_division(f, i, j)


@given(polys(3, 4), couplings)
def test_dunkl_operators_commute(f, k):
    p = ParameterSet(3, k)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        assert apply_dunkl(apply_dunkl(f, j, p), i, p) == apply_dunkl(apply_dunkl(f, i, p), j, p)


@given(polys(3, 3), couplings)
def test_U_operators_commute(f, k):
    p = ParameterSet(3, k)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        assert apply_U(apply_U(f, j, p), i, p) == apply_U(apply_U(f, i, p), j, p)


def test_named_operator_examples():
    x1, x2 = xs(2)
    one = Poly.const(2)
    assert apply_named(OperatorName("U", 1), x1, P2) == x1.scale(2 + 2 * K) + x2.scale(K)
    assert apply_named(OperatorName("U", 1), x2, P2) == x2.scale(K + 1)
    assert apply_named(OperatorName("Txi", 1), one, P2) == one.scale(1 + 2 * K)
    theta = apply_named(OperatorName("theta", 1, Interval(1, 2)), one, P2)
    assert theta == one.scale(1 + Fraction(3, 2) * K)


def test_named_operator_validation():
    with pytest.raises(UserInputError):
        OperatorName("V", 1)
    with pytest.raises(UserInputError):
        OperatorName("tau", 1)
    with pytest.raises(UserInputError):
        OperatorName("theta", 3, Interval(1, 2))
    with pytest.raises(UserInputError):
        apply_named(OperatorName("U", 3), Poly.const(2), P2)
    with pytest.raises(SingularParameterError):
        apply_named(OperatorName("xi", 1), Poly.const(2), ParameterSet(2, 0))


def test_inner_A_examples():
    x1, x2 = xs(2)
    assert inner_A(Poly.const(2), Poly.const(2), P2) == 1
    assert inner_A(x1, x1, P2) == 1 + K
    z = zeta((1, 0), P2)
    assert z == x1.scale(K + 1) + x2.scale(K)
    assert inner_A(z, z, P2) == (2 * K + 1) * (K + 1)


@given(polys(3, 3, homogeneous=3), polys(3, 3, homogeneous=3), couplings)
def test_inner_A_symmetric_and_matches_application(f, g, k):
    p = ParameterSet(3, k)
    assert inner_A(f, g, p) == inner_A(g, f, p)
    assert inner_A(f, g, p) == a_pairing_at_zero(f, g, p)


@given(polys(3, 3), polys(3, 3), couplings, st.integers(1, 3))
def test_dunkl_adjoint_to_multiplication(f, g, k, i):
    p = ParameterSet(3, k)
    assert inner_A(f.mul_var(i), g, p) == inner_A(f, apply_dunkl(g, i, p), p)


@given(polys(3, 3), polys(3, 3), couplings)
def test_inner_p_symmetric(f, g, k):
    p = ParameterSet(3, k)
    assert inner_p(f, g, p) == inner_p(g, f, p)


@given(polys(3, 3), polys(3, 3), couplings, st.integers(1, 3))
def test_U_self_adjoint_for_both_products(f, g, k, i):
    p = ParameterSet(3, k)
    assert inner_A(apply_U(f, i, p), g, p) == inner_A(f, apply_U(g, i, p), p)
    assert inner_p(apply_U(f, i, p), g, p) == inner_p(f, apply_U(g, i, p), p)


def test_inner_p_examples():
    p = ParameterSet(3, K)
    assert inner_p(Poly.monomial((1, 0, 2)), p_basis((1, 0, 2), p), p) == 1
    f, g = Poly(3, {(1, 0, 0): 2, (0, 1, 1): 3}), Poly(3, {(1, 0, 0): 5, (0, 1, 1): -1})
    assert inner_p(f, g, ParameterSet(3, 0)) == 7
    z = zeta((1, 0), P2)
    assert inner_p(z, z, P2) == K + 1


def test_torus_examples():
    one = Poly.const(2)
    assert inner_torus_on_Elambda(one, one, (0, 0), P2) == 1
    z = zeta((1, 0), P2)
    assert inner_torus_on_Elambda(z, z, (1, 0), P2) == 2 * K + 1
    assert inner_torus_on_Elambda(z.scale(2), z.scale(2), (1, 0), P2) == 4 * (2 * K + 1)


def test_symmetrize_div_examples():
    x1, x2 = xs(2)
    I = Interval(1, 2)
    assert symmetrize_div(alternating_poly(I, 2), I) == Poly.const(2)
    assert symmetrize_div(x1 * x2 + x1 + x2, I).is_zero()
    assert symmetrize_div(x1 ** 2, I) == (x1 + x2).scale(Fraction(1, 2))


def test_psi_examples():
    x1, x2 = xs(2)
    f = x1 ** 2 + x2
    assert apply_psi(f, Interval(2, 2), P2) == f
    # psi = U_1 - (12) U_1 (12)
    assert apply_psi(x1, Interval(1, 2), P2) == x1.scale(K + 1) + x2.scale(K)
    assert apply_psi(x1 - x2, Interval(1, 2), P2) == (x1 + x2).scale(2 * K + 1)


@given(polys(3, 3), couplings)
def test_psi_skew_on_symmetric_inputs(f, k):
    p = ParameterSet(3, k)
    I = Interval(1, 3)
    sym = Poly.zero(3)
    for w in subgroup_elements(3, [I]):
        sym = sym + act(w, f)
    assert swap(sym, 1, 2) == sym and swap(sym, 2, 3) == sym
    image = apply_psi(sym, I, p)
    assert swap(image, 1, 2) == -image
    assert swap(image, 2, 3) == -image


@given(polys(3, 3), couplings)
def test_psi_anticommutes_with_interval_transpositions(f, k):
    p = ParameterSet(3, k)
    I = Interval(1, 3)
    for a in (1, 2):
        assert apply_psi(swap(f, a, a + 1), I, p) == -swap(apply_psi(f, I, p), a, a + 1)
