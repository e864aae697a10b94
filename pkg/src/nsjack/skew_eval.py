"""Skew operator psi_I on coset spaces and the generalized Weyl evaluation at 1^N."""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from . import _linalg
from .combinatorics import (Interval, ParameterSet, check_disjoint, eps_product, hook_product,
                            kappa_vector, longest_element, permutation_to, reverse_on_interval,
                            satisfies, shifted_factorial, sort_to_partition, staircase,
                            subgroup_elements, total_order_key)
from .dunkl_a import apply_psi, apply_psi_family, symmetrize_div
from .errors import InvariantViolation, UserInputError
from .jack import a_alternating, coset_data, g_basis, j_invariant, zeta
from .polyalg import Poly, act, evaluate_ones


@dataclass(frozen=True)
class IntervalFamily:
    intervals: tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(self.intervals))
        check_disjoint(self.intervals)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(I.size for I in self.intervals)

    def mu(self, N: int) -> tuple[int, ...]:
        """Sorted concatenation of (m_i - 1, ..., 1, 0), padded to N parts."""
        return staircase(self.sizes, N)

    def check(self, N: int) -> None:
        check_disjoint(self.intervals, N)


def _require_strict(alpha, I: Interval):
    if not satisfies(alpha, I, strict=True):
        raise UserInputError(f"{tuple(alpha)} does not satisfy (>, {I})")


def psi_scalar(alpha: Sequence[int], I: Interval, p: ParameterSet) -> Fraction:
    """prod{kappa_i(alpha) - kappa_j(alpha) : i < j in I}."""
    alpha = tuple(alpha)
    I.check(p.N)
    _require_strict(alpha, I)
    kv = kappa_vector(alpha, p)
    idx = list(I.indices())
    return prod((kv[i - 1] - kv[j - 1] for a, i in enumerate(idx) for j in idx[a + 1:]),
                start=Fraction(1))


def psi_scalar_check(alpha: Sequence[int], I: Interval, p: ParameterSet) -> Fraction:
    """psi_scalar, after confirming psi_I zeta_alpha = b sigma_I zeta_{sigma_I alpha}."""
    b = psi_scalar(alpha, I, p)
    lhs = apply_psi(zeta(alpha, p), I, p)
    sigma = longest_element(p.N, I)
    rhs = act(sigma, zeta(reverse_on_interval(alpha, I), p)).scale(b)
    if lhs != rhs:
        raise InvariantViolation(f"psi_I zeta_{tuple(alpha)} is not the predicted multiple")
    return b


def psi_matrix(alpha: Sequence[int], I: Interval, p: ParameterSet) -> dict:
    """Matrix A(gamma, beta) of psi_I on the g basis of the coset space of alpha."""
    alpha = tuple(alpha)
    g = g_basis(alpha, [I], p)
    orb = list(g)
    monos = sorted({e for poly in g.values() for e in poly.terms}, key=total_order_key)
    columns = [[g[b].coeff(e) for e in monos] for b in orb]
    out = {gam: {} for gam in orb}
    for beta in orb:
        image = apply_psi(g[beta], I, p)
        sol = None
        if set(image.terms) <= set(monos):
            sol = _linalg.solve_least(columns, [image.coeff(e) for e in monos])
        if sol is None:
            raise InvariantViolation(f"psi_I leaves the coset space of {alpha}")
        for gam, c in zip(orb, sol):
            out[gam][beta] = c
    return out


def ph_matrix(alpha: Sequence[int], I: Interval, p: ParameterSet) -> dict:
    """(P H)(gamma, beta) = sgn(w_gamma) H(gamma, beta), w_gamma alpha = gamma."""
    data = coset_data(tuple(alpha), I, p)
    out = {}
    for gam in data.orbit:
        sgn = permutation_to(data.alpha, gam, [I]).sign()
        out[gam] = {beta: sgn * data.H[gam][beta] for beta in data.orbit}
    return out


def psi_on_alternant(alpha: Sequence[int], I: Interval, p: ParameterSet) -> Poly:
    """psi_I a_{alpha;I}, checked against prod(kappa_i - kappa_j - k) j_{alpha;I}."""
    alpha = tuple(alpha)
    I.check(p.N)
    _require_strict(alpha, I)
    kv = kappa_vector(alpha, p)
    idx = list(I.indices())
    factor = prod((kv[i - 1] - kv[j - 1] - p.k for a, i in enumerate(idx) for j in idx[a + 1:]),
                  start=Fraction(1))
    image = apply_psi(a_alternating(alpha, [I], p), I, p)
    if image != j_invariant(alpha, [I], p).scale(factor):
        raise InvariantViolation("psi_I a_alpha is not the predicted multiple of j_alpha")
    return image


@dataclass(frozen=True)
class WeylRoutes:
    direct: Fraction
    formula: Fraction


def weyl_routes(f: Poly, fam: IntervalFamily, p: ParameterSet) -> WeylRoutes:
    fam.check(p.N)
    g = f
    for I in fam.intervals:
        g = symmetrize_div(g, I)
    direct = evaluate_ones(g)
    denom = (shifted_factorial(p.N * p.k + 1, fam.mu(p.N), p)
             * prod(factorial(m) for m in fam.sizes))
    formula = evaluate_ones(apply_psi_family(f, fam.intervals, p)) / denom
    return WeylRoutes(direct, formula)


def weyl_evaluate(f: Poly, fam: IntervalFamily, p: ParameterSet) -> Fraction:
    """(A_{I_1} ... A_{I_t} f)(1^N), computed directly and through psi; they must agree."""
    routes = weyl_routes(f, fam, p)
    if routes.direct != routes.formula:
        raise InvariantViolation(
            f"Weyl evaluation routes disagree: {routes.direct} vs {routes.formula}")
    return routes.direct


def alternant_quotient_closed(alpha: Sequence[int], fam: IntervalFamily, p: ParameterSet) -> Fraction:
    alpha = tuple(alpha)
    fam.check(p.N)
    for I in fam.intervals:
        _require_strict(alpha, I)
    lam = sort_to_partition(alpha)
    kv = kappa_vector(alpha, p)
    skew = Fraction(1)
    for I in fam.intervals:
        idx = list(I.indices())
        for a, i in enumerate(idx):
            for j in idx[a + 1:]:
                skew *= kv[i - 1] - kv[j - 1] - p.k
    return (shifted_factorial(p.N * p.k + 1, lam, p) / shifted_factorial(p.N * p.k + 1, fam.mu(p.N), p)
            * eps_product(alpha, Interval(1, p.N), -1, p) / hook_product(lam, 1, p) * skew)


def alternant_quotient_direct(alpha: Sequence[int], fam: IntervalFamily, p: ParameterSet) -> Fraction:
    alpha = tuple(alpha)
    z = zeta(alpha, p)
    F = Poly.zero(p.N)
    for w in subgroup_elements(p.N, fam.intervals):
        F = F + act(w, z).scale(w.sign())
    for I in fam.intervals:
        F = symmetrize_div(F, I)
    return evaluate_ones(F)


def alternant_quotient_eval(alpha: Sequence[int], fam: IntervalFamily, p: ParameterSet) -> Fraction:
    """Closed form for (prod A_{I_r} sum_w sgn(w) w zeta_alpha)(1^N), checked directly."""
    closed = alternant_quotient_closed(alpha, fam, p)
    direct = alternant_quotient_direct(alpha, fam, p)
    if closed != direct:
        raise InvariantViolation(f"alternant quotient: closed {closed} vs direct {direct}")
    return closed
