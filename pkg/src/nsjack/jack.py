"""Nonsymmetric Jack polynomials and the structures built on them.

E_alpha is found by back-substitution on the joint eigenproblem of the U_i;
zeta_alpha rescales it, and every closed form (evaluation at 1^N, norms,
coset Gram matrices, subgroup invariants) is checked against the polynomial
itself elsewhere.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from . import _linalg
from .combinatorics import (Composition, Interval, ParameterSet, check_disjoint, compositions,
                            eps_product, eps_product_multi, h1_energy, h1_energy_closed,
                            hook_product, kappa_vector, orbit, partitions, permutation_to,
                            reverse_on_intervals, satisfies, shifted_factorial, sort_to_partition,
                            subgroup_elements, total_order_key)
from .dunkl_a import apply_U
from .errors import InvariantViolation, SingularParameterError, UserInputError
from .polyalg import Poly, act, change_to_p_basis, evaluate_ones, swap


def _check_alpha(alpha, p: ParameterSet) -> Composition:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != p.N or min(alpha, default=0) < 0:
        raise UserInputError(f"{alpha} is not a composition with N={p.N} parts")
    return alpha


def _intervals(I) -> list[Interval]:
    if isinstance(I, Interval):
        return [I]
    return list(I)


@lru_cache(maxsize=None)
def _e_monic(alpha: Composition, k: Fraction) -> Poly:
    p = ParameterSet(len(alpha), k)
    N, d = p.N, sum(alpha)
    top = total_order_key(alpha)
    below = sorted((b for b in compositions(N, d) if total_order_key(b) < top),
                   key=total_order_key, reverse=True)
    target = kappa_vector(alpha, p)
    coeffs = {alpha: Fraction(1)}
    # acc[i] collects U_{i+1} applied to the part of E_alpha fixed so far
    acc: list[dict] = [{} for _ in range(N)]

    def absorb(beta, c):
        mono = Poly.monomial(beta)
        for i in range(N):
            row = acc[i]
            for e, v in apply_U(mono, i + 1, p).terms.items():
                row[e] = row.get(e, 0) + c * v

    absorb(alpha, Fraction(1))
    for beta in below:
        kb = kappa_vector(beta, p)
        i = next((i for i in range(N) if kb[i] != target[i]), None)
        if i is None:
            raise SingularParameterError(
                f"kappa({beta}) = kappa({alpha}) at k={k}; E_alpha is not determined", (alpha, beta))
        r = acc[i].get(beta, 0)
        if r:
            c = -r / (kb[i] - target[i])
            coeffs[beta] = c
            absorb(beta, c)
    result = Poly(N, coeffs)
    for i in range(N):
        if Poly(N, acc[i]) != result.scale(target[i]):
            raise InvariantViolation(f"U_{i + 1} E_{alpha} is not kappa_{i + 1} E_{alpha} at k={k}")
    return result


def e_monic(alpha: Sequence[int], p: ParameterSet) -> Poly:
    """E_alpha = x^alpha + lower terms, the joint eigenfunction of the U_i."""
    return _e_monic(_check_alpha(alpha, p), p.k)


def zeta_leading(alpha: Composition, p: ParameterSet) -> Fraction:
    """Coefficient of x^alpha in zeta_alpha: h(a+,k+1) E_+(a) E_-(a) / h(a+,1)."""
    lam = sort_to_partition(alpha)
    full = Interval(1, p.N)
    return (hook_product(lam, p.k + 1, p) * eps_product(alpha, full, 1, p)
            * eps_product(alpha, full, -1, p) / hook_product(lam, 1, p))


@lru_cache(maxsize=None)
def _zeta(alpha: Composition, k: Fraction) -> Poly:
    p = ParameterSet(len(alpha), k)
    return _e_monic(alpha, k).scale(zeta_leading(alpha, p))


def zeta(alpha: Sequence[int], p: ParameterSet) -> Poly:
    return _zeta(_check_alpha(alpha, p), p.k)


def sorting_word(alpha: Sequence[int]) -> list[int]:
    """Positions i of adjacent swaps taking alpha to alpha^+, in the order applied."""
    beta = list(alpha)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(beta) - 1):
            if beta[i] < beta[i + 1]:
                beta[i], beta[i + 1] = beta[i + 1], beta[i]
                word.append(i + 1)
                changed = True
    return word


def zeta_via_exchange(alpha: Sequence[int], p: ParameterSet) -> Poly:
    """zeta_alpha from zeta_{alpha^+} by zeta_{s beta} = s zeta_beta - c zeta_beta."""
    alpha = _check_alpha(alpha, p)
    beta = sort_to_partition(alpha)
    f = zeta(beta, p)
    for i in reversed(sorting_word(alpha)):
        kv = kappa_vector(beta, p)
        if beta[i - 1] <= beta[i]:
            raise InvariantViolation("sorting word does not descend")
        c = p.k / (kv[i - 1] - kv[i])
        f = swap(f, i, i + 1) - f.scale(c)
        lst = list(beta)
        lst[i - 1], lst[i] = lst[i], lst[i - 1]
        beta = tuple(lst)
    return f


def exchange_constant(beta: Sequence[int], i: int, p: ParameterSet) -> Fraction:
    """c = k / (kappa_i(beta) - kappa_{i+1}(beta))."""
    kv = kappa_vector(tuple(beta), p)
    diff = kv[i - 1] - kv[i]
    if diff == 0:
        raise SingularParameterError(f"kappa_{i} = kappa_{i + 1} for {tuple(beta)}", (i, i + 1))
    return p.k / diff


def omega(alpha: Sequence[int], p: ParameterSet) -> Poly:
    """omega_lambda has p-coefficient 1 at lambda; omega_{w lambda} = w omega_lambda."""
    alpha = _check_alpha(alpha, p)
    lam = sort_to_partition(alpha)
    base = e_monic(lam, p)
    lead = change_to_p_basis(base, p).get(lam, Fraction(0))
    if lead == 0:
        raise SingularParameterError(f"p-coefficient of E_{lam} at {lam} vanishes")
    base = base.scale(1 / lead)
    return act(permutation_to(lam, alpha), base)


def expand_in_zeta(f: Poly, p: ParameterSet) -> dict[Composition, Fraction]:
    """Coefficients of f in the zeta basis, by peeling off leading monomials."""
    out = {}
    rest = f
    while not rest.is_zero():
        beta = max(rest.terms, key=total_order_key)
        z = zeta(beta, p)
        c = rest.terms[beta] / z.terms[beta]
        out[beta] = c
        rest = rest - z.scale(c)
    return out


# ---------------------------------------------------- evaluations and norms


def eval_1N(alpha: Sequence[int], p: ParameterSet) -> Fraction:
    """zeta_alpha(1^N) = E_-(alpha)(Nk+1)_{alpha+} / h(alpha+, 1)."""
    alpha = _check_alpha(alpha, p)
    lam = sort_to_partition(alpha)
    return (eps_product(alpha, Interval(1, p.N), -1, p)
            * shifted_factorial(p.N * p.k + 1, lam, p) / hook_product(lam, 1, p))


def eval_1N_direct(alpha: Sequence[int], p: ParameterSet) -> Fraction:
    return evaluate_ones(zeta(alpha, p))


@dataclass(frozen=True)
class ZetaNorms:
    p_norm: Fraction
    A_norm: Fraction
    torus_norm: Fraction


def zeta_norms(alpha: Sequence[int], p: ParameterSet) -> ZetaNorms:
    alpha = _check_alpha(alpha, p)
    lam = sort_to_partition(alpha)
    full = Interval(1, p.N)
    pn = (eps_product(alpha, full, 1, p) * eps_product(alpha, full, -1, p)
          * hook_product(lam, p.k + 1, p) / hook_product(lam, 1, p))
    rising = shifted_factorial(p.N * p.k + 1, lam, p)
    den = shifted_factorial((p.N - 1) * p.k + 1, lam, p)
    if den == 0:
        raise SingularParameterError(f"((N-1)k+1)_lambda vanishes for {lam}")
    return ZetaNorms(pn, rising * pn, rising / den * pn)


# ------------------------------------------------------------- coset spaces


@dataclass
class CosetData:
    alpha: Composition
    interval: Interval
    orbit: list[Composition]
    g: dict[Composition, Poly]
    B: dict[Composition, dict[Composition, Fraction]]
    H: dict[Composition, dict[Composition, Fraction]]
    B_inverse: dict[Composition, dict[Composition, Fraction]] = field(default_factory=dict)


def g_basis(alpha: Composition, intervals, p: ParameterSet) -> dict[Composition, Poly]:
    """g_{w alpha} = w zeta_alpha over the parabolic subgroup."""
    intervals = _intervals(intervals)
    for I in intervals:
        if not satisfies(alpha, I):
            raise UserInputError(f"{alpha} does not satisfy (>=, {I})")
    z = zeta(alpha, p)
    return {beta: act(permutation_to(alpha, beta, intervals), z)
            for beta in sorted(orbit(alpha, intervals), key=total_order_key, reverse=True)}


def coset_data(alpha: Sequence[int], I: Interval, p: ParameterSet) -> CosetData:
    from .dunkl_a import inner_p

    alpha = _check_alpha(alpha, p)
    I.check(p.N)
    g = g_basis(alpha, [I], p)
    orb = list(g)
    monos = sorted({e for poly in g.values() for e in poly.terms}, key=total_order_key)
    columns = [[g[b].coeff(e) for e in monos] for b in orb]
    B: dict = {gam: {} for gam in orb}
    for beta in orb:
        z = zeta(beta, p)
        sol = _linalg.solve_least(columns, [z.coeff(e) for e in monos])
        if sol is None or len(z.terms.keys() - set(monos)):
            raise InvariantViolation(f"zeta_{beta} is outside span of the g basis")
        for gam, c in zip(orb, sol):
            B[gam][beta] = c
    norm = inner_p(g[alpha], g[alpha], p)
    H = {b: {c: inner_p(g[b], g[c], p) / norm for c in orb} for b in orb}
    inv = _linalg.inverse([[B[r][c] for c in orb] for r in orb])
    B_inv = {r: {c: inv[a][b] for b, c in enumerate(orb)} for a, r in enumerate(orb)}
    for b1 in orb:
        w1 = permutation_to(alpha, b1, [I])
        for b2 in orb:
            w2 = permutation_to(alpha, b2, [I])
            delta = (w1.inverse() * w2).act(alpha)
            if H[b1][b2] != B_inv[alpha][delta]:
                raise InvariantViolation(f"H({b1},{b2}) != B^-1({alpha},{delta})")
    return CosetData(alpha, I, orb, g, B, H, B_inv)


def j_invariant(alpha: Sequence[int], intervals, p: ParameterSet) -> Poly:
    """E_+(alpha^R) sum_{beta in orbit} zeta_beta / E_+(beta), one factor per interval."""
    alpha = _check_alpha(alpha, p)
    intervals = _intervals(intervals)
    check_disjoint(intervals, p.N)
    for I in intervals:
        if not satisfies(alpha, I):
            raise UserInputError(f"{alpha} does not satisfy (>=, {I})")
    top = eps_product_multi(reverse_on_intervals(alpha, intervals), intervals, 1, p)
    out = Poly.zero(p.N)
    for beta in orbit(alpha, intervals):
        out = out + zeta(beta, p).scale(top / eps_product_multi(beta, intervals, 1, p))
    return out


def a_alternating(alpha: Sequence[int], intervals, p: ParameterSet) -> Poly:
    """E_-(alpha^R) sum_w sgn(w) zeta_{w alpha} / E_-(w alpha), one factor per interval."""
    alpha = _check_alpha(alpha, p)
    intervals = _intervals(intervals)
    check_disjoint(intervals, p.N)
    for I in intervals:
        if not satisfies(alpha, I, strict=True):
            raise UserInputError(f"{alpha} does not satisfy (>, {I})")
    top = eps_product_multi(reverse_on_intervals(alpha, intervals), intervals, -1, p)
    out = Poly.zero(p.N)
    for w in subgroup_elements(p.N, intervals):
        beta = w.act(alpha)
        out = out + zeta(beta, p).scale(w.sign() * top / eps_product_multi(beta, intervals, -1, p))
    return out


def g_sum(alpha: Sequence[int], intervals, p: ParameterSet, signed: bool = False) -> Poly:
    """sum over the orbit of g_beta, or sum_w sgn(w) g_{w alpha} when signed."""
    alpha = _check_alpha(alpha, p)
    intervals = _intervals(intervals)
    z = zeta(alpha, p)
    if not signed:
        return sum(g_basis(alpha, intervals, p).values(), start=Poly.zero(p.N))
    out = Poly.zero(p.N)
    for w in subgroup_elements(p.N, intervals):
        out = out + act(w, z).scale(w.sign())
    return out


# ------------------------------------------------------- series identities


@dataclass
class OneF0Report:
    degree_bound: int
    checked: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def one_f0_lhs(p: ParameterSet, d: int) -> Poly:
    """prod_i (1 - x_i)^{-(Nk+1)} truncated at total degree d."""
    a = p.N * p.k + 1
    terms = {}
    for deg in range(d + 1):
        for beta in compositions(p.N, deg):
            c = Fraction(1)
            for b in beta:
                c *= shifted_factorial(a, b) / factorial(b)
            terms[beta] = c
    return Poly(p.N, terms)


def one_f0_check(p: ParameterSet, d: int) -> OneF0Report:
    """Degree-by-degree comparison of the 1F0 series with its j_lambda expansion."""
    lhs = one_f0_lhs(p, d)
    report = OneF0Report(d, 0)
    full = Interval(1, p.N)
    for deg in range(d + 1):
        rhs = Poly.zero(p.N)
        for lam in partitions(p.N, deg):
            lamR = tuple(reversed(lam))
            c = shifted_factorial(p.N * p.k + 1, lam, p) / (
                hook_product(lam, p.k + 1, p) * eps_product(lamR, full, 1, p))
            rhs = rhs + j_invariant(lam, full, p).scale(c)
            report.checked += 1
        if rhs != lhs.homogeneous_part(deg):
            report.failures.append(deg)
    return report


def h1_spectrum(lam: Sequence[int], p: ParameterSet) -> Fraction:
    """Energy sum_i (kappa_i(lam) - 1 - k(N+1)/2)^2; raises if the closed form disagrees."""
    lam = _check_alpha(lam, p)
    value = h1_energy(lam, p)
    if value != h1_energy_closed(lam, p):
        raise InvariantViolation(f"H1 energy forms disagree at {lam}")
    return value
