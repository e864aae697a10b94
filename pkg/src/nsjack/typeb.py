"""Hyperoctahedral (type B) layer.

Polynomials are split by parity, f = sum_A x_A g_A(y) with y = x^2, and the
type-A machinery runs on the g_A.  Hermite polynomials are images of lifted
Jack polynomials under exp(-L/2), L = sum_i (T^B_i)^2.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .combinatorics import (Composition, Interval, ParameterSet, Permutation, compositions,
                            eps_product, eps_product_multi, h_part, hermite_label, hook_product,
                            kappa_vector, lambda_factor, orbit_size, reverse_on_intervals,
                            shifted_factorial, sort_to_partition, staircase, w_subset)
from .dunkl_a import apply_txi, divided_difference_monomial, inner_p
from .errors import InvariantViolation, SingularParameterError, UserInputError
from .jack import eval_1N, expand_in_zeta, j_invariant, a_alternating, zeta, zeta_norms
from .polyalg import (Poly, SignedPermutation, act, at_zero, evaluate_ones, exact_divide,
                      parity_decompose, substitute_squares, swap, translate, x_subset,
                      alternating_poly)


# ------------------------------------------------------------- operators


@lru_cache(maxsize=200_000)
def _dunkl_B_monomial(alpha: tuple, i0: int, k: Fraction, k1: Fraction) -> tuple:
    out: dict = {}
    a = alpha[i0]
    if a:
        e = list(alpha)
        e[i0] -= 1
        # derivative, plus 2 k1 x^(alpha - e_i) from the sign change when alpha_i is odd
        out[tuple(e)] = Fraction(a) + (2 * k1 if a % 2 else 0)
    if k:
        for j0 in range(len(alpha)):
            if j0 == i0:
                continue
            for e2, s in divided_difference_monomial(alpha, i0, j0).items():
                out[e2] = out.get(e2, 0) + s * k
                # the (x_i + x_j) quotient: conjugate the (x_i - x_j) one by x_j -> -x_j
                sign = -1 if (alpha[j0] + e2[j0]) % 2 else 1
                out[e2] = out[e2] + sign * s * k
    return tuple((e, c) for e, c in out.items() if c)


def apply_dunkl_B(f: Poly, i: int, p: ParameterSet) -> Poly:
    """T^B_i f."""
    if not 1 <= i <= f.nvars:
        raise UserInputError(f"index {i} outside 1..{f.nvars}")
    out: dict = {}
    for e, c in f.terms.items():
        for e2, v in _dunkl_B_monomial(e, i - 1, p.k, p.k1):
            out[e2] = out.get(e2, 0) + c * v
    return Poly(f.nvars, out)


def apply_dunkl_B_by_division(f: Poly, i: int, p: ParameterSet) -> Poly:
    """T^B_i from its defining quotients through exact division; oracle for apply_dunkl_B."""
    N = f.nvars
    xi = Poly.var(N, i)
    out = Poly(N, {})
    for e, c in f.terms.items():
        if e[i - 1]:
            lst = list(e)
            lst[i - 1] -= 1
            out = out + Poly(N, {tuple(lst): c * e[i - 1]})
    num = f - act(SignedPermutation.sigma(N, i), f)
    if num:
        out = out + exact_divide(num, xi).scale(p.k1)
    for j in range(1, N + 1):
        if j == i:
            continue
        xj = Poly.var(N, j)
        for w, den in ((SignedPermutation.sigma_ij(N, i, j), xi - xj),
                       (SignedPermutation.tau_ij(N, i, j), xi + xj)):
            num = f - act(w, f)
            if num:
                out = out + exact_divide(num, den).scale(p.k)
    return out


def reflection_sum(f: Poly, i: int, j: int) -> Poly:
    """(sigma_ij + tau_ij) f."""
    N = f.nvars
    return act(SignedPermutation.sigma_ij(N, i, j), f) + act(SignedPermutation.tau_ij(N, i, j), f)


def apply_UB_direct(f: Poly, i: int, p: ParameterSet) -> Poly:
    """U^B_i = T^B_i x_i + k(1 - sigma_i) - k sum_{j<i} (sigma_ij + tau_ij)."""
    N = f.nvars
    out = apply_dunkl_B(f.mul_var(i), i, p)
    out = out + (f - act(SignedPermutation.sigma(N, i), f)).scale(p.k)
    for j in range(1, i):
        out = out - reflection_sum(f, i, j).scale(p.k)
    return out


def apply_U_lift(g: Poly, A: frozenset, i: int, p: ParameterSet) -> Poly:
    """U_{A,i} on a polynomial g(y)."""
    out = apply_txi(g, i, p)
    if i in A:
        partners = [j for j in A if j < i]
    else:
        out = out + g.scale(p.k1 - p.k - Fraction(1, 2))
        partners = [j for j in range(1, g.nvars + 1) if j != i and (j in A or j < i)]
    for j in partners:
        out = out - swap(g, i, j).scale(p.k)
    return out


def apply_UB(f: Poly, i: int, p: ParameterSet) -> Poly:
    """U^B_i via the parity split: U^B_i(x_A g(y)) = 2 x_A U_{A,i} g(y)."""
    if not 1 <= i <= f.nvars:
        raise UserInputError(f"index {i} outside 1..{f.nvars}")
    out = Poly.zero(f.nvars)
    for A, g in parity_decompose(f).items():
        image = substitute_squares(apply_U_lift(g, A, i, p).scale(2))
        out = out + image * x_subset(A, f.nvars)
    return out


def p_hat(alpha: Sequence[int], p: ParameterSet) -> Poly:
    """x_A p_beta(x^2) with A the odd positions of alpha and beta = floor(alpha/2)."""
    from .polyalg import p_basis

    alpha = tuple(alpha)
    A = [i for i, a in enumerate(alpha, start=1) if a % 2]
    return substitute_squares(p_basis(h_part(alpha), p)) * x_subset(A, len(alpha))


def apply_laplacian(f: Poly, p: ParameterSet) -> Poly:
    out = Poly.zero(f.nvars)
    for i in range(1, f.nvars + 1):
        out = out + apply_dunkl_B(apply_dunkl_B(f, i, p), i, p)
    return out


def apply_exp_L(f: Poly, s, p: ParameterSet) -> Poly:
    """exp(sL) f; the series stops because L lowers degree by 2."""
    s = Fraction(s)
    out = f
    term = f
    m = 0
    while True:
        term = apply_laplacian(term, p)
        if term.is_zero():
            return out
        m += 1
        term = term.scale(s / m)
        out = out + term


# -------------------------------------------------------- inner products


@lru_cache(maxsize=None)
def _b_pairing(alpha: tuple, beta: tuple, k: Fraction, k1: Fraction) -> Fraction:
    """(T^B)^alpha x^beta at 0."""
    if sum(alpha) != sum(beta):
        return Fraction(0)
    if not any(alpha):
        return Fraction(1)
    i0 = next(i for i, a in enumerate(alpha) if a)
    rest = list(alpha)
    rest[i0] -= 1
    rest = tuple(rest)
    return sum((c * _b_pairing(rest, e, k, k1) for e, c in _dunkl_B_monomial(beta, i0, k, k1)),
               start=Fraction(0))


def inner_B(f: Poly, g: Poly, p: ParameterSet) -> Fraction:
    """<f, g>_B = f(T^B) g at x = 0."""
    total = Fraction(0)
    for a, fa in f.terms.items():
        da = sum(a)
        for b, gb in g.terms.items():
            if sum(b) == da:
                total += fa * gb * _b_pairing(a, b, p.k, p.k1)
    return total


def inner_B_by_application(f: Poly, g: Poly, p: ParameterSet) -> Fraction:
    """Oracle for inner_B: apply the operator words literally."""
    total = Fraction(0)
    for a, c in f.terms.items():
        h = g
        for i, n in enumerate(a, start=1):
            for _ in range(n):
                h = apply_dunkl_B(h, i, p)
        total += c * at_zero(h)
    return total


def inner_gauss(f: Poly, g: Poly, p: ParameterSet) -> Fraction:
    """Algebraic form of the Gaussian-weight product: <exp(L/2) f, exp(L/2) g>_B."""
    half = Fraction(1, 2)
    return inner_B(apply_exp_L(f, half, p), apply_exp_L(g, half, p), p)


def inner_p_B(f: Poly, g: Poly, p: ParameterSet) -> Fraction:
    """<x^alpha, p_hat_beta>_p = delta, via the parity split and the type-A p-product."""
    gd = parity_decompose(g)
    return sum((inner_p(fa, gd[A], p) for A, fa in parity_decompose(f).items() if A in gd),
               start=Fraction(0))


# ------------------------------------------------------ Hermite polynomials


@dataclass(frozen=True)
class HermiteLabel:
    """Standard label beta (odd exactly on [1, l]) and parity set A with #A = l."""

    beta: Composition
    A: frozenset

    @classmethod
    def standard(cls, beta: Sequence[int]) -> "HermiteLabel":
        beta = tuple(beta)
        ell = sum(1 for b in beta if b % 2)
        if any(b % 2 == 0 for b in beta[:ell]):
            raise UserInputError(f"{beta} is not in standard form (odd parts first)")
        return cls(beta, frozenset(range(1, ell + 1)))

    @classmethod
    def from_composition(cls, beta: Sequence[int]) -> "HermiteLabel":
        """Any parity: A = odd positions, standard label beta~ with beta~_i = beta_{w_A(i)}."""
        beta = tuple(beta)
        A = frozenset(i for i, b in enumerate(beta, start=1) if b % 2)
        w = w_subset(A, len(beta))
        return cls(tuple(beta[w(i) - 1] for i in range(1, len(beta) + 1)), A)

    def __post_init__(self):
        ell = len(self.A)
        if any((b % 2 == 1) != (i < ell) for i, b in enumerate(self.beta)):
            raise UserInputError(f"{self.beta} is not odd exactly on [1, {ell}]")
        if any(a < 1 or a > len(self.beta) for a in self.A):
            raise UserInputError(f"parity set {sorted(self.A)} outside [1, {len(self.beta)}]")

    @property
    def N(self) -> int:
        return len(self.beta)

    @property
    def ell(self) -> int:
        return len(self.A)

    @property
    def gamma(self) -> Composition:
        return h_part(self.beta)

    def permutation(self) -> Permutation:
        return w_subset(self.A, self.N)


def lift(gamma: Sequence[int], ell: int, p: ParameterSet) -> Poly:
    """x_1 ... x_l zeta_gamma(x_1^2, ..., x_N^2)."""
    return substitute_squares(zeta(gamma, p)) * x_subset(range(1, ell + 1), p.N)


def hermite(label: HermiteLabel, p: ParameterSet) -> Poly:
    """w_A exp(-L/2)(x_1 ... x_l zeta_gamma(y))."""
    if label.N != p.N:
        raise UserInputError("label and parameters disagree on N")
    H = apply_exp_L(lift(label.gamma, label.ell, p), Fraction(-1, 2), p)
    w = label.permutation()
    return H if w.is_identity() else act(w, H)


def hermite_labels(N: int, max_degree: int) -> list[HermiteLabel]:
    """Every (A, standard beta) with |beta| <= max_degree."""
    from itertools import combinations

    out = []
    for d in range(max_degree + 1):
        for beta in compositions(N, d):
            ell = sum(1 for b in beta if b % 2)
            if any(b % 2 == 0 for b in beta[:ell]):
                continue
            for A in combinations(range(1, N + 1), ell):
                out.append(HermiteLabel(beta, frozenset(A)))
    return out


def hermite_norm_B(label: HermiteLabel, p: ParameterSet) -> Fraction:
    """2^{2|gamma|+l} Lambda(b(gamma, l)) ||zeta_gamma||_p^2."""
    gamma, ell = label.gamma, label.ell
    return 2 ** (2 * sum(gamma) + ell) * lambda_factor(hermite_label(gamma, ell), p) \
        * zeta_norms(gamma, p).p_norm


# ------------------------------------------------------------ binomials


def binomial_coeffs(alpha: Sequence[int], p: ParameterSet,
                    max_degree: int | None = None) -> dict[Composition, Fraction]:
    """(alpha over gamma) from zeta_alpha(y + 1)/zeta_alpha(1) = sum (alpha over gamma) zeta_gamma/zeta_gamma(1)."""
    out = _binomial(tuple(alpha), ParameterSet(p.N, p.k))
    if max_degree is None:
        return dict(out)
    return {g: c for g, c in out.items() if sum(g) <= max_degree}


@lru_cache(maxsize=None)
def _binomial(alpha: Composition, p: ParameterSet) -> dict[Composition, Fraction]:
    top = eval_1N(alpha, p)
    if top == 0:
        raise SingularParameterError(f"zeta_{alpha}(1^N) vanishes")
    shifted = translate(zeta(alpha, p), [1] * p.N).scale(1 / top)
    out = {}
    for gamma, c in expand_in_zeta(shifted, p).items():
        val = eval_1N(gamma, p)
        if val == 0:
            raise SingularParameterError(f"zeta_{gamma}(1^N) vanishes")
        out[gamma] = c * val
    return out


def contained(small: Sequence[int], big: Sequence[int]) -> bool:
    """small^+ inside big^+ part by part."""
    return all(a <= b for a, b in zip(sort_to_partition(small), sort_to_partition(big)))


def exp_sL_zeta_expansion(alpha: Sequence[int], ell: int, s, p: ParameterSet,
                          with_binomial: bool = True) -> Poly:
    """Closed expansion of exp(sL)(x_1...x_l zeta_alpha(y)) in the lifted zeta basis.

    with_binomial=False drops the (alpha over beta) factor; kept only to show that
    the variant without it does not reproduce exp(sL).
    """
    alpha = tuple(alpha)
    if not 0 <= ell <= p.N:
        raise UserInputError(f"l = {ell} outside [0, {p.N}]")
    s = Fraction(s)
    binom = binomial_coeffs(alpha, p)
    full = Interval(1, p.N)
    lam = sort_to_partition(alpha)
    top = lambda_factor(hermite_label(alpha, ell), p) * eps_product(alpha, full, -1, p) \
        / hook_product(lam, 1, p)
    out = Poly.zero(p.N)
    for d in range(sum(alpha) + 1):
        for beta in compositions(p.N, d):
            if not contained(beta, alpha):
                continue
            c = binom.get(beta, Fraction(0)) if with_binomial else Fraction(1)
            if not c:
                continue
            coeff = top * hook_product(sort_to_partition(beta), 1, p) / (
                lambda_factor(hermite_label(beta, ell), p) * eps_product(beta, full, -1, p))
            out = out + lift(beta, ell, p).scale(c * coeff * (4 * s) ** (sum(alpha) - d))
    return out


def exp_sum_zeta_series(alpha: Sequence[int], s, extra: int, p: ParameterSet) -> Poly:
    """exp(s sum y_i) zeta_alpha(y), expanded directly through degree |alpha| + extra."""
    alpha = tuple(alpha)
    s = Fraction(s)
    z = zeta(alpha, p)
    total = Poly.const(p.N, 0)
    e1 = Poly(p.N, {tuple(int(i == j) for j in range(p.N)): 1 for i in range(p.N)})
    power = Poly.const(p.N)
    for m in range(extra + 1):
        total = total + (power * z).scale(s ** m / factorial(m))
        power = power * e1
    return total


def exp_sum_zeta_closed(alpha: Sequence[int], s, extra: int, p: ParameterSet) -> Poly:
    """sum over gamma^+ containing alpha^+, |gamma| <= |alpha| + extra, of the closed coefficients."""
    alpha = tuple(alpha)
    s = Fraction(s)
    full = Interval(1, p.N)
    lam = sort_to_partition(alpha)
    base = hook_product(lam, p.k + 1, p) * eps_product(alpha, full, 1, p)
    out = Poly.zero(p.N)
    for d in range(sum(alpha), sum(alpha) + extra + 1):
        for gamma in compositions(p.N, d):
            if not contained(alpha, gamma):
                continue
            c = binomial_coeffs(gamma, p).get(alpha, Fraction(0))
            if not c:
                continue
            coeff = base / (hook_product(sort_to_partition(gamma), p.k + 1, p)
                            * eps_product(gamma, full, 1, p))
            out = out + zeta(gamma, p).scale(coeff * c * s ** (d - sum(alpha)))
    return out


# ---------------------------------------------------------------- spectra


def h3_eigenvalue(label: HermiteLabel, p: ParameterSet) -> Fraction:
    """|beta| + 2l(k - k1) + N(Nk + 1 + 2k1 - k)."""
    N, k, k1, ell = p.N, p.k, p.k1, label.ell
    return sum(label.beta) + 2 * ell * (k - k1) + N * (N * k + 1 + 2 * k1 - k)


def h2_eigenvalue(label: HermiteLabel, p: ParameterSet) -> Fraction:
    """Gauge shift of the H3 value: subtract (k1 - k)(N - 2l) + N(k + 1/2)."""
    N, ell = p.N, label.ell
    return h3_eigenvalue(label, p) - (p.k1 - p.k) * (N - 2 * ell) - N * (p.k + Fraction(1, 2))


def apply_h3(f: Poly, p: ParameterSet) -> Poly:
    """exp(-L/2) sum_i U^B_i exp(L/2) f."""
    g = apply_exp_L(f, Fraction(1, 2), p)
    total = Poly.zero(p.N)
    for i in range(1, p.N + 1):
        total = total + apply_UB(g, i, p)
    return apply_exp_L(total, Fraction(-1, 2), p)


def apply_h3_closed(f: Poly, p: ParameterSet) -> Poly:
    """sum x_i d_i - L + (k1 - k) sum sigma_i + N(Nk + 1 + k1)."""
    N = p.N
    euler = Poly(N, {e: c * sum(e) for e, c in f.terms.items()})
    signs = Poly.zero(N)
    for i in range(1, N + 1):
        signs = signs + act(SignedPermutation.sigma(N, i), f)
    return euler - apply_laplacian(f, p) + signs.scale(p.k1 - p.k) + f.scale(N * (N * p.k + 1 + p.k1))


def spectra(label: HermiteLabel, which: str, p: ParameterSet, check: bool = True) -> Fraction:
    """Eigenvalue of H1, H2 or H3 attached to a label; H3 optionally checked by application."""
    if which == "H1":
        from .jack import h1_spectrum

        return h1_spectrum(label.beta, p)
    value = h3_eigenvalue(label, p)
    if check:
        H = hermite(label, p)
        if apply_h3(H, p) != H.scale(value):
            raise InvariantViolation(f"H3 eigenvalue fails on {label}")
    if which == "H3":
        return value
    if which == "H2":
        return h2_eigenvalue(label, p)
    raise UserInputError(f"unknown Hamiltonian {which!r}")


# ------------------------------------------------ invariants and alternants


def _split(ell: int, N: int) -> list[Interval]:
    out = []
    if ell >= 1:
        out.append(Interval(1, ell))
    if ell < N:
        out.append(Interval(ell + 1, N))
    return out


def _generators(ell: int, N: int, signs_on_first: bool) -> list[tuple[SignedPermutation, int]]:
    """Generators of W_{[1,l]} x S_{[l+1,N]} (or S x W) with their signs as reflections."""
    gens = []
    for i in range(1, N):
        if i != ell:
            gens.append((SignedPermutation.sigma_ij(N, i, i + 1), -1))
    idx = range(1, ell + 1) if signs_on_first else range(ell + 1, N + 1)
    for i in idx:
        gens.append((SignedPermutation.sigma(N, i), -1))
    return gens


@dataclass
class TypeBInvariant:
    kind: str
    alpha: Composition
    ell: int
    poly: Poly
    p_norm: Fraction
    p_norm_closed: Fraction
    B_norm: Fraction
    B_norm_closed: Fraction
    value: Fraction
    value_closed: Fraction

    @property
    def consistent(self) -> bool:
        return (self.p_norm == self.p_norm_closed and self.B_norm == self.B_norm_closed
                and self.value == self.value_closed)


def typeb_invariant(alpha: Sequence[int], ell: int, kind: str, p: ParameterSet) -> Poly:
    """j_{alpha;l} (kind 'j') or a_{alpha;l} (kind 'a'), with its symmetry verified."""
    alpha = tuple(alpha)
    N = p.N
    if not 0 <= ell <= N:
        raise UserInputError(f"l = {ell} outside [0, {N}]")
    intervals = _split(ell, N)
    xl = x_subset(range(1, ell + 1), N)
    if kind == "j":
        poly = xl * substitute_squares(j_invariant(alpha, intervals, p))
        # invariant under S_[1,l] x W_[l+1,N]
        for w, _ in _generators(ell, N, signs_on_first=False):
            if act(w, poly) != poly:
                raise InvariantViolation(f"j_{alpha};{ell} is not invariant")
    elif kind == "a":
        poly = xl * substitute_squares(a_alternating(alpha, intervals, p))
        # alternating under W_[1,l] x S_[l+1,N]
        for w, sgn in _generators(ell, N, signs_on_first=True):
            if act(w, poly) != poly.scale(sgn):
                raise InvariantViolation(f"a_{alpha};{ell} is not alternating")
    else:
        raise UserInputError(f"kind must be 'j' or 'a', got {kind!r}")
    return poly


def typeb_invariant_report(alpha: Sequence[int], ell: int, kind: str, p: ParameterSet) -> TypeBInvariant:
    """Polynomial plus direct and closed-form p-norm, B-norm and evaluation.

    For 'j' the evaluation is j(1^N); for 'a' it is the quotient by
    a_[1,l](x^2) a_[l+1,N](x^2) at 1^N.
    """
    alpha = tuple(alpha)
    N = p.N
    poly = typeb_invariant(alpha, ell, kind, p)
    intervals = _split(ell, N)
    eps = 1 if kind == "j" else -1
    rev = reverse_on_intervals(alpha, intervals)
    zn = zeta_norms(alpha, p).p_norm
    if kind == "j":
        count = orbit_size(alpha, intervals)
    else:
        count = factorial(ell) * factorial(N - ell)
    p_closed = count * eps_product_multi(rev, intervals, eps, p) * zn
    scale_B = 2 ** (2 * sum(alpha) + ell) * lambda_factor(hermite_label(alpha, ell), p)
    lam = sort_to_partition(alpha)
    if kind == "j":
        value = evaluate_ones(poly)
        value_closed = orbit_size(alpha, intervals) * eval_1N(alpha, p)
    else:
        den = Poly.const(N)
        for I in intervals:
            den = den * substitute_squares(alternating_poly(I, N))
        value = evaluate_ones(exact_divide(poly, den))
        kv = kappa_vector(alpha, p)
        skew = Fraction(1)
        for I in intervals:
            idx = list(I.indices())
            for a_, i in enumerate(idx):
                for j in idx[a_ + 1:]:
                    skew *= kv[i - 1] - kv[j - 1] - p.k
        mu = staircase([I.size for I in intervals], N)
        value_closed = (shifted_factorial(N * p.k + 1, lam, p) * eps_product(alpha, Interval(1, N), -1, p)
                        / (shifted_factorial(N * p.k + 1, mu, p) * hook_product(lam, 1, p)) * skew)
    return TypeBInvariant(kind, alpha, ell, poly, inner_p_B(poly, poly, p), p_closed,
                          inner_B(poly, poly, p), scale_B * p_closed, value, value_closed)
