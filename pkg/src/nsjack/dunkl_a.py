"""Type-A Dunkl operators, the operator family built from them, and the two inner products.

T_i = d/dx_i + k sum_{j != i} (1 - (ij)) / (x_i - x_j).  The difference
quotient is applied monomial by monomial in closed form; exact_divide is the
cross-check in the tests.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import Interval, ParameterSet, shifted_factorial, subgroup_elements
from .errors import InvariantViolation, NotDivisibleError, SingularParameterError, UserInputError
from .polyalg import Poly, act, alternating_poly, at_zero, change_to_p_basis, exact_divide, swap

OPERATOR_TAGS = ("T", "Txi", "U", "tau", "theta", "xi")


def divided_difference_monomial(alpha, i0: int, j0: int) -> dict:
    """(x^alpha - (ij) x^alpha) / (x_i - x_j) as a {exponent: int} map (0-based i0, j0)."""
    a, b = alpha[i0], alpha[j0]
    if a == b:
        return {}
    out = {}
    base = list(alpha)
    if a > b:
        sign, hi, lo = 1, a, b
    else:
        sign, hi, lo = -1, b, a
    # for a < b the roles of i and j swap under the same closed form
    for s in range(hi - lo):
        e = list(base)
        if sign > 0:
            e[i0], e[j0] = hi - 1 - s, lo + s
        else:
            e[i0], e[j0] = lo + s, hi - 1 - s
        out[tuple(e)] = sign
    return out


def divided_difference(f: Poly, i: int, j: int) -> Poly:
    """(f - (ij) f) / (x_i - x_j)."""
    out: dict = {}
    for e, c in f.terms.items():
        for e2, s in divided_difference_monomial(e, i - 1, j - 1).items():
            out[e2] = out.get(e2, 0) + s * c
    return Poly(f.nvars, out)


def divided_difference_by_division(f: Poly, i: int, j: int) -> Poly:
    """Same quotient through generic exact division; used as an oracle."""
    num = f - swap(f, i, j)
    if num.is_zero():
        return num
    den = Poly.var(f.nvars, i) - Poly.var(f.nvars, j)
    try:
        return exact_divide(num, den)
    except NotDivisibleError as exc:
        raise InvariantViolation(f"difference quotient not exact for ({i}{j})") from exc


@lru_cache(maxsize=200_000)
def _dunkl_monomial(alpha: tuple, i0: int, k: Fraction) -> tuple:
    out: dict = {}
    a = alpha[i0]
    if a:
        e = list(alpha)
        e[i0] -= 1
        out[tuple(e)] = Fraction(a)
    if k:
        for j0 in range(len(alpha)):
            if j0 != i0:
                for e2, s in divided_difference_monomial(alpha, i0, j0).items():
                    out[e2] = out.get(e2, 0) + s * k
    return tuple((e, c) for e, c in out.items() if c)


def apply_dunkl(f: Poly, i: int, p: ParameterSet) -> Poly:
    """T_i f."""
    if not 1 <= i <= f.nvars:
        raise UserInputError(f"index {i} outside 1..{f.nvars}")
    out: dict = {}
    for e, c in f.terms.items():
        for e2, v in _dunkl_monomial(e, i - 1, p.k):
            out[e2] = out.get(e2, 0) + c * v
    return Poly(f.nvars, out)


def apply_dunkl_word(f: Poly, word, p: ParameterSet) -> Poly:
    """T^alpha f for an exponent vector alpha (the T_i commute)."""
    for i, a in enumerate(word, start=1):
        for _ in range(a):
            f = apply_dunkl(f, i, p)
    return f


@dataclass(frozen=True)
class OperatorName:
    tag: str
    i: int
    interval: Interval | None = None

    def __post_init__(self):
        if self.tag not in OPERATOR_TAGS:
            raise UserInputError(f"unknown operator tag {self.tag!r}")
        if self.tag in ("tau", "theta"):
            if self.interval is None:
                raise UserInputError(f"operator {self.tag} needs an interval")
            if self.i not in self.interval:
                raise UserInputError(f"index {self.i} not in interval {self.interval}")


def apply_txi(f: Poly, i: int, p: ParameterSet) -> Poly:
    """T_i rho_i f = T_i(x_i f) + k f."""
    return apply_dunkl(f.mul_var(i), i, p) + f.scale(p.k)


def apply_U(f: Poly, i: int, p: ParameterSet) -> Poly:
    """U_i = T_i rho_i - k sum_{j<i} (ij)."""
    out = apply_txi(f, i, p)
    for j in range(1, i):
        out = out - swap(f, i, j).scale(p.k)
    return out


def apply_tau(f: Poly, i: int, I: Interval, p: ParameterSet) -> Poly:
    """tau_i = T_i rho_i - k sum_{j <= l} (ij), l = I.lo - 1."""
    out = apply_txi(f, i, p)
    for j in range(1, I.lo):
        out = out - swap(f, i, j).scale(p.k)
    return out


def apply_theta(f: Poly, i: int, I: Interval, p: ParameterSet) -> Poly:
    """theta_i = tau_i - (k/2) sum_{j in I, j != i} (ij)."""
    out = apply_tau(f, i, I, p)
    half = p.k / 2
    for j in I.indices():
        if j != i:
            out = out - swap(f, i, j).scale(half)
    return out


def apply_xi(f: Poly, i: int, p: ParameterSet) -> Poly:
    if p.k == 0:
        raise SingularParameterError("xi_i divides by k = 0")
    return (apply_U(f, i, p) - f.scale(p.k * (p.N - 1) + 1)).scale(1 / p.k)


def apply_named(op: OperatorName, f: Poly, p: ParameterSet) -> Poly:
    if not 1 <= op.i <= p.N:
        raise UserInputError(f"index {op.i} outside 1..{p.N}")
    if op.tag == "T":
        return apply_dunkl(f, op.i, p)
    if op.tag == "Txi":
        return apply_txi(f, op.i, p)
    if op.tag == "U":
        return apply_U(f, op.i, p)
    if op.tag == "tau":
        return apply_tau(f, op.i, op.interval, p)
    if op.tag == "theta":
        return apply_theta(f, op.i, op.interval, p)
    return apply_xi(f, op.i, p)


# ------------------------------------------------------------ inner products


@lru_cache(maxsize=None)
def _a_pairing(alpha: tuple, beta: tuple, k: Fraction) -> Fraction:
    """(T^alpha x^beta)(0)."""
    if sum(alpha) != sum(beta):
        return Fraction(0)
    if not any(alpha):
        return Fraction(1)
    i0 = next(i for i, a in enumerate(alpha) if a)
    rest = list(alpha)
    rest[i0] -= 1
    rest = tuple(rest)
    return sum((c * _a_pairing(rest, e, k) for e, c in _dunkl_monomial(beta, i0, k)),
               start=Fraction(0))


def inner_A(f: Poly, g: Poly, p: ParameterSet) -> Fraction:
    """<f, g>_A = (f(T) g)(0)."""
    total = Fraction(0)
    for a, fa in f.terms.items():
        da = sum(a)
        for b, gb in g.terms.items():
            if sum(b) == da:
                total += fa * gb * _a_pairing(a, b, p.k)
    return total


def inner_p(f: Poly, g: Poly, p: ParameterSet) -> Fraction:
    """<f, g>_p with <x^alpha, p_beta>_p = delta."""
    coeffs = change_to_p_basis(g, p)
    return sum((c * coeffs.get(e, 0) for e, c in f.terms.items()), start=Fraction(0))


def inner_torus_on_Elambda(f: Poly, g: Poly, lam, p: ParameterSet) -> Fraction:
    """Torus product on E_lambda through the ratio (Nk+1)_lam / ((N-1)k+1)_lam."""
    den = shifted_factorial((p.N - 1) * p.k + 1, tuple(lam), p)
    if den == 0:
        raise SingularParameterError(f"((N-1)k+1)_lambda vanishes for lambda={tuple(lam)}")
    return shifted_factorial(p.N * p.k + 1, tuple(lam), p) / den * inner_p(f, g, p)


# ------------------------------------------------------- skew constructions


def alternate(f: Poly, I: Interval) -> Poly:
    """sum_{w in S_I} sgn(w) w f."""
    out = Poly.zero(f.nvars)
    for w in subgroup_elements(f.nvars, [I]):
        g = act(w, f)
        out = out + g if w.sign() > 0 else out - g
    return out


def symmetrize_div(f: Poly, I: Interval) -> Poly:
    """A_I f = (1/m!) sum sgn(w) w f / a_I."""
    num = alternate(f, I).scale(Fraction(1, factorial(I.size)))
    if num.is_zero():
        return num
    try:
        return exact_divide(num, alternating_poly(I, f.nvars))
    except NotDivisibleError as exc:
        raise InvariantViolation(f"alternation not divisible by a_{I}") from exc


def _psi(f: Poly, lo: int, s: int, p: ParameterSet) -> Poly:
    if s == 1:
        return f

    def tilde(g):
        g = _psi(g, lo, s - 1, p)
        for i in range(lo, lo + s - 1):
            g = apply_U(g, i, p)
        return g

    top = lo + s - 1
    out = tilde(f)
    for i in range(lo, top):
        out = out - swap(tilde(swap(f, i, top)), i, top)
    return out


def apply_psi(f: Poly, I: Interval, p: ParameterSet) -> Poly:
    """psi_I by the interval-size recursion."""
    I.check(f.nvars)
    return _psi(f, I.lo, I.size, p)


def apply_psi_family(f: Poly, intervals, p: ParameterSet) -> Poly:
    for I in intervals:
        f = apply_psi(f, I, p)
    return f


def a_pairing_at_zero(f: Poly, g: Poly, p: ParameterSet) -> Fraction:
    """(f(T) g)(0) computed by literal operator application; oracle for inner_A."""
    total = Fraction(0)
    for a, c in f.terms.items():
        total += c * at_zero(apply_dunkl_word(g, a, p))
    return total
