"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero Fractions together with
the number of variables.  Values are immutable: every operation returns a new
Poly.  Group elements act on the left by (w f)(x) = f(x w).
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from . import _linalg
from .combinatorics import (Composition, Interval, ParameterSet, Permutation, compositions,
                            grevlex_key, shifted_factorial, to_fraction)
from .errors import NotDivisibleError, UserInputError


class Poly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Composition, object] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != nvars:
                    raise UserInputError(f"exponent {exp} does not have {nvars} entries")
                c = c if isinstance(c, Fraction) else to_fraction(c)
                if c:
                    clean[tuple(exp)] = c
        self.terms: dict[Composition, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Poly":
        # terms already clean: tuple keys, nonzero Fraction values
        out = cls.__new__(cls)
        out.nvars = nvars
        out.terms = terms
        out._hash = None
        return out

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c=1) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, alpha: Sequence[int], c=1) -> "Poly":
        return cls(len(alpha), {tuple(alpha): c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        """The coordinate x_i, 1-based."""
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, alpha: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(alpha), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def degrees(self) -> list[int]:
        return sorted({sum(e) for e in self.terms})

    def sorted_terms(self) -> list[tuple[Composition, Fraction]]:
        """Terms in descending graded reverse-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Composition, Fraction]:
        return max(self.terms.items(), key=lambda t: grevlex_key(t[0]))

    # ring operations
    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise UserInputError(f"polynomials in {self.nvars} and {other.nvars} variables")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(self.nvars, to_fraction(other) if isinstance(other, str) else other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        c = c if isinstance(c, Fraction) else to_fraction(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def __truediv__(self, c) -> "Poly":
        if isinstance(c, Poly):
            return exact_divide(self, c)
        return self.scale(1 / Fraction(c))

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(self.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mul_var(self, i: int) -> "Poly":
        """x_i * self without a general multiplication."""
        i0 = i - 1
        out = {}
        for e, c in self.terms.items():
            lst = list(e)
            lst[i0] += 1
            out[tuple(lst)] = c
        return Poly._raw(self.nvars, out)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self.nvars}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)


# ---------------------------------------------------------------- group actions


@dataclass(frozen=True)
class SignedPermutation:
    """Element of the hyperoctahedral group: (x w)_i = eps_i x_{perm(i)}.

    flips is the set of i with eps_i = -1.
    """

    perm: Permutation
    flips: frozenset = frozenset()

    @property
    def N(self) -> int:
        return self.perm.N

    @classmethod
    def sigma(cls, N: int, i: int) -> "SignedPermutation":
        """Sign change of x_i."""
        return cls(Permutation.identity(N), frozenset({i}))

    @classmethod
    def sigma_ij(cls, N: int, i: int, j: int) -> "SignedPermutation":
        return cls(Permutation.transposition(N, i, j))

    @classmethod
    def tau_ij(cls, N: int, i: int, j: int) -> "SignedPermutation":
        """x tau_ij swaps x_i, x_j and negates both."""
        return cls(Permutation.transposition(N, i, j), frozenset({i, j}))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        # x(w1 w2) = (x w1) w2
        perm = self.perm * other.perm
        flips = frozenset(i for i in range(1, self.N + 1)
                          if (i in other.flips) != (other.perm(i) in self.flips))
        return SignedPermutation(perm, flips)


def act(w, f: Poly) -> Poly:
    """(w f)(x) = f(x w) for a Permutation or SignedPermutation w."""
    if isinstance(w, SignedPermutation):
        perm, flips = w.perm, [i - 1 for i in w.flips]
    else:
        perm, flips = w, []
    images = [j - 1 for j in perm.images]
    n = f.nvars
    out = {}
    for e, c in f.terms.items():
        new = [0] * n
        for src, a in enumerate(e):
            new[images[src]] = a
        if flips and sum(e[i] for i in flips) % 2:
            c = -c
        out[tuple(new)] = c
    return Poly._raw(n, out)


def swap(f: Poly, i: int, j: int) -> Poly:
    """Action of the transposition (ij)."""
    i0, j0 = i - 1, j - 1
    out = {}
    for e, c in f.terms.items():
        lst = list(e)
        lst[i0], lst[j0] = lst[j0], lst[i0]
        out[tuple(lst)] = c
    return Poly._raw(f.nvars, out)


# ---------------------------------------------------------- evaluation, maps


def evaluate(f: Poly, point: Sequence) -> Fraction:
    if len(point) != f.nvars:
        raise UserInputError(f"point has {len(point)} entries, polynomial has {f.nvars} variables")
    pt = [to_fraction(v) if isinstance(v, str) else Fraction(v) for v in point]
    total = Fraction(0)
    for e, c in f.terms.items():
        term = c
        for v, a in zip(pt, e):
            if a:
                term *= v ** a
        total += term
    return total


def evaluate_ones(f: Poly) -> Fraction:
    """f(1^N), the sum of coefficients."""
    return sum(f.terms.values(), start=Fraction(0))


def at_zero(f: Poly) -> Fraction:
    return f.terms.get((0,) * f.nvars, Fraction(0))


def substitute_squares(g: Poly) -> Poly:
    """g(y) -> g(x_1^2, ..., x_N^2)."""
    return Poly._raw(g.nvars, {tuple(2 * a for a in e): c for e, c in g.terms.items()})


def translate(f: Poly, shift: Sequence) -> Poly:
    """f(x + shift)."""
    shift = [Fraction(s) for s in shift]
    out = Poly.zero(f.nvars)
    for e, c in f.terms.items():
        term = Poly.const(f.nvars, c)
        for i, a in enumerate(e):
            if a:
                pieces = {}
                for m in range(a + 1):
                    exp = [0] * f.nvars
                    exp[i] = m
                    pieces[tuple(exp)] = comb(a, m) * shift[i] ** (a - m)
                term = term * Poly(f.nvars, pieces)
        out = out + term
    return out


def parity_decompose(f: Poly) -> dict[frozenset, Poly]:
    """Split f = sum_A x_A g_A(x^2); returns {A (1-based set): g_A(y)}."""
    out: dict[frozenset, dict] = {}
    for e, c in f.terms.items():
        A = frozenset(i + 1 for i, a in enumerate(e) if a % 2)
        out.setdefault(A, {})[tuple(a // 2 for a in e)] = c
    return {A: Poly._raw(f.nvars, t) for A, t in out.items()}


def x_subset(A: Iterable[int], N: int) -> Poly:
    exp = [0] * N
    for i in A:
        exp[i - 1] = 1
    return Poly.monomial(exp)


# ---------------------------------------------------------------- division


def exact_divide(f: Poly, g: Poly) -> Poly:
    """q with f = q g; raises NotDivisibleError carrying the remainder otherwise."""
    f._check(g)
    if g.is_zero():
        raise UserInputError("division by the zero polynomial")
    lead_e, lead_c = g.leading_term()
    g_rest = [(e, c) for e, c in g.terms.items() if e != lead_e]
    work = dict(f.terms)
    quot: dict = {}
    remainder: dict = {}
    while work:
        e = max(work, key=grevlex_key)
        c = work.pop(e)
        shift = tuple(a - b for a, b in zip(e, lead_e))
        if min(shift) < 0:
            remainder[e] = c
            continue
        qc = c / lead_c
        quot[shift] = qc
        for ge, gc in g_rest:
            key = tuple(a + b for a, b in zip(shift, ge))
            v = work.get(key, 0) - qc * gc
            if v:
                work[key] = v
            else:
                work.pop(key, None)
    if remainder:
        raise NotDivisibleError("polynomial is not divisible", Poly(f.nvars, remainder))
    return Poly._raw(f.nvars, quot)


def alternating_poly(I: Interval, N: int) -> Poly:
    """a_I = prod{x_i - x_j : i < j in I}."""
    I.check(N)
    out = Poly.const(N)
    idx = list(I.indices())
    for a, i in enumerate(idx):
        for j in idx[a + 1:]:
            out = out * (Poly.var(N, i) - Poly.var(N, j))
    return out


# ------------------------------------------------------------------ p basis


@lru_cache(maxsize=None)
def _q_series(N: int, r: int, k: Fraction) -> Poly:
    """Coefficient of t^r in prod_i (1 - x_i t)^{-k}."""
    terms = {}
    for beta in compositions(N, r):
        c = Fraction(1)
        for b in beta:
            c *= shifted_factorial(k, b) / factorial(b)
        terms[beta] = c
    return Poly(N, terms)


@lru_cache(maxsize=None)
def _c_factor(N: int, j: int, n: int, k: Fraction) -> Poly:
    out = Poly.zero(N)
    for m in range(n + 1):
        exp = [0] * N
        exp[j] = m
        out = out + Poly.monomial(exp) * _q_series(N, n - m, k)
    return out


@lru_cache(maxsize=None)
def _p_basis(alpha: Composition, k: Fraction) -> Poly:
    N = len(alpha)
    out = Poly.const(N)
    for j, a in enumerate(alpha):
        if a:
            out = out * _c_factor(N, j, a, k)
    return out


def p_basis(alpha: Sequence[int], p: ParameterSet) -> Poly:
    """Coefficient of y^alpha in prod_i (1 - x_i y_i)^{-1} prod_{i,j} (1 - x_i y_j)^{-k}."""
    alpha = tuple(alpha)
    if len(alpha) != p.N:
        raise UserInputError(f"composition {alpha} does not have N={p.N} parts")
    return _p_basis(alpha, p.k)


@lru_cache(maxsize=None)
def _degree_system(N: int, d: int, k: Fraction):
    """Monomial index and inverse Gram matrix for the p basis in degree d."""
    basis = list(compositions(N, d))
    index = {b: i for i, b in enumerate(basis)}
    # column beta holds the monomial coefficients of p_beta
    mat = [[Fraction(0)] * len(basis) for _ in basis]
    for col, beta in enumerate(basis):
        for e, c in _p_basis(beta, k).terms.items():
            mat[index[e]][col] = c
    return basis, index, _linalg.inverse(mat)


def change_to_p_basis(f: Poly, p: ParameterSet) -> dict[Composition, Fraction]:
    """Coefficients c_beta with f = sum c_beta p_beta."""
    if f.nvars != p.N:
        raise UserInputError("polynomial and parameter set disagree on N")
    out = {}
    for d in f.degrees():
        basis, index, inv = _degree_system(p.N, d, p.k)
        vec = [(index[e], c) for e, c in f.terms.items() if sum(e) == d]
        for r, beta in enumerate(basis):
            row = inv[r]
            v = sum((row[i] * c for i, c in vec), start=Fraction(0))
            if v:
                out[beta] = v
    return out


def from_p_basis(coeffs: Mapping[Composition, Fraction], p: ParameterSet) -> Poly:
    out = Poly.zero(p.N)
    for beta, c in coeffs.items():
        out = out + p_basis(beta, p).scale(c)
    return out


# ------------------------------------------------------------------- text form


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(e: Composition) -> str:
    parts = []
    for i, a in enumerate(e, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts)


def to_text(f: Poly) -> str:
    """Canonical form, e.g. '2*x1^2*x2 - 1/3*x3 + 5'."""
    if f.is_zero():
        return "0"
    chunks = []
    for n, (e, c) in enumerate(f.sorted_terms()):
        mono = _format_monomial(e)
        body = _format_coeff(abs(c)) + (f"*{mono}" if mono else "")
        if n == 0:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append((" - " if c < 0 else " + ") + body)
    return "".join(chunks)


_TERM = re.compile(r"^(?P<coeff>\d+(?:/\d+)?)?(?P<mono>(?:\*?x\d+(?:\^\d+)?)*)$")
_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_poly(text: str, nvars: int) -> Poly:
    """Inverse of to_text; also accepts omitted unit coefficients and free spacing."""
    s = text.replace(" ", "")
    if not s:
        raise UserInputError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sign + body for sign, body in pieces) != s:
        raise UserInputError(f"cannot parse polynomial {text!r}")
    terms: dict = {}
    for sign, body in pieces:
        m = _TERM.match(body)
        if not m or not (m.group("coeff") or m.group("mono")):
            raise UserInputError(f"cannot parse term {body!r}")
        c = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        exp = [0] * nvars
        for idx, power in _FACTOR.findall(m.group("mono") or ""):
            i = int(idx)
            if not 1 <= i <= nvars:
                raise UserInputError(f"variable x{i} outside 1..{nvars}")
            exp[i - 1] += int(power) if power else 1
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + (-c if sign == "-" else c)
    return Poly(nvars, terms)
