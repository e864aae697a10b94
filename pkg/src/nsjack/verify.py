"""Verification suites: each one checks a family of exact identities.

A suite is a generator of (case, ok) pairs.  Sizes follow the configured N and
degree, so `verify --suite all` at small N stays fast; the test suite runs the
same checks at larger sizes.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Iterator

from .combinatorics import (Interval, ParameterSet, Permutation, compositions, dominance_compare,
                            eps_product, eps_reversed_closed, full_orbit_size, hook_product,
                            kappa, longest_element, orbit, orbit_size, partitions,
                            reverse_on_interval, satisfies, shifted_factorial,
                            sort_to_partition, subgroup_elements, w_subset)
from .dunkl_a import (apply_dunkl, apply_dunkl_word, apply_psi, apply_theta, apply_U, apply_xi,
                      inner_A, inner_p)
from .errors import InvariantViolation, NsJackError
from .jack import (a_alternating, coset_data, exchange_constant, g_basis, j_invariant,
                   omega, zeta, zeta_via_exchange)
from .polyalg import (Poly, SignedPermutation, act, change_to_p_basis, evaluate_ones,
                      exact_divide, p_basis, parse_poly, substitute_squares, swap, to_text,
                      x_subset)
from . import skew_eval, typeb

Case = tuple[str, bool]


@dataclass(frozen=True)
class VerifyConfig:
    params: ParameterSet
    degree: int = 4
    seed: int = 0
    samples: int = 10


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    violations: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed and not self.violations


# ---------------------------------------------------------------- helpers


def _monomials(N: int, d_max: int) -> Iterator[Poly]:
    for d in range(d_max + 1):
        for e in compositions(N, d):
            yield Poly.monomial(e)


def _all_compositions(N: int, d_max: int) -> Iterator[tuple]:
    for d in range(d_max + 1):
        yield from compositions(N, d)


def _random_poly(rng: random.Random, N: int, d_max: int, nterms: int = 4,
                 homogeneous: int | None = None) -> Poly:
    terms = {}
    for _ in range(nterms):
        d = homogeneous if homogeneous is not None else rng.randint(0, d_max)
        cuts = sorted(rng.randint(0, d) for _ in range(N - 1))
        e = tuple(b - a for a, b in zip([0] + cuts, cuts + [d]))
        terms[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Poly(N, terms)


def _random_perm(rng: random.Random, N: int) -> Permutation:
    images = list(range(1, N + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def _random_signed(rng: random.Random, N: int) -> SignedPermutation:
    flips = frozenset(i for i in range(1, N + 1) if rng.random() < 0.5)
    return SignedPermutation(_random_perm(rng, N), flips)


def _intervals(N: int, sizes=(2, 3)) -> list[Interval]:
    return [Interval(lo, lo + m - 1) for m in sizes for lo in range(1, N - m + 2)]


# ------------------------------------------------------------ combinatorics


def suite_sorting(cfg: VerifyConfig) -> Iterator[Case]:
    N = cfg.params.N
    perms = [Permutation(p) for p in permutations(range(1, N + 1))]
    for alpha in _all_compositions(N, cfg.degree):
        lam = sort_to_partition(alpha)
        yield f"{alpha}", sort_to_partition(lam) == lam and all(
            sort_to_partition(w.act(alpha)) == lam for w in perms)


def suite_dominance_order(cfg: VerifyConfig) -> Iterator[Case]:
    N = cfg.params.N
    for d in range(min(cfg.degree, 4) + 1):
        comps = list(compositions(N, d))
        ge = {(a, b): dominance_compare(a, b) in ("succeeds", "equal") for a in comps for b in comps}
        yield f"reflexive d={d}", all(ge[a, a] for a in comps)
        yield f"antisymmetric d={d}", all(a == b for a in comps for b in comps if ge[a, b] and ge[b, a])
        yield f"transitive d={d}", all(ge[a, c] for a in comps for b in comps for c in comps
                                       if ge[a, b] and ge[b, c])


def suite_kappa_partition(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for d in range(cfg.degree + 1):
        for lam in partitions(p.N, d):
            yield f"{lam}", all(kappa(lam, i, p) == p.N * p.k - p.k * (i - 1) + lam[i - 1] + 1
                                for i in range(1, p.N + 1))


def suite_eps_reflection(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for I in _intervals(p.N):
        sigma = longest_element(p.N, I)
        for alpha in _all_compositions(p.N, cfg.degree):
            if not satisfies(alpha, I, strict=True):
                continue
            rev = reverse_on_interval(alpha, I)
            for eps in (1, -1):
                target = eps_product(rev, I, eps, p)
                yield f"{alpha} {I} {eps:+d}", all(
                    eps_product(w.act(alpha), I, eps, p) * eps_product((sigma * w).act(alpha), I, eps, p)
                    == target for w in subgroup_elements(p.N, [I]))


def suite_eps_reversed(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for I in _intervals(p.N):
        for alpha in _all_compositions(p.N, cfg.degree):
            if satisfies(alpha, I):
                rev = reverse_on_interval(alpha, I)
                yield f"{alpha} {I}", all(eps_product(rev, I, e, p) == eps_reversed_closed(alpha, I, e, p)
                                          for e in (1, -1))


def suite_hook_identity(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    full = Interval(1, p.N)
    for d in range(cfg.degree + 1):
        for lam in partitions(p.N, d):
            lhs = hook_product(lam, p.k, p) * shifted_factorial(p.N * p.k + 1, lam, p) * full_orbit_size(lam)
            rhs = (shifted_factorial(p.N * p.k, lam, p) * eps_product(tuple(reversed(lam)), full, 1, p)
                   * hook_product(lam, p.k + 1, p))
            yield f"{lam}", lhs == rhs


def suite_w_subset(cfg: VerifyConfig) -> Iterator[Case]:
    N = min(cfg.params.N, 5)
    perms = [Permutation(p) for p in permutations(range(1, N + 1))]
    for ell in range(N + 1):
        for A in combinations(range(1, N + 1), ell):
            found = [w for w in perms
                     if {w(i) for i in range(1, ell + 1)} == set(A)
                     and all(w(i) < w(i + 1) for i in range(1, N) if i != ell)]
            yield f"A={A}", found == [w_subset(A, N)]


# ------------------------------------------------------------------ polyalg


def suite_group_action(cfg: VerifyConfig) -> Iterator[Case]:
    rng = random.Random(cfg.seed)
    N = cfg.params.N
    for n in range(cfg.samples):
        f = _random_poly(rng, N, cfg.degree)
        w1, w2 = _random_perm(rng, N), _random_perm(rng, N)
        yield f"perm #{n}", act(w1, act(w2, f)) == act(w1 * w2, f)
        s1, s2 = _random_signed(rng, N), _random_signed(rng, N)
        yield f"signed #{n}", act(s1, act(s2, f)) == act(s1 * s2, f)


def suite_division(cfg: VerifyConfig) -> Iterator[Case]:
    rng = random.Random(cfg.seed + 1)
    N = cfg.params.N
    for n in range(cfg.samples):
        q = _random_poly(rng, N, cfg.degree)
        g = _random_poly(rng, N, 2, nterms=2)
        if g.is_zero():
            continue
        yield f"#{n}", exact_divide(q * g, g) == q


def suite_p_basis(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    N = p.N
    perms = [Permutation(w) for w in permutations(range(1, N + 1))]
    for alpha in _all_compositions(N, min(cfg.degree, 4)):
        pa = p_basis(alpha, p)
        yield f"roundtrip {alpha}", change_to_p_basis(pa, p) == {alpha: 1}
        orb = orbit(alpha, [Interval(1, N)])
        yield f"orbit {alpha}", all(set(change_to_p_basis(act(w, pa), p)) <= orb
                                    and act(w, pa) == p_basis(w.act(alpha), p) for w in perms)


# ------------------------------------------------------------------ dunkl_a


def suite_dunkl_commute(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    N = p.N
    for f in _monomials(N, cfg.degree):
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                yield f"T {f} ({i},{j})", apply_dunkl(apply_dunkl(f, j, p), i, p) == \
                    apply_dunkl(apply_dunkl(f, i, p), j, p)
                yield f"U {f} ({i},{j})", apply_U(apply_U(f, j, p), i, p) == apply_U(apply_U(f, i, p), j, p)


def suite_self_adjoint(cfg: VerifyConfig) -> Iterator[Case]:
    from .dunkl_a import apply_txi

    p = cfg.params
    rng = random.Random(cfg.seed + 2)
    for n in range(cfg.samples):
        d = rng.randint(0, cfg.degree)
        f = _random_poly(rng, p.N, d, homogeneous=d)
        g = _random_poly(rng, p.N, d, homogeneous=d)
        i = rng.randint(1, p.N)
        for name, prod_ in (("p", inner_p), ("A", inner_A)):
            yield f"{name} #{n}", prod_(apply_txi(f, i, p), g, p) == prod_(f, apply_txi(g, i, p), p)


def suite_product_invariance(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    rng = random.Random(cfg.seed + 3)
    for n in range(cfg.samples):
        d = rng.randint(0, cfg.degree)
        f = _random_poly(rng, p.N, d, homogeneous=d)
        g = _random_poly(rng, p.N, d, homogeneous=d)
        w = _random_perm(rng, p.N)
        for name, prod_ in (("p", inner_p), ("A", inner_A)):
            yield f"{name} #{n}", prod_(act(w, f), act(w, g), p) == prod_(f, g, p)


def suite_products_on_E_lambda(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for d in range(cfg.degree + 1):
        for lam in partitions(p.N, d):
            rising = shifted_factorial(p.N * p.k + 1, lam, p)
            orb = sorted(orbit(lam, [Interval(1, p.N)]))
            for a in orb:
                za = zeta(a, p)
                for b in orb:
                    zb = zeta(b, p)
                    yield f"{a},{b}", inner_A(za, zb, p) == rising * inner_p(za, zb, p)
                # f(T)* 1 = (Nk+1)_lam f: <f(T) g, 1>_p = (Nk+1)_lam <g, f>_p on monomials g
                yield f"adjoint {a}", all(
                    sum((c * apply_dunkl_word(g, e, p).coeff((0,) * p.N) for e, c in za.terms.items()),
                        start=Fraction(0)) == rising * inner_p(g, za, p)
                    for g in (Poly.monomial(m) for m in compositions(p.N, d)))


def suite_commutations(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    N = p.N
    for f in _monomials(N, cfg.degree):
        for j in range(1, N):
            for i in range(1, N + 1):
                if i < j or i > j + 1:
                    yield f"[U_{i},({j},{j + 1})] {f}", apply_U(swap(f, j, j + 1), i, p) == \
                        swap(apply_U(f, i, p), j, j + 1)
            lhs = swap(apply_U(swap(f, j, j + 1), j, p), j, j + 1)
            yield f"conj U_{j} {f}", lhs == apply_U(f, j + 1, p) + swap(f, j, j + 1).scale(p.k)


def suite_psi_symmetries(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    N = p.N
    d = min(cfg.degree, 4)
    for I in _intervals(N):
        for f in _monomials(N, d):
            pf = apply_psi(f, I, p)
            for i in range(I.lo, I.hi):
                yield f"skew {I} ({i},{i + 1}) {f}", apply_psi(swap(f, i, i + 1), I, p) == \
                    swap(pf, i, i + 1).scale(-1)
            # generators of S_[1,l] x S_[l+m+1,N]
            for a in [a for a in range(1, N) if a + 1 < I.lo or a > I.hi]:
                yield f"outside {I} ({a},{a + 1}) {f}", apply_psi(swap(f, a, a + 1), I, p) == \
                    swap(pf, a, a + 1)
            outside = [j for j in range(1, N + 1) if j not in I]
            for j in outside:
                yield f"U_{j} {I} {f}", apply_psi(apply_U(f, j, p), I, p) == apply_U(pf, j, p)
            for i in I.indices():
                yield f"theta_{i} {I} {f}", apply_psi(apply_theta(f, i, I, p), I, p) == \
                    apply_theta(pf, i, I, p)


def suite_cherednik(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    if p.k == 0:
        return
    for f in _monomials(p.N, min(cfg.degree, 3)):
        for i in range(1, p.N + 1):
            yield f"{f} i={i}", apply_xi(f, i, p).scale(p.k) + f.scale(p.k * (p.N - 1) + 1) == apply_U(f, i, p)


# --------------------------------------------------------------------- jack


def suite_eigenrelation(cfg: VerifyConfig) -> Iterator[Case]:
    from .combinatorics import kappa_vector

    p = cfg.params
    for alpha in _all_compositions(p.N, cfg.degree):
        z = zeta(alpha, p)
        kv = kappa_vector(alpha, p)
        yield f"{alpha}", all(apply_U(z, i, p) == z.scale(kv[i - 1]) for i in range(1, p.N + 1))
        yield f"exchange {alpha}", zeta_via_exchange(alpha, p) == z


def suite_orthogonality(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for d in range(cfg.degree + 1):
        comps = list(compositions(p.N, d))
        for a, b in combinations(comps, 2):
            za, zb = zeta(a, p), zeta(b, p)
            yield f"{a},{b}", inner_p(za, zb, p) == 0 and inner_A(za, zb, p) == 0


def suite_omega(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for alpha in _all_compositions(p.N, cfg.degree):
        lam = sort_to_partition(alpha)
        if alpha == lam:
            yield f"zeta=omega {lam}", zeta(lam, p) == omega(lam, p)
        z = zeta(alpha, p)
        for i in range(1, p.N):
            if alpha[i - 1] == alpha[i]:
                yield f"fixed {alpha} ({i},{i + 1})", swap(z, i, i + 1) == z


def _covers(N: int, d_max: int):
    for alpha in _all_compositions(N, d_max):
        for i in range(1, N):
            if alpha[i - 1] > alpha[i]:
                lst = list(alpha)
                lst[i - 1], lst[i] = lst[i], lst[i - 1]
                yield alpha, i, tuple(lst)


def suite_exchange_recursions(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for alpha, i, sa in _covers(p.N, cfg.degree):
        c = exchange_constant(alpha, i, p)
        za, zs = zeta(alpha, p), zeta(sa, p)
        yield f"eval {alpha} i={i}", evaluate_ones(zs) == (1 - c) * evaluate_ones(za)
        yield f"norm {alpha} i={i}", inner_p(zs, zs, p) == (1 - c * c) * inner_p(za, za, p)
        if p.k > 0:
            yield f"0<c<1 {alpha} i={i}", 0 < c < 1
        f0 = za + zs.scale(1 / (1 + c))
        f1 = za - zs.scale(1 / (1 - c))
        yield f"symmetrizers {alpha} i={i}", swap(f0, i, i + 1) == f0 and swap(f1, i, i + 1) == -f1


def suite_coset_scalar(cfg: VerifyConfig) -> Iterator[Case]:
    from .combinatorics import kappa_vector

    p = cfg.params
    for I in _intervals(p.N):
        for alpha in _all_compositions(p.N, cfg.degree):
            if not satisfies(alpha, I):
                continue
            kv = kappa_vector(alpha, p)
            scalar = Fraction(1)
            for i in I.indices():
                scalar *= kv[i - 1]
            ok = True
            for g in g_basis(alpha, [I], p).values():
                h = g
                for i in I.indices():
                    h = apply_U(h, i, p)
                ok &= h == g.scale(scalar)
            yield f"{alpha} {I}", ok


def suite_coset_structure(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for I in _intervals(p.N):
        for alpha in _all_compositions(p.N, cfg.degree):
            if not satisfies(alpha, I):
                continue
            tag = f"{alpha} {I}"
            data = coset_data(alpha, I, p)
            strict = satisfies(alpha, I, strict=True)
            rev = reverse_on_interval(alpha, I)
            z = zeta(alpha, p)
            zn = inner_p(z, z, p)
            j = j_invariant(alpha, [I], p)
            count = orbit_size(alpha, [I])
            group = subgroup_elements(p.N, [I])
            yield f"(1) {tag}", all(act(w, j) == j for w in group)
            yield f"(2) {tag}", inner_p(j, j, p) == count * eps_product(rev, I, 1, p) * zn
            yield f"(3) {tag}", evaluate_ones(j) == count * evaluate_ones(z)
            yield f"(4) {tag}", j == sum(data.g.values(), start=Poly.zero(p.N))
            yield f"H-sum {tag}", sum(data.H[alpha].values(), start=Fraction(0)) == eps_product(rev, I, 1, p)
            if strict:
                a = a_alternating(alpha, [I], p)
                yield f"(5) {tag}", all(act(w, a) == a.scale(w.sign()) for w in group)
                yield f"(6) {tag}", inner_p(a, a, p) == len(group) * eps_product(rev, I, -1, p) * zn
                yield f"(7) {tag}", a == sum((act(w, z).scale(w.sign()) for w in group), start=Poly.zero(p.N))
                yield f"signed H-sum {tag}", sum((w.sign() * data.H[alpha][w.act(alpha)] for w in group),
                                                 start=Fraction(0)) == eps_product(rev, I, -1, p)


# ---------------------------------------------------------------- skew_eval


def _strict_cases(cfg: VerifyConfig, d_max: int):
    p = cfg.params
    for I in _intervals(p.N):
        for alpha in _all_compositions(p.N, d_max):
            if satisfies(alpha, I, strict=True):
                yield alpha, I


def suite_psi_coset(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for alpha, I in _strict_cases(cfg, cfg.degree):
        tag = f"{alpha} {I}"
        b = skew_eval.psi_scalar_check(alpha, I, p)
        rev = reverse_on_interval(alpha, I)
        ep, em = eps_product(rev, I, 1, p), eps_product(rev, I, -1, p)
        g = g_basis(alpha, [I], p)
        yield f"square {tag}", all(apply_psi(apply_psi(v, I, p), I, p) == v.scale(b * b * ep * em)
                                   for v in g.values())
        A = skew_eval.psi_matrix(alpha, I, p)
        group = subgroup_elements(p.N, [I])
        c = {w: A[alpha][w.act(alpha)] for w in group}
        yield f"shape {tag}", all(A[w1.act(alpha)][w2.act(alpha)] == w1.sign() * c[w1.inverse() * w2]
                                  for w1 in group for w2 in group)
        PH = skew_eval.ph_matrix(alpha, I, p)
        yield f"b*PH {tag}", all(A[r][s] == b * PH[r][s] for r in A for s in A)
        j = j_invariant(alpha, [I], p)
        a = a_alternating(alpha, [I], p)
        yield f"psi j {tag}", apply_psi(j, I, p) == a.scale(b * ep)
        yield f"psi a {tag}", apply_psi(a, I, p) == j.scale(b * em)
        skew_eval.psi_on_alternant(alpha, I, p)
        yield f"alternant {tag}", True


def suite_weyl_routes(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    rng = random.Random(cfg.seed + 4)
    fams = [[Interval(1, 2)]]
    if p.N >= 3:
        fams.append([Interval(1, 3)])
    if p.N >= 4:
        fams.append([Interval(1, 2), Interval(3, 4)])
    for fam in fams:
        family = skew_eval.IntervalFamily(fam)
        for n in range(cfg.samples):
            f = _random_poly(rng, p.N, min(cfg.degree, 5))
            r = skew_eval.weyl_routes(f, family, p)
            yield f"{[str(I) for I in fam]} #{n}", r.direct == r.formula
        for alpha in _all_compositions(p.N, cfg.degree):
            if all(satisfies(alpha, I, strict=True) for I in fam):
                yield f"quotient {alpha} {[str(I) for I in fam]}", \
                    skew_eval.alternant_quotient_closed(alpha, family, p) == \
                    skew_eval.alternant_quotient_direct(alpha, family, p)


# -------------------------------------------------------------------- typeb


def suite_bridge(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    N = p.N
    rng = random.Random(cfg.seed + 5)
    d = min(cfg.degree, 3)
    for ell in range(N + 1):
        for A in combinations(range(1, N + 1), ell):
            A = frozenset(A)
            for n in range(max(1, cfg.samples // 3)):
                g = _random_poly(rng, N, d)
                f = x_subset(A, N) * substitute_squares(g)
                for i in range(1, N + 1):
                    lift_form = x_subset(A, N) * substitute_squares(typeb.apply_U_lift(g, A, i, p).scale(2))
                    yield f"A={sorted(A)} i={i} #{n}", typeb.apply_UB_direct(f, i, p) == lift_form
    for e in _all_compositions(N, d):
        ph = typeb.p_hat(e, p)
        for i in range(1, N + 1):
            up = list(e)
            up[i - 1] += 1
            lhs = typeb.apply_dunkl_B(typeb.p_hat(up, p), i, p)
            for j in range(1, i):
                lhs = lhs - typeb.reflection_sum(ph, i, j).scale(p.k)
            yield f"p-hat raising {e} i={i}", lhs == typeb.apply_UB_direct(ph, i, p)


def suite_reflection_pairs(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    N = p.N
    rng = random.Random(cfg.seed + 6)
    for ell in range(N + 1):
        for A in combinations(range(1, N + 1), ell):
            g = _random_poly(rng, N, min(cfg.degree, 3))
            xa = x_subset(A, N)
            f = xa * substitute_squares(g)
            for i, j in combinations(range(1, N + 1), 2):
                same = (i in A) == (j in A)
                want = xa * substitute_squares(swap(g, i, j)).scale(2) if same else Poly.zero(N)
                yield f"A={A} ({i},{j})", typeb.reflection_sum(f, i, j) == want


def suite_typeb_commute(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for f in _monomials(p.N, min(cfg.degree, 4)):
        for i, j in combinations(range(1, p.N + 1), 2):
            yield f"{f} ({i},{j})", typeb.apply_UB(typeb.apply_UB(f, j, p), i, p) == \
                typeb.apply_UB(typeb.apply_UB(f, i, p), j, p)


def suite_exp_inverse(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    rng = random.Random(cfg.seed + 7)
    for n in range(cfg.samples):
        f = _random_poly(rng, p.N, cfg.degree)
        s = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        yield f"#{n} s={s}", typeb.apply_exp_L(typeb.apply_exp_L(f, s, p), -s, p) == f


def suite_hermite(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    labels = typeb.hermite_labels(p.N, cfg.degree)
    raised = {lab: typeb.apply_exp_L(typeb.hermite(lab, p), Fraction(1, 2), p) for lab in labels}
    for a, b in combinations(labels, 2):
        yield f"orthogonal {a.beta}{sorted(a.A)} {b.beta}{sorted(b.A)}", \
            typeb.inner_B(raised[a], raised[b], p) == 0
    for lab in labels:
        yield f"norm {lab.beta}{sorted(lab.A)}", \
            typeb.inner_B(raised[lab], raised[lab], p) == typeb.hermite_norm_B(lab, p)


def suite_exp_expansion(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    s = Fraction(-1, 2)
    for alpha in _all_compositions(p.N, min(cfg.degree, 3)):
        for ell in range(p.N + 1):
            yield f"{alpha} l={ell}", typeb.apply_exp_L(typeb.lift(alpha, ell, p), s, p) == \
                typeb.exp_sL_zeta_expansion(alpha, ell, s, p)


def suite_exp_sum(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    s = Fraction(2, 3)
    for alpha in _all_compositions(p.N, min(cfg.degree, 3)):
        for extra in range(3):
            diff = typeb.exp_sum_zeta_series(alpha, s, extra, p) - typeb.exp_sum_zeta_closed(alpha, s, extra, p)
            yield f"{alpha} d={extra}", all(sum(e) > sum(alpha) + extra for e in diff.terms)


def suite_binomial(cfg: VerifyConfig) -> Iterator[Case]:
    from math import comb

    p = cfg.params
    p0 = ParameterSet(p.N, 0, p.k1)
    for alpha in _all_compositions(p.N, cfg.degree):
        coeffs = typeb.binomial_coeffs(alpha, p)
        yield f"support {alpha}", all(typeb.contained(g, alpha) for g in coeffs)
        yield f"ends {alpha}", coeffs.get(alpha) == 1 and coeffs.get((0,) * p.N) == 1
        plain = typeb.binomial_coeffs(alpha, p0)
        want = {}
        for gamma in _all_compositions(p.N, sum(alpha)):
            v = 1
            for a, g in zip(alpha, gamma):
                v *= comb(a, g)
            if v:
                want[gamma] = v
        yield f"k=0 {alpha}", plain == want


def suite_h3(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for lab in typeb.hermite_labels(p.N, cfg.degree):
        H = typeb.hermite(lab, p)
        E = typeb.h3_eigenvalue(lab, p)
        tag = f"{lab.beta}{sorted(lab.A)}"
        yield f"conjugated {tag}", typeb.apply_h3(H, p) == H.scale(E)
        yield f"closed operator {tag}", typeb.apply_h3_closed(H, p) == H.scale(E)


def suite_typeb_invariants(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for alpha in _all_compositions(p.N, min(cfg.degree, 3)):
        for ell in range(p.N + 1):
            parts = typeb._split(ell, p.N)
            for kind in ("j", "a"):
                if all(satisfies(alpha, I, strict=(kind == "a")) for I in parts):
                    r = typeb.typeb_invariant_report(alpha, ell, kind, p)
                    yield f"{kind} {alpha} l={ell}", r.consistent


def suite_h1(cfg: VerifyConfig) -> Iterator[Case]:
    from .jack import h1_spectrum

    p = cfg.params
    for d in range(cfg.degree + 1):
        for lam in partitions(p.N, d):
            yield f"{lam}", h1_spectrum(lam, p) is not None


# ---------------------------------------------------------------------- cli


def suite_text_roundtrip(cfg: VerifyConfig) -> Iterator[Case]:
    p = cfg.params
    for alpha in _all_compositions(p.N, cfg.degree):
        z = zeta(alpha, p)
        yield f"{alpha}", parse_poly(to_text(z), p.N) == z


SUITES: dict[str, Callable[[VerifyConfig], Iterator[Case]]] = {
    "combinatorics.sorting": suite_sorting,
    "combinatorics.dominance-order": suite_dominance_order,
    "combinatorics.kappa-on-partitions": suite_kappa_partition,
    "combinatorics.eps-reflection-product": suite_eps_reflection,
    "combinatorics.eps-reversed-closed": suite_eps_reversed,
    "combinatorics.hook-identity": suite_hook_identity,
    "combinatorics.w-subset": suite_w_subset,
    "polyalg.group-action": suite_group_action,
    "polyalg.division": suite_division,
    "polyalg.p-basis": suite_p_basis,
    "dunkl.commutativity": suite_dunkl_commute,
    "dunkl.self-adjoint": suite_self_adjoint,
    "dunkl.product-invariance": suite_product_invariance,
    "dunkl.products-on-E-lambda": suite_products_on_E_lambda,
    "dunkl.commutation-relations": suite_commutations,
    "dunkl.psi-symmetries": suite_psi_symmetries,
    "dunkl.cherednik-relation": suite_cherednik,
    "jack.eigenrelation": suite_eigenrelation,
    "jack.orthogonality": suite_orthogonality,
    "jack.omega": suite_omega,
    "jack.exchange-recursions": suite_exchange_recursions,
    "jack.coset-scalar": suite_coset_scalar,
    "jack.coset-structure": suite_coset_structure,
    "jack.h1-spectrum": suite_h1,
    "skew.psi-on-cosets": suite_psi_coset,
    "skew.weyl-evaluation": suite_weyl_routes,
    "typeb.bridge": suite_bridge,
    "typeb.reflection-pairs": suite_reflection_pairs,
    "typeb.commutativity": suite_typeb_commute,
    "typeb.exp-inverse": suite_exp_inverse,
    "typeb.hermite": suite_hermite,
    "typeb.exp-sL-expansion": suite_exp_expansion,
    "typeb.exp-sum-expansion": suite_exp_sum,
    "typeb.binomial": suite_binomial,
    "typeb.h3-spectrum": suite_h3,
    "typeb.invariants": suite_typeb_invariants,
    "cli.text-roundtrip": suite_text_roundtrip,
}


def suite_names(selector: str) -> list[str]:
    """'all', a module prefix such as 'typeb', or one full suite name."""
    if selector == "all":
        return list(SUITES)
    if selector in SUITES:
        return [selector]
    matches = [n for n in SUITES if n.split(".")[0] == selector]
    if not matches:
        from .errors import UserInputError

        raise UserInputError(f"unknown suite {selector!r}; choose 'all', a module or one of {list(SUITES)}")
    return matches


def run_suite(name: str, cfg: VerifyConfig) -> SuiteResult:
    result = SuiteResult(name)
    try:
        for case, ok in SUITES[name](cfg):
            if ok:
                result.passed += 1
            else:
                result.failed += 1
                result.failures.append(case)
    except InvariantViolation as exc:
        result.violations += 1
        result.failures.append(f"invariant violation: {exc}")
    except NsJackError as exc:
        result.failed += 1
        result.failures.append(f"{type(exc).__name__}: {exc}")
    return result


def run_suites(selector: str, cfg: VerifyConfig) -> list[SuiteResult]:
    return [run_suite(name, cfg) for name in suite_names(selector)]
