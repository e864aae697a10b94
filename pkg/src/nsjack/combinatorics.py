"""Compositions, partitions, interval subgroups and scalar combinatorial formulas.

Indices follow the mathematical convention: positions, intervals and
permutation images are 1-based.  Compositions are plain tuples of ints.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
import re
from typing import Iterable, Iterator, Sequence

from .errors import SingularParameterError, UserInputError

Composition = tuple[int, ...]


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def to_fraction(value) -> Fraction:
    """Parse an int, Fraction or "a/b" string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL.match(value.strip()):
            raise UserInputError(f"expected an integer or 'a/b', got {value!r}")
        try:
            return Fraction(value.strip())
        except ZeroDivisionError as exc:
            raise UserInputError(f"zero denominator in {value!r}") from exc
    if isinstance(value, float):
        raise UserInputError("floating-point parameters are not accepted; pass 'a/b'")
    return Fraction(value)


@dataclass(frozen=True)
class ParameterSet:
    """One algebra instance: N variables, coupling k and the type-B coupling k1."""

    N: int
    k: Fraction = Fraction(1)
    k1: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1:
            raise UserInputError(f"N must be a positive integer, got {self.N!r}")
        object.__setattr__(self, "k", to_fraction(self.k))
        object.__setattr__(self, "k1", to_fraction(self.k1))


@dataclass(frozen=True, order=True)
class Interval:
    """The index range [lo, hi], both ends included, 1-based."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 1 or self.hi < self.lo:
            raise UserInputError(f"bad interval [{self.lo}, {self.hi}]")

    @classmethod
    def parse(cls, text: str) -> "Interval":
        try:
            lo, hi = text.split("..")
            return cls(int(lo), int(hi))
        except ValueError as exc:
            raise UserInputError(f"interval must look like 'lo..hi', got {text!r}") from exc

    @property
    def ell(self) -> int:
        return self.lo - 1

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def __contains__(self, i) -> bool:
        return self.lo <= i <= self.hi

    def check(self, N: int) -> None:
        if self.hi > N:
            raise UserInputError(f"interval [{self.lo}, {self.hi}] exceeds N={N}")

    def __str__(self):
        return f"{self.lo}..{self.hi}"


def check_disjoint(intervals: Sequence[Interval], N: int | None = None) -> None:
    seen: set[int] = set()
    for I in intervals:
        if N is not None:
            I.check(N)
        if seen.intersection(I.indices()):
            raise UserInputError("intervals overlap")
        seen.update(I.indices())


@dataclass(frozen=True)
class Permutation:
    """A bijection of [1, N] stored as its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise UserInputError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, N: int) -> "Permutation":
        return cls(tuple(range(1, N + 1)))

    @classmethod
    def transposition(cls, N: int, i: int, j: int) -> "Permutation":
        images = list(range(1, N + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def N(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.N
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def sign(self) -> int:
        im = self.images
        inversions = sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])
        return -1 if inversions % 2 else 1

    def act(self, alpha: Sequence[int]) -> Composition:
        """(w alpha)_i = alpha_{w^{-1}(i)}, so that w(x^alpha) = x^(w alpha)."""
        out = [0] * self.N
        for j, a in enumerate(alpha, start=1):
            out[self.images[j - 1] - 1] = a
        return tuple(out)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))


def subgroup_elements(N: int, intervals: Sequence[Interval]) -> list[Permutation]:
    """All elements of the parabolic subgroup S_{I_1} x ... x S_{I_t}."""
    check_disjoint(intervals, N)
    perms = [list(range(1, N + 1))]
    for I in intervals:
        idx = list(I.indices())
        nxt = []
        for base in perms:
            for img in permutations(idx):
                row = list(base)
                for src, dst in zip(idx, img):
                    row[src - 1] = dst
                nxt.append(row)
        perms = nxt
    return [Permutation(tuple(p)) for p in perms]


# ---------------------------------------------------------------- compositions


def compositions(N: int, d: int) -> Iterator[Composition]:
    """All compositions of d with N parts, in lexicographically decreasing order."""
    if N == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in compositions(N - 1, d - first):
            yield (first,) + rest


def partitions(N: int, d: int) -> Iterator[Composition]:
    """Partitions of d with at most N parts, padded with zeros to length N."""

    def rec(remaining, maxpart, slots):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for part in range(min(remaining, maxpart), -1, -1):
            for tail in rec(remaining - part, part, slots - 1):
                yield (part,) + tail

    yield from rec(d, d, N)


def sort_to_partition(alpha: Sequence[int]) -> Composition:
    return tuple(sorted(alpha, reverse=True))


def is_partition(alpha: Sequence[int]) -> bool:
    return all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1))


def dominance_compare(alpha: Sequence[int], beta: Sequence[int]) -> str:
    """Return 'succeeds', 'precedes', 'equal' or 'incomparable' in dominance order."""
    if len(alpha) != len(beta):
        raise UserInputError("compositions of different lengths")
    if sum(alpha) != sum(beta):
        raise UserInputError("dominance order compares compositions of equal degree only")
    ge = le = True
    sa = sb = 0
    for a, b in zip(alpha, beta):
        sa += a
        sb += b
        ge &= sa >= sb
        le &= sa <= sb
    if ge and le:
        return "equal"
    if ge:
        return "succeeds"
    if le:
        return "precedes"
    return "incomparable"


def dominates(alpha, beta) -> bool:
    """alpha >= beta in dominance order (same degree assumed)."""
    return dominance_compare(alpha, beta) in ("succeeds", "equal")


def grevlex_key(alpha: Sequence[int]):
    """Sort key for graded reverse-lexicographic order; refines dominance."""
    return (sum(alpha), tuple(-a for a in reversed(alpha)))


def total_order_key(beta: Sequence[int]):
    """Total refinement of: beta^+ below alpha^+, or same sort and beta below alpha."""
    return (grevlex_key(sort_to_partition(beta)), grevlex_key(beta))


def satisfies(alpha: Sequence[int], I: Interval, strict: bool = False) -> bool:
    """Condition (>=, I), or (>, I) when strict."""
    vals = [alpha[i - 1] for i in I.indices()]
    if strict:
        return all(vals[a] > vals[a + 1] for a in range(len(vals) - 1))
    return all(vals[a] >= vals[a + 1] for a in range(len(vals) - 1))


def orbit(alpha: Sequence[int], intervals: Sequence[Interval]) -> set[Composition]:
    """Orbit of alpha under the parabolic subgroup of the given disjoint intervals."""
    N = len(alpha)
    check_disjoint(intervals, N)
    out = {tuple(alpha)}
    for I in intervals:
        lo, hi = I.lo - 1, I.hi
        nxt = set()
        for beta in out:
            for seg in set(permutations(beta[lo:hi])):
                nxt.add(beta[:lo] + seg + beta[hi:])
        out = nxt
    return out


def orbit_size(alpha: Sequence[int], intervals: Sequence[Interval]) -> int:
    """Multinomial count of distinct rearrangements within each interval."""
    total = 1
    for I in intervals:
        seg = [alpha[i - 1] for i in I.indices()]
        total *= factorial(len(seg)) // prod(factorial(seg.count(v)) for v in set(seg))
    return total


def full_orbit_size(lam: Sequence[int]) -> int:
    """#S_N lam = N!/prod_j m_j! with m_j the multiplicity of j in lam."""
    return orbit_size(lam, [Interval(1, len(lam))])


def permutation_to(alpha: Sequence[int], beta: Sequence[int],
                   intervals: Sequence[Interval] | None = None) -> Permutation:
    """Some w in the parabolic subgroup with w alpha = beta."""
    N = len(alpha)
    if intervals is None:
        intervals = [Interval(1, N)]
    inv = list(range(1, N + 1))  # inv[i-1] = w^{-1}(i)
    for I in intervals:
        free = list(I.indices())
        for i in I.indices():
            for j in free:
                if alpha[j - 1] == beta[i - 1]:
                    inv[i - 1] = j
                    free.remove(j)
                    break
            else:
                raise UserInputError(f"{tuple(beta)} is not in the orbit of {tuple(alpha)}")
    for i in range(1, N + 1):
        if not any(i in I for I in intervals) and alpha[i - 1] != beta[i - 1]:
            raise UserInputError(f"{tuple(beta)} is not in the orbit of {tuple(alpha)}")
    return Permutation(tuple(inv)).inverse()


def reverse_on_interval(alpha: Sequence[int], I: Interval) -> Composition:
    lo, hi = I.lo - 1, I.hi
    alpha = tuple(alpha)
    return alpha[:lo] + alpha[lo:hi][::-1] + alpha[hi:]


def reverse_on_intervals(alpha: Sequence[int], intervals: Iterable[Interval]) -> Composition:
    out = tuple(alpha)
    for I in intervals:
        out = reverse_on_interval(out, I)
    return out


def longest_element(N: int, I: Interval) -> Permutation:
    """sigma_I(i) = 2l + m + 1 - i on I, identity elsewhere."""
    images = list(range(1, N + 1))
    for i in I.indices():
        images[i - 1] = I.lo + I.hi - i
    return Permutation(tuple(images))


def staircase(sizes: Iterable[int], N: int) -> Composition:
    """(m_1-1, ..., 1, 0, m_2-1, ..., 0, ...)^+ padded to N parts."""
    parts = [v for m in sizes for v in range(m - 1, -1, -1)]
    parts += [0] * (N - len(parts))
    if len(parts) > N:
        raise UserInputError("interval sizes exceed N")
    return sort_to_partition(parts)


# ----------------------------------------------------------- scalar formulas


def _rank(alpha: Sequence[int], i0: int) -> int:
    a = alpha[i0]
    return sum(1 for s in alpha if s > a) + sum(1 for s in alpha[:i0] if s == a)


def kappa(alpha: Sequence[int], i: int, p: ParameterSet) -> Fraction:
    """kappa_i(alpha) = Nk - k(#{s: a_s > a_i} + #{s < i: a_s = a_i}) + a_i + 1."""
    return p.N * p.k - p.k * _rank(alpha, i - 1) + alpha[i - 1] + 1


@lru_cache(maxsize=None)
def kappa_vector(alpha: Composition, p: ParameterSet) -> tuple[Fraction, ...]:
    return tuple(kappa(alpha, i, p) for i in range(1, len(alpha) + 1))


def kappa_prime(beta: Sequence[int], i: int, I: Interval, p: ParameterSet) -> Fraction:
    """The tau_i eigenvalue: equal parts are only counted to the left of I."""
    if i not in I:
        raise UserInputError(f"index {i} not in interval {I}")
    b = beta[i - 1]
    count = sum(1 for s in beta if s > b) + sum(1 for s in beta[: I.ell] if s == b)
    return p.N * p.k - p.k * count + b + 1


def hook_product(lam: Sequence[int], t, p: ParameterSet) -> Fraction:
    """h(lam, t) = prod_i prod_{j<=lam_i} (lam_i - j + t + k #{s > i: j <= lam_s <= lam_i})."""
    t = to_fraction(t)
    out = Fraction(1)
    for i, li in enumerate(lam):
        for j in range(1, li + 1):
            count = sum(1 for s in lam[i + 1:] if j <= s <= li)
            out *= li - j + t + p.k * count
    return out


def shifted_factorial(t, m, p: ParameterSet | None = None) -> Fraction:
    """(t)_m for an integer m, or the generalized (t)_lam for a partition lam."""
    t = to_fraction(t)
    if isinstance(m, int):
        return prod((t + i for i in range(m)), start=Fraction(1))
    if p is None:
        raise UserInputError("the generalized shifted factorial needs the parameter k")
    out = Fraction(1)
    for i, part in enumerate(m):
        out *= shifted_factorial(t - i * p.k, part)
    return out


def eps_product(beta: Sequence[int], I: Interval, eps: int, p: ParameterSet) -> Fraction:
    """E_eps(beta; I) = prod{1 + eps k/(kappa_j - kappa_i): beta_i < beta_j, i < j in I}."""
    kv = kappa_vector(tuple(beta), p)
    out = Fraction(1)
    idx = list(I.indices())
    for a, i in enumerate(idx):
        for j in idx[a + 1:]:
            if beta[i - 1] < beta[j - 1]:
                diff = kv[j - 1] - kv[i - 1]
                if diff == 0:
                    raise SingularParameterError(
                        f"kappa_{j} - kappa_{i} vanishes for {tuple(beta)} at k={p.k}", (i, j))
                out *= 1 + eps * p.k / diff
    return out


def eps_product_multi(beta, intervals: Iterable[Interval], eps: int, p: ParameterSet) -> Fraction:
    return prod((eps_product(beta, I, eps, p) for I in intervals), start=Fraction(1))


def eps_reversed_closed(alpha: Sequence[int], I: Interval, eps: int, p: ParameterSet) -> Fraction:
    """prod{1 + eps k/(kappa_i(alpha) - kappa_j(alpha)): i < j in I, alpha_i > alpha_j}."""
    kv = kappa_vector(tuple(alpha), p)
    out = Fraction(1)
    idx = list(I.indices())
    for a, i in enumerate(idx):
        for j in idx[a + 1:]:
            if alpha[i - 1] > alpha[j - 1]:
                diff = kv[i - 1] - kv[j - 1]
                if diff == 0:
                    raise SingularParameterError(
                        f"kappa_{i} - kappa_{j} vanishes for {tuple(alpha)}", (i, j))
                out *= 1 + eps * p.k / diff
    return out


def h1_energy(lam: Sequence[int], p: ParameterSet) -> Fraction:
    """sum_i (kappa_i(lam) - 1 - k(N+1)/2)^2."""
    shift = 1 + p.k * (p.N + 1) / 2
    return sum(((kv - shift) ** 2 for kv in kappa_vector(tuple(lam), p)), start=Fraction(0))


def h1_energy_closed(lam: Sequence[int], p: ParameterSet) -> Fraction:
    """sum lam_i^2 + k sum (N - 2i + 1) lam_i + k^2 N (N^2 - 1)/12."""
    N, k = p.N, p.k
    return (sum(Fraction(l * l) for l in lam)
            + k * sum((N - 2 * i + 1) * l for i, l in enumerate(lam, start=1))
            + k * k * N * (N * N - 1) / 12)


# ------------------------------------------------------------- B-partitions


def h_part(alpha: Sequence[int]) -> Composition:
    return tuple(a // 2 for a in alpha)


def b_part(alpha: Sequence[int]) -> Composition:
    return tuple(a - a // 2 for a in alpha)


def is_b_partition(alpha: Sequence[int]) -> bool:
    odd = [a for a in alpha if a % 2]
    even = [a for a in alpha if a % 2 == 0]
    return is_partition(odd) and is_partition(even)


def w_subset(A: Iterable[int], N: int) -> Permutation:
    """The order-preserving w_A with w_A([1, #A]) = A."""
    A = sorted(set(A))
    if any(a < 1 or a > N for a in A):
        raise UserInputError(f"subset {A} not inside [1, {N}]")
    rest = [i for i in range(1, N + 1) if i not in A]
    return Permutation(tuple(A + rest))


def standardize(alpha: Sequence[int]) -> tuple[Composition, Permutation]:
    """Standard B-partition alpha~ and order-preserving w with w alpha~ = alpha."""
    if not is_b_partition(alpha):
        raise UserInputError(f"{tuple(alpha)} is not a B-partition")
    A = [i for i, a in enumerate(alpha, start=1) if a % 2]
    w = w_subset(A, len(alpha))
    std = tuple(alpha[w(i) - 1] for i in range(1, len(alpha) + 1))
    return std, w


def hermite_label(gamma: Sequence[int], ell: int) -> Composition:
    """b(gamma, l) = (2g_1 + 1, ..., 2g_l + 1, 2g_{l+1}, ..., 2g_N)."""
    return tuple(2 * g + (1 if i < ell else 0) for i, g in enumerate(gamma))


def lambda_factor(alpha: Sequence[int], p: ParameterSet) -> Fraction:
    """Lambda(alpha) = (Nk+1)_{h(alpha)^+} ((N-1)k + k1 + 1/2)_{b(alpha)^+}."""
    N, k = p.N, p.k
    return (shifted_factorial(N * k + 1, sort_to_partition(h_part(alpha)), p)
            * shifted_factorial((N - 1) * k + p.k1 + Fraction(1, 2),
                                sort_to_partition(b_part(alpha)), p))
