"""GL(n) character of S_D as a sum of torus fixed-point contributions.

Each contribution is ``numerator / prod (1 - x^v)^k``. Smooth tabloids use
the tangent multiplicities d_ij; each singular tabloid tau_ijk is handled by
one of three equivalent forms:

* ``SIMPLIFIED`` -- the single Atiyah-Bott-like term with (x_j/x_i) and
  (x_k/x_j) each three times,
* ``SS`` -- the two isolated fixed points of the Schubert-Semple space,
* ``FM`` -- the fixed line of the Fulton-MacPherson space, written with its
  bracketed numerator cleared of inverses.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .diagram import Diagram3
from .exactmath import (
    LaurentPolynomial,
    NotDivisibleError,
    div_binomial_terms,
    mul_binomial_terms,
)
from .tabloid import (
    Tabloid,
    classify,
    d_matrix,
    enumerate_tabloids,
    singular_tabloid,
    ss_eigenvalues,
    unit_ratio,
    weight,
)
from .weights import WeightCharacter

MAX_EXPAND_N = 4


class Variant(str, Enum):
    SIMPLIFIED = "simplified"
    SS = "ss"
    FM = "fm"


class PoleError(ZeroDivisionError):
    """A denominator factor vanishes at the evaluation point."""


class SpecializationPoleError(ZeroDivisionError):
    """A denominator character pairs to zero with the specialization exponents."""


class CharacterError(ArithmeticError):
    """The expanded sum is not a valid character (signals a formula bug)."""


Factor = tuple[tuple[int, ...], int]


def _merge(factors: Iterable[tuple[int, ...]] | Iterable[Factor], weighted: bool = False) -> tuple[Factor, ...]:
    counts: Counter = Counter()
    for f in factors:
        if weighted:
            v, k = f
            counts[tuple(v)] += k
        else:
            counts[tuple(f)] += 1
    return tuple(sorted(counts.items()))


@dataclass(frozen=True)
class Contribution:
    """``numerator / prod_v (1 - x^v)^mult`` for one fixed point (or fixed line)."""

    numerator: LaurentPolynomial
    denominator: tuple[Factor, ...]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        den = _merge(self.denominator, weighted=True)
        for v, k in den:
            if not any(v):
                raise ValueError("denominator character must be nonzero")
            if k < 1:
                raise ValueError("denominator multiplicities must be positive")
        object.__setattr__(self, "denominator", den)

    def degree(self) -> int:
        return sum(k for _, k in self.denominator)

    def evaluate(self, point: Sequence[Fraction], cache: dict | None = None) -> Fraction:
        cache = {} if cache is None else cache
        den = Fraction(1)
        for v, k in self.denominator:
            f = cache.get(v)
            if f is None:
                mono = Fraction(1)
                for x, a in zip(point, v):
                    if a:
                        mono *= x ** a
                f = cache[v] = 1 - mono
            if not f:
                raise PoleError(
                    f"pole at point {[str(x) for x in point]}: factor 1 - x^{list(v)} of {self.source} vanishes"
                )
            den *= f ** k
        return self.numerator.evaluate(point) / den


@dataclass(frozen=True)
class CharacterSum:
    n: int
    diagram: Diagram3
    variant: Variant
    terms: tuple[Contribution, ...]
    tabloid_count: int

    def to_json(self) -> dict:
        return {"n": self.n, "m": list(self.diagram.m), "variant": self.variant.value}


def contribution_smooth(tau: Tabloid, d: Diagram3) -> Contribution:
    if classify(tau).singular:
        raise ValueError(f"contribution_smooth called on singular tabloid {tau}")
    n = tau.n
    dm = d_matrix(tau)
    den = [
        (unit_ratio(i, j, n), dm[i - 1][j - 1])
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if dm[i - 1][j - 1]
    ]
    return Contribution(LaurentPolynomial.monomial(weight(tau, d)), tuple(den), str(tau))


def _delta(i: int, j: int, k: int, n: int) -> list[tuple[int, ...]]:
    # factors (1 - x_l/x_a) for a in {i,j,k} and every other label l
    return [unit_ratio(a, l, n) for l in range(1, n + 1) if l not in (i, j, k) for a in (i, j, k)]


def contribution_singular(
    ijk: Sequence[int], d: Diagram3, variant: Variant | str = Variant.SIMPLIFIED, n: int | None = None
) -> list[Contribution]:
    i, j, k = ijk
    variant = Variant(variant)
    n = max(ijk) if n is None else n
    tau = singular_tabloid(i, j, k, n)
    num = LaurentPolynomial.monomial(weight(tau, d))
    delta = _delta(i, j, k, n)
    label = f"tau_{i}{j}{k}"
    if variant is Variant.SIMPLIFIED:
        den = [(unit_ratio(i, j, n), 3), (unit_ratio(j, k, n), 3)] + [(v, 1) for v in delta]
        return [Contribution(num, tuple(den), label)]
    if variant is Variant.SS:
        eta, zeta = ss_eigenvalues(i, j, k, n)
        return [
            Contribution(num, tuple((e.character, 1) for e in zeta), f"zeta_{i}{j}{k}"),
            Contribution(num, tuple((e.character, 1) for e in eta), f"eta_{i}{j}{k}"),
        ]
    # FM: x^wt (1 - 1/A - 1/B) with A = 1 - x_i/x_j, B = 1 - x_j/x_k, written
    # as x^wt (AB - A - B) over an extra A * B in the denominator.
    a = 1 - LaurentPolynomial.monomial(unit_ratio(j, i, n))
    b = 1 - LaurentPolynomial.monomial(unit_ratio(k, j, n))
    den = [
        (unit_ratio(j, i, n), 1),
        (unit_ratio(k, j, n), 1),
        (unit_ratio(i, j, n), 2),
        (unit_ratio(i, k, n), 1),
        (unit_ratio(j, k, n), 2),
    ] + [(v, 1) for v in delta]
    return [Contribution(num * (a * b - a - b), tuple(den), f"P1_{i}{j}{k}")]


def ss_pair_with_special(
    ijk: Sequence[int], d: Diagram3, n: int, special: Sequence[int]
) -> list[Contribution]:
    """The SS pair over tau_ijk with the fibre character at zeta replaced by
    ``special`` (and at eta by its inverse)."""
    i, j, k = ijk
    true_special = [0] * n
    true_special[i - 1] += 1
    true_special[k - 1] += 1
    true_special[j - 1] -= 2
    pair = contribution_singular(ijk, d, Variant.SS, n)
    out = []
    for c, sign in zip(pair, (1, -1)):
        den = []
        for v, mult in c.denominator:
            if list(v) == [sign * a for a in true_special]:
                den.append((tuple(sign * a for a in special), mult))
            else:
                den.append((v, mult))
        out.append(Contribution(c.numerator, tuple(den), c.source + "*"))
    return out


def character_sum(d: Diagram3, n: int, variant: Variant | str = Variant.SIMPLIFIED) -> CharacterSum:
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    variant = Variant(variant)
    tabloids = enumerate_tabloids(n)
    terms: list[Contribution] = []
    for tau in tabloids:
        cls = classify(tau)
        if cls.singular:
            terms.extend(contribution_singular(cls.ijk, d, variant, n))
        else:
            terms.append(contribution_smooth(tau, d))
    return CharacterSum(n, d, variant, tuple(terms), len(tabloids))


def evaluate_character(cs: CharacterSum, point: Sequence) -> Fraction:
    if len(point) != cs.n:
        raise ValueError(f"point must have {cs.n} coordinates")
    point = [Fraction(x) for x in point]
    if any(not x for x in point):
        raise ValueError("point coordinates must be nonzero")
    cache: dict = {}
    return sum((t.evaluate(point, cache) for t in cs.terms), Fraction(0))


def evaluate_terms(terms: Iterable[Contribution], point: Sequence) -> Fraction:
    point = [Fraction(x) for x in point]
    cache: dict = {}
    return sum((t.evaluate(point, cache) for t in terms), Fraction(0))


def _as_int(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _common_denominator_sum(
    oriented: list[tuple[dict, dict[tuple[int, ...], int]]],
) -> dict:
    """Sum ``num / prod (1 - x^v)^k`` over terms whose factors are already
    oriented consistently; returns the exact polynomial quotient as raw terms."""
    kmax: dict[tuple[int, ...], int] = {}
    for _, fac in oriented:
        for v, k in fac.items():
            kmax[v] = max(kmax.get(v, 0), k)
    groups: dict[tuple, dict] = defaultdict(dict)
    for num, fac in oriented:
        sig = tuple(sorted(fac.items()))
        acc = groups[sig]
        for e, c in num.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
    total: dict = {}
    for sig, num in groups.items():
        have = dict(sig)
        for v, k in kmax.items():
            for _ in range(k - have.get(v, 0)):
                num = mul_binomial_terms(num, v)
        for e, c in num.items():
            s = total.get(e, 0) + c
            if s:
                total[e] = s
            else:
                total.pop(e, None)
    for v, k in kmax.items():
        for _ in range(k):
            total = div_binomial_terms(total, v)
    return total


def specialize_q(cs: CharacterSum, exponents: Sequence[int] | None = None) -> LaurentPolynomial:
    """Principal specialization x_a -> q^exponents[a] of the character sum."""
    n = cs.n
    c = tuple(range(1, n + 1)) if exponents is None else tuple(int(a) for a in exponents)
    if len(c) != n:
        raise ValueError(f"need {n} exponents")
    if len(set(c)) != n:
        raise ValueError("specialization exponents must be distinct")
    oriented = []
    for t in cs.terms:
        num = {}
        for e, coeff in t.numerator.items():
            key = (sum(a * w for a, w in zip(e, c)),)
            num[key] = num.get(key, 0) + _as_int(coeff)
        fac: dict[tuple[int, ...], int] = {}
        shift, sign = 0, 1
        for v, k in t.denominator:
            s = sum(a * w for a, w in zip(v, c))
            if s == 0:
                raise SpecializationPoleError(
                    f"specialization pole: factor 1 - x^{list(v)} of {t.source} pairs to 0 with "
                    f"exponents {list(c)}; choose other exponents or the simplified variant"
                )
            if s < 0:
                # 1/(1 - q^s) = -q^-s / (1 - q^-s)
                shift += -s * k
                sign *= (-1) ** k
                s = -s
            fac[(s,)] = fac.get((s,), 0) + k
        num = {(e[0] + shift,): sign * x for e, x in num.items() if x}
        oriented.append((num, fac))
    total = _common_denominator_sum(oriented)
    return LaurentPolynomial(1, total)


def _orient(v: tuple[int, ...]) -> bool:
    # canonical orientation: first nonzero entry negative
    return next(a for a in v if a) < 0


def expand_character(cs: CharacterSum) -> WeightCharacter:
    """Expand the fixed-point sum into a Laurent polynomial with integer
    multiplicities, checking that it is a genuine homogeneous character."""
    n = cs.n
    if n > MAX_EXPAND_N:
        raise ValueError(f"multivariate expansion is limited to n <= {MAX_EXPAND_N}")
    oriented = []
    for t in cs.terms:
        shift = [0] * n
        sign = 1
        fac: dict[tuple[int, ...], int] = {}
        for v, k in t.denominator:
            if not _orient(v):
                # 1/(1 - x^v) = -x^-v / (1 - x^-v)
                for a in range(n):
                    shift[a] -= v[a] * k
                sign *= (-1) ** k
                v = tuple(-a for a in v)
            fac[v] = fac.get(v, 0) + k
        num = {
            tuple(a + b for a, b in zip(e, shift)): sign * _as_int(coeff) for e, coeff in t.numerator.items()
        }
        oriented.append((num, fac))
    try:
        total = _common_denominator_sum(oriented)
    except NotDivisibleError as exc:
        raise NotDivisibleError(f"fixed-point sum is not a Laurent polynomial: {exc}") from None
    deg = cs.diagram.total_boxes()
    for e, coeff in total.items():
        if Fraction(coeff).denominator != 1 or coeff < 0:
            raise CharacterError(f"coefficient {coeff} at {e} is not a nonnegative integer")
        if sum(e) != deg or min(e) < 0:
            raise CharacterError(f"monomial {e} is not a polynomial weight of degree {deg}")
    return WeightCharacter(n, total)
