"""Exact arithmetic: multivariate Laurent polynomials over Q, truncated power
series, and the Riemann-Roch kernel RR_M used by the dimension formula.

Coefficients are :class:`fractions.Fraction` throughout; nothing here ever
touches a float.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact polynomial quotient does not exist."""


class LaurentPolynomial:
    """Sparse Laurent polynomial in ``nvars`` variables with rational coefficients.

    Terms are stored as ``{exponent tuple: Fraction}`` with zero coefficients
    dropped. Instances are immutable; all arithmetic returns new objects.

    >>> x = LaurentPolynomial.variable(2, 0)
    >>> y = LaurentPolynomial.variable(2, 1)
    >>> str((1 - x**-1 * y) * (1 - y**-1 * x))
    '2 - x1*x2^-1 - x1^-1*x2'
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have length {nvars}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.nvars = nvars
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Fraction]) -> LaurentPolynomial:
        # trusted constructor: caller guarantees clean keys and nonzero values
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> LaurentPolynomial:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> LaurentPolynomial:
        c = Fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff=1) -> LaurentPolynomial:
        exponent = tuple(int(a) for a in exponent)
        coeff = Fraction(coeff)
        return cls._raw(len(exponent), {exponent: coeff} if coeff else {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> LaurentPolynomial:
        e = [0] * nvars
        e[index] = 1
        return cls.monomial(e)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self._terms))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPolynomial.zero(self.nvars)
            return LaurentPolynomial._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentPolynomial.monomial([a * k for a in e], c ** k)
        result = LaurentPolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exponent: Sequence[int]) -> LaurentPolynomial:
        """Multiply by the monomial ``x^exponent``."""
        if len(exponent) != self.nvars:
            raise ValueError("variable count mismatch")
        return LaurentPolynomial._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self._terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for x, a in zip(point, e):
                if a:
                    term *= x ** a
            total += term
        return total

    def specialize(self, weights: Sequence[int]) -> LaurentPolynomial:
        """Substitute ``x_a -> q^weights[a]``; returns a univariate polynomial in q."""
        if len(weights) != self.nvars:
            raise ValueError("weights have the wrong length")
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            k = (sum(a * w for a, w in zip(e, weights)),)
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial._raw(1, {e: c for e, c in out.items() if c})

    def permute(self, perm: Sequence[int]) -> LaurentPolynomial:
        """Rename variables: x_a becomes x_perm[a]."""
        out = {}
        for e, c in self._terms.items():
            new = [0] * self.nvars
            for a, k in enumerate(e):
                new[perm[a]] = k
            out[tuple(new)] = c
        return LaurentPolynomial._raw(self.nvars, out)

    # -- display ----------------------------------------------------------

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        if names is None:
            names = ["q"] if self.nvars == 1 else [f"x{a + 1}" for a in range(self.nvars)]
        pieces = []
        for e in sorted(self._terms, reverse=True, key=lambda e: (sum(e), e)):
            c = self._terms[e]
            factors = []
            for name, a in zip(names, e):
                if a == 1:
                    factors.append(name)
                elif a:
                    factors.append(f"{name}^{a}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.nvars}, {self.to_string()!r})"


def laurent_add(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    return a + b


def laurent_mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    return a * b


def _polynomial_divide(p: dict[Exponent, Fraction], d: dict[Exponent, Fraction]) -> dict[Exponent, Fraction]:
    # Division by a single polynomial in lex order. Both inputs have
    # nonnegative exponents; the remainder must come out zero.
    lead = max(d)
    lead_c = d[lead]
    rest = list(d.items())
    rem = dict(p)
    heap = [tuple(-a for a in e) for e in rem]
    heapq.heapify(heap)
    quot: dict[Exponent, Fraction] = {}
    while heap:
        e = tuple(-a for a in heapq.heappop(heap))
        c = rem.get(e)
        if c is None:
            continue
        m = tuple(a - b for a, b in zip(e, lead))
        if min(m) < 0:
            raise NotDivisibleError("not divisible")
        f = c / lead_c
        quot[m] = f
        for g, dc in rest:
            key = tuple(a + b for a, b in zip(m, g))
            old = rem.get(key)
            new = (old or 0) - f * dc
            if new:
                rem[key] = new
                if old is None:
                    heapq.heappush(heap, tuple(-a for a in key))
            elif old is not None:
                del rem[key]
    return quot


def laurent_exact_divide(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    """Return ``q`` with ``q * den == num``, or raise :class:`NotDivisibleError`.

    Both operands are shifted by monomials so that they become ordinary
    polynomials and ``den`` has no monomial factor; the quotient of such a
    pair is a polynomial whenever the Laurent quotient exists.
    """
    if num.nvars != den.nvars:
        raise ValueError(f"variable count mismatch: {num.nvars} vs {den.nvars}")
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPolynomial.zero(num.nvars)
    if den.is_monomial():
        (e, c), = den.items()
        return num.shift([-a for a in e]) * (1 / c)
    a = [max(0, -m) for m in num.min_exponents()]
    b = [-m for m in den.min_exponents()]
    p = num.shift(a)
    d = den.shift(b)
    q = _polynomial_divide(dict(p.items()), dict(d.items()))
    return LaurentPolynomial._raw(num.nvars, q).shift([y - x for x, y in zip(a, b)])


def mul_binomial_terms(terms: dict, v: Exponent) -> dict:
    """Multiply a raw ``{exponent: coeff}`` dict by ``1 - x^v``."""
    out = dict(terms)
    for e, c in terms.items():
        key = tuple(a + b for a, b in zip(e, v))
        s = out.get(key, 0) - c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def div_binomial_terms(terms: dict, v: Exponent) -> dict:
    """Exact quotient of a raw ``{exponent: coeff}`` dict by ``1 - x^v``.

    Terms are grouped along lines ``e + t*v``; on each line the quotient
    coefficients are the prefix sums of the dividend's coefficients, and the
    division is exact iff every line sums to zero.
    """
    k = next((a for a, x in enumerate(v) if x), None)
    if k is None:
        raise ZeroDivisionError("1 - x^0 is zero")
    step = abs(v[k])
    sgn = 1 if v[k] > 0 else -1
    lines: dict[Exponent, dict[int, object]] = {}
    for e, c in terms.items():
        t = (e[k] // step) * sgn
        base = tuple(a - t * b for a, b in zip(e, v))
        lines.setdefault(base, {})[t] = c
    out = {}
    for base, coeffs in lines.items():
        ts = sorted(coeffs)
        acc = 0
        prev = ts[0]
        for t in ts:
            if acc:
                # fill the run between consecutive occupied positions
                for s in range(prev, t):
                    out[tuple(a + s * b for a, b in zip(base, v))] = acc
            acc += coeffs[t]
            prev = t
        if acc:
            raise NotDivisibleError(f"not divisible by 1 - x^{tuple(v)}")
    return out


def divide_by_binomial(p: LaurentPolynomial, v: Sequence[int]) -> LaurentPolynomial:
    """Exact quotient ``p / (1 - x^v)`` for a nonzero exponent vector ``v``."""
    v = tuple(v)
    if len(v) != p.nvars:
        raise ValueError("variable count mismatch")
    return LaurentPolynomial._raw(p.nvars, div_binomial_terms(dict(p.items()), v))


# -- truncated power series --------------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in a formal variable U, known modulo U^(order+1)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        m = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(tuple(sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(m + 1)))

    def inverse(self) -> TruncatedSeries:
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [1 / a[0]]
        for k in range(1, len(a)):
            inv.append(-sum(a[i] * inv[k - i] for i in range(1, k + 1)) * inv[0])
        return TruncatedSeries(tuple(inv))

    def log(self) -> TruncatedSeries:
        """Logarithm of a series with constant term 1, via log f = integral f'/f."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        a = self.coeffs
        m = self.order
        deriv = TruncatedSeries(tuple(k * a[k] for k in range(1, m + 1)) or (Fraction(0),))
        quot = deriv * TruncatedSeries(a[:m] or (Fraction(1),)).inverse()
        return TruncatedSeries((Fraction(0),) + tuple(quot[k] / (k + 1) for k in range(m)))

    def exp_of(self) -> TruncatedSeries:
        """exp of a series with zero constant term (E' = L' E recurrence)."""
        if self.coeffs[0]:
            raise ValueError("exp needs constant term 0")
        a = self.coeffs
        out = [Fraction(1)]
        for k in range(1, len(a)):
            out.append(sum(j * a[j] * out[k - j] for j in range(1, k + 1)) / k)
        return TruncatedSeries(tuple(out))

    @classmethod
    def exp(cls, b, order: int) -> TruncatedSeries:
        """exp(b U) truncated at U^order."""
        b = Fraction(b)
        return cls(tuple(b ** k / factorial(k) for k in range(order + 1)))


@lru_cache(maxsize=4096)
def todd_factor_series(r: int, order: int) -> TruncatedSeries:
    """Series of rU / (1 - exp(-rU)) up to U^order.

    Obtained by inverting (1 - exp(-rU)) / (rU) = sum_k (-r)^k U^k / (k+1)!,
    so the k-th coefficient is B_k r^k / k! with the B_1 = +1/2 convention.
    """
    if r == 0:
        raise ValueError("Todd factor undefined for r = 0")
    if order < 0:
        raise ValueError("order must be nonnegative")
    base = TruncatedSeries(tuple(Fraction((-r) ** k, factorial(k + 1)) for k in range(order + 1)))
    return base.inverse()


@lru_cache(maxsize=64)
def _log_todd(order: int) -> tuple[Fraction, ...]:
    # log(U / (1 - exp(-U))); the coefficient of U^k for a factor r is this times r^k
    return todd_factor_series(1, order).log().coeffs


@lru_cache(maxsize=1 << 16)
def _todd_product(r: tuple[int, ...]) -> tuple[Fraction, ...]:
    # prod_i T(r_i U) = exp(sum_k logT_k * p_k U^k) with power sums p_k = sum r_i^k
    order = len(r)
    log_t = _log_todd(order)
    powers = [sum(x ** k for x in r) for k in range(order + 1)]
    series = TruncatedSeries((Fraction(0),) + tuple(log_t[k] * powers[k] for k in range(1, order + 1)))
    return series.exp_of().coeffs


def rr_eval(b: int, r: Iterable[int]) -> Fraction:
    """RR_M(b; r): coefficient of U^M in exp(bU) * prod_i r_i U / (1 - exp(-r_i U))."""
    r = tuple(sorted(int(x) for x in r))
    if any(x == 0 for x in r):
        raise ValueError("RR_M is undefined when some r_i = 0")
    m = len(r)
    todd = _todd_product(r)
    b = Fraction(b)
    return sum((b ** k / factorial(k) * todd[m - k] for k in range(m + 1)), Fraction(0))


def _truncated_product(a: LaurentPolynomial, b: LaurentPolynomial, maxdeg: int) -> LaurentPolynomial:
    out: dict[Exponent, Fraction] = {}
    for e1, c1 in a.items():
        d1 = sum(e1)
        for e2, c2 in b.items():
            if d1 + sum(e2) > maxdeg:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return LaurentPolynomial._raw(a.nvars, {e: c for e, c in out.items() if c})


def rr_symbolic(m: int) -> LaurentPolynomial:
    """RR_M as a polynomial in (b, r_1, ..., r_M); variable 0 is b.

    Each factor is homogeneous in U and its own variable, so the U^M
    coefficient is the degree-M part of the product of the factors at U = 1.
    """
    if not 0 <= m <= 8:
        raise ValueError("rr_symbolic supports 0 <= M <= 8")
    nv = m + 1
    exp_b = TruncatedSeries.exp(1, m)
    todd = todd_factor_series(1, m)
    acc = LaurentPolynomial._raw(nv, {tuple([k] + [0] * m): exp_b[k] for k in range(m + 1)})
    for i in range(1, nv):
        factor = {}
        for k in range(m + 1):
            if todd[k]:
                e = [0] * nv
                e[i] = k
                factor[tuple(e)] = todd[k]
        acc = _truncated_product(acc, LaurentPolynomial._raw(nv, factor), m)
    return LaurentPolynomial._raw(nv, {e: c for e, c in acc.items() if sum(e) == m})
