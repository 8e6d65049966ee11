"""dim S_D as a sum of Bott-residue terms RR_M(b; r) / prod(r) over tabloids."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .character import Variant
from .diagram import Diagram3
from .exactmath import rr_eval
from .tabloid import Tabloid, b_value, classify, enumerate_tabloids, r_multiset, r_prime


class DegenerateSSError(ValueError):
    """The SS pair has a removable 0/0 at this tabloid (2j = i + k)."""


class NonIntegerSumError(ArithmeticError):
    """The dimension sum is not a nonnegative integer (signals a formula bug)."""


@dataclass(frozen=True)
class DimContribution:
    tabloid: Tabloid
    b: int
    r: tuple[int, ...]
    value: Fraction

    def __post_init__(self):
        if 0 in self.r:
            raise ValueError(f"zero entry in r for {self.tabloid}")


def _term(tau: Tabloid, b: int, r) -> DimContribution:
    r = tuple(r)
    return DimContribution(tau, b, r, rr_eval(b, r) / prod(r))


def dim_contribution(tau: Tabloid, d: Diagram3, variant: Variant | str = Variant.SIMPLIFIED) -> list[DimContribution]:
    variant = Variant(variant)
    b = b_value(tau, d)
    cls = classify(tau)
    if not cls.singular:
        return [_term(tau, b, r_multiset(tau))]
    i, j, k = cls.ijk
    rest = r_prime(i, j, k, tau.n)
    if variant is Variant.SIMPLIFIED:
        return [_term(tau, b, (i - j,) * 3 + (j - k,) * 3 + rest)]
    if variant is Variant.SS:
        if 2 * j == i + k:
            raise DegenerateSSError(
                f"degenerate SS tabloid tau_{i}{j}{k}: 2j = i + k; use the simplified variant"
            )
        return [
            _term(tau, b, (i - j,) * 3 + (i - k, j - k, 2 * j - i - k) + rest),
            _term(tau, b, (i - j, i - k) + (j - k,) * 3 + (i + k - 2 * j,) + rest),
        ]
    raise ValueError("no FM form of the dimension formula exists; use simplified or ss")


def dimension_terms(d: Diagram3, n: int, variant: Variant | str = Variant.SIMPLIFIED) -> list[DimContribution]:
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    out = []
    for tau in enumerate_tabloids(n):
        out.extend(dim_contribution(tau, d, variant))
    return out


def dimension(d: Diagram3, n: int, variant: Variant | str = Variant.SIMPLIFIED) -> int:
    total = sum((c.value for c in dimension_terms(d, n, variant)), Fraction(0))
    if total.denominator != 1 or total < 0:
        raise NonIntegerSumError(f"dimension sum {total} for m={d} n={n} is not a nonnegative integer")
    return int(total)
