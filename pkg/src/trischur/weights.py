"""Torus characters with nonnegative integer weight multiplicities."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from types import MappingProxyType
from typing import Mapping

from .exactmath import LaurentPolynomial


class WeightCharacter:
    """Map ``exponent vector -> multiplicity`` for a T-module of GL(n)."""

    __slots__ = ("n", "_entries")

    def __init__(self, n: int, entries: Mapping[tuple[int, ...], int]):
        clean = {}
        for e, k in entries.items():
            e = tuple(int(a) for a in e)
            if len(e) != n:
                raise ValueError(f"weight {e} does not have length {n}")
            if int(k) != k or k < 0:
                raise ValueError(f"multiplicity {k} of {e} is not a nonnegative integer")
            if k:
                clean[e] = int(k)
        if len({sum(e) for e in clean}) > 1:
            raise ValueError("weights of different total degree")
        self.n = n
        self._entries = clean

    @property
    def entries(self) -> Mapping[tuple[int, ...], int]:
        return MappingProxyType(self._entries)

    @classmethod
    def from_laurent(cls, p: LaurentPolynomial) -> WeightCharacter:
        entries = {}
        for e, c in p.items():
            if Fraction(c).denominator != 1 or c < 0:
                raise ValueError(f"coefficient {c} of {e} is not a nonnegative integer")
            entries[e] = int(c)
        return cls(p.nvars, entries)

    def to_laurent(self) -> LaurentPolynomial:
        if not self._entries:
            return LaurentPolynomial.zero(self.n)
        return LaurentPolynomial(self.n, self._entries)

    def dimension(self) -> int:
        return sum(self._entries.values())

    def degree(self) -> int | None:
        return next((sum(e) for e in self._entries), None)

    def is_symmetric(self) -> bool:
        for perm in permutations(range(self.n)):
            for e, k in self._entries.items():
                if self._entries.get(tuple(e[perm[a]] for a in range(self.n))) != k:
                    return False
        return True

    def to_json(self) -> list[dict]:
        return [{"exponent": list(e), "coeff": k} for e, k in sorted(self._entries.items(), reverse=True)]

    def __eq__(self, other):
        if not isinstance(other, WeightCharacter):
            return NotImplemented
        return self.n == other.n and self._entries == other._entries

    def __hash__(self):
        return hash((self.n, frozenset(self._entries.items())))

    def __str__(self) -> str:
        return self.to_laurent().to_string()

    def __repr__(self) -> str:
        return f"WeightCharacter({self.n}, {self})"
