"""Torus-fixed points of the triangle space and their local data.

A fixed point is a column tabloid of the universal diagram D3: a labelling of
its seven columns by subsets of [1, n] of the column's size such that column
inclusions are respected. The filling order inside a column is irrelevant, so
labels are stored as sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Sequence

from .diagram import COLUMNS, Diagram3

# comparable[a][b]: column a is contained in column b or vice versa
_COMPARABLE = tuple(
    tuple(a != b and (ca <= cb or cb <= ca) for b, cb in enumerate(COLUMNS))
    for a, ca in enumerate(COLUMNS)
)


class TabloidKind(str, Enum):
    SMOOTH = "smooth"
    SINGULAR = "singular"


@dataclass(frozen=True)
class TabloidClass:
    kind: TabloidKind
    ijk: tuple[int, int, int] | None = None

    @property
    def singular(self) -> bool:
        return self.kind is TabloidKind.SINGULAR


@dataclass(frozen=True)
class Tabloid:
    n: int
    p: tuple[int, int, int]
    e12: frozenset[int]
    e23: frozenset[int]
    e13: frozenset[int]
    t: frozenset[int]

    def __post_init__(self):
        for name in ("e12", "e23", "e13", "t"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        object.__setattr__(self, "p", tuple(self.p))
        p1, p2, p3 = self.p
        ok = (
            all(1 <= x <= self.n for x in self.t)
            and len(self.t) == 3
            and all(len(e) == 2 for e in (self.e12, self.e23, self.e13))
            and {p1, p2} <= self.e12
            and {p2, p3} <= self.e23
            and {p1, p3} <= self.e13
            and self.e12 | self.e23 | self.e13 <= self.t
        )
        if not ok:
            raise ValueError(f"inconsistent tabloid {self}")

    def labels(self) -> tuple[frozenset[int], ...]:
        """Label sets of the seven columns, in canonical column order."""
        p1, p2, p3 = self.p
        return (
            frozenset((p1,)), frozenset((p2,)), frozenset((p3,)),
            self.e12, self.e23, self.e13, self.t,
        )

    def to_json(self) -> dict:
        cls = classify(self)
        out = {
            "p": list(self.p),
            "e12": sorted(self.e12),
            "e23": sorted(self.e23),
            "e13": sorted(self.e13),
            "t": sorted(self.t),
            "class": cls.kind.value,
        }
        if cls.singular:
            out["ijk"] = list(cls.ijk)
        return out

    @classmethod
    def from_json(cls, obj: dict, n: int) -> Tabloid:
        return cls(n, tuple(obj["p"]), obj["e12"], obj["e23"], obj["e13"], obj["t"])

    def __str__(self) -> str:
        def s(x):
            return "".join(map(str, sorted(x)))

        p1, p2, p3 = self.p
        return f"[{p1} {p2} {p3} | {s(self.e12)} {s(self.e23)} {s(self.e13)} | {s(self.t)}]"


def singular_tabloid(i: int, j: int, k: int, n: int) -> Tabloid:
    """The maximally degenerate triangle tau_ijk."""
    if len({i, j, k}) != 3:
        raise ValueError(f"({i},{j},{k}) are not distinct")
    e = frozenset((i, j))
    return Tabloid(n, (i, i, i), e, e, e, frozenset((i, j, k)))


def enumerate_tabloids(n: int) -> list[Tabloid]:
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    out = []
    for t in combinations(range(1, n + 1), 3):
        pairs = [frozenset(e) for e in combinations(t, 2)]
        for e12 in pairs:
            for e23 in pairs:
                for e13 in pairs:
                    for p1 in sorted(e12 & e13):
                        for p2 in sorted(e12 & e23):
                            for p3 in sorted(e23 & e13):
                                out.append(Tabloid(n, (p1, p2, p3), e12, e23, e13, frozenset(t)))
    return out


def classify(tau: Tabloid) -> TabloidClass:
    p1, p2, p3 = tau.p
    if p1 == p2 == p3 and tau.e12 == tau.e23 == tau.e13:
        (j,) = tau.e12 - {p1}
        (k,) = tau.t - tau.e12
        return TabloidClass(TabloidKind.SINGULAR, (p1, j, k))
    return TabloidClass(TabloidKind.SMOOTH)


def _components(vertices: list[int]) -> int:
    seen = set()
    count = 0
    for v in vertices:
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            a = stack.pop()
            for b in vertices:
                if b not in seen and _COMPARABLE[a][b]:
                    seen.add(b)
                    stack.append(b)
    return count


def d_matrix(tau: Tabloid) -> tuple[tuple[int, ...], ...]:
    """d[i-1][j-1] = number of connected components of the comparability graph
    on the columns whose labels contain i but not j."""
    labels = tau.labels()
    n = tau.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == j:
                row.append(0)
                continue
            verts = [a for a, s in enumerate(labels) if i in s and j not in s]
            row.append(_components(verts))
        rows.append(tuple(row))
    return tuple(rows)


def weight(tau: Tabloid, d: Diagram3) -> tuple[int, ...]:
    w = [0] * tau.n
    for s, mult in zip(tau.labels(), d.m):
        if mult:
            for a in s:
                w[a - 1] += mult
    return tuple(w)


def b_value(tau: Tabloid, d: Diagram3) -> int:
    return sum(mult * sum(s) for s, mult in zip(tau.labels(), d.m))


def r_multiset(tau: Tabloid) -> tuple[int, ...]:
    """Entries i - j with multiplicity d_ij, for a smooth tabloid (sorted)."""
    if classify(tau).singular:
        raise ValueError(f"r_multiset is only defined for smooth tabloids, got {tau}")
    dm = d_matrix(tau)
    out = []
    for i in range(1, tau.n + 1):
        for j in range(1, tau.n + 1):
            out.extend([i - j] * dm[i - 1][j - 1])
    return tuple(sorted(out))


def _others(i: int, j: int, k: int, n: int) -> list[int]:
    if len({i, j, k}) != 3:
        raise ValueError(f"({i},{j},{k}) are not distinct")
    if not all(1 <= x <= n for x in (i, j, k)):
        raise ValueError(f"({i},{j},{k}) not in [1,{n}]")
    return [l for l in range(1, n + 1) if l not in (i, j, k)]


def r_prime(i: int, j: int, k: int, n: int) -> tuple[int, ...]:
    out = []
    for l in _others(i, j, k, n):
        out += [i - l, j - l, k - l]
    return tuple(out)


@dataclass(frozen=True)
class EigenDatum:
    """A torus character x^character, with a Chern class for bundle summands."""

    character: tuple[int, ...]
    chern: int = field(default=0)


def unit_ratio(a: int, b: int, n: int) -> tuple[int, ...]:
    """Exponent vector of x_a^-1 x_b."""
    v = [0] * n
    v[a - 1] -= 1
    v[b - 1] += 1
    return tuple(v)


def _l_terms(i, j, k, n) -> list[EigenDatum]:
    out = []
    for l in _others(i, j, k, n):
        out += [EigenDatum(unit_ratio(i, l, n)), EigenDatum(unit_ratio(j, l, n)), EigenDatum(unit_ratio(k, l, n))]
    return out


def ss_special_character(i: int, j: int, k: int, n: int) -> tuple[int, ...]:
    """Exponent vector of x_i x_k x_j^-2, the fibre direction at zeta_ijk."""
    v = [0] * n
    v[i - 1] += 1
    v[k - 1] += 1
    v[j - 1] -= 2
    return tuple(v)


def ss_eigenvalues(i: int, j: int, k: int, n: int) -> tuple[list[EigenDatum], list[EigenDatum]]:
    """Tangent characters at the two Schubert-Semple fixed points over tau_ijk.

    Returns ``(eta, zeta)``; each list has 3n - 3 entries.
    """
    rest = _l_terms(i, j, k, n)
    special = ss_special_character(i, j, k, n)
    ij, ik, jk = unit_ratio(i, j, n), unit_ratio(i, k, n), unit_ratio(j, k, n)
    eta = [EigenDatum(tuple(-a for a in special)), EigenDatum(ij), EigenDatum(ik)] + [EigenDatum(jk)] * 3 + rest
    zeta = [EigenDatum(special)] + [EigenDatum(ij)] * 3 + [EigenDatum(ik), EigenDatum(jk)] + rest
    return eta, zeta


def fm_normal_bundle(i: int, j: int, k: int, n: int) -> list[EigenDatum]:
    """Summands O_ab(m) of the normal bundle of the fixed line over tau_ijk."""
    rest = _l_terms(i, j, k, n)
    ij, jk = unit_ratio(i, j, n), unit_ratio(j, k, n)
    return [EigenDatum(ij, -1), EigenDatum(jk, -1), EigenDatum(jk), EigenDatum(ij), EigenDatum(jk)] + rest


def singular_d_table(i: int, j: int, k: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Expected d-matrix at tau_ijk: d_ij = d_jk = 3, d_ik = 1, and
    d_il = d_jl = d_kl = 1 for every other label l."""
    others = _others(i, j, k, n)
    d = [[0] * n for _ in range(n)]
    d[i - 1][j - 1] = 3
    d[j - 1][k - 1] = 3
    d[i - 1][k - 1] = 1
    for l in others:
        for a in (i, j, k):
            d[a - 1][l - 1] = 1
    return tuple(tuple(row) for row in d)
