"""Three-row diagrams as multiplicity vectors over the seven column types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

# Canonical column order: {1},{2},{3},{1,2},{2,3},{1,3},{1,2,3}.
COLUMNS: tuple[frozenset[int], ...] = tuple(
    frozenset(c) for c in ((1,), (2,), (3,), (1, 2), (2, 3), (1, 3), (1, 2, 3))
)
COLUMN_NAMES = ("1", "2", "3", "12", "23", "13", "123")
_INDEX = {c: a for a, c in enumerate(COLUMNS)}


@dataclass(frozen=True)
class Partition3:
    parts: tuple[int, int, int]

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        if len(p) != 3 or p[2] < 0 or not p[0] >= p[1] >= p[2]:
            raise ValueError(f"{self.parts} is not a partition with at most three parts")
        object.__setattr__(self, "parts", p)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class Diagram3:
    """Multiplicities m_C of the seven column types, in :data:`COLUMNS` order."""

    m: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        if len(m) != 7:
            raise ValueError(f"a three-row diagram needs 7 multiplicities, got {len(m)}")
        if any(x < 0 for x in m):
            raise ValueError(f"multiplicities must be nonnegative: {m}")
        object.__setattr__(self, "m", m)

    @classmethod
    def parse(cls, text: str) -> Diagram3:
        """Parse the text form ``"m1,m2,m3,m12,m23,m13,m123"``."""
        try:
            values = [int(x) for x in text.split(",")]
        except ValueError:
            raise ValueError(f"bad diagram text {text!r}: expected 7 comma-separated integers") from None
        return cls(tuple(values))

    @classmethod
    def zero(cls) -> Diagram3:
        return cls((0,) * 7)

    @classmethod
    def from_partition(cls, lam: Partition3 | Sequence[int]) -> Diagram3:
        a, b, c = Partition3(tuple(lam)).parts
        return cls((a - b, 0, 0, b - c, 0, 0, c))

    def __str__(self) -> str:
        return ",".join(map(str, self.m))

    def __getitem__(self, column) -> int:
        if isinstance(column, int):
            return self.m[column]
        return self.m[_INDEX[frozenset(column)]]

    def columns(self) -> list[frozenset[int]]:
        """Expand to an explicit column list (canonical order, repeats adjacent)."""
        return [c for c, k in zip(COLUMNS, self.m) for _ in range(k)]

    def total_boxes(self) -> int:
        return sum(k * len(c) for c, k in zip(COLUMNS, self.m))

    def as_partition(self) -> Partition3 | None:
        """The partition lambda if this is a Young diagram, else ``None``."""
        m1, m2, m3, m12, m23, m13, m123 = self.m
        if m2 or m3 or m23 or m13:
            return None
        return Partition3((m1 + m12 + m123, m12 + m123, m123))


def canonicalize(columns: Iterable[Iterable[int]]) -> Diagram3:
    """Count occurrences of each column type; the input order is irrelevant."""
    counts = [0] * 7
    for col in columns:
        col = frozenset(col)
        if not col:
            raise ValueError("empty column")
        if not col <= {1, 2, 3}:
            raise ValueError(f"column {sorted(col)} uses a row outside {{1,2,3}}")
        counts[_INDEX[col]] += 1
    return Diagram3(tuple(counts))


def as_partition(d: Diagram3) -> Partition3 | None:
    return d.as_partition()


def total_boxes(d: Diagram3) -> int:
    return d.total_boxes()
