"""Brute-force ground truth for characters of Schur modules.

``S_D = (C^n)^{(x)D} alpha_D beta_D`` is computed weight block by weight block:
the row symmetrizer and column antisymmetrizer both commute with the torus,
so the image splits by content vector and each block's dimension is the rank
of an integer matrix.

Classical Schur polynomials (semistandard tableaux) and the Weyl dimension
formula serve as the independent reference for Young diagrams.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .diagram import Diagram3, Partition3
from .weights import WeightCharacter

DEFAULT_MAX_SQUARES = 8
DEFAULT_MAX_N = 4


class OracleSizeError(ValueError):
    """The requested module exceeds the desk-scale limits."""


@dataclass(frozen=True)
class GeneralDiagram:
    """A diagram given as a list of columns, each a set of row indices."""

    columns: tuple[frozenset[int], ...]

    def __post_init__(self):
        cols = tuple(frozenset(c) for c in self.columns)
        for c in cols:
            if not c:
                raise ValueError("empty column")
            if not c <= {1, 2, 3}:
                raise ValueError(f"column {sorted(c)} uses a row outside {{1,2,3}}")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def parse(cls, text: str) -> GeneralDiagram:
        """Parse ``"1,2;2,3;1,3"`` (columns separated by ``;``)."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(frozenset(int(x) for x in col.split(",")) for col in text.split(";")))

    @classmethod
    def from_diagram3(cls, d: Diagram3) -> GeneralDiagram:
        return cls(tuple(d.columns()))

    def __str__(self) -> str:
        return ";".join(",".join(map(str, sorted(c))) for c in self.columns)

    def squares(self) -> list[tuple[int, int]]:
        """Squares as (row, column index), column by column, top to bottom."""
        return [(r, a) for a, c in enumerate(self.columns) for r in sorted(c)]


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _multisets(content: list[int], size: int, start: int = 0) -> Iterator[tuple[int, ...]]:
    # sorted tuples of `size` labels drawn from the remaining content
    if size == 0:
        yield ()
        return
    for a in range(start, len(content)):
        if content[a] > 0:
            content[a] -= 1
            for rest in _multisets(content, size - 1, a):
                yield (a,) + rest
            content[a] += 1


def _multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    items = sorted(items)
    n = len(items)
    yield tuple(items)
    # next lexicographic permutation until exhausted
    while True:
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])
        yield tuple(items)


def _sort_sign(labels: Sequence[int]) -> int:
    """Sign of the permutation sorting ``labels`` (0 if a label repeats)."""
    if len(set(labels)) != len(labels):
        return 0
    inv = sum(1 for a in range(len(labels)) for b in range(a + 1, len(labels)) if labels[a] > labels[b])
    return -1 if inv % 2 else 1


def integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        top = m[rank]
        for r in range(rank + 1, len(m)):
            row = m[r]
            f = row[c]
            for cc in range(c + 1, ncols):
                q, rem = divmod(row[cc] * p - f * top[cc], prev)
                if rem:
                    raise ArithmeticError("Bareiss step was not exact")
                row[cc] = q
            row[c] = 0
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def _limits(max_squares: int | None, max_n: int | None) -> tuple[int, int]:
    if max_squares is None:
        max_squares = int(os.environ.get("SCHUR_MAX_SQUARES", DEFAULT_MAX_SQUARES))
    return max_squares, DEFAULT_MAX_N if max_n is None else max_n


def _block_rank(rows_of: dict[int, list[int]], columns: list[list[int]], content: tuple[int, ...]) -> int:
    """dim of the content-`content` block of V^{(x)D} alpha beta.

    Right action: a filling f is a function squares -> labels and f.pi = f o pi,
    matching g(x_t1, ...)pi = (g x_pi(t1), ...). For a row orbit O,
    f.alpha is proportional to sum_{g in O} g. beta is recorded through the
    injective coordinates of antisymmetric tensors on column-strict fillings:
    g.beta has coefficient sign(g -> sorted columns) at the column-sorted
    filling, and vanishes if a column repeats a label.
    (alpha.beta and beta.alpha are transposes of each other, so the rank does
    not depend on the composition order.)
    """
    row_keys = sorted(rows_of)
    nsq = sum(len(v) for v in rows_of.values())
    vectors: list[dict] = []

    def fill_rows(idx: int, rem: list[int], chosen: list[tuple[int, ...]]):
        if idx == len(row_keys):
            vectors.append(_orbit_vector(chosen))
            return
        for ms in _multisets(list(rem), len(rows_of[row_keys[idx]])):
            for a in ms:
                rem[a] -= 1
            fill_rows(idx + 1, rem, chosen + [ms])
            for a in ms:
                rem[a] += 1

    def _orbit_vector(chosen: list[tuple[int, ...]]) -> dict:
        vec: dict = {}
        filling = [0] * nsq

        def rec(idx: int):
            if idx == len(row_keys):
                key = []
                sign = 1
                for col in columns:
                    labels = [filling[s] for s in col]
                    sg = _sort_sign(labels)
                    if not sg:
                        return
                    sign *= sg
                    key.append(tuple(sorted(labels)))
                key = tuple(key)
                vec[key] = vec.get(key, 0) + sign
                return
            squares = rows_of[row_keys[idx]]
            for perm in _multiset_permutations(chosen[idx]):
                for s, lab in zip(squares, perm):
                    filling[s] = lab
                rec(idx + 1)

        rec(0)
        return {k: v for k, v in vec.items() if v}

    fill_rows(0, list(content), [])
    keys = sorted({k for v in vectors for k in v})
    if not keys:
        return 0
    index = {k: a for a, k in enumerate(keys)}
    mat = []
    for v in vectors:
        if v:
            row = [0] * len(keys)
            for k, c in v.items():
                row[index[k]] = c
            mat.append(row)
    return integer_rank(mat)


def schur_module_character(
    gd: GeneralDiagram, n: int, max_squares: int | None = None, max_n: int | None = None
) -> WeightCharacter:
    if n < 1:
        raise ValueError("n must be positive")
    squares = gd.squares()
    nsq = len(squares)
    lim_sq, lim_n = _limits(max_squares, max_n)
    if nsq > lim_sq or n > lim_n:
        q, r = divmod(nsq, n)
        block = factorial(nsq) // prod(factorial(q + (a < r)) for a in range(n))
        raise OracleSizeError(
            f"diagram with {nsq} squares at n={n} exceeds the desk limit "
            f"(squares <= {lim_sq}, n <= {lim_n}); largest weight block has {block} fillings"
        )
    rows_of: dict[int, list[int]] = {}
    col_of: dict[int, list[int]] = {}
    for s, (r, a) in enumerate(squares):
        rows_of.setdefault(r, []).append(s)
        col_of.setdefault(a, []).append(s)
    columns = [col_of[a] for a in sorted(col_of)]
    entries = {}
    for content in _compositions(nsq, n):
        k = _block_rank(rows_of, columns, content)
        if k:
            entries[content] = k
    return WeightCharacter(n, entries)


def schur_module_dimension(gd: GeneralDiagram, n: int, **limits) -> int:
    return schur_module_character(gd, n, **limits).dimension()


def _ssyt(shape: Sequence[int], n: int) -> Iterator[list[list[int]]]:
    shape = [x for x in shape if x]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]

    def rec(idx: int):
        if idx == len(cells):
            yield grid
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, n + 1):
            grid[r][c] = v
            yield from rec(idx + 1)

    yield from rec(0)


def schur_polynomial(lam: Partition3 | Sequence[int], n: int) -> WeightCharacter:
    lam = lam if isinstance(lam, Partition3) else Partition3(tuple(lam))
    if n < 3:
        raise ValueError("n must be at least 3")
    entries: dict[tuple[int, ...], int] = {}
    for t in _ssyt(lam.parts, n):
        w = [0] * n
        for row in t:
            for v in row:
                w[v - 1] += 1
        w = tuple(w)
        entries[w] = entries.get(w, 0) + 1
    return WeightCharacter(n, entries)


def weyl_dimension(lam: Partition3 | Sequence[int], n: int) -> int:
    lam = lam if isinstance(lam, Partition3) else Partition3(tuple(lam))
    if n < 3:
        raise ValueError("n must be at least 3")
    parts = list(lam.parts) + [0] * (n - 3)
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(parts[i] - parts[j] + j - i, j - i)
    assert value.denominator == 1
    return int(value)


def young_columns(lam: Partition3 | Sequence[int]) -> GeneralDiagram:
    return GeneralDiagram.from_diagram3(Diagram3.from_partition(lam))


def iter_partitions3(max_part: int) -> Iterable[Partition3]:
    for a in range(max_part + 1):
        for b in range(a + 1):
            for c in range(b + 1):
                yield Partition3((a, b, c))
