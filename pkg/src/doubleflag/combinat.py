"""Partitions, standard tableaux on arbitrary entry sets, RS and jeu de taquin.

Tableaux use English notation: row 0 is the top row, and the entries grow
to the right and downwards.  Entries are distinct positive integers drawn
from any finite set, not necessarily ``1..k``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "Tableau",
    "SkewTableau",
    "TwoLineArray",
    "partitions",
    "dominance_leq",
    "vertical_strip_leq",
    "transpose_tableau",
    "column_tableau",
    "rs_correspondence",
    "rs_inverse",
    "star_concat",
    "jdt_rectify",
    "count_standard_tableaux",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``(2, 1)``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """``i``-th part, reading beyond the length as 0."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for head in range(min(n, max_part), 0, -1):
        for tail in partitions(n - head, head):
            yield Partition((head,) + tuple(tail))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    a, b = Partition(a), Partition(b)
    if a.size != b.size:
        raise ValueError(f"dominance needs equal sizes, got {a.size} and {b.size}")
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a.part(i)
        sb += b.part(i)
        if sa > sb:
            return False
    return True


def vertical_strip_leq(nu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``nu_i <= lam_i <= nu_i + 1`` for every row ``i``."""
    nu, lam = Partition(nu), Partition(lam)
    return all(
        nu.part(i) <= lam.part(i) <= nu.part(i) + 1
        for i in range(max(len(nu), len(lam)))
    )


@dataclass(frozen=True)
class Tableau:
    """Standard tableau of straight shape with distinct positive entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(row) == 0 for row in rows):
            raise ValueError("empty rows are not stored")
        Partition(len(row) for row in rows)
        entries = [v for row in rows for v in row]
        if len(set(entries)) != len(entries):
            raise ValueError(f"entries must be distinct: {rows}")
        if any(v <= 0 for v in entries):
            raise ValueError("entries must be positive")
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if j and row[j - 1] >= v:
                    raise ValueError(f"row {i} is not increasing: {row}")
                if i and rows[i - 1][j] >= v:
                    raise ValueError(f"column {j} is not increasing at row {i}")

    @classmethod
    def empty(cls) -> "Tableau":
        return cls(())

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entries(self) -> frozenset[int]:
        return frozenset(v for row in self.rows for v in row)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


@dataclass(frozen=True)
class SkewTableau:
    """Standard filling of the skew diagram ``outer / inner``.

    ``rows[i]`` lists the entries of row ``i`` in columns
    ``inner[i] .. outer[i] - 1``.
    """

    outer: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        outer, inner = Partition(self.outer), Partition(self.inner)
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)
        if not outer.contains(inner):
            raise ValueError(f"inner shape {inner} not inside {outer}")
        if len(rows) != len(outer):
            raise ValueError("need one row of entries per row of the outer shape")
        for i, row in enumerate(rows):
            if len(row) != outer[i] - inner.part(i):
                raise ValueError(f"row {i} has the wrong number of cells")
        cells = self.cells()
        entries = list(cells.values())
        if len(set(entries)) != len(entries):
            raise ValueError("entries must be distinct")
        for (i, j), v in cells.items():
            if (i, j + 1) in cells and cells[i, j + 1] <= v:
                raise ValueError(f"row {i} is not increasing")
            if (i + 1, j) in cells and cells[i + 1, j] <= v:
                raise ValueError(f"column {j} is not increasing")

    @classmethod
    def from_tableau(cls, t: Tableau) -> "SkewTableau":
        return cls(t.shape, Partition(), t.rows)

    def cells(self) -> dict[tuple[int, int], int]:
        return {
            (i, self.inner.part(i) + k): v
            for i, row in enumerate(self.rows)
            for k, v in enumerate(row)
        }

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entries(self) -> frozenset[int]:
        return frozenset(v for row in self.rows for v in row)


@dataclass(frozen=True)
class TwoLineArray:
    """A bijection from an increasing ``domain`` onto ``values``."""

    domain: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        domain = tuple(int(v) for v in self.domain)
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "values", values)
        if len(domain) != len(values):
            raise ValueError("domain and values differ in length")
        if any(a >= b for a, b in zip(domain, domain[1:])):
            raise ValueError("domain must be strictly increasing")
        if len(set(values)) != len(values):
            raise ValueError("values must be distinct")

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> "TwoLineArray":
        dom = tuple(sorted(mapping))
        return cls(dom, tuple(mapping[j] for j in dom))

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain, self.values))


def transpose_tableau(t: Tableau) -> Tableau:
    if not t.rows:
        return t
    width = len(t.rows[0])
    return Tableau(
        tuple(tuple(row[j] for row in t.rows if len(row) > j) for j in range(width))
    )


def column_tableau(entries: Iterable[int]) -> Tableau:
    """The single-column tableau on ``entries``, increasing downwards."""
    return Tableau(tuple((v,) for v in sorted(entries)))


def _row_insert(rows: list[list[int]], x: int) -> int:
    """Row-insert ``x`` in place; return the index of the row that grew."""
    for i, row in enumerate(rows):
        for j, y in enumerate(row):
            if y > x:
                row[j], x = x, y
                break
        else:
            row.append(x)
            return i
    rows.append([x])
    return len(rows) - 1


def rs_correspondence(arr: TwoLineArray) -> tuple[Tableau, Tableau]:
    """Insertion and recording tableaux of ``arr``.

    The values are row-inserted in increasing order of the domain, and the
    recording tableau stores the domain entries.
    """
    p: list[list[int]] = []
    q: list[list[int]] = []
    for j, v in zip(arr.domain, arr.values):
        i = _row_insert(p, v)
        if i == len(q):
            q.append([])
        q[i].append(j)
    return Tableau(tuple(map(tuple, p))), Tableau(tuple(map(tuple, q)))


def rs_inverse(p: Tableau, q: Tableau) -> TwoLineArray:
    """Reverse bumping: recover the two-line array from ``(P, Q)``."""
    if p.shape != q.shape:
        raise ValueError("P and Q must have the same shape")
    rows = [list(row) for row in p.rows]
    where = {v: i for i, row in enumerate(q.rows) for v in row}
    out = {}
    for j in sorted(where, reverse=True):
        i = where[j]
        x = rows[i].pop()
        for k in range(i - 1, -1, -1):
            row = rows[k]
            # largest entry smaller than x gets bumped back up
            pos = max(idx for idx, y in enumerate(row) if y < x)
            row[pos], x = x, row[pos]
        if not rows[i]:
            rows.pop(i)
        out[j] = x
    return TwoLineArray.from_mapping(out)


def star_concat(pieces: Sequence[Tableau]) -> SkewTableau:
    """Skew tableau ``T_1 * T_2 * ... * T_k``.

    The first piece sits at the lower left; each later piece sits strictly
    above and to the right of everything placed before it.
    """
    seen: set[int] = set()
    for t in pieces:
        ent = t.entries()
        if seen & ent:
            raise ValueError(f"pieces share entries {sorted(seen & ent)}")
        seen |= ent
    pieces = [t for t in pieces if t.rows]
    outer: list[int] = []
    inner: list[int] = []
    rows: list[tuple[int, ...]] = []
    offset = sum(len(t.rows[0]) for t in pieces)
    for t in reversed(pieces):
        offset -= len(t.rows[0])
        for row in t.rows:
            inner.append(offset)
            outer.append(offset + len(row))
            rows.append(row)
    return SkewTableau(Partition(outer), Partition(inner), tuple(rows))


def _inner_corners(inner: list[int]) -> list[int]:
    """Rows ``i`` whose last inner cell can start a slide."""
    return [
        i
        for i, a in enumerate(inner)
        if a > 0 and (i + 1 == len(inner) or inner[i + 1] < a)
    ]


def jdt_rectify(
    s: SkewTableau,
    choose: Callable[[list[int]], int] | None = None,
) -> Tableau:
    """Rectify by inward jeu-de-taquin slides.

    ``choose`` picks the row of the inner corner to vacate next from the
    list of candidate rows; the default takes the last one.  The result
    does not depend on it.
    """
    if choose is None:
        choose = lambda rows: rows[-1]  # noqa: E731
    grid = s.cells()
    inner = list(s.inner) + [0] * (len(s.outer) - len(s.inner))
    outer = list(s.outer)
    while any(inner):
        i = choose(_inner_corners(inner))
        j = inner[i] - 1
        inner[i] -= 1
        while True:
            below = grid.get((i + 1, j))
            right = grid.get((i, j + 1))
            if below is None and right is None:
                break
            if right is None or (below is not None and below < right):
                grid[i, j] = grid.pop((i + 1, j))
                i += 1
            else:
                grid[i, j] = grid.pop((i, j + 1))
                j += 1
        outer[i] -= 1
    return Tableau(
        tuple(
            tuple(grid[i, j] for j in range(outer[i]))
            for i in range(len(outer))
            if outer[i]
        )
    )


def random_choice(rng: random.Random) -> Callable[[list[int]], int]:
    """Corner chooser for :func:`jdt_rectify` driven by ``rng``."""
    return lambda rows: rng.choice(rows)


def count_standard_tableaux(shape: Sequence[int]) -> int:
    """Number of standard tableaux of ``shape`` (hook length formula)."""
    lam = Partition(shape)
    conj = lam.conjugate()
    n = lam.size
    num = 1
    for k in range(2, n + 1):
        num *= k
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            den *= row - j + conj[j] - i - 1
    return num // den
