"""Exact dense linear algebra over the rationals.

Entries are Python ``int`` or :class:`fractions.Fraction`; integral
fractions are demoted to ``int`` so that integer matrices stay on the fast
integer path.  There are no tolerances anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .combinat import Partition

__all__ = [
    "RationalMatrix",
    "LinearSubspace",
    "GradedNilpotent",
    "NotNilpotentError",
    "rank_rational",
    "kernel_basis",
    "inverse",
    "jordan_type_nilpotent",
    "signed_diagram_graded",
    "signed_row_counts",
]


class NotNilpotentError(ValueError):
    pass


def _norm(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, int):
        return v
    raise TypeError(f"inexact entry {v!r}")


class RationalMatrix:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(_norm(v) for v in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("give ncols for a matrix without rows")
            ncols = len(data[0])
        if any(len(row) != ncols for row in data):
            raise ValueError("ragged rows")
        self.rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def _raw(cls, rows: tuple, ncols: int) -> "RationalMatrix":
        m = object.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls._raw(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls._raw(
            tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "RationalMatrix":
        return cls((tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @classmethod
    def block(cls, blocks: Sequence[Sequence["RationalMatrix"]]) -> "RationalMatrix":
        rows = []
        for brow in blocks:
            for i in range(brow[0].nrows):
                rows.append(tuple(v for b in brow for v in b.rows[i]))
        return cls._raw(tuple(rows), sum(b.ncols for b in blocks[0]))

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(r) for r in self.rows]})"

    def __str__(self) -> str:
        cells = [[str(v) for v in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def T(self) -> "RationalMatrix":
        if not self.nrows:
            return RationalMatrix.zeros(self.ncols, 0)
        return RationalMatrix._raw(tuple(zip(*self.rows)), self.nrows)

    def columns(self) -> list[tuple]:
        return [tuple(row[j] for row in self.rows) for j in range(self.ncols)]

    def sub(self, r0: int, r1: int, c0: int, c1: int) -> "RationalMatrix":
        return RationalMatrix._raw(
            tuple(row[c0:c1] for row in self.rows[r0:r1]), c1 - c0
        )

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for row in self.rows:
            nz = [(k, a) for k, a in enumerate(row) if a]
            out.append(
                tuple(_norm(sum(a * col[k] for k, a in nz)) if nz else 0 for col in cols)
            )
        return RationalMatrix._raw(tuple(out), other.ncols)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix._raw(
            tuple(
                tuple(_norm(a + b) for a, b in zip(r, s))
                for r, s in zip(self.rows, other.rows)
            ),
            self.ncols,
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix._raw(
            tuple(tuple(-a for a in r) for r in self.rows), self.ncols
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, c) -> "RationalMatrix":
        return RationalMatrix._raw(
            tuple(tuple(_norm(c * a) for a in r) for r in self.rows), self.ncols
        )

    def power(self, k: int) -> "RationalMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        out = RationalMatrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def flatten(self) -> tuple:
        return tuple(v for row in self.rows for v in row)

    @classmethod
    def unflatten(cls, vec: Sequence, nrows: int, ncols: int) -> "RationalMatrix":
        return cls((vec[i * ncols:(i + 1) * ncols] for i in range(nrows)), ncols)


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        out.append([int(v * den) for v in row] if den != 1 else list(row))
    return out


def _rank_int(rows: list[list[int]]) -> int:
    """Rank by fraction-free elimination; ``rows`` is consumed."""
    rows = [r for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        if not rows:
            break
        piv = next((r for r in rows if r[c]), None)
        if piv is None:
            continue
        rows.remove(piv)
        p = piv[c]
        nxt = []
        for r in rows:
            f = r[c]
            if f:
                r = [p * a - f * b for a, b in zip(r, piv)]
                g = 0
                for a in r:
                    if a:
                        g = gcd(g, a)
                        if g == 1:
                            break
                if g > 1:
                    r = [a // g for a in r]
                elif g == 0:
                    continue
            nxt.append(r)
        rows = nxt
        rank += 1
    return rank


def rank_rational(m: RationalMatrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return _rank_int(_integer_rows(m.rows))


def _rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    rows = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        k = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        p = rows[r][c]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _primitive(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for v in vec:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    lead = next((a for a in ints if a), 0)
    if lead < 0:
        ints = [-a for a in ints]
    return tuple(ints)


@dataclass(frozen=True)
class LinearSubspace:
    """Subspace of Q^ambient_dim given by a reduced basis.

    ``basis`` holds primitive integer vectors obtained from the reduced row
    echelon form of the spanning set, so equal subspaces have equal bases.
    """

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "LinearSubspace":
        vecs = [list(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise ValueError("vector length differs from the ambient dimension")
        if not vecs:
            return cls(ambient_dim, ())
        rows, _ = _rref(vecs)
        return cls(ambient_dim, tuple(_primitive(r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def as_matrix(self) -> RationalMatrix:
        """Basis vectors as the columns of an ``ambient_dim x dim`` matrix."""
        return RationalMatrix.from_columns(self.basis, self.ambient_dim)

    def contains(self, vec: Sequence) -> bool:
        if not any(vec):
            return True
        return _rank_int(_integer_rows(list(self.basis) + [list(vec)])) == self.dim

    def is_subspace_of(self, other: "LinearSubspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def intersect(self, other: "LinearSubspace") -> "LinearSubspace":
        if not self.basis or not other.basis:
            return LinearSubspace(self.ambient_dim, ())
        # a.x = b.y  <=>  [A | -B](x, y) = 0
        stacked = RationalMatrix.from_columns(
            list(self.basis) + [tuple(-v for v in b) for b in other.basis],
            self.ambient_dim,
        )
        ker = kernel_basis(stacked)
        k = self.dim
        return LinearSubspace.span(
            (
                [sum(c[i] * b[t] for i, b in enumerate(self.basis)) for t in range(self.ambient_dim)]
                for c in (v[:k] for v in ker.basis)
            ),
            self.ambient_dim,
        )


def kernel_basis(m: RationalMatrix) -> LinearSubspace:
    """Right kernel ``{v : m v = 0}``."""
    n = m.ncols
    rows = [list(r) for r in m.rows if any(r)]
    if not rows:
        return LinearSubspace(
            n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        )
    red, pivots = _rref(rows)
    free = [c for c in range(n) if c not in set(pivots)]
    vecs = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        vecs.append(v)
    return LinearSubspace.span(vecs, n)


def inverse(m: RationalMatrix) -> RationalMatrix:
    _check_square(m)
    n = m.nrows
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(m.rows)]
    red, pivots = _rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return RationalMatrix((r[n:] for r in red), n)


def _check_square(x: RationalMatrix):
    if x.nrows != x.ncols:
        raise ValueError(f"expected a square matrix, got {x.shape}")


def _power_ranks(x: RationalMatrix) -> list[int]:
    """``[rank x^0, rank x^1, ...]`` up to the first zero power."""
    _check_square(x)
    n = x.nrows
    ranks = [n]
    p = x
    for _ in range(n):
        r = rank_rational(p)
        ranks.append(r)
        if r == 0:
            return ranks
        p = p @ x
    raise NotNilpotentError("matrix is not nilpotent")


def jordan_type_nilpotent(x: RationalMatrix) -> Partition:
    """Jordan block sizes of a nilpotent matrix, from the ranks of its powers."""
    ranks = _power_ranks(x)
    at_least = [ranks[l - 1] - ranks[l] for l in range(1, len(ranks))]
    parts = []
    for l, c in enumerate(at_least, start=1):
        nxt = at_least[l] if l < len(at_least) else 0
        parts.extend([l] * (c - nxt))
    return Partition(sorted(parts, reverse=True))


@dataclass(frozen=True)
class GradedNilpotent:
    """The block matrix ``e = (0 z; w 0)`` on ``V+ (+) V-``.

    ``z`` maps ``V-`` to ``V+`` and ``w`` maps ``V+`` to ``V-``.
    """

    n: int
    z: RationalMatrix
    w: RationalMatrix

    def __post_init__(self):
        if self.z.shape != (self.n, self.n) or self.w.shape != (self.n, self.n):
            raise ValueError("z and w must be n x n")

    @classmethod
    def from_matrix(cls, e: RationalMatrix) -> "GradedNilpotent":
        n = e.nrows // 2
        return cls(n, e.sub(0, n, n, 2 * n), e.sub(n, 2 * n, 0, n))

    def assemble(self) -> RationalMatrix:
        zero = RationalMatrix.zeros(self.n, self.n)
        return RationalMatrix.block([[zero, self.z], [self.w, zero]])


def _graded_dims(basis_cols: RationalMatrix, n: int) -> tuple[int, int, int]:
    """``(dim W, dim W n V+, dim W n V-)`` for ``W`` spanned by the columns."""
    d = rank_rational(basis_cols)
    top = rank_rational(basis_cols.sub(0, n, 0, basis_cols.ncols))
    bottom = rank_rational(basis_cols.sub(n, 2 * n, 0, basis_cols.ncols))
    # W n V+ is the kernel of the projection to V- restricted to W
    return d, d - bottom, d - top


def signed_row_counts(e: GradedNilpotent) -> dict[tuple[int, str], int]:
    """Rows of each ``(length, leading sign)`` in the signed diagram of ``e``.

    A row of length ``l`` with leading sign ``s`` is a Jordan chain whose
    generator lies in ``V^s``.  The number of such generators is
    ``dim(K_l n V^s) - dim(K_{l-1} n V^s) - dim(eK_{l+1} n V^s) + dim(eK_l n V^s)``
    with ``K_l = ker e^l``.
    """
    n = e.n
    x = e.assemble()
    powers = [RationalMatrix.identity(2 * n)]
    while not powers[-1].is_zero():
        if len(powers) > 2 * n:
            raise NotNilpotentError("graded matrix is not nilpotent")
        powers.append(powers[-1] @ x)
    top = len(powers) - 1  # nilpotency index

    def dims(l):
        if l == 0:
            return (0, 0, 0), (0, 0, 0)
        if l >= top:
            ker = RationalMatrix.identity(2 * n)
        else:
            ker = kernel_basis(powers[l]).as_matrix()
        k = _graded_dims(ker, n)
        if k[1] + k[2] != k[0]:
            raise AssertionError(f"ker e^{l} is not graded")
        ek = _graded_dims(x @ ker, n) if ker.ncols else (0, 0, 0)
        if ek[1] + ek[2] != ek[0]:
            raise AssertionError(f"e ker e^{l} is not graded")
        return k, ek

    table = [dims(l) for l in range(top + 2)]
    counts = {}
    for l in range(1, top + 1):
        for idx, sign in ((1, "+"), (2, "-")):
            c = (
                table[l][0][idx]
                - table[l - 1][0][idx]
                - table[l + 1][1][idx]
                + table[l][1][idx]
            )
            if c < 0:
                raise AssertionError("negative row count")
            if c:
                counts[l, sign] = c
    return counts


def signed_diagram_graded(e: GradedNilpotent):
    """Signed Young diagram of the graded nilpotent ``e``."""
    from .nilpotent import SignedYoungDiagram

    rows = []
    for (length, sign), c in signed_row_counts(e).items():
        rows.extend([(length, sign)] * c)
    return SignedYoungDiagram(rows)
