"""Pairs of partial permutations of full rank and their S_n-classes.

A K-orbit of the AIII double flag variety is the class of a stacked pair
``omega = (tau1; tau2)`` under right multiplication by permutation
matrices, i.e. simultaneous relabelling of columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial
from typing import Iterator, Sequence

from .combinat import TwoLineArray
from .exactlin import RationalMatrix

__all__ = [
    "PartialPermutation",
    "OmegaPair",
    "CanonicalData",
    "InvalidPairError",
    "is_valid_pair",
    "canonicalize",
    "enumerate_orbit_reps",
    "count_orbits",
]


class InvalidPairError(ValueError):
    """The stacked matrix does not have rank n."""


class PartialPermutation(tuple):
    """Injective partial map on ``[n]``; ``0`` marks an undefined value.

    ``image[j-1]`` is the image of ``j``.
    """

    def __new__(cls, image: Sequence[int]):
        image = tuple(int(v) for v in image)
        n = len(image)
        if n == 0:
            raise ValueError("n must be positive")
        nz = [v for v in image if v]
        if any(v < 0 or v > n for v in image):
            raise ValueError(f"values must lie in 0..{n}: {image}")
        if len(set(nz)) != len(nz):
            raise ValueError(f"not injective: {image}")
        return super().__new__(cls, image)

    @classmethod
    def parse(cls, text: str) -> "PartialPermutation":
        return cls(int(v) for v in text.replace(" ", "").split(","))

    @classmethod
    def identity(cls, n: int) -> "PartialPermutation":
        return cls(range(1, n + 1))

    @classmethod
    def zero(cls, n: int) -> "PartialPermutation":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, j: int) -> int:
        return self[j - 1]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"PartialPermutation({str(self)!r})"

    def support(self) -> list[int]:
        return [j for j in range(1, self.n + 1) if self[j - 1]]

    def matrix(self) -> RationalMatrix:
        """Matrix whose ``j``-th column is ``e_{tau(j)}`` (zero if undefined)."""
        n = self.n
        return RationalMatrix._raw(
            tuple(tuple(int(self[j] == i) for j in range(n)) for i in range(1, n + 1)),
            n,
        )

    def compose_right(self, s: Sequence[int]) -> "PartialPermutation":
        """``tau o s`` for a permutation ``s`` given by its image list."""
        return PartialPermutation(self[s[k] - 1] for k in range(self.n))


@dataclass(frozen=True)
class OmegaPair:
    tau1: PartialPermutation
    tau2: PartialPermutation

    def __post_init__(self):
        t1 = self.tau1 if isinstance(self.tau1, PartialPermutation) else PartialPermutation(self.tau1)
        t2 = self.tau2 if isinstance(self.tau2, PartialPermutation) else PartialPermutation(self.tau2)
        if t1.n != t2.n:
            raise ValueError("tau1 and tau2 must have the same n")
        object.__setattr__(self, "tau1", t1)
        object.__setattr__(self, "tau2", t2)

    @classmethod
    def parse(cls, tau1: str, tau2: str) -> "OmegaPair":
        return cls(PartialPermutation.parse(tau1), PartialPermutation.parse(tau2))

    @property
    def n(self) -> int:
        return self.tau1.n

    def matrix(self) -> RationalMatrix:
        """The stacked ``2n x n`` matrix."""
        return RationalMatrix._raw(
            self.tau1.matrix().rows + self.tau2.matrix().rows, self.n
        )

    def act(self, s: Sequence[int]) -> "OmegaPair":
        """Right action ``omega o s`` (column relabelling)."""
        return OmegaPair(self.tau1.compose_right(s), self.tau2.compose_right(s))

    def __str__(self) -> str:
        return f"({self.tau1}; {self.tau2})"


def is_valid_pair(w: OmegaPair) -> bool:
    """Rank n iff no column of the stacked matrix vanishes.

    Each basis vector occurs in at most one column of each half, so the
    nonzero columns are automatically independent.
    """
    return all(a or b for a, b in zip(w.tau1, w.tau2))


def _require_valid(w: OmegaPair):
    if not is_valid_pair(w):
        raise InvalidPairError(f"{w} has a zero column, so rank < n")


@dataclass(frozen=True)
class CanonicalData:
    """Data ``(r, p, q; J, M, M'; I, L, L'; sigma)`` of a canonical pair.

    On the canonical representative ``tau2`` fixes ``J u M`` pointwise and
    kills ``M'``; ``tau1`` is ``sigma`` on ``J``, kills ``M`` and maps
    ``M'`` increasingly onto ``L'``.
    """

    n: int
    J: tuple[int, ...]
    M: tuple[int, ...]
    Mp: tuple[int, ...]
    I: tuple[int, ...]
    L: tuple[int, ...]
    Lp: tuple[int, ...]
    sigma: TwoLineArray

    def __post_init__(self):
        full = set(range(1, self.n + 1))
        for name, parts in (("J,M,M'", (self.J, self.M, self.Mp)), ("I,L,L'", (self.I, self.L, self.Lp))):
            if sorted(x for p in parts for x in p) != sorted(full):
                raise ValueError(f"{name} do not partition [n]")
            if any(tuple(sorted(p)) != p for p in parts):
                raise ValueError(f"{name} must be stored sorted")
        if len(self.L) != len(self.M) or len(self.Lp) != len(self.Mp):
            raise ValueError("|L| = |M| and |L'| = |M'| are required")
        if self.sigma.domain != self.J or tuple(sorted(self.sigma.values)) != self.I:
            raise ValueError("sigma must be a bijection J -> I")

    @property
    def rpq(self) -> tuple[int, int, int]:
        return len(self.J), len(self.M), len(self.Mp)

    def omega(self) -> OmegaPair:
        t1 = [0] * self.n
        t2 = [0] * self.n
        for j, v in zip(self.sigma.domain, self.sigma.values):
            t1[j - 1] = v
            t2[j - 1] = j
        for m in self.M:
            t2[m - 1] = m
        for m, l in zip(self.Mp, self.Lp):
            t1[m - 1] = l
        return OmegaPair(PartialPermutation(t1), PartialPermutation(t2))

    def sort_key(self):
        w = self.omega()
        return (self.rpq, tuple(w.tau1), tuple(w.tau2))


def canonicalize(w: OmegaPair) -> tuple[CanonicalData, tuple[int, ...]]:
    """Canonical data of the class of ``w`` and ``s`` with ``w o s`` canonical.

    ``s`` is returned as an image list: ``s[k-1]`` is the old column that
    becomes column ``k``.
    """
    _require_valid(w)
    n = w.n
    t1, t2 = w.tau1, w.tau2
    s = [0] * n
    for j in range(1, n + 1):
        if t2(j):
            s[t2(j) - 1] = j
    free = [k for k in range(1, n + 1) if not s[k - 1]]
    mprime_old = sorted((j for j in range(1, n + 1) if not t2(j)), key=t1)
    for k, j in zip(free, mprime_old):
        s[k - 1] = j
    J = tuple(t2(j) for j in range(1, n + 1) if t1(j) and t2(j))
    M = tuple(sorted(t2(j) for j in range(1, n + 1) if not t1(j)))
    Mp = tuple(free)
    sigma = TwoLineArray.from_mapping({t2(j): t1(j) for j in range(1, n + 1) if t1(j) and t2(j)})
    I = tuple(sorted(sigma.values))
    Lp = tuple(t1(j) for j in mprime_old)
    L = tuple(sorted(set(range(1, n + 1)) - set(I) - set(Lp)))
    data = CanonicalData(n, tuple(sorted(J)), M, Mp, I, L, Lp, sigma)
    return data, tuple(s)


def enumerate_orbit_reps(n: int) -> Iterator[CanonicalData]:
    """One canonical representative per class, in a fixed order."""
    if n < 1:
        raise ValueError("n must be positive")
    full = range(1, n + 1)
    for r in range(n + 1):
        for p in range(n - r + 1):
            for J in combinations(full, r):
                rest = [x for x in full if x not in J]
                for M in combinations(rest, p):
                    Mp = tuple(x for x in rest if x not in M)
                    for I in combinations(full, r):
                        rest2 = [x for x in full if x not in I]
                        for L in combinations(rest2, p):
                            Lp = tuple(x for x in rest2 if x not in L)
                            for vals in permutations(I):
                                yield CanonicalData(
                                    n, J, M, Mp, I, L, Lp, TwoLineArray(J, vals)
                                )


def count_orbits(n: int) -> int:
    """Sum over ``r + p + q = n`` of ``r! * multinomial(n; r, p, q)^2``."""
    if n < 1:
        raise ValueError("n must be positive")
    f = factorial
    return sum(
        f(r) * (f(n) // (f(r) * f(p) * f(n - r - p))) ** 2
        for r in range(n + 1)
        for p in range(n - r + 1)
    )
