import random

import pytest

from doubleflag.combinat import Partition, SkewTableau, Tableau
from doubleflag.exactlin import GradedNilpotent, RationalMatrix, inverse
from doubleflag.nilpotent import SignedYoungDiagram


def random_partition(rng: random.Random, size: int) -> Partition:
    parts = []
    left = size
    while left:
        p = rng.randint(1, min(left, parts[-1] if parts else left))
        parts.append(p)
        left -= p
    return Partition(parts)


def random_filling(rng: random.Random, outer, inner, entries=None) -> SkewTableau:
    """Uniformly chosen linear extension of the cells of ``outer / inner``."""
    outer, inner = Partition(outer), Partition(inner)
    cells = {(i, j) for i in range(len(outer)) for j in range(inner.part(i), outer[i])}
    if entries is None:
        entries = sorted(rng.sample(range(1, 4 * len(cells) + 2), len(cells)))
    filled = {}
    for v in sorted(entries):
        ready = [
            (i, j)
            for (i, j) in cells
            if (i, j) not in filled
            and ((i, j - 1) not in cells or (i, j - 1) in filled)
            and ((i - 1, j) not in cells or (i - 1, j) in filled)
        ]
        filled[rng.choice(ready)] = v
    rows = tuple(
        tuple(filled[i, j] for j in range(inner.part(i), outer[i])) for i in range(len(outer))
    )
    return SkewTableau(outer, inner, rows)


def random_skew(rng: random.Random, max_cells: int = 8) -> SkewTableau:
    while True:
        outer = random_partition(rng, rng.randint(1, max_cells + 4))
        inner = Partition(sorted((rng.randint(0, p) for p in outer), reverse=True))
        inner = Partition(min(a, b) for a, b in zip(inner, outer))
        cells = outer.size - inner.size
        if 1 <= cells <= max_cells:
            return random_filling(rng, outer, inner)


def random_tableau(rng: random.Random, size: int, entries=None) -> Tableau:
    s = random_filling(rng, random_partition(rng, size), (), entries)
    return Tableau(s.rows)


def nilpotent_from_diagram(d: SignedYoungDiagram) -> RationalMatrix:
    """Graded nilpotent in normal form: one Jordan chain per row.

    A row with leading sign ``s`` is a chain whose generator lies in ``V^s``.
    """
    plus, minus = d.signature()
    assert plus == minus
    n = plus
    free = {"+": iter(range(n)), "-": iter(range(n, 2 * n))}
    e = [[0] * (2 * n) for _ in range(2 * n)]
    for row in d.to_strings():
        idx = [next(free[c]) for c in row]
        for a, b in zip(idx, idx[1:]):
            e[b][a] = 1
    return RationalMatrix(e)


def random_unimodular(rng: random.Random, n: int) -> RationalMatrix:
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    return RationalMatrix([m[p] for p in perm])


def conjugate_graded(e: RationalMatrix, rng: random.Random) -> GradedNilpotent:
    """Conjugate by a random element of GL_n x GL_n (keeps the grading)."""
    n = e.nrows // 2
    zero = RationalMatrix.zeros(n, n)
    k = RationalMatrix.block(
        [[random_unimodular(rng, n), zero], [zero, random_unimodular(rng, n)]]
    )
    # scale one block so the entries are not all integral
    k = k.scale(1) if rng.random() < 0.5 else RationalMatrix.block(
        [[k.sub(0, n, 0, n), zero], [zero, k.sub(n, 2 * n, n, 2 * n).scale(2)]]
    )
    return GradedNilpotent.from_matrix(k @ e @ inverse(k))


@pytest.fixture
def rng():
    return random.Random(20240613)
