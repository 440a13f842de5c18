"""Labels of nilpotent orbits: partition pairs and signed Young diagrams."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .combinat import Partition, partitions

__all__ = [
    "SignedYoungDiagram",
    "NilpotentLabelTheta",
    "enumerate_syd",
    "is_ci_diagram",
    "sigma_on_syd",
    "embed_nilpotent_label",
    "NotCIError",
]

_SIGNS = ("+", "-")


class NotCIError(ValueError):
    """A diagram outside SYD_CI was given where one was required."""


def _flip(sign: str) -> str:
    return "-" if sign == "+" else "+"


def _row_string(length: int, sign: str) -> str:
    other = _flip(sign)
    return "".join(sign if k % 2 == 0 else other for k in range(length))


@dataclass(frozen=True)
class SignedYoungDiagram:
    """Multiset of alternating rows, each a ``(length, leading sign)`` pair.

    Rows are kept sorted by length descending, ``+`` before ``-``, so that
    equality is multiset equality.
    """

    rows: tuple[tuple[int, str], ...]

    def __post_init__(self):
        rows = []
        for length, sign in self.rows:
            if int(length) < 1 or sign not in _SIGNS:
                raise ValueError(f"bad row {(length, sign)!r}")
            rows.append((int(length), sign))
        rows.sort(key=lambda r: (-r[0], r[1] != "+"))
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def parse(cls, strings: Iterable[str]) -> "SignedYoungDiagram":
        """Build from row strings such as ``["+-+", "-"]``."""
        rows = []
        for s in strings:
            s = s.replace("−", "-")
            if not s or any(c not in _SIGNS for c in s):
                raise ValueError(f"bad row string {s!r}")
            if any(a == b for a, b in zip(s, s[1:])):
                raise ValueError(f"signs must alternate: {s!r}")
            rows.append((len(s), s[0]))
        return cls(tuple(rows))

    def to_strings(self) -> list[str]:
        return [_row_string(length, sign) for length, sign in self.rows]

    def __str__(self) -> str:
        return "{" + ",".join(self.to_strings()) + "}"

    @property
    def shape(self) -> Partition:
        return Partition(length for length, _ in self.rows)

    def signature(self) -> tuple[int, int]:
        plus = minus = 0
        for s in self.to_strings():
            plus += s.count("+")
            minus += s.count("-")
        return plus, minus


@dataclass(frozen=True)
class NilpotentLabelTheta:
    """Pair of Jordan types labelling a nilpotent orbit of GL_n x GL_n."""

    pair: tuple[Partition, Partition]

    def __post_init__(self):
        a, b = (Partition(p) for p in self.pair)
        if a.size != b.size:
            raise ValueError("both partitions must have the same size")
        object.__setattr__(self, "pair", (a, b))


def enumerate_syd(n: int) -> list[SignedYoungDiagram]:
    """All signed Young diagrams of signature ``(n, n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for lam in partitions(2 * n):
        mult = sorted(Counter(lam).items(), reverse=True)
        # for each row length choose how many of its rows lead with "+"
        for choice in product(*(range(m + 1) for _, m in mult)):
            rows = []
            for (length, m), k in zip(mult, choice):
                rows += [(length, "+")] * k + [(length, "-")] * (m - k)
            d = SignedYoungDiagram(tuple(rows))
            if d.signature() == (n, n):
                out.append(d)
    return out


def is_ci_diagram(d: SignedYoungDiagram) -> bool:
    """Odd rows pair up into equal lengths with opposite leading signs."""
    c = Counter(d.rows)
    return all(
        c[length, "+"] == c[length, "-"] for length, _ in c if length % 2 == 1
    )


def sigma_on_syd(d: SignedYoungDiagram) -> SignedYoungDiagram:
    """Swap the leading sign of every odd-length row."""
    return SignedYoungDiagram(
        tuple(
            (length, _flip(sign) if length % 2 else sign) for length, sign in d.rows
        )
    )


def embed_nilpotent_label(x, direction: str = "theta"):
    """Orbit embedding of CI nilpotent labels into AIII labels.

    ``direction="theta"`` sends a partition ``lam`` to the pair
    ``(lam, lam)``; ``direction="-theta"`` is the inclusion of SYD_CI into
    SYD and rejects diagrams outside SYD_CI.
    """
    if direction == "theta":
        lam = Partition(x)
        return NilpotentLabelTheta((lam, lam))
    if direction == "-theta":
        if not isinstance(x, SignedYoungDiagram):
            x = SignedYoungDiagram.parse(x)
        if not is_ci_diagram(x):
            raise NotCIError(f"{x} violates the odd-row pairing condition")
        return x
    raise ValueError(f"unknown direction {direction!r}")


def diagrams_from_strings(data: Sequence[Sequence[str]]) -> list[SignedYoungDiagram]:
    return [SignedYoungDiagram.parse(rows) for rows in data]


def iter_ci_syd(n: int) -> Iterator[SignedYoungDiagram]:
    return (d for d in enumerate_syd(n) if is_ci_diagram(d))
