"""Combinatorial generalized Steinberg map and generalized RS correspondence."""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import (
    Partition,
    Tableau,
    column_tableau,
    jdt_rectify,
    rs_correspondence,
    star_concat,
    transpose_tableau,
)
from .orbits import CanonicalData, OmegaPair, canonicalize

__all__ = ["GenRSTuple", "gen_rs", "gen_rs_from_data", "phi_theta_comb"]


def _rect(*pieces: Tableau) -> Tableau:
    return jdt_rectify(star_concat(pieces))


@dataclass(frozen=True)
class GenRSTuple:
    hatT1: Tableau
    hatT2: Tableau
    lamP: Partition
    muP: Partition
    nu: Partition
    rpq: tuple[int, int, int]

    @property
    def lam(self) -> Partition:
        return self.hatT1.shape

    @property
    def mu(self) -> Partition:
        return self.hatT2.shape

    def key(self) -> tuple:
        return (self.hatT1.rows, self.hatT2.rows, self.lamP, self.muP, self.nu)

    def to_json(self) -> dict:
        return {
            "hatT1": self.hatT1.to_json(),
            "hatT2": self.hatT2.to_json(),
            "lambda_prime": list(self.lamP),
            "mu_prime": list(self.muP),
            "nu": list(self.nu),
            "rpq": list(self.rpq),
        }


def gen_rs_from_data(data: CanonicalData) -> GenRSTuple:
    t1, t2 = rs_correspondence(data.sigma)
    u1, u2 = transpose_tableau(t1), transpose_tableau(t2)
    inner1 = _rect(u1, column_tableau(data.L))
    inner2 = _rect(u2, column_tableau(data.M))
    hat1 = _rect(column_tableau(data.Lp), u1, column_tableau(data.L))
    hat2 = _rect(column_tableau(data.Mp), u2, column_tableau(data.M))
    return GenRSTuple(hat1, hat2, inner1.shape, inner2.shape, u1.shape, data.rpq)


def gen_rs(w: OmegaPair) -> GenRSTuple:
    return gen_rs_from_data(canonicalize(w)[0])


def phi_theta_comb(w: OmegaPair) -> tuple[Partition, Partition]:
    """``(lambda, mu)``: shapes of ``Rect([L'] * tT1 * [L])`` and ``Rect([M'] * tT2 * [M])``."""
    g = gen_rs(w)
    return g.lam, g.mu
