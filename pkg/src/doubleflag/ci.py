"""Type CI orbits inside type AIII.

``Sp_2n / P_S x GL_n / B_n^+`` embeds into the AIII double flag variety as
the fixed points of ``sigma(g) = J^-1 (g^T)^-1 J``.  A class ``omega`` meets
the CI variety exactly when ``tau1^T tau2`` is symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactlin import RationalMatrix, rank_rational
from .nilpotent import embed_nilpotent_label
from .orbits import (
    CanonicalData,
    OmegaPair,
    PartialPermutation,
    _require_valid,
    canonicalize,
    enumerate_orbit_reps,
)

__all__ = [
    "CIOrbitLabel",
    "is_sigma_stable",
    "build_xi",
    "xi_matrix",
    "sigma_on_orbit",
    "enumerate_ci_orbits",
    "check_commutativity",
    "CommutativityReport",
]


def is_sigma_stable(w: OmegaPair) -> bool:
    """``tau1^T tau2`` is symmetric, i.e. ``[omega]`` is Lagrangian."""
    _require_valid(w)
    # (tau1^T tau2)[i][j] = 1 iff tau1(i) = tau2(j) != 0
    pairs = {}
    for j in range(1, w.n + 1):
        if w.tau2(j):
            pairs[w.tau2(j)] = j
    edges = {(i, pairs[w.tau1(i)]) for i in range(1, w.n + 1) if w.tau1(i) in pairs}
    return all((j, i) in edges for i, j in edges)


@dataclass(frozen=True)
class CIOrbitLabel:
    omega: OmegaPair

    def __post_init__(self):
        if not is_sigma_stable(self.omega):
            raise ValueError(f"{self.omega}: tau1^T tau2 is not symmetric")


def build_xi(
    w: OmegaPair, tie_break: str = "ascending"
) -> tuple[PartialPermutation, PartialPermutation]:
    """Partial permutations ``xi1, xi2`` completing ``omega`` to ``g``.

    ``g = (tau1 xi1; tau2 -xi2)`` is invertible and
    ``xi1^T tau1 = xi2^T tau2``.  Columns are ordered ``J, M, M'``; rows
    of ``tau1`` follow ``tau1`` on ``J``, then ``L``, then ``tau1`` on
    ``M'``, and rows of ``tau2`` follow ``tau2`` on ``J u M``, then the
    rest.  ``tie_break`` orders the unconstrained rows (``L`` and the
    rows missed by ``tau2``) ascending or descending.
    """
    _require_valid(w)
    n = w.n
    t1, t2 = w.tau1, w.tau2
    cols = range(1, n + 1)
    J = [j for j in cols if t1(j) and t2(j)]
    M = [j for j in cols if not t1(j)]
    Mp = [j for j in cols if not t2(j)]
    r, p = len(J), len(M)
    rev = tie_break == "descending"
    if tie_break not in ("ascending", "descending"):
        raise ValueError(f"unknown tie_break {tie_break!r}")
    hit1 = {t1(j) for j in J + Mp}
    rows1 = [t1(j) for j in J] + sorted(set(cols) - hit1, reverse=rev) + [t1(j) for j in Mp]
    hit2 = {t2(j) for j in J + M}
    rows2 = [t2(j) for j in J + M] + sorted(set(cols) - hit2, reverse=rev)
    xi1 = [rows1[k] if k < r + p else 0 for k in range(n)]
    xi2 = [rows2[k] if k < r or k >= r + p else 0 for k in range(n)]
    return PartialPermutation(xi1), PartialPermutation(xi2)


def xi_matrix(w: OmegaPair, xi: tuple[PartialPermutation, PartialPermutation]) -> RationalMatrix:
    """``g = (tau1 xi1; tau2 -xi2)``."""
    return RationalMatrix.block(
        [
            [w.tau1.matrix(), xi[0].matrix()],
            [w.tau2.matrix(), -xi[1].matrix()],
        ]
    )


def check_xi(w: OmegaPair, xi: tuple[PartialPermutation, PartialPermutation]) -> bool:
    a, b = xi[0].matrix(), xi[1].matrix()
    if not all(x or y for x, y in zip(*xi)):
        return False
    if a.T @ w.tau1.matrix() != b.T @ w.tau2.matrix():
        return False
    return rank_rational(xi_matrix(w, xi)) == 2 * w.n


def sigma_on_orbit(w: OmegaPair, tie_break: str = "ascending") -> OmegaPair:
    """Canonical representative of ``sigma(omega) = (xi2; xi1)``."""
    xi1, xi2 = build_xi(w, tie_break)
    return canonicalize(OmegaPair(xi2, xi1))[0].omega()


def enumerate_ci_orbits(n: int) -> list[CIOrbitLabel]:
    return [
        CIOrbitLabel(d.omega())
        for d in enumerate_orbit_reps(n)
        if is_sigma_stable(d.omega())
    ]


@dataclass
class CommutativityReport:
    n: int
    total: int
    sigma_stable: int = 0
    passed: int = 0
    failed: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed and self.passed == self.sigma_stable

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "sigma_stable": self.sigma_stable,
            "passed": self.passed,
            "failed": self.failed,
        }


def _check_one(data: CanonicalData, seed, trials, bound) -> dict | None:
    from .oracle import GenericityError, phi_oracle_aiii, phi_oracle_ci

    w = data.omega()
    record = {"tau1": str(w.tau1), "tau2": str(w.tau2)}
    try:
        lam, syd = phi_oracle_ci(w, seed, trials, bound)
        big, big_syd = phi_oracle_aiii(w, seed, trials, bound)
    except GenericityError as exc:
        record["error"] = str(exc)
        return record
    expected = embed_nilpotent_label(lam, "theta").pair
    if big == expected and big_syd == embed_nilpotent_label(syd, "-theta"):
        return None
    record.update(
        ci_theta=list(lam),
        ci_minus_theta=syd.to_strings(),
        aiii_theta=[list(p) for p in big],
        aiii_minus_theta=big_syd.to_strings(),
    )
    return record


def check_commutativity(
    n: int, seed=0, trials: int | None = None, bound: int | None = None
) -> CommutativityReport:
    """Compare the CI Steinberg maps with the AIII ones on every sigma-stable class."""
    from .oracle import DEFAULT_BOUND, DEFAULT_TRIALS

    trials = DEFAULT_TRIALS if trials is None else trials
    bound = DEFAULT_BOUND if bound is None else bound
    reps = list(enumerate_orbit_reps(n))
    report = CommutativityReport(n, len(reps))
    for d in reps:
        if not is_sigma_stable(d.omega()):
            continue
        report.sigma_stable += 1
        bad = _check_one(d, seed, trials, bound)
        if bad is None:
            report.passed += 1
        else:
            report.failed.append(bad)
    return report
