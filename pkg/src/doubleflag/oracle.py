"""Geometric Steinberg oracle built from explicit conormal fibers.

At the base point ``(B_n^+ x B_n^-, P_omega)`` the conormal fiber is the
space of ``x`` in gl_2n with ``Im x`` inside ``W = [omega]``, ``x W = 0``,
upper-left block strictly upper triangular and lower-right block strictly
lower triangular.  A generic element of the fiber lands in the dense orbit
of the image of the conormal bundle, so its ``x^theta`` (diagonal blocks)
and ``x^-theta`` (off-diagonal blocks) give the Steinberg maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .ci import is_sigma_stable
from .combinat import Partition
from .exactlin import (
    GradedNilpotent,
    LinearSubspace,
    RationalMatrix,
    jordan_type_nilpotent,
    kernel_basis,
    rank_rational,
    signed_diagram_graded,
)
from .nilpotent import SignedYoungDiagram, is_ci_diagram
from .orbits import OmegaPair, _require_valid

__all__ = [
    "ConormalFiber",
    "GenericityError",
    "NotSigmaStableError",
    "annihilator",
    "symplectic_form",
    "conormal_fiber_basis",
    "ci_conormal_fiber_basis",
    "sample_generic",
    "rank_profile",
    "phi_oracle_aiii",
    "phi_oracle_ci",
    "orbit_dimension",
    "ambient_dimension",
    "DEFAULT_TRIALS",
    "DEFAULT_BOUND",
]

AIII = "AIII"
CI = "CI"
DEFAULT_TRIALS = 5
DEFAULT_BOUND = 100
_RETRIES = 4


class GenericityError(RuntimeError):
    """No sample dominated all others; raise ``trials`` or ``bound``."""


class NotSigmaStableError(ValueError):
    pass


@dataclass(frozen=True)
class ConormalFiber:
    n: int
    omega: OmegaPair
    space: LinearSubspace
    flavor: str = AIII

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_matrices(self) -> list[RationalMatrix]:
        m = 2 * self.n
        return [RationalMatrix.unflatten(b, m, m) for b in self.space.basis]


def annihilator(w: OmegaPair) -> RationalMatrix:
    """An ``n x 2n`` matrix of rank ``n`` whose kernel is ``[omega]``."""
    n = w.n
    rows = []
    used = set()
    for j in range(1, n + 1):
        a, b = w.tau1(j), w.tau2(j)
        if a and b:
            row = [0] * (2 * n)
            row[a - 1] = 1
            row[n + b - 1] = -1
            rows.append(row)
        if a:
            used.add(a - 1)
        if b:
            used.add(n + b - 1)
    for c in range(2 * n):
        if c not in used:
            row = [0] * (2 * n)
            row[c] = 1
            rows.append(row)
    return RationalMatrix(rows, 2 * n)


def symplectic_form(n: int) -> RationalMatrix:
    """``J_n = (0 -1; 1 0)``."""
    z = RationalMatrix.zeros(n, n)
    one = RationalMatrix.identity(n)
    return RationalMatrix.block([[z, -one], [one, z]])


def _in_fiber_mask(n: int) -> list[tuple[int, int]]:
    """Entries forced to vanish: ``x11`` on/below and ``x22`` on/above the diagonal."""
    out = [(i, j) for i in range(n) for j in range(n) if i >= j]
    out += [(n + i, n + j) for i in range(n) for j in range(n) if j >= i]
    return out


def conormal_fiber_basis(w: OmegaPair) -> ConormalFiber:
    """Basis of the AIII conormal fiber at the base point of ``[omega]``.

    The nilradical of the stabilizer of ``W`` is ``{omega C eta}`` with
    ``eta`` the annihilator of ``W``; the triangularity constraints are
    solved for ``C``.
    """
    _require_valid(w)
    n = w.n
    om = w.matrix()
    eta = annihilator(w)
    # x[i][j] = sum_{a,b} om[i][a] C[a][b] eta[b][j]
    eqs = []
    for i, j in _in_fiber_mask(n):
        eqs.append([om[i, a] * eta[b, j] for a in range(n) for b in range(n)])
    ker = kernel_basis(RationalMatrix(eqs, n * n))
    mats = []
    for c in ker.basis:
        cm = RationalMatrix.unflatten(c, n, n)
        mats.append((om @ cm @ eta).flatten())
    space = LinearSubspace.span(mats, 4 * n * n)
    return ConormalFiber(n, w, space, AIII)


def ci_conormal_fiber_basis(w: OmegaPair) -> ConormalFiber:
    """Elements of the AIII fiber lying in sp_2n (``x^T J + J x = 0``)."""
    if not is_sigma_stable(w):
        raise NotSigmaStableError(f"{w} is not sigma-stable")
    fib = conormal_fiber_basis(w)
    n = w.n
    jn = symplectic_form(n)
    mats = fib.basis_matrices()
    if not mats:
        return ConormalFiber(n, w, fib.space, CI)
    cond = [(b.T @ jn + jn @ b).flatten() for b in mats]
    ker = kernel_basis(RationalMatrix.from_columns(cond, 4 * n * n))
    vecs = [
        [sum(c * b[t] for c, b in zip(coef, fib.space.basis)) for t in range(4 * n * n)]
        for coef in ker.basis
    ]
    return ConormalFiber(n, w, LinearSubspace.span(vecs, 4 * n * n), CI)


def _blocks(x: RationalMatrix, n: int):
    x11 = x.sub(0, n, 0, n)
    x22 = x.sub(n, 2 * n, n, 2 * n)
    zero = RationalMatrix.zeros(n, n)
    e = RationalMatrix.block(
        [[zero, x.sub(0, n, n, 2 * n)], [x.sub(n, 2 * n, 0, n), zero]]
    )
    return x11, x22, e


def _power_rank_list(a: RationalMatrix, kmax: int, split: int | None = None) -> list[int]:
    out = []
    p = a
    for _ in range(kmax):
        if split is None:
            out.append(rank_rational(p))
        else:
            out.append(rank_rational(p.sub(0, p.nrows, 0, split)))
            out.append(rank_rational(p.sub(0, p.nrows, split, p.ncols)))
        p = p @ a
    return out


def rank_profile(x: RationalMatrix, n: int) -> tuple[int, ...]:
    """Ranks that are lower semicontinuous on the fiber.

    Ranks of powers of ``x11``, ``x22``, and of ``e^k`` restricted to
    ``V+`` and to ``V-``.  A generic fiber element maximizes every entry.
    """
    x11, x22, e = _blocks(x, n)
    return tuple(
        _power_rank_list(x11, n)
        + _power_rank_list(x22, n)
        + _power_rank_list(e, 2 * n, split=n)
    )


def _seed_sequence(seed, key: Sequence[int] = ()) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))


def _orbit_key(f: ConormalFiber) -> tuple[int, ...]:
    return (0 if f.flavor == AIII else 1,) + tuple(f.omega.tau1) + tuple(f.omega.tau2)


def sample_generic(
    f: ConormalFiber,
    seed=0,
    trials: int = DEFAULT_TRIALS,
    bound: int = DEFAULT_BOUND,
) -> RationalMatrix:
    """A fiber element whose rank profile dominates ``trials`` random samples.

    Coefficients are uniform integers in ``[-bound, bound]`` from a Philox
    generator keyed by ``seed`` and the orbit, so results do not depend on
    evaluation order.
    """
    if trials < 1 or bound < 1:
        raise ValueError("trials and bound must be positive")
    m = 2 * f.n
    if f.dim == 0:
        return RationalMatrix.zeros(m, m)
    rng = np.random.Generator(np.random.Philox(_seed_sequence(seed, _orbit_key(f))))
    basis = f.space.basis
    for _ in range(_RETRIES):
        samples = []
        for _ in range(trials):
            coef = [int(c) for c in rng.integers(-bound, bound + 1, size=len(basis))]
            vec = [sum(c * b[t] for c, b in zip(coef, basis)) for t in range(m * m)]
            x = RationalMatrix.unflatten(vec, m, m)
            samples.append((rank_profile(x, f.n), x))
        best = [max(col) for col in zip(*(p for p, _ in samples))]
        for prof, x in samples:
            if list(prof) == best:
                return x
    raise GenericityError(
        f"no dominant sample for {f.omega} after {_RETRIES} rounds of {trials}"
    )


def _check_sample(x: RationalMatrix, n: int):
    if not (x @ x).is_zero():
        raise AssertionError("fiber element does not square to zero")
    _, _, e = _blocks(x, n)
    if not e.power(2 * n).is_zero():
        raise AssertionError("x^-theta is not nilpotent")


def _invariants(x: RationalMatrix, n: int):
    _check_sample(x, n)
    x11, x22, e = _blocks(x, n)
    syd = signed_diagram_graded(GradedNilpotent.from_matrix(e))
    if syd.signature() != (n, n):
        raise AssertionError(f"signed diagram {syd} has the wrong signature")
    if syd.shape != jordan_type_nilpotent(e):
        raise AssertionError("signed diagram disagrees with the Jordan type")
    return jordan_type_nilpotent(x11), jordan_type_nilpotent(x22), syd


def phi_oracle_aiii(
    w: OmegaPair, seed=0, trials: int = DEFAULT_TRIALS, bound: int = DEFAULT_BOUND
) -> tuple[tuple[Partition, Partition], SignedYoungDiagram]:
    """Generalized and exotic Steinberg maps of the class of ``w``."""
    f = conormal_fiber_basis(w)
    x = sample_generic(f, seed, trials, bound)
    lam, mu, syd = _invariants(x, w.n)
    return (lam, mu), syd


def phi_oracle_ci(
    w: OmegaPair, seed=0, trials: int = DEFAULT_TRIALS, bound: int = DEFAULT_BOUND
) -> tuple[Partition, SignedYoungDiagram]:
    """CI Steinberg maps of the K-orbit cut out by a sigma-stable class."""
    f = ci_conormal_fiber_basis(w)
    x = sample_generic(f, seed, trials, bound)
    lam, mu, syd = _invariants(x, w.n)
    if lam != mu:
        raise AssertionError("x22 = -x11^T must share the Jordan type of x11")
    if not is_ci_diagram(syd):
        raise AssertionError(f"CI exotic image {syd} violates the odd-row pairing")
    return lam, syd


def ambient_dimension(n: int, flavor: str = AIII) -> int:
    """Gr_n(C^2n) x two flag varieties, or LGrass(C^2n) x one flag variety."""
    if flavor == AIII:
        return n * n + n * (n - 1)
    if flavor == CI:
        return n * (n + 1) // 2 + n * (n - 1) // 2
    raise ValueError(f"unknown flavor {flavor!r}")


def orbit_dimension(w: OmegaPair, flavor: str = AIII) -> int:
    """``dim K - dim (b_K n p_omega)`` at the base point."""
    _require_valid(w)
    n = w.n
    if flavor == CI and not is_sigma_stable(w):
        raise NotSigmaStableError(f"{w} is not sigma-stable")
    om = w.matrix()
    eta = annihilator(w)
    upper = [(i, j) for i in range(n) for j in range(n) if i <= j]
    if flavor == AIII:
        # k = diag(a, d): a upper, d lower triangular
        unknowns = [[((i, j), 1)] for i, j in upper]
        unknowns += [[((n + j, n + i), 1)] for i, j in upper]
        group_dim = 2 * n * n
    elif flavor == CI:
        # k = diag(a, -a^T)
        unknowns = [[((i, j), 1), ((n + j, n + i), -1)] for i, j in upper]
        group_dim = n * n
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    # column u of the system holds eta k_u omega for the u-th elementary k_u
    cols = []
    for entries in unknowns:
        col = []
        for b in range(n):
            for c in range(n):
                col.append(sum(s * eta[b, i] * om[j, c] for (i, j), s in entries))
        cols.append(col)
    system = RationalMatrix.from_columns(cols, n * n)
    stab = len(unknowns) - rank_rational(system)
    return group_dim - stab
