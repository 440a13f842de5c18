import pytest

from doubleflag.ci import (
    CIOrbitLabel,
    build_xi,
    check_commutativity,
    check_xi,
    enumerate_ci_orbits,
    is_sigma_stable,
    sigma_on_orbit,
    xi_matrix,
)
from doubleflag.exactlin import rank_rational
from doubleflag.nilpotent import sigma_on_syd
from doubleflag.oracle import phi_oracle_aiii
from doubleflag.orbits import OmegaPair, PartialPermutation, canonicalize, enumerate_orbit_reps

HALF = OmegaPair.parse("1,0", "1,2")
SHIFT = OmegaPair.parse("2,0", "1,2")


def symmetric(a, b):
    m = a.matrix().T @ b.matrix()
    return m == m.T


def test_stability_examples():
    for n in (1, 2, 3):
        one = PartialPermutation.identity(n)
        assert is_sigma_stable(OmegaPair(one, one))
    assert is_sigma_stable(OmegaPair.parse("2,1", "1,2"))
    assert not is_sigma_stable(SHIFT)
    with pytest.raises(ValueError):
        CIOrbitLabel(SHIFT)


def test_build_xi_examples():
    xi1, xi2 = build_xi(HALF)
    assert xi1 == PartialPermutation.identity(2) and xi2 == PartialPermutation.parse("1,0")
    assert xi1.matrix().T @ HALF.tau1.matrix() == xi2.matrix().T @ HALF.tau2.matrix()
    one = PartialPermutation.identity(3)
    assert build_xi(OmegaPair(one, one)) == (one, one)
    xi1, xi2 = build_xi(SHIFT)
    assert xi1 == PartialPermutation.parse("2,1") and xi2 == PartialPermutation.parse("1,0")
    assert rank_rational(xi_matrix(SHIFT, (xi1, xi2))) == 4


def test_sigma_examples():
    assert sigma_on_orbit(HALF) == canonicalize(HALF)[0].omega()
    other = sigma_on_orbit(SHIFT)
    assert other != canonicalize(SHIFT)[0].omega()
    assert sigma_on_orbit(other) == canonicalize(SHIFT)[0].omega()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_xi_and_sigma_properties(n):
    for d in enumerate_orbit_reps(n):
        w = d.omega()
        for tie in ("ascending", "descending"):
            assert check_xi(w, build_xi(w, tie))
        s = sigma_on_orbit(w)
        assert sigma_on_orbit(s) == w
        assert sigma_on_orbit(w, "descending") == s
        stable = is_sigma_stable(w)
        assert stable == symmetric(w.tau1, w.tau2) == symmetric(w.tau2, w.tau1)
        assert (s == w) == stable


def test_bad_tie_break():
    with pytest.raises(ValueError):
        build_xi(HALF, "sideways")


def test_ci_enumeration():
    assert len(enumerate_ci_orbits(1)) == 3
    two = enumerate_ci_orbits(2)
    assert len(two) < 16
    assert canonicalize(SHIFT)[0].omega() not in {c.omega for c in two}
    assert [len(enumerate_ci_orbits(n)) for n in (3, 4)] == [36, 138]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exotic_map_is_equivariant(n):
    for d in enumerate_orbit_reps(n):
        w = d.omega()
        (lam, mu), syd = phi_oracle_aiii(w)
        (lam2, mu2), syd2 = phi_oracle_aiii(sigma_on_orbit(w))
        assert syd2 == sigma_on_syd(syd)
        assert (lam2, mu2) == (mu, lam)


def test_commutativity_small():
    for n, total in ((1, 3), (2, 10)):
        rep = check_commutativity(n, seed=3)
        assert rep.ok and rep.passed == rep.sigma_stable == total
    doc = check_commutativity(1).to_json()
    assert doc["failed"] == [] and doc["total"] == 3
