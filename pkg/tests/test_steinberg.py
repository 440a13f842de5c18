import itertools
from collections import Counter

import pytest

from doubleflag.combinat import (
    Partition,
    Tableau,
    TwoLineArray,
    count_standard_tableaux,
    partitions,
    rs_correspondence,
    vertical_strip_leq,
)
from doubleflag.orbits import OmegaPair, PartialPermutation, enumerate_orbit_reps
from doubleflag.steinberg import gen_rs, gen_rs_from_data, phi_theta_comb


def upsilon_size(n, r, p, q):
    """Number of (T1, T2; lam', mu'; nu) with nu -> lam' -> lam, nu -> mu' -> mu."""
    total = 0
    for nu in partitions(r):
        lps = [l for l in partitions(r + p) if vertical_strip_leq(nu, l)]
        mps = [m for m in partitions(r + p) if vertical_strip_leq(nu, m)]
        for lp in lps:
            lams = [l for l in partitions(n) if vertical_strip_leq(lp, l)]
            for mp in mps:
                mus = [m for m in partitions(n) if vertical_strip_leq(mp, m)]
                total += sum(count_standard_tableaux(l) for l in lams) * sum(
                    count_standard_tableaux(m) for m in mus
                )
    return total


def test_examples():
    assert phi_theta_comb(OmegaPair.parse("1,2", "1,2")) == ((1, 1), (1, 1))
    assert phi_theta_comb(OmegaPair.parse("2,1", "1,2")) == ((2,), (2,))
    assert phi_theta_comb(OmegaPair.parse("1,0", "1,2")) == ((2,), (2,))


def test_gen_rs_examples():
    g = gen_rs(OmegaPair.parse("1,0", "1,2"))
    assert (g.nu, g.lamP, g.muP) == ((1,), (2,), (2,))
    assert (g.lam, g.mu) == ((2,), (2,))
    for n in (1, 2, 3):
        one = PartialPermutation.identity(n)
        g = gen_rs(OmegaPair(one, one))
        col = Tableau(tuple((i,) for i in range(1, n + 1)))
        assert g.nu == g.lamP == g.muP == Partition([1] * n)
        assert g.hatT1 == g.hatT2 == col


def test_r_zero_uses_only_columns():
    g = gen_rs(OmegaPair.parse("0,0,1", "1,2,0"))
    assert g.rpq == (0, 2, 1)
    assert g.nu == ()
    assert g.lamP == (1, 1) and g.muP == (1, 1)
    assert g.hatT1 == Tableau(((1, 2), (3,)))
    assert g.hatT2 == Tableau(((1,), (2,), (3,)))


def test_to_json():
    g = gen_rs(OmegaPair.parse("1,0", "1,2"))
    doc = g.to_json()
    assert set(doc) == {"hatT1", "hatT2", "lambda_prime", "mu_prime", "nu", "rpq"}
    assert doc["nu"] == [1] and doc["rpq"] == [1, 1, 0]


def test_class_function():
    a = OmegaPair.parse("2,0,1", "1,3,0")
    b = a.act((3, 1, 2))
    assert gen_rs(a) == gen_rs(b)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chain_condition(n):
    for d in enumerate_orbit_reps(n):
        g = gen_rs_from_data(d)
        r, p, q = d.rpq
        assert (g.nu.size, g.lamP.size, g.muP.size) == (r, r + p, r + p)
        assert vertical_strip_leq(g.nu, g.lamP) and vertical_strip_leq(g.lamP, g.lam)
        assert vertical_strip_leq(g.nu, g.muP) and vertical_strip_leq(g.muP, g.mu)
        assert g.hatT1.entries() == g.hatT2.entries() == set(range(1, n + 1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_injective_with_full_image(n):
    images = Counter()
    for d in enumerate_orbit_reps(n):
        images[d.rpq] += 1
        images[gen_rs_from_data(d).key() + (d.rpq,)] += 1
    keys = [k for k in images if len(k) > 3]
    assert all(images[k] == 1 for k in keys)
    for r in range(n + 1):
        for p in range(n - r + 1):
            q = n - r - p
            assert images[(r, p, q)] == upsilon_size(n, r, p, q)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_permutation_case_is_classical(n):
    one = PartialPermutation.identity(n)
    for perm in itertools.permutations(range(1, n + 1)):
        w = OmegaPair(PartialPermutation(perm), one)
        shape = rs_correspondence(TwoLineArray(tuple(range(1, n + 1)), perm))[0].shape
        assert phi_theta_comb(w) == (shape.conjugate(), shape.conjugate())
