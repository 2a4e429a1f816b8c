import random

import pytest
import sympy

from oracles import brute_irreducible
from skewmul.algebra import (Kind, alg_make, alg_mul, alg_one, alg_pow, alg_random, alg_add,
                             fixed_space_dim, kummer_c_is_valid, sigma_pow, taylor_shift)
from skewmul.errors import NoIrreducible, NoRootOfUnity, NotCharR, SmallField
from skewmul.field import FieldContext

DESCRIPTORS = [
    (Kind.SPLIT, 101, 8), (Kind.SPLIT, 101, 25),
    (Kind.KUMMER, 97, 8), (Kind.KUMMER, 97, 16), (Kind.KUMMER, 193, 32),
    (Kind.ARTIN, 7, 7), (Kind.ARTIN, 13, 13),
]


def make(kind, p, r, **kw):
    return alg_make(kind, p, r, **kw)


def test_make_examples():
    k = alg_make("kummer", 5, 4, c=2, require_large_field=False)
    assert k.zeta in (2, 3) and k.c == 2
    assert brute_irreducible([-2 % 5, 0, 0, 0, 1], 5)
    assert brute_irreducible([-1 % 5, -1 % 5, 0, 0, 0, 1], 5)
    a = alg_make("artin", 5, 5, c=1)
    assert a.c == 1
    assert alg_make("split", 101, 8).r == 8


def test_make_errors():
    with pytest.raises(NoRootOfUnity):
        alg_make("kummer", 101, 12)
    with pytest.raises(NotCharR):
        alg_make("artin", 7, 5)
    with pytest.raises(SmallField):
        alg_make("split", 7, 4)
    with pytest.raises(NoIrreducible):
        alg_make("kummer", 5, 4, c=4, require_large_field=False)  # 4 = 2^2 is a square


def test_make_is_deterministic():
    assert alg_make("kummer", 97, 8, seed=5) == alg_make("kummer", 97, 8, seed=5)


@pytest.mark.parametrize("p,r", [(5, 2), (5, 4), (7, 3), (7, 6), (13, 4), (13, 12), (97, 8), (97, 16), (37, 9)])
def test_kummer_criterion_matches_factorisation(p, r):
    t = sympy.Symbol("t")
    for c in range(1, p):
        expected = sympy.Poly(t**r - c, t, modulus=p).is_irreducible
        assert kummer_c_is_valid(c, p, r) == expected, (p, r, c)


@pytest.mark.parametrize("kind,p,r", [(Kind.KUMMER, 97, 8), (Kind.KUMMER, 193, 32), (Kind.ARTIN, 13, 13)])
def test_constructed_polynomial_is_irreducible(kind, p, r):
    d = alg_make(kind, p, r, seed=3)
    t = sympy.Symbol("t")
    poly = t**r - d.c if kind is Kind.KUMMER else t**r - t - d.c
    assert sympy.Poly(poly, t, modulus=p).is_irreducible


def test_mul_examples():
    k = alg_make("kummer", 5, 4, c=2, require_large_field=False)
    assert alg_mul([0, 0, 0, 1], [0, 0, 1, 0], k) == [0, 2, 0, 0]
    a = alg_make("artin", 5, 5, c=1)
    assert alg_mul([0, 0, 0, 0, 1], [0, 1, 0, 0, 0], a) == [1, 1, 0, 0, 0]
    s = alg_make("split", 101, 4)
    assert alg_mul([1, 2, 3, 4], [1, 1, 1, 1], s) == [1, 2, 3, 4]


@pytest.mark.parametrize("kind,p,r", DESCRIPTORS)
def test_ring_axioms(kind, p, r):
    d = make(kind, p, r)
    for s in range(20):
        u, v, w = (alg_random(d, 3 * s + i) for i in range(3))
        assert alg_mul(alg_mul(u, v, d), w, d) == alg_mul(u, alg_mul(v, w, d), d)
        assert alg_mul(u, v, d) == alg_mul(v, u, d)
        assert alg_mul(u, alg_add(v, w, d), d) == alg_add(alg_mul(u, v, d), alg_mul(u, w, d), d)
        assert alg_mul(u, alg_one(d), d) == u


def test_generator_powers():
    k = alg_make("kummer", 97, 8, seed=1)
    a = [0, 1] + [0] * 6
    assert alg_pow(a, 8, k) == [k.c] + [0] * 7
    art = alg_make("artin", 7, 7, c=3)
    a = [0, 1] + [0] * 5
    assert alg_pow(a, 7, art) == [3, 1, 0, 0, 0, 0, 0]


def test_sigma_examples():
    s = alg_make("split", 101, 4)
    assert sigma_pow([1, 0, 0, 0], 1, s) == [0, 0, 0, 1]
    k = alg_make("kummer", 97, 8)
    a = [0, 1] + [0] * 6
    assert sigma_pow(a, 1, k) == [0, k.zeta] + [0] * 6
    art = alg_make("artin", 5, 5, c=1)
    assert sigma_pow([0, 0, 1, 0, 0], 1, art) == [1, 2, 1, 0, 0]


def test_taylor_shift_against_binomials():
    p, F, rng = 13, FieldContext(13), random.Random(0)
    u = [rng.randrange(p) for _ in range(13)]
    for s in (1, 5, 12):
        expected = [0] * 13
        for j, c in enumerate(u):
            for k in range(j + 1):
                expected[k] = (expected[k] + c * sympy.binomial(j, k) * pow(s, j - k, p)) % p
        assert taylor_shift(u, s, F) == expected


@pytest.mark.parametrize("kind,p,r", DESCRIPTORS)
def test_sigma_is_an_automorphism_of_order_r(kind, p, r):
    d = make(kind, p, r)
    for s in range(10):
        u, v = alg_random(d, 2 * s), alg_random(d, 2 * s + 1)
        su, sv = sigma_pow(u, 1, d), sigma_pow(v, 1, d)
        assert sigma_pow(alg_mul(u, v, d), 1, d) == alg_mul(su, sv, d)
        assert sigma_pow(alg_add(u, v, d), 1, d) == alg_add(su, sv, d)
        assert sigma_pow(u, r, d) == u
        assert sigma_pow(sigma_pow(u, 3, d), -3, d) == u
    assert fixed_space_dim(d) == 1


def test_random_elements():
    d = alg_make("kummer", 97, 8)
    assert alg_random(d, 42) == alg_random(d, 42)
    assert alg_random(d, 0) == alg_random(d, 0)
    distinct = {tuple(alg_random(d, s)) for s in range(100)}
    assert len(distinct) == 100
