import pytest

from skewmul.algebra import alg_mul, alg_random, sigma_pow
from skewmul.errors import NoPrimitive, NotATower
from skewmul.skew import SkewPoly, naive_mul, skew_random
from skewmul.tower import tower_dispatch, tower_make, tower_mul_inner, tower_mul_outer, tower_path


def pairs(tw, d, n, base=0):
    for s in range(n):
        yield skew_random(tw.outer, d, base + 2 * s), skew_random(tw.outer, d, base + 2 * s + 1)


def test_make_errors():
    with pytest.raises(NotATower):
        tower_make(101, 4, 10)
    with pytest.raises(NotATower):
        tower_make(101, 1, 10)
    with pytest.raises(NoPrimitive):
        tower_make(3, 2, 8)


def test_embedding_commutes_with_sigma():
    tw = tower_make(101, 4, 12)
    for s in range(10):
        u = alg_random(tw.inner, s)
        up = tw.embed(u)
        assert sigma_pow(up, 1, tw.outer) == tw.embed(sigma_pow(u, 1, tw.inner))
        assert sigma_pow(up, 4, tw.outer) == up
        assert tw.restrict(up) == u


def test_embedding_is_a_ring_map():
    tw = tower_make(101, 5, 10)
    u, v = alg_random(tw.inner, 1), alg_random(tw.inner, 2)
    assert tw.embed(alg_mul(u, v, tw.inner)) == alg_mul(tw.embed(u), tw.embed(v), tw.outer)


def test_trivial_tower():
    tw = tower_make(101, 6, 6)
    for f, g in pairs(tw, 4, 10):
        assert tower_mul_outer(f, g, tw) == naive_mul(f, g) == tower_mul_inner(f, g, tw)


@pytest.mark.parametrize("r1,r2,d", [(4, 12, 2), (4, 12, 7), (5, 10, 3), (3, 12, 9), (2, 8, 5)])
def test_outer_path(r1, r2, d):
    tw = tower_make(101, r1, r2)
    for f, g in pairs(tw, d, 25):
        assert tower_mul_outer(f, g, tw) == naive_mul(f, g)


@pytest.mark.parametrize("r1,r2,d", [(5, 10, 1), (4, 12, 1), (6, 18, 1), (3, 12, 4)])
def test_inner_path(r1, r2, d):
    tw = tower_make(101, r1, r2)
    for f, g in pairs(tw, d, 25):
        assert tower_mul_inner(f, g, tw) == naive_mul(f, g)


def test_inner_degree_zero_is_algebra_product():
    tw = tower_make(101, 5, 10)
    u, v = alg_random(tw.outer, 1), alg_random(tw.outer, 2)
    h = tower_mul_inner(SkewPoly.const(tw.outer, u), SkewPoly.const(tw.outer, v), tw)
    assert h == SkewPoly.const(tw.outer, alg_mul(u, v, tw.outer))


def test_dispatch_rule():
    tw = tower_make(101, 12, 24)
    assert tower_path(1, tw) == "inner"
    assert tower_path(3, tw) == "inner"
    assert tower_path(4, tw) == "outer"
    assert tower_path(12, tw) == "outer"
    small = tower_make(101, 5, 10)
    for f, g in pairs(small, 1, 5):
        assert tower_dispatch(f, g, small) == naive_mul(f, g)
    for f, g in pairs(small, 6, 5):
        assert tower_dispatch(f, g, small) == naive_mul(f, g)


def test_zero_operand():
    tw = tower_make(101, 4, 12)
    f = skew_random(tw.outer, 3, 0)
    z = SkewPoly.zero(tw.outer)
    assert tower_mul_outer(f, z, tw).is_zero() and tower_mul_inner(z, f, tw).is_zero()
