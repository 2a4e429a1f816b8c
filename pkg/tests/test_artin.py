import random

import pytest

from oracles import dense_product
from skewmul.algebra import alg_make, alg_one
from skewmul.artin import alg4_mul, alg5_exchange, alg6_mul, artin_embed, bg_artin_oracle_mul, pascal_rows
from skewmul.banded import beta, cbm_to_dense, diagonal
from skewmul.bigraded import BiGradedPoly
from skewmul.errors import DegreeTooLarge, KindMismatch
from skewmul.skew import SkewPoly, naive_mul, skew_random

A7 = alg_make("artin", 7, 7)
A13 = alg_make("artin", 13, 13)
A31 = alg_make("artin", 31, 31)


def random_bg(dx, da, p, rng):
    return BiGradedPoly([[rng.randrange(p) for _ in range(da + 1)] for _ in range(dx + 1)])


def test_pascal():
    assert pascal_rows(5, 7)[4] == [1, 4, 6, 4, 1]
    assert pascal_rows(8, 7)[7] == [1, 0, 0, 0, 0, 0, 0, 1]


def test_oracle_examples():
    X, A = BiGradedPoly.monomial(1, 0), BiGradedPoly.monomial(0, 1)
    assert bg_artin_oracle_mul(X, A, A7.ctx) == BiGradedPoly.monomial(1, 1)
    assert bg_artin_oracle_mul(A, X, A7.ctx) == BiGradedPoly.from_terms({(1, 1): 1, (1, 0): 6})


def test_oracle_associative():
    rng = random.Random(0)
    for _ in range(20):
        a, b, c = (random_bg(2, 2, 13, rng) for _ in range(3))
        lhs = bg_artin_oracle_mul(bg_artin_oracle_mul(a, b, A13.ctx), c, A13.ctx)
        assert lhs == bg_artin_oracle_mul(a, bg_artin_oracle_mul(b, c, A13.ctx), A13.ctx)


def test_alg4_examples():
    X, A, one = BiGradedPoly.monomial(1, 0), BiGradedPoly.monomial(0, 1), BiGradedPoly([[1]])
    rng = random.Random(1)
    F = random_bg(2, 2, 7, rng)
    assert alg4_mul(F, one, A7) == F == alg4_mul(one, F, A7)
    assert alg4_mul(X, A, A7) == bg_artin_oracle_mul(X, A, A7.ctx)
    assert alg4_mul(A, X, A7) == bg_artin_oracle_mul(A, X, A7.ctx)


@pytest.mark.parametrize("desc", [A7, A13], ids=["r7", "r13"])
def test_alg4_matches_oracle(desc):
    rng, deg = random.Random(desc.r), desc.r // 3 - 1
    for _ in range(100):
        F1, F2 = random_bg(deg, deg, desc.p, rng), random_bg(deg, deg, desc.p, rng)
        assert alg4_mul(F1, F2, desc) == bg_artin_oracle_mul(F1, F2, desc.ctx)


def test_alg4_errors():
    with pytest.raises(DegreeTooLarge):
        alg4_mul(BiGradedPoly.monomial(3, 0), BiGradedPoly([[1]]), A7)
    with pytest.raises(KindMismatch):
        alg4_mul(BiGradedPoly([[1]]), BiGradedPoly([[1]]), alg_make("kummer", 97, 8))


@pytest.mark.parametrize("desc", [A7, A13, A31], ids=["r7", "r13", "r31"])
def test_matrix_relations(desc):
    r, p = desc.r, desc.p
    alpha = cbm_to_dense(diagonal(list(range(r))))
    B = cbm_to_dense(beta(r))
    a1 = [[(v + (i == j)) % p for j, v in enumerate(row)] for i, row in enumerate(alpha)]
    assert dense_product(B, alpha, p) == dense_product(a1, B, p)
    bpow, apow = B, alpha
    for _ in range(r - 1):
        bpow, apow = dense_product(bpow, B, p), dense_product(apow, alpha, p)
    assert bpow == [[int(i == j) for j in range(r)] for i in range(r)]
    assert apow == alpha


def test_embedding_is_multiplicative():
    rng, p = random.Random(2), 13
    for _ in range(10):
        F1, F2 = random_bg(3, 3, p, rng), random_bg(3, 3, p, rng)
        lhs = dense_product(cbm_to_dense(artin_embed(F1, A13), p), cbm_to_dense(artin_embed(F2, A13), p), p)
        assert lhs == cbm_to_dense(artin_embed(bg_artin_oracle_mul(F1, F2, A13.ctx), A13), p)


def test_exchange_examples():
    # X A = A X + X
    assert alg5_exchange([[0, 0], [0, 1]], "XA_to_AX", A7) == [[0, 0], [1, 1]]
    rows = [[3], [5], [2]]
    assert alg5_exchange(rows, "XA_to_AX", A7) == rows
    assert alg5_exchange(rows, "AX_to_XA", A7) == rows


def test_exchange_round_trip():
    rng = random.Random(5)
    for _ in range(200):
        d = rng.randrange(13)
        rows = [[rng.randrange(13) for _ in range(13)] for _ in range(d + 1)]
        assert alg5_exchange(alg5_exchange(rows, "XA_to_AX", A13), "AX_to_XA", A13) == rows
        assert alg5_exchange(alg5_exchange(rows, "AX_to_XA", A13), "XA_to_AX", A13) == rows


def test_exchange_rejects_wide_rows():
    with pytest.raises(DegreeTooLarge):
        alg5_exchange([[0] * 7 + [1]], "XA_to_AX", A7)


def test_alg6_examples():
    d = A7
    x = SkewPoly.monomial(d, alg_one(d), 1)
    a = [0, 1] + [0] * 5
    assert alg6_mul(x, SkewPoly.const(d, a)) == SkewPoly.monomial(d, [1, 1] + [0] * 5, 1)
    top = [0] * 6 + [1]
    assert alg6_mul(SkewPoly.const(d, top), SkewPoly.const(d, a)) == SkewPoly.const(d, [d.c, 1] + [0] * 5)


@pytest.mark.parametrize("desc,n", [(A7, 100), (A13, 100), (A31, 30)], ids=["r7", "r13", "r31"])
def test_alg6_equals_naive(desc, n):
    deg = desc.r // 3 - 1
    for s in range(n):
        f, g = skew_random(desc, deg, 2 * s), skew_random(desc, deg, 2 * s + 1)
        assert alg6_mul(f, g) == naive_mul(f, g)


def test_alg6_rejects_high_degree():
    with pytest.raises(DegreeTooLarge):
        alg6_mul(skew_random(A7, 3, 0), skew_random(A7, 0, 1))
