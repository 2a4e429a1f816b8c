"""Low-degree multiplication for Artin-Schreier extensions (r = p).

The relation is XA = (A+1)X, so X^i f(A) = f(A+i) X^i and, dually,
f(A) X^i = X^i f(A-i).  The matrix embedding is A -> diag(0, 1, .., r-1),
X -> beta; it satisfies beta*alpha = (alpha+1)*beta, beta^r = I and
alpha^r = alpha.
"""

from __future__ import annotations

from .algebra import AlgebraDescriptor, Kind, reduce_poly
from .banded import CyclicBandMatrix, cbm_mul, rot
from .bigraded import BiGradedPoly, check_low_bidegree, embed, recover
from .errors import DegreeTooLarge, KindMismatch
from .field import FieldContext
from .skew import SkewPoly, _check_same
from .transforms import eval_at_points, interp_at_points


def _require_artin(desc: AlgebraDescriptor) -> None:
    if desc.kind is not Kind.ARTIN:
        raise KindMismatch(f"expected an Artin algebra, got {desc.kind.value}")


def pascal_rows(n: int, p: int) -> list[list[int]]:
    """Binomial coefficients C(j, k) mod p for j < n."""
    rows = [[1]]
    for j in range(1, n):
        prev = rows[-1]
        rows.append([1] + [(prev[k - 1] + prev[k]) % p for k in range(1, j)] + [1])
    return rows


def bg_artin_oracle_mul(F1: BiGradedPoly, F2: BiGradedPoly, ctx: FieldContext) -> BiGradedPoly:
    """Normal form of F1*F2 using A^j X^s = X^s (A - s)^j, expanded binomially."""
    p = ctx.p
    terms1, terms2 = F1.terms(), F2.terms()
    maxj = max((j for _, j in terms1), default=0)
    binom = pascal_rows(maxj + 1, p)
    out: dict[tuple[int, int], int] = {}
    for (i, j), u in terms1.items():
        for (s, t), v in terms2.items():
            uv = ctx.mul(u, v)
            neg_s = ctx.neg(s)
            for k in range(j + 1):
                coeff = ctx.mul(ctx.mul(uv, binom[j][k]), ctx.pow(neg_s, j - k))
                key = (i + s, k + t)
                out[key] = ctx.add(out.get(key, 0), coeff)
    return BiGradedPoly.from_terms({k: v for k, v in out.items() if v})


def _evaluate(desc: AlgebraDescriptor):
    pts = list(range(desc.r))
    return lambda row: eval_at_points(row, pts, desc.ctx)


def _interpolate(desc: AlgebraDescriptor):
    pts = list(range(desc.r))
    return lambda vals: interp_at_points(pts, vals, desc.ctx, plan=desc.nodes)


def artin_embed(F: BiGradedPoly, desc: AlgebraDescriptor) -> CyclicBandMatrix:
    """Image of an X-first form under A -> diag(0..r-1), X -> beta."""
    _require_artin(desc)
    return embed(F.table, desc.r, _evaluate(desc))


def alg4_mul(F1: BiGradedPoly, F2: BiGradedPoly, desc: AlgebraDescriptor) -> BiGradedPoly:
    """Product in k<X,A>/(XA - (A+1)X) for bi-degrees below r/3."""
    _require_artin(desc)
    r, ctx = desc.r, desc.ctx
    d1, e1 = check_low_bidegree(F1, r)
    d2, e2 = check_low_bidegree(F2, r)
    if d1 < 0 or d2 < 0:
        return BiGradedPoly([[0]])
    M = cbm_mul(artin_embed(F1.trimmed(), desc), artin_embed(F2.trimmed(), desc), ctx)
    return BiGradedPoly(recover(M, _interpolate(desc), e1 + e2))


def alg5_exchange(rows: list[list[int]], direction: str, desc: AlgebraDescriptor) -> list[list[int]]:
    """Rewrite sum X^i f_i(A) as sum g_i(A) X^i ("XA_to_AX") or back ("AX_to_XA").

    Row i is evaluated at 0..r-1, its values are rotated by +i or -i (the two
    ways of reading the same band diagonal), and interpolated back.
    """
    _require_artin(desc)
    r = desc.r
    if any(any(row[r:]) for row in rows):
        raise DegreeTooLarge(f"exchange needs A-degree <= {r - 1}")
    sign = {"XA_to_AX": 1, "AX_to_XA": -1}[direction]
    evaluate, interpolate = _evaluate(desc), _interpolate(desc)
    out = []
    for i, row in enumerate(rows):
        if i == 0 or not any(row):
            out.append(list(row[:r]))
            continue
        vals = rot(evaluate(row[:r]), sign * i)
        out.append(interpolate(vals)[: len(row)])
    return out


def alg6_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    _check_same(f, g)
    desc = f.desc
    _require_artin(desc)
    r, ctx = desc.r, desc.ctx
    d = max(f.degree(), g.degree())
    if 3 * d >= r:
        raise DegreeTooLarge(f"need degree < r/3 = {r / 3:.2f}, got {d}")
    if d < 0:
        return SkewPoly.zero(desc)
    m = -(-r // 3)
    chunks = [(k * m, min((k + 1) * m, r)) for k in range(3) if k * m < r]

    # left operand: A^(km) * P_k with P_k cut from the A-first table
    left = f.trimmed()
    P = [BiGradedPoly(alg5_exchange([row[lo:hi] for row in left], "AX_to_XA", desc)) for lo, hi in chunks]
    # right operand: Q_l * A^(lm) with Q_l cut from the X-first table
    right = alg5_exchange(g.trimmed(), "AX_to_XA", desc)
    Q = [BiGradedPoly([row[lo:hi] for row in right]) for lo, hi in chunks]

    acc = [[0] * r for _ in range(2 * d + 1)]
    for k, Pk in enumerate(P):
        if Pk.is_zero():
            continue
        for l, Ql in enumerate(Q):
            if Ql.is_zero():
                continue
            G = alg4_mul(Pk, Ql, desc)
            # right factor: shift A-indices, reduce mod A^r - A - c, then go A-first
            rows = [reduce_poly([0] * (l * m) + row, desc) for row in G.table]
            rows = alg5_exchange(rows, "XA_to_AX", desc)
            # left factor: A^(km) g(A) X^s, again reduced
            for s, row in enumerate(rows):
                acc[s] = ctx.vadd(acc[s], reduce_poly([0] * (k * m) + row, desc))
    return SkewPoly(desc, acc)
