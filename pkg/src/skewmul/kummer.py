"""Low-degree multiplication for Kummer extensions.

A[x, sigma] with A = k[a]/(a^r - c) and sigma(a) = zeta*a is the quotient of
k<X, A> by XA - zeta*AX and A^r - c.  Products of bi-degree below r/3 are
computed in k<X,A>/(XA - zeta*AX) through the matrix embedding
A -> diag(zeta^l), X -> beta, and skew products are assembled from nine such
products on A-degree chunks of width ceil(r/3).
"""

from __future__ import annotations

from .algebra import AlgebraDescriptor, Kind, reduce_poly
from .banded import CyclicBandMatrix, cbm_mul
from .bigraded import BiGradedPoly, check_low_bidegree, embed, recover
from .errors import DegreeTooLarge, KindMismatch
from .field import FieldContext, multiplicative_order
from .skew import SkewPoly, _check_same
from .transforms import eval_all_roots, interp_all_roots


def _require_kummer(desc: AlgebraDescriptor) -> None:
    if desc.kind is not Kind.KUMMER:
        raise KindMismatch(f"expected a Kummer algebra, got {desc.kind.value}")


def bg_oracle_mul(F1: BiGradedPoly, F2: BiGradedPoly, zeta: int, ctx: FieldContext) -> BiGradedPoly:
    """Normal form of F1*F2 by moving A^j across X^s: A^j X^s = zeta^(-js) X^s A^j."""
    r = multiplicative_order(zeta, ctx.p)
    out: dict[tuple[int, int], int] = {}
    for (i, j), u in F1.terms().items():
        for (s, t), v in F2.terms().items():
            coeff = ctx.mul(ctx.mul(u, v), ctx.pow(zeta, (-j * s) % r))
            key = (i + s, j + t)
            out[key] = ctx.add(out.get(key, 0), coeff)
    return BiGradedPoly.from_terms({k: v for k, v in out.items() if v})


def kummer_embed(F: BiGradedPoly, desc: AlgebraDescriptor) -> CyclicBandMatrix:
    """Image of an X-first form under A -> diag(zeta^l), X -> beta."""
    _require_kummer(desc)
    r, ctx, zp = desc.r, desc.ctx, list(desc.zeta_powers)
    return embed(F.table, r, lambda row: eval_all_roots(row, desc.zeta, r, ctx, powers=zp))


def alg2_mul(F1: BiGradedPoly, F2: BiGradedPoly, desc: AlgebraDescriptor) -> BiGradedPoly:
    """Product in k<X,A>/(XA - zeta*AX) for bi-degrees below r/3."""
    _require_kummer(desc)
    r, ctx, zp = desc.r, desc.ctx, list(desc.zeta_powers)
    d1, e1 = check_low_bidegree(F1, r)
    d2, e2 = check_low_bidegree(F2, r)
    if d1 < 0 or d2 < 0:
        return BiGradedPoly([[0]])
    M1 = kummer_embed(F1.trimmed(), desc)
    M2 = kummer_embed(F2.trimmed(), desc)
    M = cbm_mul(M1, M2, ctx)
    rows = recover(M, lambda vals: interp_all_roots(vals, desc.zeta, r, ctx, powers=zp), e1 + e2)
    return BiGradedPoly(rows)


def exchange(rows: list[list[int]], direction: str, desc: AlgebraDescriptor, offset: int = 0) -> list[list[int]]:
    """Switch between X-first and A-first coefficient tables.

    X^i A^j = zeta^(ij) A^j X^i.  ``offset`` is added to the A-index (for
    chunks cut out of a wider table).
    """
    r, ctx, zp = desc.r, desc.ctx, desc.zeta_powers
    sign = {"XA_to_AX": 1, "AX_to_XA": -1}[direction]
    return [ctx.vmul(row, [zp[(sign * i * (j + offset)) % r] for j in range(len(row))])
            for i, row in enumerate(rows)]


def alg3_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    _check_same(f, g)
    desc = f.desc
    _require_kummer(desc)
    r, ctx, zp = desc.r, desc.ctx, desc.zeta_powers
    d = max(f.degree(), g.degree())
    if 3 * d >= r:
        raise DegreeTooLarge(f"need degree < r/3 = {r / 3:.2f}, got {d}")
    if d < 0:
        return SkewPoly.zero(desc)
    m = -(-r // 3)
    chunks = [(k * m, min((k + 1) * m, r)) for k in range(3) if k * m < r]

    # coefficients c_i(a) x^i are already A-first
    left = f.trimmed()
    right = exchange(g.trimmed(), "AX_to_XA", desc)
    P = [BiGradedPoly(exchange([row[lo:hi] for row in left], "AX_to_XA", desc)) for lo, hi in chunks]
    Q = [BiGradedPoly([row[lo:hi] for row in right]) for lo, hi in chunks]

    width = 3 * r
    acc = [[0] * width for _ in range(2 * d + 1)]
    for k, Pk in enumerate(P):
        if Pk.is_zero():
            continue
        for l, Ql in enumerate(Q):
            if Ql.is_zero():
                continue
            G = alg2_mul(Pk, Ql, desc)
            shift = (k + l) * m
            for s, row in enumerate(G.table):
                # A^(km) X^s = zeta^(-kms) X^s A^(km)
                scaled = ctx.vscale(zp[(-k * m * s) % r], row)
                acc[s][shift:shift + len(scaled)] = ctx.vadd(acc[s][shift:shift + len(scaled)], scaled)

    reduced = [reduce_poly(row, desc) for row in acc]
    return SkewPoly(desc, exchange(reduced, "XA_to_AX", desc))
