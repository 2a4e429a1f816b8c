"""Tower reductions k < A1 < A2 for the totally split tower.

A2 = k^r2 with the cyclic shift, A1 = k^r1 embedded by block repetition
(a_1..a_r1) -> (a_1..a_r1, a_1..a_r1, ...).  With n = r2/r1:

* outer path: f = sum_k x^k g_k(x^r1), g = sum_l h_l(x^r1) x^l, and each
  g_k*h_l is a product in A2[y, sigma^r1].  sigma^r1 shifts whole blocks, so
  that ring is n-dimensional totally split over A1, i.e. r1 independent
  copies of k^n[y, shift] (one per position inside a block).
* inner path: A2 = A1[u] for the block selector u = sum_b b*E_b, so
  f = sum_k u^k g_k(x), g = sum_l h_l(x) u^l with g_k, h_l over A1.

Sub-products are delegated to a pluggable multiplier (``fast_mul`` by
default), so other tower shapes only need a different decomposition of
coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebra import (AlgebraDescriptor, Kind, alg_add, alg_basis, alg_make,
                      alg_mul, alg_zero, convolve, sigma_pow)
from .errors import NoPrimitive, NotATower
from .field import FieldContext
from .skew import SkewPoly, _check_same, fast_mul
from .transforms import NodePlan, interp_at_points, prepare_nodes

Multiplier = Callable[[SkewPoly, SkewPoly], SkewPoly]


@dataclass(frozen=True)
class TowerDescriptor:
    inner: AlgebraDescriptor
    outer: AlgebraDescriptor
    # n x 1 algebras over k, one per block slice; None when n == 1
    block: AlgebraDescriptor | None = field(compare=False, default=None)
    nodes: NodePlan | None = field(compare=False, default=None)
    selector: tuple = field(compare=False, default=())

    @property
    def r1(self) -> int:
        return self.inner.r

    @property
    def r2(self) -> int:
        return self.outer.r

    @property
    def n(self) -> int:
        return self.outer.r // self.inner.r

    def embed(self, u) -> list[int]:
        return list(u) * self.n

    def restrict(self, v) -> list[int]:
        return list(v[: self.r1])


def tower_make(p: int, r1: int, r2: int, ctx: FieldContext | None = None) -> TowerDescriptor:
    """Split tower k^r1 inside k^r2 over F_p."""
    if r1 < 2 or r2 % r1:
        raise NotATower(f"need r1 >= 2 dividing r2, got r1={r1}, r2={r2}")
    n = r2 // r1
    if n > p:
        raise NoPrimitive(f"need {n} distinct selector values in F_{p}")
    ctx = ctx or FieldContext(p)
    inner = alg_make(Kind.SPLIT, p, r1, ctx=ctx)
    outer = alg_make(Kind.SPLIT, p, r2, ctx=ctx)
    block = alg_make(Kind.SPLIT, p, n, ctx=ctx, require_large_field=False) if n >= 2 else None
    tw = TowerDescriptor(inner, outer, block, prepare_nodes(list(range(n)), ctx),
                         tuple(b for b in range(n) for _ in range(r1)))
    check_tower(tw)
    return tw


def check_tower(tw: TowerDescriptor) -> None:
    """sigma commutes with the embedding and sigma^r1 fixes the image of A1."""
    with tw.outer.ctx.session():
        for i in range(tw.r1):
            e = alg_basis(tw.inner, i)
            up = tw.embed(e)
            if sigma_pow(up, 1, tw.outer) != tw.embed(sigma_pow(e, 1, tw.inner)):
                raise NotATower("sigma does not restrict to the inner algebra")
            if sigma_pow(up, tw.r1, tw.outer) != up:
                raise NotATower("sigma^r1 does not fix the inner algebra")


# -- outer path ---------------------------------------------------------------

def _block_ring_mul(g: list, h: list, tw: TowerDescriptor, inner_mul: Multiplier) -> list:
    """Product in A2[y, sigma^r1] of coefficient lists over A2."""
    r1, n, ctx = tw.r1, tw.n, tw.outer.ctx
    out_len = len(g) + len(h) - 1
    out = [alg_zero(tw.outer) for _ in range(out_len)]
    for u in range(r1):
        gs = [[c[b * r1 + u] for b in range(n)] for c in g]
        hs = [[c[b * r1 + u] for b in range(n)] for c in h]
        if n == 1:
            # sigma^r1 is the identity: plain commutative product
            prod = [[v] for v in convolve([c[0] for c in gs], [c[0] for c in hs], ctx)]
        else:
            prod = inner_mul(SkewPoly(tw.block, gs), SkewPoly(tw.block, hs)).coeffs
        for q, c in enumerate(prod[:out_len]):
            for b in range(n):
                out[q][b * r1 + u] = c[b]
    return out


def tower_mul_outer(f: SkewPoly, g: SkewPoly, tw: TowerDescriptor,
                    inner_mul: Multiplier = fast_mul) -> SkewPoly:
    _check_same(f, g)
    if f.desc != tw.outer:
        raise NotATower("operands do not live over the outer algebra")
    desc, r1 = tw.outer, tw.r1
    if f.is_zero() or g.is_zero():
        return SkewPoly.zero(desc)
    fc, gc = f.trimmed(), g.trimmed()
    # x^k g_k(x^r1): c_n x^n = x^k sigma^(-k)(c_n) x^(r1 q)
    G = [[sigma_pow(fc[n], -k, desc) for n in range(k, len(fc), r1)] for k in range(r1)]
    H = [[gc[n] for n in range(l, len(gc), r1)] for l in range(r1)]
    out = [alg_zero(desc) for _ in range(len(fc) + len(gc) - 1)]
    for k, gk in enumerate(G):
        if not gk:
            continue
        for l, hl in enumerate(H):
            if not hl:
                continue
            for q, e in enumerate(_block_ring_mul(gk, hl, tw, inner_mul)):
                idx = k + r1 * q + l
                out[idx] = alg_add(out[idx], sigma_pow(e, k, desc), desc)
    return SkewPoly(desc, out)


# -- inner path ---------------------------------------------------------------

def _decompose(c: list[int], tw: TowerDescriptor) -> list[list[int]]:
    """Coordinates of c over A1 in the basis 1, u, .., u^(n-1)."""
    r1, n, ctx = tw.r1, tw.n, tw.outer.ctx
    pts = list(range(n))
    comps = [[0] * r1 for _ in range(n)]
    for i in range(r1):
        vals = [c[b * r1 + i] for b in range(n)]
        coeffs = interp_at_points(pts, vals, ctx, plan=tw.nodes)
        for k in range(n):
            comps[k][i] = coeffs[k]
    return comps


def tower_mul_inner(f: SkewPoly, g: SkewPoly, tw: TowerDescriptor,
                    inner_mul: Multiplier = fast_mul) -> SkewPoly:
    _check_same(f, g)
    if f.desc != tw.outer:
        raise NotATower("operands do not live over the outer algebra")
    desc, A1, n = tw.outer, tw.inner, tw.n
    if f.is_zero() or g.is_zero():
        return SkewPoly.zero(desc)
    fc, gc = f.trimmed(), g.trimmed()

    # f = sum_k u^k g_k(x): split each coefficient over the basis u^k
    Gk = [[None] * len(fc) for _ in range(n)]
    for m, c in enumerate(fc):
        for k, comp in enumerate(_decompose(c, tw)):
            Gk[k][m] = comp
    # g = sum_l h_l(x) u^l: c_m = sum_l h_lm sigma^m(u^l), so decompose sigma^-m(c_m)
    Hl = [[None] * len(gc) for _ in range(n)]
    for m, c in enumerate(gc):
        for l, comp in enumerate(_decompose(sigma_pow(c, -m, desc), tw)):
            Hl[l][m] = sigma_pow(comp, m, A1)

    selector = list(tw.selector)
    u_pows = [[1] * desc.r]
    for _ in range(1, n):
        u_pows.append(alg_mul(u_pows[-1], selector, desc))

    out = [alg_zero(desc) for _ in range(len(fc) + len(gc) - 1)]
    for k in range(n):
        for l in range(n):
            e = inner_mul(SkewPoly(A1, Gk[k]), SkewPoly(A1, Hl[l]))
            for m, em in enumerate(e.coeffs[: len(out)]):
                if not any(em):
                    continue
                # u^k e_m x^m u^l = u^k e_m sigma^m(u^l) x^m
                term = alg_mul(tw.embed(em), u_pows[k], desc)
                term = alg_mul(term, sigma_pow(u_pows[l], m, desc), desc)
                out[m] = alg_add(out[m], term, desc)
    return SkewPoly(desc, out)


def tower_path(d: int, tw: TowerDescriptor) -> str:
    """Inner reduction while d < r1/3, outer otherwise."""
    return "inner" if 3 * d < tw.r1 else "outer"


def tower_dispatch(f: SkewPoly, g: SkewPoly, tw: TowerDescriptor) -> SkewPoly:
    d = max(f.degree(), g.degree())
    if tower_path(d, tw) == "inner":
        return tower_mul_inner(f, g, tw)
    return tower_mul_outer(f, g, tw)
