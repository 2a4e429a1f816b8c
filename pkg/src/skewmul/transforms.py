"""Evaluation and interpolation of univariate polynomials over F_p.

Polynomials are coefficient lists, ``f[i]`` being the coefficient of t^i.

Two point families are supported:

* the full group of r-th roots of unity, via a mixed-radix DFT when r is
  7-smooth and via Horner/Lagrange otherwise;
* arbitrary distinct points (used with 0..r-1), via Horner for evaluation and
  Lagrange basis rows for interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadRootOrder, DuplicateNodes
from .field import FieldContext, prime_factors

SMOOTH_RADICES = (2, 3, 5, 7)


def degree(f: list[int]) -> float:
    """Index of the last nonzero coefficient, or -inf for the zero polynomial."""
    for i in range(len(f) - 1, -1, -1):
        if f[i]:
            return i
    return float("-inf")


def is_smooth(n: int) -> bool:
    return n >= 1 and all(q in SMOOTH_RADICES for q in prime_factors(n))


def eval_at_points(f: list[int], pts: list[int], ctx: FieldContext) -> list[int]:
    """Horner's rule at every point; deg(f) mults and adds per point."""
    n = len(pts)
    if not f:
        return [0] * n
    acc = [f[-1] % ctx.p] * n
    for c in reversed(f[:-1]):
        acc = ctx.vfma(acc, pts, [c] * n)
    return acc


def poly_mul_linear(q: list[int], x: int, ctx: FieldContext) -> list[int]:
    """q(t) * (t - x)."""
    shifted = [0] + q
    return ctx.vsub(shifted, ctx.vscale(x, q) + [0])


@dataclass(frozen=True)
class NodePlan:
    """Precomputed Lagrange data for one point set.

    ``weights[i] = 1 / prod_{j != i} (x_i - x_j)`` are the barycentric weights,
    and ``basis[i]`` holds the coefficients of the Lagrange polynomial L_i.
    """

    points: tuple[int, ...]
    weights: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]


def prepare_nodes(pts: list[int], ctx: FieldContext) -> NodePlan:
    pts = [x % ctx.p for x in pts]
    if len(set(pts)) != len(pts):
        raise DuplicateNodes("interpolation points must be pairwise distinct")
    n = len(pts)
    master = [1]
    for x in pts:
        master = poly_mul_linear(master, x, ctx)
    weights = []
    basis = []
    for i, xi in enumerate(pts):
        denom = 1
        for j, xj in enumerate(pts):
            if j != i:
                denom = ctx.mul(denom, ctx.sub(xi, xj))
        w = ctx.inv(denom)
        weights.append(w)
        # synthetic division master / (t - xi), top coefficient down
        quot = [0] * n
        carry = 0
        for k in range(n, 0, -1):
            carry = ctx.add(master[k], ctx.mul(carry, xi)) if k < n else master[k]
            quot[k - 1] = carry
        basis.append(tuple(ctx.vscale(w, quot)))
    return NodePlan(tuple(pts), tuple(weights), tuple(basis))


def interp_at_points(pts: list[int], vals: list[int], ctx: FieldContext,
                     plan: NodePlan | None = None) -> list[int]:
    """The unique polynomial of degree < len(pts) through (pts[i], vals[i])."""
    if len(pts) != len(vals) or not pts:
        raise ValueError("need equally many (>= 1) points and values")
    if plan is None:
        plan = prepare_nodes(pts, ctx)
    n = len(pts)
    out = [0] * n
    first = True
    for v, row in zip(vals, plan.basis):
        if first:
            out = ctx.vscale(v, list(row))
            first = False
        else:
            out = ctx.vaxpy(v, list(row), out)
    return out


# -- roots of unity ----------------------------------------------------------

def check_root_order(zeta: int, r: int, p: int) -> None:
    zeta %= p
    if zeta == 0 or pow(zeta, r, p) != 1 or any(pow(zeta, r // q, p) == 1 for q in prime_factors(r)):
        raise BadRootOrder(f"{zeta} does not have multiplicative order {r} modulo {p}")


def _dft(a: list[int], pw: list[int], stride: int, ctx: FieldContext) -> list[int]:
    """Evaluate sum a[j] t^j at w^l, l < len(a), where w = pw[stride] has order len(a)."""
    n = len(a)
    if n == 1:
        return [a[0] % ctx.p]
    top = len(pw)
    q = next(q for q in SMOOTH_RADICES if n % q == 0)
    m = n // q
    subs = [_dft(a[s::q], pw, stride * q, ctx) for s in range(q)]
    out = [subs[0][l % m] for l in range(n)]
    for s in range(1, q):
        sub = subs[s]
        twiddles = [pw[(l * s * stride) % top] for l in range(n)]
        out = ctx.vfma([sub[l % m] for l in range(n)], twiddles, out)
    return out


def _fold(f: list[int], r: int, ctx: FieldContext) -> list[int]:
    """f mod (t^r - 1), padded to length r."""
    out = list(f[:r]) + [0] * (r - len(f[:r]))
    for k in range(r, len(f)):
        out[k % r] = ctx.add(out[k % r], f[k])
    return out


def root_powers(zeta: int, r: int, ctx: FieldContext) -> list[int]:
    return ctx.powers(zeta, r)


def eval_all_roots(f: list[int], zeta: int, r: int, ctx: FieldContext,
                   powers: list[int] | None = None) -> list[int]:
    """[f(zeta^0), f(zeta^1), ..., f(zeta^(r-1))] for zeta of order exactly r."""
    check_root_order(zeta, r, ctx.p)
    if powers is None:
        powers = root_powers(zeta, r, ctx)
    a = _fold(f, r, ctx)
    if is_smooth(r):
        return _dft(a, powers, 1, ctx)
    return eval_at_points(a, powers, ctx)


def interp_all_roots(vals: list[int], zeta: int, r: int, ctx: FieldContext,
                     powers: list[int] | None = None) -> list[int]:
    """Inverse of :func:`eval_all_roots` on polynomials of degree < r."""
    check_root_order(zeta, r, ctx.p)
    if len(vals) != r:
        raise ValueError(f"expected {r} values, got {len(vals)}")
    if powers is None:
        powers = root_powers(zeta, r, ctx)
    if is_smooth(r):
        inverse_powers = [powers[-k % r] for k in range(r)]
        coeffs = _dft(list(vals), inverse_powers, 1, ctx)
        return ctx.vscale(ctx.inv(r), coeffs)
    return interp_at_points(powers, list(vals), ctx)
