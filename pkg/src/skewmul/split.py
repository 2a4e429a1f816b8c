"""Low-degree multiplication for the totally split algebra k^r.

The embedding e_i -> alpha_i (unit diagonal entry), x -> beta sends
sum c_i x^i to the band matrix sum diag(c_i) beta^i, so both the embedding and
its one-sided inverse are pure relayouts; all arithmetic happens in the band
product.
"""

from __future__ import annotations

from .algebra import Kind
from .banded import CyclicBandMatrix, cbm_mul
from .errors import DegreeTooLarge, KindMismatch
from .skew import SkewPoly, _check_same


def _require_split(f: SkewPoly) -> None:
    if f.desc.kind is not Kind.SPLIT:
        raise KindMismatch(f"expected a split algebra, got {f.desc.kind.value}")


def phi_split(f: SkewPoly) -> CyclicBandMatrix:
    _require_split(f)
    r = f.desc.r
    if f.degree() > r - 1:
        raise DegreeTooLarge(f"phi is injective only up to degree {r - 1}")
    coeffs = f.trimmed() or [[0] * r]
    return CyclicBandMatrix(r, {i: list(c) for i, c in enumerate(coeffs)})


def psi_split(M: CyclicBandMatrix, desc) -> SkewPoly:
    """Diagonal with offset s becomes the coefficient of x^(s mod r)."""
    r, ctx = M.r, desc.ctx
    coeffs = [[0] * r for _ in range(r)]
    seen = set()
    for s, D in M.diags.items():
        k = s % r
        coeffs[k] = ctx.vadd(coeffs[k], D) if k in seen else list(D)
        seen.add(k)
    return SkewPoly(desc, coeffs)


def mul_split(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    _check_same(f, g)
    _require_split(f)
    r = f.desc.r
    d = max(f.degree(), g.degree())
    if 3 * d >= r:
        raise DegreeTooLarge(f"need degree < r/3 = {r / 3:.2f}, got {d}")
    if d < 0:
        return SkewPoly.zero(f.desc)
    return psi_split(cbm_mul(phi_split(f), phi_split(g), f.desc.ctx), f.desc)
