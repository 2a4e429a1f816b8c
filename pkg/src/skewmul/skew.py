"""Skew polynomials A[x, sigma] with x*a = sigma(a)*x.

A :class:`SkewPoly` stores coefficients on the left: ``coeffs[i]`` is the
algebra element c_i of the term c_i x^i.  Trailing zero coefficients are
allowed ("degree at most d" semantics) and ignored by equality.
"""

from __future__ import annotations

import random
from typing import Callable

from .algebra import (AlgebraDescriptor, Kind, alg_add, alg_mul, alg_random,
                      alg_zero, sigma_pow)
from .errors import AlgebraMismatch

# Test-only fault injection: when set, called on every fast-path product
# before it is returned.
fault_hook: Callable[["SkewPoly"], "SkewPoly"] | None = None


class SkewPoly:
    __slots__ = ("desc", "coeffs")

    def __init__(self, desc: AlgebraDescriptor, coeffs):
        coeffs = [list(c) for c in coeffs] or [alg_zero(desc)]
        for c in coeffs:
            if len(c) != desc.r:
                raise ValueError(f"coefficient length {len(c)} != r={desc.r}")
        self.desc = desc
        self.coeffs = coeffs

    @classmethod
    def zero(cls, desc: AlgebraDescriptor) -> "SkewPoly":
        return cls(desc, [alg_zero(desc)])

    @classmethod
    def const(cls, desc: AlgebraDescriptor, a) -> "SkewPoly":
        return cls(desc, [a])

    @classmethod
    def monomial(cls, desc: AlgebraDescriptor, a, n: int) -> "SkewPoly":
        return cls(desc, [alg_zero(desc)] * n + [a])

    def degree(self) -> float:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if any(self.coeffs[i]):
                return i
        return float("-inf")

    def is_zero(self) -> bool:
        return self.degree() < 0

    def trimmed(self) -> list[list[int]]:
        d = self.degree()
        if d < 0:
            return []
        return [list(c) for c in self.coeffs[: d + 1]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return skew_eq(self, other)

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_add(self, other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return fast_mul(self, other)

    def __repr__(self) -> str:
        return f"SkewPoly({self.desc.kind.value}, r={self.desc.r}, coeffs={self.trimmed()})"


def _check_same(f: SkewPoly, g: SkewPoly) -> None:
    if f.desc != g.desc:
        raise AlgebraMismatch(f"{f.desc} vs {g.desc}")


def skew_eq(f: SkewPoly, g: SkewPoly) -> bool:
    _check_same(f, g)
    return f.trimmed() == g.trimmed()


def skew_add(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    _check_same(f, g)
    desc = f.desc
    n = max(len(f.coeffs), len(g.coeffs))
    zero = alg_zero(desc)
    out = []
    for i in range(n):
        a = f.coeffs[i] if i < len(f.coeffs) else zero
        b = g.coeffs[i] if i < len(g.coeffs) else zero
        out.append(alg_add(a, b, desc))
    return SkewPoly(desc, out)


def skew_random(desc: AlgebraDescriptor, d: int, seed) -> SkewPoly:
    """d+1 uniformly random coefficients, deterministic in ``seed``."""
    rng = random.Random(seed)
    return SkewPoly(desc, [alg_random(desc, rng.getrandbits(64)) for _ in range(d + 1)])


def naive_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """sum_{i,j} c_i * sigma^i(d_j) x^(i+j), term by term."""
    _check_same(f, g)
    desc = f.desc
    if f.is_zero() or g.is_zero():
        return SkewPoly.zero(desc)
    fc, gc = f.trimmed(), g.trimmed()
    out = [None] * (len(fc) + len(gc) - 1)
    for i, ci in enumerate(fc):
        for j, dj in enumerate(gc):
            term = alg_mul(ci, sigma_pow(dj, i, desc), desc)
            k = i + j
            out[k] = term if out[k] is None else alg_add(out[k], term, desc)
    return SkewPoly(desc, out)


def fast_path(f: SkewPoly, g: SkewPoly) -> str:
    """Name of the algorithm :func:`fast_mul` uses for this pair."""
    _check_same(f, g)
    d = max(f.degree(), g.degree())
    if d <= 0:
        return "constant"
    if 3 * d < f.desc.r:
        return f.desc.kind.value
    return "fallback"


def _const_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return SkewPoly.const(f.desc, alg_mul(f.coeffs[0], g.coeffs[0], f.desc))


def fast_mul_with_path(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, str]:
    """Product via the low-degree algorithm for the algebra kind.

    Inputs with max degree >= r/3 fall back to :func:`naive_mul`; the second
    return value is then ``"fallback"``.  Two constants need a single algebra
    product (path ``"constant"``).
    """
    path = fast_path(f, g)
    if f.is_zero() or g.is_zero():
        return SkewPoly.zero(f.desc), path
    if path == "fallback":
        return naive_mul(f, g), path
    kind = f.desc.kind
    if path == "constant":
        mul = _const_mul
    elif kind is Kind.SPLIT:
        from .split import mul_split as mul
    elif kind is Kind.KUMMER:
        from .kummer import alg3_mul as mul
    else:
        from .artin import alg6_mul as mul
    h = mul(f, g)
    if fault_hook is not None:
        h = fault_hook(h)
    return h, path


def fast_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return fast_mul_with_path(f, g)[0]
