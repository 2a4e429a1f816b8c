"""Matrices supported on a few cyclic diagonals.

An r x r matrix is stored as ``M = sum_s diag(D_s) beta^s`` where beta is the
cyclic permutation with ones at (i, i+1 mod r).  The diagonal with offset s
holds the entries ``M[i][(i + s) % r] = D_s[i]``.

Offsets keep their declared (unreduced) value so that band windows compose
additively under multiplication; they are reduced mod r only when the matrix
is materialised.
"""

from __future__ import annotations

from .errors import SizeMismatch
from .field import FieldContext


def rot(v: list[int], s: int) -> list[int]:
    """w[i] = v[(i + s) mod r]."""
    s %= len(v)
    return v[s:] + v[:s]


class CyclicBandMatrix:
    __slots__ = ("r", "diags")

    def __init__(self, r: int, diags: dict[int, list[int]]):
        for s, d in diags.items():
            if len(d) != r:
                raise SizeMismatch(f"diagonal {s} has length {len(d)}, expected {r}")
        self.r = r
        self.diags = dict(sorted(diags.items()))

    @property
    def offsets(self) -> list[int]:
        return list(self.diags)

    @property
    def window(self) -> tuple[int, int]:
        """(k, k+m): smallest and largest declared offset."""
        offs = self.offsets
        return (offs[0], offs[-1]) if offs else (0, -1)

    @property
    def bandwidth(self) -> int:
        lo, hi = self.window
        return hi - lo

    def __repr__(self) -> str:
        return f"CyclicBandMatrix(r={self.r}, offsets={self.offsets})"


def identity(r: int) -> CyclicBandMatrix:
    return CyclicBandMatrix(r, {0: [1] * r})


def beta(r: int, power: int = 1) -> CyclicBandMatrix:
    return CyclicBandMatrix(r, {power: [1] * r})


def diagonal(d: list[int]) -> CyclicBandMatrix:
    return CyclicBandMatrix(len(d), {0: list(d)})


def cbm_mul(P1: CyclicBandMatrix, P2: CyclicBandMatrix, ctx: FieldContext) -> CyclicBandMatrix:
    """Exact product, using (D_s b^s)(E_t b^t) = (D_s * rot_s(E_t)) b^(s+t).

    Costs |offsets1| * |offsets2| * r multiplications.
    """
    if P1.r != P2.r:
        raise SizeMismatch(f"sizes {P1.r} and {P2.r} differ")
    out: dict[int, list[int]] = {}
    for s, D in P1.diags.items():
        for t, E in P2.diags.items():
            prod = ctx.vmul(D, rot(E, s))
            if s + t in out:
                out[s + t] = ctx.vadd(out[s + t], prod)
            else:
                out[s + t] = prod
    return CyclicBandMatrix(P1.r, out)


def cbm_add(P1: CyclicBandMatrix, P2: CyclicBandMatrix, ctx: FieldContext) -> CyclicBandMatrix:
    if P1.r != P2.r:
        raise SizeMismatch(f"sizes {P1.r} and {P2.r} differ")
    out = {s: list(d) for s, d in P1.diags.items()}
    for t, E in P2.diags.items():
        out[t] = ctx.vadd(out[t], E) if t in out else list(E)
    return CyclicBandMatrix(P1.r, out)


def cbm_rotate(P: CyclicBandMatrix, n: int, side: str = "left") -> CyclicBandMatrix:
    """beta^n * P (side="left") or P * beta^n (side="right").

    Pure index bookkeeping; no field operations.
    """
    if side == "left":
        return CyclicBandMatrix(P.r, {s + n: rot(D, n) for s, D in P.diags.items()})
    if side == "right":
        return CyclicBandMatrix(P.r, {s + n: list(D) for s, D in P.diags.items()})
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def cbm_to_dense(P: CyclicBandMatrix, p: int | None = None) -> list[list[int]]:
    r = P.r
    M = [[0] * r for _ in range(r)]
    for s, D in P.diags.items():
        for i in range(r):
            j = (i + s) % r
            M[i][j] = M[i][j] + D[i]
            if p is not None:
                M[i][j] %= p
    return M


def dense_to_cbm(M: list[list[int]]) -> CyclicBandMatrix:
    r = len(M)
    diags = {}
    for s in range(r):
        D = [M[i][(i + s) % r] for i in range(r)]
        if any(D):
            diags[s] = D
    return CyclicBandMatrix(r, diags)


def dense_mul(A: list[list[int]], B: list[list[int]], ctx: FieldContext) -> list[list[int]]:
    """Classical triple loop."""
    n, m = len(A), len(B)
    if any(len(row) != m for row in A):
        raise SizeMismatch("inner dimensions differ")
    cols = [[B[k][j] for k in range(m)] for j in range(len(B[0]))]
    return [[ctx.dot(row, col) for col in cols] for row in A]


def dense_identity(r: int) -> list[list[int]]:
    return [[int(i == j) for j in range(r)] for i in range(r)]
