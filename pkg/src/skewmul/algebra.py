"""The three cyclic Galois algebra families over F_p.

An algebra element is a list of r field elements:

* ``SPLIT``  (A = k^r): coordinates in the idempotent basis e_1..e_r,
  sigma is the cyclic left shift.
* ``KUMMER`` (A = k[a]/(a^r - c), zeta of order r): coordinates in 1, a, ..,
  a^(r-1); sigma(a) = zeta*a.
* ``ARTIN``  (A = k[a]/(a^r - a - c), r = p): same basis; sigma(a) = a + 1.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .errors import (NoIrreducible, NoRootOfUnity, NotCharR, SmallField,
                     SizeMismatch)
from .field import FieldContext, find_root_of_unity, prime_factors
from .transforms import NodePlan, prepare_nodes

AlgebraElement = list


class Kind(str, enum.Enum):
    SPLIT = "split"
    KUMMER = "kummer"
    ARTIN = "artin"


@dataclass(frozen=True)
class AlgebraDescriptor:
    kind: Kind
    p: int
    r: int
    zeta: int = 1
    c: int = 0
    ctx: FieldContext = field(compare=False, repr=False, default=None)
    # zeta^0..zeta^(r-1) for Kummer; empty otherwise.
    zeta_powers: tuple = field(compare=False, repr=False, default=())
    # Lagrange data for the nodes 0..r-1 (Artin only).
    nodes: NodePlan | None = field(compare=False, repr=False, default=None)


def kummer_c_is_valid(c: int, p: int, r: int) -> bool:
    """Whether t^r - c is irreducible over F_p, assuming r | p-1.

    Binomial criterion: c is not an l-th power for any prime l | r, and
    p = 1 (mod 4) when 4 | r.
    """
    c %= p
    if c == 0:
        return False
    if r % 4 == 0 and p % 4 != 1:
        return False
    return all(pow(c, (p - 1) // ell, p) != 1 for ell in prime_factors(r))


def alg_make(kind: Kind | str, p: int, r: int, seed: int = 0, *,
             c: int | None = None, ctx: FieldContext | None = None,
             require_large_field: bool = True) -> AlgebraDescriptor:
    """Build a descriptor, deterministically from (kind, p, r, seed).

    For Kummer and Artin the constant ``c`` is searched starting at
    ``1 + seed mod (p-1)`` unless given explicitly.  ``require_large_field``
    enforces p > 3r for the split and Kummer kinds.
    """
    kind = Kind(kind)
    if ctx is None:
        ctx = FieldContext(p)
    elif ctx.p != p:
        raise SizeMismatch(f"context modulus {ctx.p} != {p}")
    if r < 2:
        raise ValueError(f"dimension r must be >= 2, got {r}")

    if kind is Kind.ARTIN:
        if r != p:
            raise NotCharR(f"Artin extension over F_p needs r = p, got r={r}, p={p}")
        if c is None:
            c = 1 + seed % (p - 1)
        if c % p == 0:
            raise NoIrreducible("t^p - t - c is reducible for c = 0")
        return AlgebraDescriptor(kind, p, r, 1, c % p, ctx, nodes=prepare_nodes(list(range(r)), ctx))

    if kind is Kind.KUMMER and (p - 1) % r:
        raise NoRootOfUnity(f"r={r} does not divide p-1={p - 1}")
    if require_large_field and p <= 3 * r:
        raise SmallField(f"need p > 3r, got p={p}, r={r}")

    if kind is Kind.SPLIT:
        return AlgebraDescriptor(kind, p, r, 1, 0, ctx)

    zeta = find_root_of_unity(p, r)
    if c is None:
        start = seed % (p - 1)
        for k in range(p - 1):
            cand = 1 + (start + k) % (p - 1)
            if kummer_c_is_valid(cand, p, r):
                c = cand
                break
        else:
            raise NoIrreducible(f"no c with t^{r} - c irreducible over F_{p}")
    elif not kummer_c_is_valid(c, p, r):
        raise NoIrreducible(f"t^{r} - {c} is reducible over F_{p}")
    return AlgebraDescriptor(kind, p, r, zeta, c % p, ctx, zeta_powers=tuple(ctx.powers(zeta, r)))


# -- element arithmetic --------------------------------------------------------

def alg_zero(desc: AlgebraDescriptor) -> list[int]:
    return [0] * desc.r


def alg_one(desc: AlgebraDescriptor) -> list[int]:
    if desc.kind is Kind.SPLIT:
        return [1] * desc.r
    return [1] + [0] * (desc.r - 1)


def alg_gen(desc: AlgebraDescriptor) -> list[int]:
    """The generator a (Kummer/Artin) or e_2 (split)."""
    u = [0] * desc.r
    u[1] = 1
    return u


def alg_basis(desc: AlgebraDescriptor, i: int) -> list[int]:
    u = [0] * desc.r
    u[i] = 1
    return u


def alg_add(u, v, desc: AlgebraDescriptor) -> list[int]:
    return desc.ctx.vadd(u, v)


def alg_sub(u, v, desc: AlgebraDescriptor) -> list[int]:
    return desc.ctx.vsub(u, v)


def alg_neg(u, desc: AlgebraDescriptor) -> list[int]:
    return desc.ctx.vneg(u)


def alg_scalar_mul(s: int, u, desc: AlgebraDescriptor) -> list[int]:
    return desc.ctx.vscale(s, u)


def convolve(u: list[int], v: list[int], ctx: FieldContext) -> list[int]:
    """Schoolbook product of coefficient lists."""
    if not u or not v:
        return []
    out = [0] * (len(u) + len(v) - 1)
    n = len(v)
    for i, a in enumerate(u):
        out[i:i + n] = ctx.vaxpy(a, v, out[i:i + n])
    return out


def reduce_poly(w: list[int], desc: AlgebraDescriptor) -> list[int]:
    """Reduce a coefficient list of any length modulo the defining polynomial.

    Kummer folds index r+s onto s with factor c; Artin cascades from the top,
    using a^(r+s) = a^(s+1) + c*a^s.
    """
    r, ctx = desc.r, desc.ctx
    w = list(w) + [0] * max(0, r - len(w))
    if desc.kind is Kind.SPLIT:
        raise TypeError("the split algebra has no defining polynomial")
    for k in range(len(w) - 1, r - 1, -1):
        top = w[k]
        if not top:
            continue
        if desc.kind is Kind.KUMMER:
            w[k - r] = ctx.add(w[k - r], ctx.mul(desc.c, top))
        else:
            w[k - r + 1] = ctx.add(w[k - r + 1], top)
            w[k - r] = ctx.add(w[k - r], ctx.mul(desc.c, top))
    return w[:r]


def alg_mul(u, v, desc: AlgebraDescriptor) -> list[int]:
    if len(u) != desc.r or len(v) != desc.r:
        raise SizeMismatch(f"expected elements of length {desc.r}")
    if desc.kind is Kind.SPLIT:
        return desc.ctx.vmul(u, v)
    return reduce_poly(convolve(u, v, desc.ctx), desc)


def alg_pow(u, e: int, desc: AlgebraDescriptor) -> list[int]:
    result = alg_one(desc)
    for _ in range(e):
        result = alg_mul(result, u, desc)
    return result


def taylor_shift(u: list[int], s: int, ctx: FieldContext) -> list[int]:
    """Coefficients of u(t + s), by Horner rebasing."""
    n = len(u)
    acc = [0] * n
    for coeff in reversed(u):
        # acc <- acc * (t + s) + coeff
        shifted = [coeff] + acc[:-1]
        acc = ctx.vaxpy(s, acc, shifted)
    return acc


def sigma_pow(u, i: int, desc: AlgebraDescriptor) -> list[int]:
    """sigma^i(u) for any integer i."""
    r = desc.r
    i %= r
    if i == 0:
        return list(u)
    if desc.kind is Kind.SPLIT:
        return list(u[i:]) + list(u[:i])
    if desc.kind is Kind.KUMMER:
        zp = desc.zeta_powers
        return desc.ctx.vmul(u, [zp[(i * j) % r] for j in range(r)])
    return taylor_shift(list(u), i, desc.ctx)


def alg_random(desc: AlgebraDescriptor, seed) -> list[int]:
    """Uniform element; seed is anything :class:`random.Random` accepts."""
    rng = random.Random(seed)
    return [rng.randrange(desc.p) for _ in range(desc.r)]


# -- structural checks (not counted) ------------------------------------------

def rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [list(row) for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] % p), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] % p:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def sigma_matrix(desc: AlgebraDescriptor) -> list[list[int]]:
    """Column j holds sigma(basis_j)."""
    r = desc.r
    with desc.ctx.session():
        cols = [sigma_pow(alg_basis(desc, j), 1, desc) for j in range(r)]
    return [[cols[j][i] for j in range(r)] for i in range(r)]


def fixed_space_dim(desc: AlgebraDescriptor) -> int:
    """Dimension over k of {u : sigma(u) = u}."""
    r, p = desc.r, desc.p
    s = sigma_matrix(desc)
    diff = [[(s[i][j] - (i == j)) % p for j in range(r)] for i in range(r)]
    return r - rank_mod_p(diff, p)
