"""Prime field arithmetic with exact operation counting.

Field elements are plain Python ints kept in canonical form ``0 <= v < p``.
All arithmetic goes through a :class:`FieldContext`, which tallies every
multiplication, addition and inversion in its current :class:`OpCounter`.
The vector helpers (``vmul``, ``vadd``, ...) are there for speed only; they
count exactly what the equivalent scalar loop would count.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass

from .errors import NoRootOfUnity, NotPrime, ZeroInverse

FieldElement = int

MAX_MODULUS = 1 << 31

# Deterministic for every n < 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test, valid for n < 2**64."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n in increasing order (trial division)."""
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


@dataclass
class OpCounter:
    n_mul: int = 0
    n_add: int = 0
    n_inv: int = 0

    def reset(self) -> None:
        self.n_mul = self.n_add = self.n_inv = 0

    def snapshot(self) -> tuple[int, int, int]:
        return (self.n_mul, self.n_add, self.n_inv)

    def __iadd__(self, other: "OpCounter") -> "OpCounter":
        self.n_mul += other.n_mul
        self.n_add += other.n_add
        self.n_inv += other.n_inv
        return self


class FieldContext:
    """The prime field F_p together with the active operation counter."""

    def __init__(self, p: int, counter: OpCounter | None = None):
        if not isinstance(p, int) or p < 3 or p >= MAX_MODULUS:
            raise NotPrime(f"modulus must be an integer in [3, 2**31), got {p!r}")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.counter = counter if counter is not None else OpCounter()

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p})"

    @contextlib.contextmanager
    def session(self):
        """Temporarily install a fresh counter; yields it."""
        saved = self.counter
        self.counter = OpCounter()
        try:
            yield self.counter
        finally:
            self.counter = saved

    # -- scalar operations -------------------------------------------------

    def elem(self, x: int) -> FieldElement:
        return x % self.p

    def add(self, a: int, b: int) -> FieldElement:
        self.counter.n_add += 1
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> FieldElement:
        self.counter.n_add += 1
        return (a - b) % self.p

    def neg(self, a: int) -> FieldElement:
        self.counter.n_add += 1
        return -a % self.p

    def mul(self, a: int, b: int) -> FieldElement:
        self.counter.n_mul += 1
        return a * b % self.p

    def inv(self, a: int) -> FieldElement:
        a %= self.p
        if a == 0:
            raise ZeroInverse(f"0 has no inverse modulo {self.p}")
        self.counter.n_inv += 1
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> FieldElement:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> FieldElement:
        """Square-and-multiply; every multiplication is counted."""
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        base = a % self.p
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    # -- vector operations ---------------------------------------------------

    def vadd(self, u: list[int], v: list[int]) -> list[int]:
        p = self.p
        self.counter.n_add += len(u)
        return [(a + b) % p for a, b in zip(u, v)]

    def vsub(self, u: list[int], v: list[int]) -> list[int]:
        p = self.p
        self.counter.n_add += len(u)
        return [(a - b) % p for a, b in zip(u, v)]

    def vneg(self, u: list[int]) -> list[int]:
        p = self.p
        self.counter.n_add += len(u)
        return [-a % p for a in u]

    def vmul(self, u: list[int], v: list[int]) -> list[int]:
        p = self.p
        self.counter.n_mul += len(u)
        return [a * b % p for a, b in zip(u, v)]

    def vscale(self, s: int, u: list[int]) -> list[int]:
        p = self.p
        self.counter.n_mul += len(u)
        return [s * a % p for a in u]

    def vaxpy(self, s: int, u: list[int], v: list[int]) -> list[int]:
        """v + s*u, elementwise."""
        p = self.p
        self.counter.n_mul += len(u)
        self.counter.n_add += len(u)
        return [(b + s * a) % p for a, b in zip(u, v)]

    def vfma(self, u: list[int], w: list[int], v: list[int]) -> list[int]:
        """v + u*w, elementwise."""
        p = self.p
        self.counter.n_mul += len(u)
        self.counter.n_add += len(u)
        return [(c + a * b) % p for a, b, c in zip(u, w, v)]

    def dot(self, u: list[int], v: list[int]) -> FieldElement:
        n = len(u)
        if n == 0:
            return 0
        self.counter.n_mul += n
        self.counter.n_add += n - 1
        return sum(a * b for a, b in zip(u, v)) % self.p

    def powers(self, a: int, n: int) -> list[int]:
        """[1, a, a^2, ..., a^(n-1)]."""
        out = [1] * n
        for k in range(1, n):
            out[k] = self.mul(out[k - 1], a)
        return out


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in F_p^* (uncounted; used for validation only)."""
    a %= p
    if a == 0:
        raise ZeroInverse("0 has no multiplicative order")
    order = p - 1
    for q in prime_factors(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def primitive_root(p: int) -> int:
    """Smallest generator of F_p^*."""
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    if p == 2:
        return 1
    raise NotPrime(f"no generator found modulo {p}")


def find_root_of_unity(p: int, r: int) -> FieldElement:
    """Element of multiplicative order exactly r in F_p.

    Deterministic: g^((p-1)/r) for the smallest generator g.
    """
    if r < 1 or (p - 1) % r != 0:
        raise NoRootOfUnity(f"r={r} does not divide p-1={p - 1}")
    if r == 1:
        return 1
    zeta = pow(primitive_root(p), (p - 1) // r, p)
    assert multiplicative_order(zeta, p) == r
    return zeta
