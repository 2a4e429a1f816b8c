"""Bi-graded polynomials sum lambda[i][j] X^i A^j in X-first normal form.

Rows are indexed by the X-degree i and hold the A-coefficients of that row,
so ``table[i]`` is the polynomial f_i with F = sum_i X^i f_i(A).  The same
table type is used for A-first forms (F = sum_i f_i(A) X^i); which form a
table is in is always fixed by the function that produced it.

Both the Kummer and the Artin quotient rings embed into r x r matrices by
A -> diag(nodes), X -> beta, where the nodes are the r-th roots of unity or
0..r-1.  Under that embedding X^i f(A) becomes diag(rot_i(v)) beta^i with
v[l] = f(node_l), which is what :func:`embed` builds.
"""

from __future__ import annotations

from typing import Callable

from .banded import CyclicBandMatrix, rot
from .errors import DegreeTooLarge
from .transforms import degree


class BiGradedPoly:
    __slots__ = ("table",)

    def __init__(self, table):
        table = [list(row) for row in table] or [[0]]
        width = max(len(row) for row in table)
        self.table = [row + [0] * (width - len(row)) for row in table]

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "BiGradedPoly":
        t = [[0] * (j + 1) for _ in range(i + 1)]
        t[i][j] = coeff
        return cls(t)

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int]) -> "BiGradedPoly":
        if not terms:
            return cls([[0]])
        dx = max(i for i, _ in terms)
        da = max(j for _, j in terms)
        t = [[0] * (da + 1) for _ in range(dx + 1)]
        for (i, j), v in terms.items():
            t[i][j] = v
        return cls(t)

    @property
    def bounds(self) -> tuple[int, int]:
        """Declared (dX, dA)."""
        return len(self.table) - 1, len(self.table[0]) - 1

    def bidegree(self) -> tuple[float, float]:
        """(deg_X, deg_A) of the nonzero support; (-inf, -inf) for zero."""
        dx = max((i for i, row in enumerate(self.table) if any(row)), default=float("-inf"))
        da = max((degree(row) for row in self.table), default=float("-inf"))
        return dx, da

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.table)

    def terms(self) -> dict[tuple[int, int], int]:
        return {(i, j): v for i, row in enumerate(self.table) for j, v in enumerate(row) if v}

    def trimmed(self) -> "BiGradedPoly":
        dx, da = self.bidegree()
        if dx < 0:
            return BiGradedPoly([[0]])
        return BiGradedPoly([row[: da + 1] for row in self.table[: dx + 1]])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiGradedPoly):
            return NotImplemented
        return self.terms() == other.terms()

    def __repr__(self) -> str:
        return f"BiGradedPoly({self.terms()})"


def embed(rows: list[list[int]], r: int, evaluate: Callable[[list[int]], list[int]]) -> CyclicBandMatrix:
    """Band matrix of sum_i X^i rows[i](A) under A -> diag(nodes), X -> beta."""
    return CyclicBandMatrix(r, {i: rot(evaluate(row), i) for i, row in enumerate(rows)})


def recover(M: CyclicBandMatrix, interpolate: Callable[[list[int]], list[int]],
            da: int) -> list[list[int]]:
    """Invert :func:`embed` for X-degrees 0..max offset and A-degree <= da.

    Raises ``ArithmeticError`` if an interpolated row has support above da,
    which can only happen when the matrix is not the image of such a form.
    """
    r = M.r
    dx = max(M.offsets)
    rows = []
    for s in range(dx + 1):
        if s not in M.diags:
            rows.append([0] * (da + 1))
            continue
        vals = rot(M.diags[s], -s)
        coeffs = interpolate(vals)
        if any(coeffs[da + 1:]):
            raise ArithmeticError(f"row {s} has A-degree above {da}; band matrix is not a valid image")
        rows.append(coeffs[: da + 1] + [0] * max(0, da + 1 - r))
    return rows


def check_low_bidegree(F: BiGradedPoly, r: int) -> tuple[int, int]:
    """Actual bi-degree of F, enforcing both components < r/3."""
    dx, da = F.bidegree()
    if 3 * dx >= r or 3 * da >= r:
        raise DegreeTooLarge(f"bi-degree {(dx, da)} is not below r/3 = {r / 3:.2f}")
    return dx, da
