"""Block companion matrix of a coupled system and a generic exact
characteristic polynomial.

This module is an independent check on :mod:`coupledrec.decouple`: nothing
here uses traces-and-mixed-determinants formulas. The characteristic
polynomial comes from the Faddeev-LeVerrier trace recursion.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import ZERO, ONE, Poly, Scalar, ScalarLike, as_scalar
from .decouple import CoupledSystem

__all__ = [
    "SquareMatrix",
    "build_companion",
    "char_poly_oracle",
    "step",
    "matmul",
    "poly_at_matrix",
    "initial_state",
]


@dataclass(frozen=True)
class SquareMatrix:
    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_scalar(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]]) -> "SquareMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, n: int) -> "SquareMatrix":
        return cls(tuple((ZERO,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)


def build_companion(sys: CoupledSystem) -> SquareMatrix:
    """``[[A_1 A_2 ... A_s], [I 0 ...], ...]`` as a 2s x 2s matrix.

    The first two rows hold the blocks side by side; below them sits a
    shifted identity that moves ``(a_{n-1}, b_{n-1}, ...)`` down one slot.
    """
    n = 2 * sys.order
    rows = [[ZERO] * n for _ in range(n)]
    for t, m in enumerate(sys.matrices):
        rows[0][2 * t], rows[0][2 * t + 1] = m.a11, m.a12
        rows[1][2 * t], rows[1][2 * t + 1] = m.a21, m.a22
    for i in range(2, n):
        rows[i][i - 2] = ONE
    return SquareMatrix(tuple(tuple(r) for r in rows))


def _mul_rows(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    n = len(a)
    out = []
    for i in range(n):
        acc = [ZERO] * n
        for k, aik in enumerate(a[i]):
            # companion matrices are mostly zeros
            if aik.is_zero():
                continue
            bk = b[k]
            for j in range(n):
                if not bk[j].is_zero():
                    acc[j] = acc[j] + aik * bk[j]
        out.append(acc)
    return out


def matmul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return SquareMatrix(tuple(tuple(r) for r in _mul_rows(a.rows, b.rows)))


def char_poly_oracle(m: SquareMatrix) -> Poly:
    """Monic ``det(xI - M)`` by Faddeev-LeVerrier.

    With ``N_0 = 0`` and ``p_n = 1``, iterate ``N_k = M N_{k-1} + p_{n-k+1} I``
    and ``p_{n-k} = -tr(M N_k) / k`` for k = 1..n.
    """
    n = m.dim
    coeffs: list[Scalar] = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mn = [[ZERO] * n for _ in range(n)]  # M @ N_{k-1}; zero for k = 1
    for k in range(1, n + 1):
        nk = [row[:] for row in mn]
        for i in range(n):
            nk[i][i] = nk[i][i] + coeffs[n - k + 1]
        mn = _mul_rows(m.rows, nk)
        tr = ZERO
        for i in range(n):
            tr = tr + mn[i][i]
        coeffs[n - k] = -tr / k
    return Poly(tuple(coeffs))


def step(m: SquareMatrix, w: Sequence[ScalarLike]) -> tuple[Scalar, ...]:
    """Matrix-vector product ``m @ w``."""
    w = [as_scalar(x) for x in w]
    if len(w) != m.dim:
        raise ValueError(f"vector length {len(w)} does not match matrix dimension {m.dim}")
    out = []
    for row in m.rows:
        acc = ZERO
        for x, y in zip(row, w):
            if not x.is_zero():
                acc = acc + x * y
        out.append(acc)
    return tuple(out)


def initial_state(sys: CoupledSystem) -> tuple[Scalar, ...]:
    """State ``(a_{s-1}, b_{s-1}, ..., a_0, b_0)`` matching :func:`build_companion`."""
    out: list[Scalar] = []
    for a, b in zip(reversed(sys.init_a), reversed(sys.init_b)):
        out.extend((a, b))
    return tuple(out)


def poly_at_matrix(p: Poly, m: SquareMatrix) -> SquareMatrix:
    """Evaluate ``p(M)`` by Horner's scheme on matrices."""
    n = m.dim
    acc = [[ZERO] * n for _ in range(n)]
    for c in reversed(p.coeffs):
        acc = _mul_rows(acc, m.rows)
        for i in range(n):
            acc[i][i] = acc[i][i] + c
    return SquareMatrix(tuple(tuple(r) for r in acc))
