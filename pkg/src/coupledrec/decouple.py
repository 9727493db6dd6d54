"""Decoupling a 2-component vector recurrence of order s into a scalar
recurrence of order 2s.

Given ``v_n = A_1 v_{n-1} + ... + A_s v_{n-s}`` with ``v_n = (a_n, b_n)``,
both ``a_n`` and ``b_n`` satisfy ``z_n = c_1 z_{n-1} + ... + c_{2s} z_{n-2s}``
for ``n >= 2s``. The coefficients depend only on traces, determinants and
mixed determinants of the ``A_t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import ZERO, ONE, Mat2, Poly, Scalar, ScalarLike, as_scalar, ddet, det, trace

__all__ = [
    "CoupledSystem",
    "CoefficientVector",
    "coefficients_recursive",
    "coefficients_closed",
    "char_poly",
    "trim_trailing_zeros",
]


@dataclass(frozen=True)
class CoupledSystem:
    """Coefficient matrices ``A_1..A_s`` plus initial values ``a_0..a_{s-1}``, ``b_0..b_{s-1}``."""

    matrices: tuple[Mat2, ...]
    init_a: tuple[Scalar, ...]
    init_b: tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "matrices", tuple(self.matrices))
        object.__setattr__(self, "init_a", tuple(as_scalar(x) for x in self.init_a))
        object.__setattr__(self, "init_b", tuple(as_scalar(x) for x in self.init_b))
        s = len(self.matrices)
        if s < 1:
            raise ValueError("order must be at least 1")
        if len(self.init_a) != s or len(self.init_b) != s:
            raise ValueError(
                f"order {s} needs {s} initial values per component, "
                f"got {len(self.init_a)} and {len(self.init_b)}"
            )

    @property
    def order(self) -> int:
        return len(self.matrices)

    @classmethod
    def from_rows(
        cls,
        matrices: Sequence[Sequence[Sequence[ScalarLike]]],
        init_a: Sequence[ScalarLike],
        init_b: Sequence[ScalarLike],
    ) -> "CoupledSystem":
        return cls(tuple(Mat2.from_rows(m) for m in matrices), tuple(init_a), tuple(init_b))


@dataclass(frozen=True)
class CoefficientVector:
    """Coefficients ``c_1..c_{2s}`` of ``z_n = sum_i c_i z_{n-i}``.

    ``order`` is the order s of the coupled system the vector came from. The
    vector holds exactly ``2 * order`` entries unless it was produced by
    :func:`trim_trailing_zeros`.
    """

    order: int
    coeffs: tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_scalar(c) for c in self.coeffs))
        if self.order < 1:
            raise ValueError("order must be at least 1")
        if len(self.coeffs) > 2 * self.order:
            raise ValueError(f"at most {2 * self.order} coefficients for order {self.order}")

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def is_full(self) -> bool:
        return len(self.coeffs) == 2 * self.order


def _check_nonempty(matrices: Sequence[Mat2]) -> list[Mat2]:
    ms = list(matrices)
    if not ms:
        raise ValueError("order must be at least 1")
    return ms


def coefficients_recursive(matrices: Sequence[Mat2]) -> CoefficientVector:
    """Build the coefficient vector order by order.

    Going from order s-1 to s, the previous vector is padded with two zeros,
    then ``tr(A_s)`` is added at position s, ``-ddet(A_i, A_s)`` at position
    s+i for i < s, and ``-det(A_s)`` at position 2s (1-based positions).
    """
    ms = _check_nonempty(matrices)
    c = [trace(ms[0]), -det(ms[0])]
    for s in range(2, len(ms) + 1):
        a_s = ms[s - 1]
        c.extend((ZERO, ZERO))
        c[s - 1] = c[s - 1] + trace(a_s)
        for i in range(1, s):
            c[s + i - 1] = c[s + i - 1] - ddet(ms[i - 1], a_s)
        c[2 * s - 1] = c[2 * s - 1] - det(a_s)
    return CoefficientVector(len(ms), tuple(c))


def coefficients_closed(matrices: Sequence[Mat2]) -> CoefficientVector:
    """Each coefficient directly from its index.

    ``c_m = tr(A_m) [m <= s] - sum_{i<j, i+j=m} ddet(A_i, A_j) - det(A_{m/2}) [m even]``
    """
    ms = _check_nonempty(matrices)
    s = len(ms)
    out = []
    for m in range(1, 2 * s + 1):
        acc = trace(ms[m - 1]) if m <= s else ZERO
        for i in range(max(1, m - s), (m + 1) // 2):
            acc = acc - ddet(ms[i - 1], ms[m - i - 1])
        if m % 2 == 0:
            acc = acc - det(ms[m // 2 - 1])
        out.append(acc)
    return CoefficientVector(s, tuple(out))


def char_poly(c: CoefficientVector) -> Poly:
    """Monic ``x^k - c_1 x^{k-1} - ... - c_k`` where ``k = len(c)``."""
    k = len(c.coeffs)
    lower = [-c.coeffs[k - 1 - p] for p in range(k)]
    return Poly(tuple(lower) + (ONE,))


def trim_trailing_zeros(c: CoefficientVector) -> CoefficientVector:
    end = len(c.coeffs)
    while end and c.coeffs[end - 1].is_zero():
        end -= 1
    if end == len(c.coeffs):
        return c
    return CoefficientVector(c.order, c.coeffs[:end])
