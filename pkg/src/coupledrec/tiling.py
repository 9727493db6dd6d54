"""Black/white tilings of a 1 x n board with pieces of length 1..k.

A tiling is valid when no black piece comes after a white one, so every
valid coloring is a run of black pieces followed by a run of white pieces.
``a_n`` counts all-black tilings (the empty tiling included, so ``a_0 = 1``),
``b_n`` counts tilings ending in white and ``t_n = a_n + b_n``.

Board pieces of every length are called "pieces" here, although the usual
name for them in this problem is dominoes.

The counts obey, for ``n >= k``::

    a_n = a_{n-1} + ... + a_{n-k}
    b_n = (a_{n-1} + b_{n-1}) + ... + (a_{n-k} + b_{n-k})

so every coefficient matrix is ``[[1, 0], [1, 1]]``. Note that the scalar
recurrence for k = 3 has a zero coefficient on ``z_{n-3}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .algebra import Mat2, Scalar
from .decouple import CoefficientVector, CoupledSystem, coefficients_recursive
from .sequence import generate_coupled

__all__ = [
    "TilingParams",
    "Tiling",
    "TilingCounts",
    "TILING_MATRIX",
    "tiling_system",
    "tiling_counts",
    "degenerate_counts",
    "compositions",
    "enumerate_tilings",
    "split_counts",
    "coefficient_triangle",
    "triangle_correction",
]

TILING_MATRIX = Mat2.from_rows([[1, 0], [1, 1]])


@dataclass(frozen=True)
class TilingParams:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"maximal piece size must be at least 1, got {self.k}")


@dataclass(frozen=True)
class Tiling:
    """Piece lengths left to right; pieces from ``white_start`` on are white."""

    parts: tuple[int, ...]
    white_start: int

    @property
    def length(self) -> int:
        return sum(self.parts)

    @property
    def all_black(self) -> bool:
        return self.white_start == len(self.parts)

    @property
    def colors(self) -> str:
        return "B" * self.white_start + "W" * (len(self.parts) - self.white_start)

    def is_valid(self, k: int) -> bool:
        return all(1 <= p <= k for p in self.parts) and 0 <= self.white_start <= len(self.parts)


@dataclass(frozen=True)
class TilingCounts:
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def t(self) -> tuple[int, ...]:
        return tuple(x + y for x, y in zip(self.a, self.b))

    def rows(self) -> Iterator[tuple[int, int, int, int]]:
        for m, (x, y) in enumerate(zip(self.a, self.b)):
            yield m, x, y, x + y


def _initial_counts(k: int) -> tuple[list[int], list[int]]:
    # n < k: only pieces up to length n fit, so the sums run over all earlier terms
    a, b = [1], [0]
    for n in range(1, k):
        a.append(sum(a[:n]))
        b.append(sum(a[:n]) + sum(b[:n]))
    return a, b


def tiling_system(k: int) -> CoupledSystem:
    """Coupled system of order k for the tiling counts."""
    TilingParams(k)
    a, b = _initial_counts(k)
    return CoupledSystem((TILING_MATRIX,) * k, tuple(a), tuple(b))


def _as_int(x: Scalar) -> int:
    assert not x.imag and x.real.denominator == 1
    return int(x.real)


def tiling_counts(k: int, n: int) -> TilingCounts:
    """``a_m, b_m`` for m = 0..n, via the coupled recurrence."""
    sys = tiling_system(k)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < k - 1:
        pair = generate_coupled(sys, k - 1)
        a, b = pair.a[: n + 1], pair.b[: n + 1]
    else:
        pair = generate_coupled(sys, n)
        a, b = pair.a, pair.b
    return TilingCounts(tuple(map(_as_int, a)), tuple(map(_as_int, b)))


def degenerate_counts(n: int) -> TilingCounts:
    """Counts for k = 0: only the empty board can be tiled."""
    return TilingCounts((1,) + (0,) * n, (0,) * (n + 1))


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of n into parts from 1..k, in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, min(k, n) + 1):
        for rest in compositions(n - first, k):
            yield (first,) + rest


def enumerate_tilings(k: int, n: int) -> list[Tiling]:
    """Every valid tiling of a length-n board, by brute force."""
    TilingParams(k)
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Tiling(parts, w) for parts in compositions(n, k) for w in range(len(parts) + 1)]


def split_counts(tilings: list[Tiling]) -> tuple[int, int]:
    """(all-black count, ending-in-white count)."""
    black = sum(1 for t in tilings if t.all_black)
    return black, len(tilings) - black


def coefficient_triangle(max_k: int) -> list[CoefficientVector]:
    """Scalar-recurrence coefficient rows for k = 1..max_k."""
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    return [coefficients_recursive((TILING_MATRIX,) * k) for k in range(1, max_k + 1)]


def triangle_correction(k: int) -> tuple[int, ...]:
    """Difference between row k and row k-1 padded with two zeros.

    It is zero up to position k-1, then 2, then -2 repeated k-1 times, and
    finally -1. For k = 1 this is the whole first row.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return (0,) * (k - 1) + (2,) + (-2,) * (k - 1) + (-1,)
