"""Term generation for coupled and decoupled recurrences, plus checking."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import ZERO, Scalar, ScalarLike, as_scalar
from .decouple import CoefficientVector, CoupledSystem

__all__ = [
    "DEFAULT_MAX_TERMS",
    "SequencePair",
    "RecurrenceReport",
    "generate_coupled",
    "bootstrap_initials",
    "generate_decoupled",
    "verify_recurrence",
]

# Entries grow exponentially in n; this keeps big-integer blow-up bounded.
DEFAULT_MAX_TERMS = 10_000


@dataclass(frozen=True)
class SequencePair:
    a: tuple[Scalar, ...]
    b: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("component sequences must have equal length")

    def __len__(self) -> int:
        return len(self.a)

    @property
    def t(self) -> tuple[Scalar, ...]:
        """Sum component ``a_n + b_n``."""
        return tuple(x + y for x, y in zip(self.a, self.b))

    def combine(self, alpha: ScalarLike, beta: ScalarLike) -> tuple[Scalar, ...]:
        alpha, beta = as_scalar(alpha), as_scalar(beta)
        return tuple(alpha * x + beta * y for x, y in zip(self.a, self.b))

    def component(self, which: str) -> tuple[Scalar, ...]:
        if which == "a":
            return self.a
        if which == "b":
            return self.b
        if which == "t":
            return self.t
        raise ValueError(f"unknown component {which!r}; expected a, b or t")


@dataclass(frozen=True)
class RecurrenceReport:
    """Outcome of :func:`verify_recurrence`.

    ``first_violation`` is the smallest index n where the recurrence fails,
    or None when every checked index passes.
    """

    passed: bool
    first_violation: int | None
    start: int
    end: int

    def __bool__(self) -> bool:
        return self.passed


def _check_horizon(n: int, max_terms: int) -> None:
    if n + 1 > max_terms:
        raise ValueError(f"requested {n + 1} terms, limit is {max_terms}")


def generate_coupled(sys: CoupledSystem, n: int, *, max_terms: int = DEFAULT_MAX_TERMS) -> SequencePair:
    """Terms ``a_0..a_n`` and ``b_0..b_n`` of the coupled system."""
    s = sys.order
    if n < s - 1:
        raise ValueError("horizon shorter than initial data")
    _check_horizon(n, max_terms)
    a = list(sys.init_a)
    b = list(sys.init_b)
    ms = sys.matrices
    for m in range(s, n + 1):
        x = y = ZERO
        for t, mat in enumerate(ms, start=1):
            pa, pb = a[m - t], b[m - t]
            x = x + mat.a11 * pa + mat.a12 * pb
            y = y + mat.a21 * pa + mat.a22 * pb
        a.append(x)
        b.append(y)
    return SequencePair(tuple(a), tuple(b))


def bootstrap_initials(sys: CoupledSystem) -> tuple[tuple[Scalar, ...], tuple[Scalar, ...], tuple[Scalar, ...]]:
    """First 2s terms of ``a``, ``b`` and ``t = a + b``.

    The scalar recurrence has order 2s but the coupled system only supplies
    s starting values, so the remaining s terms are run forward here.
    """
    pair = generate_coupled(sys, 2 * sys.order - 1)
    return pair.a, pair.b, pair.t


def generate_decoupled(
    c: CoefficientVector,
    init: Sequence[ScalarLike],
    n: int,
    *,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> tuple[Scalar, ...]:
    """Terms ``z_0..z_n`` with ``z_m = sum_i c_i z_{m-i}`` from ``m = 2s`` on."""
    k = 2 * c.order
    z = [as_scalar(x) for x in init]
    if len(z) != k:
        raise ValueError(f"need exactly {k} initial terms, got {len(z)}")
    if n < k - 1:
        raise ValueError("horizon shorter than initial data")
    _check_horizon(n, max_terms)
    cs = c.coeffs
    for m in range(k, n + 1):
        acc = ZERO
        for i, ci in enumerate(cs, start=1):
            if not ci.is_zero():
                acc = acc + ci * z[m - i]
        z.append(acc)
    return tuple(z)


def verify_recurrence(z: Sequence[ScalarLike], c: CoefficientVector) -> RecurrenceReport:
    """Check ``z_n = sum_i c_i z_{n-i}`` exactly for every n from 2s to the end."""
    k = 2 * c.order
    zs = [as_scalar(x) for x in z]
    if len(zs) < k + 1:
        raise ValueError(f"sequence too short: need at least {k + 1} terms, got {len(zs)}")
    cs = c.coeffs
    for n in range(k, len(zs)):
        acc = ZERO
        for i, ci in enumerate(cs, start=1):
            if not ci.is_zero():
                acc = acc + ci * zs[n - i]
        if acc != zs[n]:
            return RecurrenceReport(False, n, k, len(zs) - 1)
    return RecurrenceReport(True, None, k, len(zs) - 1)
