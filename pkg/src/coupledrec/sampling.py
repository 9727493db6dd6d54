"""Random coupled systems with small Gaussian-rational entries."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Mat2, Scalar
from .decouple import CoupledSystem

__all__ = ["RandomSystemConfig", "random_scalar", "random_mat2", "random_system"]


@dataclass(frozen=True)
class RandomSystemConfig:
    """Numerators are drawn from [-bound, bound], denominators from [1, bound]."""

    min_order: int = 1
    max_order: int = 6
    bound: int = 9
    complex_entries: bool = True
    # probability that a matrix entry is forced to zero
    zero_prob: float = 0.1


def _rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_scalar(rng: random.Random, cfg: RandomSystemConfig = RandomSystemConfig()) -> Scalar:
    re_ = _rational(rng, cfg.bound)
    im = _rational(rng, cfg.bound) if cfg.complex_entries else 0
    return Scalar(re_, im)


def random_mat2(rng: random.Random, cfg: RandomSystemConfig = RandomSystemConfig()) -> Mat2:
    def entry():
        return Scalar(0) if rng.random() < cfg.zero_prob else random_scalar(rng, cfg)

    return Mat2(entry(), entry(), entry(), entry())


def random_system(
    rng: random.Random,
    cfg: RandomSystemConfig = RandomSystemConfig(),
    order: int | None = None,
) -> CoupledSystem:
    s = order if order is not None else rng.randint(cfg.min_order, cfg.max_order)
    return CoupledSystem(
        tuple(random_mat2(rng, cfg) for _ in range(s)),
        tuple(random_scalar(rng, cfg) for _ in range(s)),
        tuple(random_scalar(rng, cfg) for _ in range(s)),
    )
