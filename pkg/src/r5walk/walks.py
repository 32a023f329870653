"""Deterministic one-dimensional random walks over the MT19937 core.

A walk is a pure function of its parameters: the seed fully determines the
step sequence, and the returned positions exclude the origin. Three scalar
sampling models are supported plus a vectorized replica of the uniform model
that goes through an explicit state export/import, mirroring how the same
walk is rebuilt on top of a different generator front end.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import rng
from .errors import DomainError
from .rng import SeedScheme, SeedSpec


class WalkModel(Enum):
    """Which sampling semantics drive the step directions."""

    CHOICE_LEGACY = "choice-legacy"
    CHOICE_MODERN = "choice-modern"
    UNIFORM = "uniform"
    UNIFORM_VECTORIZED = "uniform-vectorized"


@dataclass(frozen=True)
class WalkParams:
    """Full experimental condition for one walk."""

    count: int
    x0: int = 0
    step: int = 1
    seed: SeedSpec = SeedSpec(SeedScheme.BIG_INT_ARRAY, 0)
    model: WalkModel = WalkModel.UNIFORM

    def __post_init__(self) -> None:
        if not isinstance(self.count, int) or isinstance(self.count, bool) or self.count < 0:
            raise DomainError(f"count must be a non-negative integer, got {self.count!r}")
        if not isinstance(self.step, int) or isinstance(self.step, bool) or self.step < 1:
            raise DomainError(f"step must be a positive integer, got {self.step!r}")
        if not isinstance(self.x0, int) or isinstance(self.x0, bool):
            raise DomainError(f"x0 must be an integer, got {self.x0!r}")


def generate_walk(params: WalkParams) -> list[int]:
    """Generate the positions of a walk, one entry per step.

    Seeds a fresh generator from ``params.seed`` and accumulates ``count``
    steps of ``±step`` from ``x0``. Direction rules: the uniform model takes
    a positive step iff uniform(-1, +1) is strictly greater than zero (an
    exact zero steps down); the choice models map sampled index 0 to a
    negative and index 1 to a positive step.
    """
    if params.model is WalkModel.UNIFORM_VECTORIZED:
        return generate_walk_vectorized(params)

    state = rng.seed(params.seed)
    if params.model is WalkModel.UNIFORM:
        step_up = lambda: rng.uniform(state, -1.0, +1.0) > 0
    elif params.model is WalkModel.CHOICE_LEGACY:
        step_up = lambda: rng.choice_legacy(state, 2) == 1
    else:
        step_up = lambda: rng.choice_modern(state, 2) == 1

    x = params.x0
    positions = []
    for _ in range(params.count):
        x = x + params.step if step_up() else x - params.step
        positions.append(x)
    return positions


def generate_walk_vectorized(params: WalkParams) -> list[int]:
    """Uniform-model walk rebuilt through state transfer and batch draws.

    Seeds a generator, exports its words, imports them into a fresh state,
    draws all doubles as a batch, and maps them through the same strict
    sign rule as the scalar path before cumulative-summing from ``x0``.
    Equals ``generate_walk`` with the uniform model for identical
    (count, x0, step, seed).
    """
    if params.model is not WalkModel.UNIFORM_VECTORIZED:
        raise DomainError(f"vectorized walks require the uniform-vectorized model, got {params.model}")

    words, cursor = rng.export_state(rng.seed(params.seed))
    state = rng.import_state(words, cursor)
    if params.count == 0:
        return []
    draws = np.fromiter(
        (rng.next_f64(state) for _ in range(params.count)),
        dtype=np.float64,
        count=params.count,
    )
    # Same float expression as the scalar path's uniform(-1, +1), so the
    # strict > 0 comparison agrees bit-for-bit.
    samples = -1.0 + 2.0 * draws
    steps = np.where(samples > 0, params.step, -params.step)
    return (params.x0 + np.cumsum(steps)).tolist()
