"""Eigenfactor-style weights from a teleported random walk.

The walk runs on the row-normalized competence matrix with dangling rows
replaced by the uniform row. With teleportation probability 1 - alpha the
walker jumps to a uniformly random student, which makes the chain primitive
and its stationary distribution unique and strictly positive. A student's
weight is then the stationary-visit-weighted incoming mass, so endorsements
from influential students count for more.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .degree import WeightVector
from .errors import DegenerateNetwork, DimensionMismatch, NoConvergence
from .survey import NormalizedMatrix

DEFAULT_ALPHA = 0.85
DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 1000

ROW_SUM_TOL = 1e-12
DISTRIBUTION_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class StochasticMatrix:
    """Row-stochastic walk matrix: every row sums to one."""

    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatch("walk matrix must be square")
        if entries.shape[0] == 0:
            raise DimensionMismatch("walk matrix must be nonempty")
        if np.any(entries < 0):
            raise ValueError("walk matrix entries must be nonnegative")
        deviations = np.abs(entries.sum(axis=1) - 1.0)
        if np.any(deviations > ROW_SUM_TOL):
            row = int(np.argmax(deviations))
            raise ValueError(f"row {row} of the walk matrix does not sum to 1")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def build_stochastic(normalized: NormalizedMatrix) -> StochasticMatrix:
    """Patch dangling rows with the uniform row 1/n."""
    walk = np.array(normalized.entries)
    if normalized.dangling:
        walk[sorted(normalized.dangling)] = 1.0 / normalized.n
    return StochasticMatrix(entries=walk)


@dataclass(frozen=True, eq=False)
class TransitionModel:
    """Teleported chain alpha * walk + (1 - alpha) * uniform, kept factored.

    The dense transition matrix is never needed by the solver; see
    materialize_transition for a debug-only dense form.
    """

    walk: StochasticMatrix
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise ValueError(f"alpha must lie in [0, 1), got {self.alpha!r}")

    @property
    def n(self) -> int:
        return self.walk.n

    def step(self, distribution: np.ndarray) -> np.ndarray:
        """Advance a row distribution by one chain transition."""
        teleport = (1.0 - self.alpha) / self.n
        return self.alpha * (distribution @ self.walk.entries) + teleport


def materialize_transition(model: TransitionModel) -> np.ndarray:
    """Dense column-stochastic transition matrix, for tests and debugging.

    Column j holds the outgoing probabilities of student j, so a stationary
    distribution x satisfies materialize_transition(model) @ x = x.
    """
    teleport = (1.0 - model.alpha) / model.n
    return model.alpha * model.walk.entries.T + teleport


@dataclass(frozen=True, eq=False)
class InfluenceVector:
    """Stationary distribution of the teleported chain, with diagnostics.

    ``iterations`` counts the power-iteration steps taken and ``residual``
    is the final L1 change between successive iterates.
    """

    values: np.ndarray
    iterations: int
    residual: float

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise DimensionMismatch("influence must form a nonempty 1-d sequence")
        if np.any(values <= 0):
            raise ValueError("influence entries must be strictly positive")
        if abs(values.sum() - 1.0) > DISTRIBUTION_TOL:
            raise ValueError("influence must sum to 1")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.size


def stationary_distribution(
    model: TransitionModel,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> InfluenceVector:
    """Power iteration for the stationary distribution of the chain.

    Starts from the uniform distribution, renormalizes each iterate against
    floating-point drift, and stops once the L1 change drops to ``tol``.
    The run is deterministic: fixed start, fixed operation order. Raises
    NoConvergence if ``max_iter`` steps are not enough.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    n = model.n
    current = np.full(n, 1.0 / n)
    residual = np.inf
    for iteration in range(1, max_iter + 1):
        advanced = model.step(current)
        advanced /= advanced.sum()
        residual = float(np.abs(advanced - current).sum())
        current = advanced
        if residual <= tol:
            return InfluenceVector(
                values=current, iterations=iteration, residual=residual
            )
    raise NoConvergence(
        f"residual {residual:.3e} still above {tol:.3e} after {max_iter} iterations"
    )


def eigenfactor_weights(
    influence: InfluenceVector, normalized: NormalizedMatrix
) -> WeightVector:
    """Weights proportional to influence-weighted incoming mass.

    A student endorsed by nobody keeps weight exactly zero: every term of
    the corresponding column is zero before any rescaling happens.
    """
    if influence.n != normalized.n:
        raise DimensionMismatch(
            f"{influence.n} influence entries vs {normalized.n} students"
        )
    mass = influence.values @ normalized.entries
    total = mass.sum()
    if total <= 0.0:
        raise DegenerateNetwork("no student endorses any other")
    return WeightVector(weights=mass / total, method="eigenfactor")
