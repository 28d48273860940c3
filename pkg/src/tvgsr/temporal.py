"""Time-varying signals, temporal difference operators, and smoothness functionals.

A time-varying graph signal is an N x M float matrix whose columns are
snapshots. Temporal structure enters through a difference operator D with
one column per pair of snapshots s steps apart: column j has -1 at row j and
+1 at row j+s, so X @ D stacks the columns x_{j+s} - x_j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InputError, ParameterError
from .graphs import Graph, sobolev_power

TEMPORAL_STEPS = (1, 2, 3)


def as_signal(x, min_snapshots=1) -> np.ndarray:
    """Validate a time-varying signal: 2-D, finite, at least min_snapshots columns."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 2:
        raise InputError(f"signal must be 2-D (nodes x snapshots), got shape {x.shape}")
    if x.shape[1] < min_snapshots:
        raise ParameterError(
            f"signal needs at least {min_snapshots} snapshots, got {x.shape[1]}"
        )
    if not np.all(np.isfinite(x)):
        raise InputError("signal contains non-finite entries")
    return x


@dataclass(frozen=True)
class TemporalOperator:
    """Difference operator: M x (M-s) matrix, one -1/+1 pair per column."""

    matrix: np.ndarray
    step: int

    @property
    def n_snapshots(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_differences(self) -> int:
        return self.matrix.shape[1]


def _operator_matrix(op) -> np.ndarray:
    if isinstance(op, TemporalOperator):
        return op.matrix
    return np.asarray(op, dtype=float)


def difference_operator(n_snapshots, step=1) -> TemporalOperator:
    """Build the s-step temporal difference operator for M snapshots.

    Column j holds -1 at row j and +1 at row j+s; every column sums to zero.
    Step 1 is the consecutive-difference operator; steps 2 and 3 compare
    snapshots two and three apart.
    """
    if step not in TEMPORAL_STEPS:
        raise ParameterError(f"step must be one of {TEMPORAL_STEPS}, got {step}")
    if n_snapshots <= step:
        raise ParameterError(
            f"need more snapshots than the step ({n_snapshots} <= {step})"
        )
    matrix = np.zeros((n_snapshots, n_snapshots - step))
    for j in range(n_snapshots - step):
        matrix[j, j] = -1.0
        matrix[j + step, j] = 1.0
    matrix.setflags(write=False)
    return TemporalOperator(matrix=matrix, step=step)


def temporal_difference(x, op) -> np.ndarray:
    """Column differences X @ D: column j equals x_{j+s} - x_j."""
    x = as_signal(x, min_snapshots=2)
    d = _operator_matrix(op)
    if x.shape[1] != d.shape[0]:
        raise InputError(
            f"signal has {x.shape[1]} snapshots but operator expects {d.shape[0]}"
        )
    return x @ d


def local_variation(x, graph: Graph, node) -> float:
    """Local variation at one node: sqrt(sum_j W(i,j) (x(j) - x(i))^2)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (graph.n_nodes,):
        raise InputError(f"expected a length-{graph.n_nodes} signal, got shape {x.shape}")
    if not 0 <= node < graph.n_nodes:
        raise InputError(f"node index {node} out of range [0, {graph.n_nodes})")
    weights = graph.adjacency[node]
    return float(np.sqrt(np.sum(weights * (x - x[node]) ** 2)))


def dirichlet_form(x, graph: Graph, p) -> float:
    """Discrete p-Dirichlet form: (1/p) * sum_i ||local variation at i||^p."""
    if p <= 0:
        raise ParameterError(f"p must be > 0, got {p}")
    x = np.asarray(x, dtype=float)
    if x.shape != (graph.n_nodes,):
        raise InputError(f"expected a length-{graph.n_nodes} signal, got shape {x.shape}")
    sq = np.sum(graph.adjacency * (x[None, :] - x[:, None]) ** 2, axis=1)
    return float(np.sum(sq ** (p / 2.0)) / p)


def laplacian_quadratic(x, laplacian_matrix) -> float:
    """Laplacian quadratic form x^T L x (zero iff x is constant on a connected graph)."""
    x = np.asarray(x, dtype=float)
    lap = np.asarray(laplacian_matrix, dtype=float)
    if x.shape[0] != lap.shape[0]:
        raise InputError(f"signal length {x.shape[0]} does not match Laplacian size {lap.shape[0]}")
    return float(x @ (lap @ x))


def s2_time_varying(x, laplacian_matrix) -> float:
    """Snapshot-summed quadratic form tr(X^T L X)."""
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    lap = np.asarray(laplacian_matrix, dtype=float)
    if x.shape[0] != lap.shape[0]:
        raise InputError(f"signal has {x.shape[0]} rows, Laplacian is {lap.shape[0]} x {lap.shape[0]}")
    return float(np.sum(x * (lap @ x)))


def _shifted_power_apply(laplacian_matrix, epsilon, beta):
    """Action of (L + epsilon*I)^beta; beta = 1 avoids forming the power."""
    lap = np.asarray(laplacian_matrix, dtype=float)
    if epsilon < 0:
        raise ParameterError(f"epsilon must be >= 0, got {epsilon}")
    if beta <= 0:
        raise ParameterError(f"beta must be > 0, got {beta}")
    if beta == 1.0:
        if epsilon == 0.0:
            return lambda v: lap @ v
        return lambda v: lap @ v + epsilon * v
    power = sobolev_power(lap, epsilon, beta)
    return lambda v: power @ v


def sobolev_norm(x, laplacian_matrix, epsilon, beta) -> float:
    """Squared graph Sobolev norm x^T (L + epsilon*I)^beta x.

    Reduces to the Laplacian quadratic form at epsilon = 0, beta = 1.
    """
    x = np.asarray(x, dtype=float)
    lap = np.asarray(laplacian_matrix, dtype=float)
    if x.shape[0] != lap.shape[0]:
        raise InputError(f"signal length {x.shape[0]} does not match Laplacian size {lap.shape[0]}")
    apply_power = _shifted_power_apply(lap, epsilon, beta)
    return float(np.sum(x * apply_power(x)))


def sobolev_smoothness(x, op, laplacian_matrix, epsilon, beta) -> float:
    """Temporal-difference smoothness tr((XD)^T (L + epsilon*I)^beta (XD)).

    Equals the sum of squared Sobolev norms of the difference columns; with
    epsilon = 0 and beta = 1 this is the plain Laplacian temporal smoothness.
    """
    diff = temporal_difference(x, op)
    lap = np.asarray(laplacian_matrix, dtype=float)
    if diff.shape[0] != lap.shape[0]:
        raise InputError(f"signal has {diff.shape[0]} rows, Laplacian is {lap.shape[0]} x {lap.shape[0]}")
    apply_power = _shifted_power_apply(lap, epsilon, beta)
    return float(np.sum(diff * apply_power(diff)))


def alpha_smoothness_level(x, op, laplacian_matrix) -> float:
    """Per-difference Laplacian smoothness tr((XD)^T L (XD)) / n_differences.

    A signal belongs to the alpha-structured set of smoothly evolving
    signals exactly when this level is <= alpha.
    """
    diff = temporal_difference(x, op)
    lap = np.asarray(laplacian_matrix, dtype=float)
    return float(np.sum(diff * (lap @ diff)) / diff.shape[1])
