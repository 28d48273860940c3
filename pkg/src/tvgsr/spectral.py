"""Dense Hessian assembly, condition numbers, and eigenvalue-bound checks.

The vectorized Hessian of the noisy reconstruction objective is
Q + upsilon * (D D^T) kron (L + epsilon*I)^beta with Q = diag(vec(J)),
using column-major vectorization. These tools are dense-only analysis aids
with a hard size guard; condition numbers are compared between the
shifted-power (Sobolev) objective and the plain Laplacian objective, and
extreme eigenvalues are checked against the additive (Weyl) brackets
obtained from the spectra of the two summands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import InputError, ParameterError
from .graphs import Graph, sobolev_power
from .sampling import as_mask_array
from .solvers import DENSE_GUARD, _vec
from .temporal import _operator_matrix

_SINGULAR_RATIO = 1e-12  # lambda_min below this fraction of lambda_max flags kappa as infinite
_BRACKET_RTOL = 1e-8


@dataclass(frozen=True)
class HessianSpec:
    """Vectorized Hessian blocks: diagonal data block Q and smoothness block."""

    data_block: np.ndarray        # Q = diag(vec(J))
    smoothness_block: np.ndarray  # upsilon * (D D^T) kron (L + epsilon*I)^beta
    upsilon: float
    epsilon: float
    beta: float

    def full(self) -> np.ndarray:
        return self.data_block + self.smoothness_block


def hessian(mask, graph: Graph, op, upsilon, epsilon, beta) -> HessianSpec:
    """Assemble the dense vectorized Hessian blocks (N*M <= 4000 guard)."""
    mask = as_mask_array(mask)
    if mask.shape[0] != graph.n_nodes:
        raise InputError(f"mask has {mask.shape[0]} rows but graph has {graph.n_nodes} nodes")
    size = mask.size
    if size > DENSE_GUARD:
        raise ParameterError(f"dense Hessian limited to N*M <= {DENSE_GUARD}, got {size}")
    if upsilon < 0:
        raise ParameterError(f"upsilon must be >= 0, got {upsilon}")
    d = _operator_matrix(op)
    if d.shape[0] != mask.shape[1]:
        raise InputError(f"operator expects {d.shape[0]} snapshots, mask has {mask.shape[1]}")
    penalty = sobolev_power(graph.laplacian, epsilon, beta)
    smoothness = upsilon * np.kron(d @ d.T, penalty)
    return HessianSpec(
        data_block=np.diag(_vec(mask)),
        smoothness_block=smoothness,
        upsilon=float(upsilon),
        epsilon=float(epsilon),
        beta=float(beta),
    )


def condition_number(matrix) -> float:
    """Eigenvalue ratio lambda_max / lambda_min of a symmetric matrix.

    Returns ``math.inf`` when the matrix is numerically singular
    (lambda_min < 1e-12 * lambda_max), mirroring the divergence of the
    condition number for rank-deficient Hessians.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InputError(f"matrix must be square, got shape {matrix.shape}")
    scale = max(1.0, float(np.abs(matrix).max()))
    if float(np.abs(matrix - matrix.T).max()) > 1e-10 * scale:
        raise InputError("matrix is not symmetric")
    eigenvalues = np.linalg.eigvalsh(matrix)
    lam_min, lam_max = float(eigenvalues[0]), float(eigenvalues[-1])
    if lam_max <= 0 or lam_min < _SINGULAR_RATIO * lam_max:
        return math.inf
    return lam_max / lam_min


@dataclass(frozen=True)
class EigenvalueBounds:
    """Computed Hessian extremes against their additive spectral brackets."""

    lambda_max: float
    lambda_min: float
    max_bracket: tuple
    min_bracket: tuple
    premise_holds: bool  # the stated eigenvalue conditions behind the brackets
    max_within: bool
    min_within: bool

    @property
    def all_within(self) -> bool:
        return self.max_within and self.min_within


@dataclass(frozen=True)
class WeylReport:
    """Bracket checks for both objectives plus the ingredient eigenvalues."""

    laplacian: EigenvalueBounds
    sobolev: EigenvalueBounds
    lambda_graph_max: float     # largest Laplacian eigenvalue
    lambda_temporal_max: float  # largest eigenvalue of D D^T
    upsilon: float
    epsilon: float
    beta: float

    @property
    def all_pass(self) -> bool:
        return self.laplacian.all_within and self.sobolev.all_within


def _bracket_check(unscaled_hessian, block_max, upsilon, premise_holds):
    eigenvalues = np.linalg.eigvalsh(unscaled_hessian)
    lam_min, lam_max = float(eigenvalues[0]), float(eigenvalues[-1])
    max_bracket = (block_max, block_max + 1.0 / upsilon)
    min_bracket = (0.0, min(1.0 / upsilon, block_max))
    tol_max = _BRACKET_RTOL * max(1.0, abs(max_bracket[1]))
    tol_min = _BRACKET_RTOL * max(1.0, abs(min_bracket[1]))
    return EigenvalueBounds(
        lambda_max=lam_max,
        lambda_min=lam_min,
        max_bracket=max_bracket,
        min_bracket=min_bracket,
        premise_holds=premise_holds,
        max_within=max_bracket[0] - tol_max <= lam_max <= max_bracket[1] + tol_max,
        min_within=min_bracket[0] - tol_min <= lam_min <= min_bracket[1] + tol_min,
    )


def weyl_bounds(graph: Graph, op, upsilon, epsilon, beta, mask) -> WeylReport:
    """Check the extreme Hessian eigenvalues against their analytic brackets.

    Both Hessians are examined in the scale-invariant form
    (1/upsilon) Q + (D D^T) kron K, for which the brackets read
    lambda_max in [k_max * d_max, k_max * d_max + 1/upsilon] and
    lambda_min in [0, min(1/upsilon, k_max * d_max)], with k_max the largest
    eigenvalue of the penalty matrix and d_max that of D D^T. The brackets
    are stated under the premise k_max, d_max >= 1; premise status is
    reported alongside pass/fail and violations are never silently ignored.
    """
    mask = as_mask_array(mask)
    if not np.any(mask > 0):
        raise InputError("mask selects no entries (J must be nonzero)")
    if upsilon <= 0:
        raise ParameterError(f"upsilon must be > 0 for bound checks, got {upsilon}")
    size = mask.size
    if size > DENSE_GUARD:
        raise ParameterError(f"dense analysis limited to N*M <= {DENSE_GUARD}, got {size}")
    d = _operator_matrix(op)
    ddt = d @ d.T
    lam_temporal = float(np.linalg.eigvalsh(ddt)[-1])
    lam_graph = max(float(graph.spectrum().eigenvalues[-1]), 0.0)

    q_scaled = np.diag(_vec(mask)) / upsilon

    lap = graph.laplacian
    lap_block_max = lam_graph * lam_temporal
    laplacian_bounds = _bracket_check(
        q_scaled + np.kron(ddt, lap),
        lap_block_max,
        upsilon,
        premise_holds=lam_graph >= 1.0 and lam_temporal >= 1.0,
    )

    penalty = sobolev_power(lap, epsilon, beta)
    penalty_max = (lam_graph + epsilon) ** beta
    sobolev_bounds = _bracket_check(
        q_scaled + np.kron(ddt, penalty),
        penalty_max * lam_temporal,
        upsilon,
        premise_holds=penalty_max >= 1.0 and lam_temporal >= 1.0,
    )

    return WeylReport(
        laplacian=laplacian_bounds,
        sobolev=sobolev_bounds,
        lambda_graph_max=lam_graph,
        lambda_temporal_max=lam_temporal,
        upsilon=float(upsilon),
        epsilon=float(epsilon),
        beta=float(beta),
    )


class SweepPoint(NamedTuple):
    epsilon: float
    kappa_sobolev: float
    kappa_laplacian: float


def condition_sweep(graph: Graph, op, upsilon, beta, epsilon_grid, mask) -> list:
    """Condition numbers of both Hessians over a grid of epsilon values.

    The Laplacian-objective value is epsilon-independent and computed once;
    each row pairs it with the shifted-power value at one epsilon.
    """
    epsilon_grid = [float(e) for e in epsilon_grid]
    if not epsilon_grid:
        raise ParameterError("epsilon grid must be nonempty")
    mask = as_mask_array(mask)
    size = mask.size
    if size > DENSE_GUARD:
        raise ParameterError(f"dense analysis limited to N*M <= {DENSE_GUARD}, got {size}")
    d = _operator_matrix(op)
    ddt = d @ d.T
    q = np.diag(_vec(mask))
    lap = graph.laplacian
    kappa_laplacian = condition_number(q + upsilon * np.kron(ddt, lap))
    rows = []
    for epsilon in epsilon_grid:
        penalty = sobolev_power(lap, epsilon, beta)
        kappa = condition_number(q + upsilon * np.kron(ddt, penalty))
        rows.append(SweepPoint(epsilon=epsilon, kappa_sobolev=kappa,
                               kappa_laplacian=kappa_laplacian))
    return rows


def eigenvalue_penalization(spec, beta_list) -> np.ndarray:
    """Normalized spectral penalties (lambda_i / lambda_N)^beta.

    Returns an N x len(beta_list) table with rows indexed by eigenvalue and
    one column per beta; every entry lies in [0, 1]. Small negative
    eigenvalues from round-off are clipped to zero before normalization.
    """
    eigenvalues = np.asarray(spec.eigenvalues, dtype=float)
    beta_list = [float(b) for b in beta_list]
    if not beta_list:
        raise ParameterError("beta list must be nonempty")
    if any(b < 0 for b in beta_list):
        raise ParameterError("beta values must be >= 0")
    lam_max = float(eigenvalues[-1])
    if lam_max <= 0:
        raise ParameterError("largest eigenvalue must be positive (edgeless graph?)")
    ratios = np.clip(eigenvalues, 0.0, None) / lam_max
    return np.column_stack([ratios**b for b in beta_list])
