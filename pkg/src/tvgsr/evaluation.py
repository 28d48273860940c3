"""Error metrics and the Monte-Carlo reconstruction experiment protocol.

Every repetition of an experiment draws one sampling mask that is shared by
all methods, reconstructs from the masked observations, and scores the
result on the non-sampled entries only. Mask seeds derive from a stable
blake2b hash of (base seed, regime, level, repetition), so experiment tables
are reproducible across platforms and safe to compute in parallel.
"""

from __future__ import annotations

import hashlib
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import textio
from .data import Dataset
from .exceptions import InputError, NumericError, ParameterError
from .sampling import REGIMES, forecasting_mask, random_entry_mask, snapshot_mask
from .solvers import SolverConfig, solve_cg, solve_gr_static

DEFAULT_UPSILON_GRID = (1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0)
DEFAULT_EPSILON_GRID = (0.01, 0.05, 0.1, 0.5, 1.0, 2.0)

RAW_HEADER = ("method", "regime", "density_or_horizon", "repetition",
              "rmse", "mae", "mape", "iterations", "wall_time_s", "mape_excluded")
AGGREGATE_HEADER = ("method", "regime", "density_or_horizon", "repetitions",
                    "rmse", "mae", "mape", "iterations", "wall_time_s")


def _flat_pair(x_hat, x_star):
    a = np.asarray(x_hat, dtype=float).ravel()
    b = np.asarray(x_star, dtype=float).ravel()
    if a.shape != b.shape:
        raise InputError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")
    if a.size == 0:
        raise InputError("empty evaluation set")
    return a, b


def rmse(x_hat, x_star) -> float:
    """Root mean square error."""
    a, b = _flat_pair(x_hat, x_star)
    return float(np.sqrt(np.mean((a - b) ** 2)))


def mae(x_hat, x_star) -> float:
    """Mean absolute error."""
    a, b = _flat_pair(x_hat, x_star)
    return float(np.mean(np.abs(a - b)))


def mape(x_hat, x_star, with_count=False):
    """Mean absolute percentage error, reported as a fraction (not x100).

    Entries with zero ground truth are excluded; pass ``with_count`` to also
    get the exclusion count. When every entry is excluded the value is NaN.
    """
    a, b = _flat_pair(x_hat, x_star)
    valid = b != 0
    excluded = int(a.size - int(valid.sum()))
    if not np.any(valid):
        value = math.nan
    else:
        value = float(np.mean(np.abs((b[valid] - a[valid]) / b[valid])))
    if with_count:
        return value, excluded
    return value


def mask_seed(base_seed, regime, level, repetition) -> int:
    """Stable 64-bit seed for the mask of one (regime, level, repetition) cell."""
    payload = f"{int(base_seed)}|{regime}|{float(level).hex()}|{int(repetition)}".encode()
    return int.from_bytes(hashlib.blake2b(payload, digest_size=8).digest(), "little")


@dataclass(frozen=True)
class ExperimentPlan:
    """Monte-Carlo experiment description.

    ``levels`` holds sampling densities in (0, 1] for the random-entry and
    snapshot regimes, or integer forecasting horizons in 1..10. ``methods``
    maps a report label to the solver configuration to run; insertion order
    fixes the report order.
    """

    regime: str
    levels: tuple
    repetitions: int
    methods: dict
    base_seed: int = 0

    def __post_init__(self):
        if self.regime not in REGIMES:
            raise ParameterError(f"regime must be one of {REGIMES}, got {self.regime!r}")
        if not self.levels:
            raise ParameterError("at least one density/horizon is required")
        if self.regime == "forecasting":
            for level in self.levels:
                if int(level) != level or not 1 <= int(level) <= 10:
                    raise ParameterError(f"horizons must be integers in 1..10, got {level}")
        else:
            for level in self.levels:
                if not 0.0 < float(level) <= 1.0:
                    raise ParameterError(f"densities must lie in (0, 1], got {level}")
        if self.repetitions < 1:
            raise ParameterError(f"repetitions must be >= 1, got {self.repetitions}")
        if not self.methods:
            raise ParameterError("at least one method is required")
        for name, config in self.methods.items():
            if not isinstance(config, SolverConfig):
                raise ParameterError(f"method {name!r} needs a SolverConfig")


@dataclass(frozen=True)
class ResultRow:
    method: str
    regime: str
    level: float
    repetition: int
    rmse: float
    mae: float
    mape: float
    mape_excluded: int
    iterations: int
    wall_time_s: float
    termination: str


@dataclass(frozen=True)
class AggregateRow:
    method: str
    regime: str
    level: float
    repetitions: int
    rmse: float
    mae: float
    mape: float
    iterations: float
    wall_time_s: float


@dataclass
class ExperimentResult:
    plan: ExperimentPlan
    rows: list
    aggregates: list
    mask_digests: dict  # (level, repetition) -> sha256 hex digest


def make_regime_mask(regime, n_nodes, n_snapshots, level, seed):
    """Mask for one experiment cell; forecasting masks ignore the seed."""
    if regime == "random_entry":
        return random_entry_mask(n_nodes, n_snapshots, float(level), seed)
    if regime == "snapshot":
        return snapshot_mask(n_nodes, n_snapshots, float(level), seed)
    if regime == "forecasting":
        return forecasting_mask(n_nodes, n_snapshots, int(level))
    raise ParameterError(f"unknown regime {regime!r}")


def _solve_method(observed, mask_array, graph, config):
    if config.objective == "gr_static":
        return solve_gr_static(observed, mask_array, graph, config)
    return solve_cg(observed, mask_array, graph, config)


def _score(x_hat, truth, eval_index):
    """Metrics on the non-sampled entries; all zero when nothing is hidden."""
    if not np.any(eval_index):
        return 0.0, 0.0, 0.0, 0
    estimate = x_hat[eval_index]
    reference = truth[eval_index]
    value, excluded = mape(estimate, reference, with_count=True)
    return rmse(estimate, reference), mae(estimate, reference), value, excluded


def _evaluate_cell(args):
    plan, dataset, graph, level, repetition = args
    seed = mask_seed(plan.base_seed, plan.regime, level, repetition)
    mask = make_regime_mask(plan.regime, dataset.n_nodes, dataset.n_snapshots, level, seed)
    mask_array = mask.mask
    observed = mask_array * dataset.signal
    eval_index = mask_array == 0
    digest = hashlib.sha256(mask_array.tobytes()).hexdigest()
    per_method = {}
    for name, config in plan.methods.items():
        try:
            result = _solve_method(observed, mask_array, graph, config)
        except NumericError as exc:
            raise NumericError(
                f"method {name!r} at level {level} repetition {repetition}: {exc}"
            ) from exc
        row_rmse, row_mae, row_mape, excluded = _score(result.x_hat, dataset.signal, eval_index)
        per_method[name] = ResultRow(
            method=name,
            regime=plan.regime,
            level=float(level),
            repetition=repetition,
            rmse=row_rmse,
            mae=row_mae,
            mape=row_mape,
            mape_excluded=excluded,
            iterations=result.iterations,
            wall_time_s=result.wall_time,
            termination=result.termination,
        )
    return (level, repetition), digest, per_method


def run_experiment(plan: ExperimentPlan, dataset: Dataset, graph, jobs=1) -> ExperimentResult:
    """Run the full Monte-Carlo protocol for one plan.

    Every method inside a repetition sees the identical mask. Repetitions
    are independent work units; with ``jobs > 1`` they run in separate
    processes and the merged output is byte-identical to a sequential run.
    """
    if dataset.n_nodes != graph.n_nodes:
        raise InputError(f"dataset has {dataset.n_nodes} nodes, graph has {graph.n_nodes}")
    tasks = [(plan, dataset, graph, level, repetition)
             for level in plan.levels for repetition in range(plan.repetitions)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_evaluate_cell, tasks))
    else:
        outcomes = [_evaluate_cell(task) for task in tasks]

    cell_rows = {}
    mask_digests = {}
    for key, digest, per_method in outcomes:
        mask_digests[key] = digest
        cell_rows[key] = per_method

    rows = []
    aggregates = []
    for name in plan.methods:
        for level in plan.levels:
            level_rows = [cell_rows[(level, rep)][name] for rep in range(plan.repetitions)]
            rows.extend(level_rows)
            aggregates.append(AggregateRow(
                method=name,
                regime=plan.regime,
                level=float(level),
                repetitions=plan.repetitions,
                rmse=float(np.mean([r.rmse for r in level_rows])),
                mae=float(np.mean([r.mae for r in level_rows])),
                mape=float(np.mean([r.mape for r in level_rows])),
                iterations=float(np.mean([r.iterations for r in level_rows])),
                wall_time_s=float(np.mean([r.wall_time_s for r in level_rows])),
            ))
    return ExperimentResult(plan=plan, rows=rows, aggregates=aggregates,
                            mask_digests=mask_digests)


def write_raw_results(path, result: ExperimentResult, delimiter=textio.DELIMITER):
    rows = [(r.method, r.regime, r.level, r.repetition, r.rmse, r.mae, r.mape,
             r.iterations, r.wall_time_s, r.mape_excluded) for r in result.rows]
    textio.write_table(path, RAW_HEADER, rows, delimiter=delimiter)


def write_aggregate_results(path, result: ExperimentResult, delimiter=textio.DELIMITER):
    rows = [(a.method, a.regime, a.level, a.repetitions, a.rmse, a.mae, a.mape,
             a.iterations, a.wall_time_s) for a in result.aggregates]
    textio.write_table(path, AGGREGATE_HEADER, rows, delimiter=delimiter)


@dataclass
class ConvergenceComparison:
    """Per-method iteration counts and loss traces under shared masks."""

    iterations: dict
    mean_iterations: dict
    loss_traces: dict
    mask_digests: list


def convergence_comparison(dataset: Dataset, graph, density, configs: dict,
                           repetitions, base_seed=0, regime="random_entry") -> ConvergenceComparison:
    """Compare solver convergence across methods on identical masks.

    Requires both a plain-Laplacian ("tgsr") and a shifted-power ("sobolev")
    configuration so the comparison is meaningful.
    """
    objectives = {config.objective for config in configs.values()}
    if not {"tgsr", "sobolev"} <= objectives:
        raise ParameterError("configs must include both a tgsr and a sobolev objective")
    iterations = {name: [] for name in configs}
    traces = {name: [] for name in configs}
    digests = []
    for repetition in range(repetitions):
        seed = mask_seed(base_seed, regime, density, repetition)
        mask = make_regime_mask(regime, dataset.n_nodes, dataset.n_snapshots, density, seed)
        mask_array = mask.mask
        observed = mask_array * dataset.signal
        digests.append(hashlib.sha256(mask_array.tobytes()).hexdigest())
        for name, config in configs.items():
            result = _solve_method(observed, mask_array, graph, config)
            iterations[name].append(result.iterations)
            traces[name].append(result.loss_trace)
    mean_iterations = {name: float(np.mean(counts)) for name, counts in iterations.items()}
    return ConvergenceComparison(iterations=iterations, mean_iterations=mean_iterations,
                                 loss_traces=traces, mask_digests=digests)


@dataclass(frozen=True)
class TuneResult:
    upsilon: float
    epsilon: float
    score: float


def tune_parameters(dataset: Dataset, graph, config: SolverConfig, density, seed,
                    upsilon_grid=DEFAULT_UPSILON_GRID, epsilon_grid=DEFAULT_EPSILON_GRID,
                    regime="random_entry", criterion="rmse") -> TuneResult:
    """Grid-search (upsilon, epsilon) on a single held-out repetition.

    The held-out mask comes from ``seed`` and should not reuse evaluation
    seeds. ``criterion`` is "rmse" (non-sampled entries) or "iterations".
    For non-sobolev objectives the epsilon grid collapses to the config's
    own epsilon. Ties keep the first grid point, so tuning is deterministic.
    """
    if criterion not in ("rmse", "iterations"):
        raise ParameterError(f"criterion must be 'rmse' or 'iterations', got {criterion!r}")
    mask = make_regime_mask(regime, dataset.n_nodes, dataset.n_snapshots, density, seed)
    mask_array = mask.mask
    observed = mask_array * dataset.signal
    eval_index = mask_array == 0
    epsilon_values = tuple(epsilon_grid) if config.objective == "sobolev" else (config.epsilon,)
    best = None
    for upsilon in upsilon_grid:
        for epsilon in epsilon_values:
            candidate = replace(config, upsilon=float(upsilon), epsilon=float(epsilon))
            result = _solve_method(observed, mask_array, graph, candidate)
            if criterion == "rmse":
                score, _, _, _ = _score(result.x_hat, dataset.signal, eval_index)
            else:
                score = float(result.iterations)
            if best is None or score < best.score:
                best = TuneResult(upsilon=float(upsilon), epsilon=float(candidate.epsilon),
                                  score=float(score))
    return best
