"""Seeded Monte-Carlo CCDF experiments and result serialization.

Randomness management: every trial owns independent streams derived only
from (master_seed, purpose, trial_index), where purpose 0 feeds frame
symbols, purpose 1 feeds method randomness (the SLM scrambling sequences),
and purpose 2 (without a trial index) feeds the run-level pseudo-random
partition shuffle.  Streams are therefore order-independent: results do
not depend on how trials are scheduled, and different methods run under
the same master seed consume identical per-trial data frames.

SLM scrambling sequences are drawn fresh per trial so the M candidates of
a trial are statistically independent; the PTS partition is fixed per run,
as it is part of the system configuration rather than of the per-frame
search.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .dft import is_power_of_two
from .frame import papr, synthesize
from .modulation import ModulationScheme, random_frame
from .pts import PartitionScheme, make_partition, pts_reduce
from .slm import generate_phase_sequences, slm_reduce
from .stats import CcdfCurve, empirical_ccdf, theoretical_curve

_STREAM_FRAME = 0
_STREAM_METHOD = 1
_STREAM_PARTITION = 2


class Method(Enum):
    NONE = "none"
    SLM = "slm"
    PTS = "pts"


def default_threshold_grid() -> np.ndarray:
    """0.0 to 13.0 dB in 0.05 dB steps."""
    return threshold_grid(0.0, 13.0, 0.05)


def threshold_grid(lo: float, hi: float, step: float) -> np.ndarray:
    """Inclusive ascending dB grid lo, lo+step, ..., up to hi."""
    if step <= 0:
        raise ValueError("threshold step must be positive")
    if hi < lo:
        raise ValueError("threshold range must be non-empty")
    count = int(np.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(count)


def trial_stream(master_seed: int, purpose: int, trial: int | None = None) -> np.random.Generator:
    """The documented mixing rule behind every random draw of a run."""
    key = [master_seed, purpose] if trial is None else [master_seed, purpose, trial]
    return np.random.default_rng(key)


@dataclass
class ExperimentConfig:
    """Full description of one Monte-Carlo CCDF experiment."""

    n_subcarriers: int = 64
    modulation: ModulationScheme = ModulationScheme.QPSK
    oversample: int = 8
    method: Method = Method.NONE
    slm_branches: int = 4
    pts_blocks: int = 4
    pts_phase_order: int = 4
    partition_scheme: PartitionScheme = PartitionScheme.PSEUDO_RANDOM
    trials: int = 1000
    master_seed: int = 0
    thresholds_db: np.ndarray = field(default_factory=default_threshold_grid)

    def validate(self) -> None:
        """Reject any config whose downstream structural preconditions fail."""
        if not is_power_of_two(self.n_subcarriers):
            raise ValueError(f"n_subcarriers={self.n_subcarriers} is not a power of two")
        if self.oversample < 1:
            raise ValueError("oversample must be >= 1")
        if not is_power_of_two(self.oversample * self.n_subcarriers):
            raise ValueError(
                f"L*N = {self.oversample * self.n_subcarriers} is not a power of two")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.master_seed < 2 ** 64:
            raise ValueError("master_seed must be a 64-bit unsigned integer")
        if self.slm_branches < 1:
            raise ValueError("slm_branches must be >= 1")
        if self.pts_blocks < 1:
            raise ValueError("pts_blocks must be >= 1")
        if self.n_subcarriers % self.pts_blocks != 0:
            raise ValueError(
                f"pts_blocks={self.pts_blocks} does not divide N={self.n_subcarriers}")
        if self.pts_phase_order not in (2, 4):
            raise ValueError(f"pts_phase_order={self.pts_phase_order} not in (2, 4)")
        grid = np.asarray(self.thresholds_db, dtype=np.float64)
        if grid.ndim != 1 or grid.size == 0 or not np.all(np.diff(grid) > 0):
            raise ValueError("thresholds must be a non-empty strictly ascending grid")

    def as_dict(self) -> dict:
        return {
            "n_subcarriers": self.n_subcarriers,
            "modulation": self.modulation.value,
            "oversample": self.oversample,
            "method": self.method.value,
            "slm_branches": self.slm_branches,
            "pts_blocks": self.pts_blocks,
            "pts_phase_order": self.pts_phase_order,
            "partition_scheme": self.partition_scheme.value,
            "trials": self.trials,
            "master_seed": self.master_seed,
            "thresholds_db": np.asarray(self.thresholds_db, dtype=np.float64).tolist(),
        }


@dataclass
class ExperimentResult:
    """Per-trial PAPR samples with the curves derived from them."""

    config: ExperimentConfig
    empirical: CcdfCurve
    analytic: CcdfCurve | None
    samples_db: np.ndarray
    side_info: np.ndarray
    elapsed_seconds: float


def run_experiment(config: ExperimentConfig, analytic: bool = False) -> ExperimentResult:
    """Run the configured trials and collect the empirical CCDF.

    Identical configs produce identical samples regardless of execution
    order because each trial's streams derive only from (master_seed,
    purpose, trial).  The analytic curve is attached for the methods with
    a closed form (none and slm); a PTS run never carries one.
    """
    config.validate()
    n = config.n_subcarriers
    oversample = config.oversample
    trials = config.trials
    started = time.perf_counter()

    partition = None
    if config.method is Method.PTS:
        partition = make_partition(
            n, config.pts_blocks, config.partition_scheme,
            trial_stream(config.master_seed, _STREAM_PARTITION))

    samples_db = np.empty(trials, dtype=np.float64)
    side_info = np.zeros(trials, dtype=np.int64)
    for t in range(trials):
        frame = random_frame(
            n, config.modulation, trial_stream(config.master_seed, _STREAM_FRAME, t))
        if config.method is Method.NONE:
            samples_db[t] = papr(synthesize(frame, oversample)).db
        elif config.method is Method.SLM:
            sequences = generate_phase_sequences(
                config.slm_branches, n,
                trial_stream(config.master_seed, _STREAM_METHOD, t))
            result = slm_reduce(frame, sequences, oversample)
            samples_db[t] = result.papr.db
            side_info[t] = result.selected_index
        else:
            result = pts_reduce(frame, partition, config.pts_phase_order, oversample)
            samples_db[t] = result.papr.db
            side_info[t] = result.chosen.combination_index

    empirical = empirical_ccdf(samples_db, config.thresholds_db)
    analytic_curve = None
    if analytic and config.method is not Method.PTS:
        branches = config.slm_branches if config.method is Method.SLM else 1
        analytic_curve = theoretical_curve(n, config.thresholds_db, branches)

    return ExperimentResult(
        config=config,
        empirical=empirical,
        analytic=analytic_curve,
        samples_db=samples_db,
        side_info=side_info,
        elapsed_seconds=time.perf_counter() - started,
    )


def write_result(result: ExperimentResult, format: str, destination) -> None:
    """Serialize a result as CSV (threshold/probability rows) or JSON.

    destination is a path or an open text sink.  CSV carries the header
    ``papr_db,ccdf`` and one 6-decimal row per threshold; JSON carries the
    config echo, curves, samples, and timing.
    """
    fmt = str(format).lower()
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown output format {format!r}")
    if isinstance(destination, (str, Path)):
        with open(destination, "w") as sink:
            _write(result, fmt, sink)
    else:
        _write(result, fmt, destination)


def _write(result: ExperimentResult, fmt: str, sink) -> None:
    if fmt == "csv":
        sink.write("papr_db,ccdf\n")
        for t, p in zip(result.empirical.thresholds_db, result.empirical.probabilities):
            sink.write(f"{t:.6f},{p:.6f}\n")
        return
    payload = {
        "config": result.config.as_dict(),
        "thresholds_db": result.empirical.thresholds_db.tolist(),
        "ccdf": result.empirical.probabilities.tolist(),
    }
    if result.analytic is not None:
        payload["analytic_ccdf"] = result.analytic.probabilities.tolist()
    payload.update({
        "samples_db": result.samples_db.tolist(),
        "seed": result.config.master_seed,
        "trials": result.config.trials,
        "elapsed_seconds": result.elapsed_seconds,
        "min_reliable_ccdf": 10.0 / result.config.trials,
    })
    json.dump(payload, sink, indent=2)
    sink.write("\n")
