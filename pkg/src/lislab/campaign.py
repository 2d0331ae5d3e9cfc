"""Monte Carlo campaigns over system sizes ``N``.

Each trial samples a Poisson configuration on ``(0, N)^2``, analyses its
maximal chains from the origin to ``(N, N)`` and evaluates the cylinder
event at every configured ``gamma``. Trials are keyed by ``(N, trial)`` and
seeded through :func:`lislab.seeding.trial_seed`. Output is therefore
identical whatever the number of worker processes.

Persistence is one CSV of trial rows plus a JSON manifest next to it. The
manifest format is described by ``manifest.schema.json`` in this package.
"""

import csv
import json
import math
import os
import platform
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import metadata
from pathlib import Path

from .chains import analyze_chains, event_A, transversal_summary
from .errors import InvalidArgument, PersistenceError
from .point_process import Point, Rect, sample_poisson
from .seeding import trial_seed

MANIFEST_SCHEMA = "lislab.campaign/1"
BASE_COLUMNS = ["N", "seed", "d", "max_deviation", "num_maximal_points"]


@dataclass(frozen=True)
class ExperimentConfig:
    N_values: tuple
    trials_per_N: int
    gamma_values: tuple
    master_seed: int
    intensity: float = 1.0
    output_path: str = None

    def __post_init__(self):
        object.__setattr__(self, "N_values", tuple(float(n) for n in self.N_values))
        object.__setattr__(self, "gamma_values", tuple(float(g) for g in self.gamma_values))
        if not self.N_values or any(n <= 0 or not math.isfinite(n) for n in self.N_values):
            raise InvalidArgument("N_values must be a non-empty sequence of positive numbers")
        if any(b <= a for a, b in zip(self.N_values, self.N_values[1:])):
            raise InvalidArgument("N_values must be strictly ascending")
        if int(self.trials_per_N) != self.trials_per_N or self.trials_per_N < 1:
            raise InvalidArgument("trials_per_N must be a positive integer")
        if any(not (0.0 < g < 1.0) for g in self.gamma_values):
            raise InvalidArgument("every gamma must lie in (0, 1)")
        if not (self.intensity > 0 and math.isfinite(self.intensity)):
            raise InvalidArgument("intensity must be positive")

    def as_dict(self):
        return {
            "N_values": list(self.N_values),
            "trials_per_N": int(self.trials_per_N),
            "gamma_values": list(self.gamma_values),
            "master_seed": int(self.master_seed),
            "intensity": self.intensity,
            "output_path": None if self.output_path is None else str(self.output_path),
        }


@dataclass(frozen=True)
class TrialRecord:
    N: float
    seed: int
    d: int
    max_deviation: float
    num_maximal_points: int
    event_A: dict = field(default_factory=dict)


def run_trial(N, seed, gammas=(), intensity=1.0):
    """Simulate one configuration on ``(0, N)^2`` and summarise it."""
    N = float(N)
    config = sample_poisson(Rect.square(N), intensity, seed)
    analysis = analyze_chains(config, Point(0.0, 0.0), Point(N, N))
    summary = transversal_summary(analysis, config)
    events = {g: event_A(config, g, analysis) for g in gammas}
    return TrialRecord(N, int(seed), analysis.d, summary.max_deviation, summary.num_maximal_points, events)


def _run_task(args):
    return run_trial(*args)


def campaign_tasks(config):
    """``(N, seed, gammas, intensity)`` for every trial, in output order."""
    return [
        (N, trial_seed(config.master_seed, N, i), config.gamma_values, config.intensity)
        for N in config.N_values
        for i in range(config.trials_per_N)
    ]


def run_campaign(config, workers=1, progress=None):
    """Run every trial of ``config`` and persist the results if ``output_path`` is set.

    ``workers > 1`` spreads trials over processes. Results come back in key
    order either way. ``progress``, if given, is called with
    ``(done, total)`` after each trial.

    Raises :class:`PersistenceError` if writing fails. The exception carries
    the computed records and the path of a partial-results manifest.
    """
    t0 = time.perf_counter()
    tasks = campaign_tasks(config)
    records = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for rec in pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (8 * workers))):
                records.append(rec)
                if progress:
                    progress(len(records), len(tasks))
    else:
        for task in tasks:
            records.append(_run_task(task))
            if progress:
                progress(len(records), len(tasks))
    wall = time.perf_counter() - t0
    if config.output_path is not None:
        persist_campaign(config, records, wall)
    return records


def _gamma_column(g):
    return f"A_gamma_{g!r}"


def write_campaign_csv(records, gammas, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(BASE_COLUMNS + [_gamma_column(g) for g in gammas])
        for r in records:
            w.writerow(
                [repr(r.N), r.seed, r.d, repr(r.max_deviation), r.num_maximal_points]
                + [int(r.event_A[g]) for g in gammas]
            )


def read_campaign_csv(path):
    """Read a campaign CSV back into records; returns ``(records, gammas)``."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header[: len(BASE_COLUMNS)] != BASE_COLUMNS:
            raise InvalidArgument(f"{path}: unexpected header {header}")
        gammas = []
        for col in header[len(BASE_COLUMNS) :]:
            if not col.startswith("A_gamma_"):
                raise InvalidArgument(f"{path}: unexpected column {col!r}")
            gammas.append(float(col[len("A_gamma_") :]))
        records = []
        for row in reader:
            flags = row[len(BASE_COLUMNS) :]
            records.append(
                TrialRecord(
                    N=float(row[0]),
                    seed=int(row[1]),
                    d=int(row[2]),
                    max_deviation=float(row[3]),
                    num_maximal_points=int(row[4]),
                    event_A={g: f == "1" for g, f in zip(gammas, flags)},
                )
            )
    return records, gammas


def manifest_path_for(csv_path):
    return Path(csv_path).with_suffix(".manifest.json")


def _versions():
    out = {"python": platform.python_version()}
    for pkg in ("numpy", "scipy", "numba", "lislab"):
        try:
            out[pkg] = metadata.version(pkg)
        except metadata.PackageNotFoundError:
            out[pkg] = None
    return out


def _fits(records):
    from .estimators import estimate_chi, estimate_xi

    fits = {}
    for name, fn in (("chi", estimate_chi), ("xi", estimate_xi)):
        try:
            fits[name] = fn(records).as_dict()
        except InvalidArgument:
            fits[name] = None
    return fits


def build_manifest(config, records, wall_time, status="complete", error=None):
    return {
        "schema": MANIFEST_SCHEMA,
        "status": status,
        "config": config.as_dict(),
        "csv": Path(config.output_path).name if config.output_path else None,
        "n_records": len(records),
        "fits": _fits(records) if status == "complete" else None,
        "versions": _versions(),
        "wall_time_s": wall_time,
        "error": error,
    }


def persist_campaign(config, records, wall_time):
    csv_path = Path(config.output_path)
    man_path = manifest_path_for(csv_path)
    try:
        if csv_path.parent and not csv_path.parent.exists():
            os.makedirs(csv_path.parent, exist_ok=True)
        write_campaign_csv(records, config.gamma_values, csv_path)
    except OSError as exc:
        written = None
        try:
            with open(man_path, "w") as fh:
                json.dump(build_manifest(config, records, wall_time, "partial", str(exc)), fh, indent=2)
            written = man_path
        except OSError:
            pass
        raise PersistenceError(f"could not write campaign CSV {csv_path}: {exc}", records, written) from exc
    try:
        with open(man_path, "w") as fh:
            json.dump(build_manifest(config, records, wall_time), fh, indent=2)
    except OSError as exc:
        raise PersistenceError(f"could not write manifest {man_path}: {exc}", records, None) from exc
