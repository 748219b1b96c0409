"""Campaign harness: config, seeded runs, indicator traces, rank tables.

A campaign is the cross product problems x algorithms x normalizations, each
cell repeated for a fixed number of independent runs.  Per-run seeds derive
only from the base seed and the cell identity, so editing unrelated parts of
the config never changes a run, and a repeated campaign reproduces its
output files byte for byte.
"""
from __future__ import annotations

import concurrent.futures
import csv
import hashlib
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import yaml
from scipy.stats import rankdata

from . import __version__
from .algorithms import ALGORITHMS, AlgorithmParams
from .core import derive_run_seed, make_engine
from .indicators import (DEFAULT_ROI_RADIUS, RoiReferenceSet,
                         build_roi_reference_set, e_ideal, e_nadir,
                         igd_plus_c, ore)
from .normalization import KINDS, TrueScaler
from .problems import get_problem, problem_names
from .refpoints import SETTINGS, default_reference_point

logger = logging.getLogger(__name__)

WORKERS_ENV = "PREFNORM_WORKERS"

DEFAULT_CHECKPOINTS = (1000, 3000, 5000, 8000, 10000, 15000, 20000, 25000,
                       30000, 35000, 40000, 45000, 50000)

SUITES = {
    "dtlz": tuple(f"dtlz{i}" for i in range(1, 8)),
    "sdtlz": tuple(f"sdtlz{i}" for i in range(1, 5)),
    "idtlz": tuple(f"idtlz{i}" for i in range(1, 5)),
}

_PARAM_FIELDS = ("crossover_prob", "sbx_eta", "pm_eta", "mutation_prob",
                 "epsilon_clear", "delta", "tau", "de_f", "de_cr",
                 "neighborhood_t", "max_replace", "rho")


class ConfigError(Exception):
    """Invalid experiment configuration; message lists offending fields."""


@dataclass
class ExperimentConfig:
    """Validated campaign description."""

    problems: list[tuple[str, int]]
    algorithms: list[str]
    normalizations: list[str]
    runs: int = 31
    budget: int = 50000
    mu: int = 100
    seed: int = 1
    checkpoints: tuple[int, ...] = DEFAULT_CHECKPOINTS
    roi_radius: float = DEFAULT_ROI_RADIUS
    pf_size: int = 10000
    reference_setting: str = "balanced"
    reference_points: dict[str, list[float]] = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    workers: int | None = None

    def canonical(self) -> dict:
        """JSON-stable form used for hashing and the manifest."""
        return {
            "problems": [[n, m] for n, m in self.problems],
            "algorithms": list(self.algorithms),
            "normalizations": list(self.normalizations),
            "runs": self.runs,
            "budget": self.budget,
            "mu": self.mu,
            "seed": self.seed,
            "checkpoints": list(self.checkpoints),
            "roi_radius": self.roi_radius,
            "pf_size": self.pf_size,
            "reference_setting": self.reference_setting,
            "reference_points": {k: list(map(float, v)) for k, v in
                                 sorted(self.reference_points.items())},
            "params": {k: self.params[k] for k in sorted(self.params)},
        }

    def config_hash(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()

    def algorithm_params(self, n_var: int) -> AlgorithmParams:
        kwargs = dict(self.params)
        if kwargs.get("mutation_prob") is None:
            kwargs["mutation_prob"] = 1.0 / n_var
        return AlgorithmParams(**kwargs)

    def reference_point_for(self, name: str, m: int) -> np.ndarray:
        key = f"{name}:{m}"
        if key in self.reference_points:
            return np.asarray(self.reference_points[key], dtype=float)
        return default_reference_point(name, m, self.reference_setting)


_KNOWN_KEYS = {"problems", "algorithms", "normalizations", "runs", "budget",
               "mu", "seed", "checkpoints", "roi_radius", "pf_size",
               "reference_setting", "reference_points", "params", "workers"}


def _as_int(value, path: str, errors: list[str], minimum: int | None = None):
    if not isinstance(value, int) or isinstance(value, bool):
        errors.append(f"{path}: expected an integer, got {value!r}")
        return None
    if minimum is not None and value < minimum:
        errors.append(f"{path}: must be >= {minimum}, got {value}")
        return None
    return value


def validate_config(raw: dict) -> ExperimentConfig:
    """Turn a parsed config mapping into an ExperimentConfig.

    Raises
    ------
    ConfigError
        With one line per problem found, naming the offending field.
    """
    if not isinstance(raw, dict):
        raise ConfigError("config root: expected a mapping")
    errors: list[str] = []
    for key in sorted(set(raw) - _KNOWN_KEYS):
        errors.append(f"{key}: unknown key")

    problems: list[tuple[str, int]] = []
    raw_problems = raw.get("problems")
    if not isinstance(raw_problems, list) or not raw_problems:
        errors.append("problems: expected a non-empty list")
    else:
        for i, entry in enumerate(raw_problems):
            path = f"problems[{i}]"
            if isinstance(entry, str) and ":" in entry:
                name, _, ms = entry.partition(":")
                entry = {"name": name, "m": int(ms) if ms.isdigit() else ms}
            if not isinstance(entry, dict):
                errors.append(f"{path}: expected 'name:m' or a mapping")
                continue
            name = entry.get("name")
            if name not in problem_names():
                errors.append(f"{path}.name: unknown problem {name!r}")
                continue
            m = _as_int(entry.get("m"), f"{path}.m", errors, minimum=2)
            if m is not None:
                problems.append((name, m))

    algorithms = raw.get("algorithms")
    if not isinstance(algorithms, list) or not algorithms:
        errors.append("algorithms: expected a non-empty list")
        algorithms = []
    for i, alg in enumerate(algorithms):
        if alg not in ALGORITHMS:
            errors.append(f"algorithms[{i}]: unknown algorithm {alg!r}; "
                          f"known: {', '.join(ALGORITHMS)}")

    normalizations = raw.get("normalizations")
    if not isinstance(normalizations, list) or not normalizations:
        errors.append("normalizations: expected a non-empty list")
        normalizations = []
    # YAML 1.1 reads a bare `no` as boolean False; map it back to the kind.
    normalizations = ["no" if kind is False else kind
                      for kind in normalizations]
    for i, kind in enumerate(normalizations):
        if kind not in KINDS:
            errors.append(f"normalizations[{i}]: unknown kind {kind!r}; "
                          f"known: {', '.join(KINDS)}")

    runs = _as_int(raw.get("runs", 31), "runs", errors, minimum=1)
    budget = _as_int(raw.get("budget", 50000), "budget", errors, minimum=1)
    mu = _as_int(raw.get("mu", 100), "mu", errors, minimum=4)
    if mu is not None and mu % 2:
        errors.append(f"mu: must be even, got {mu}")
    seed = _as_int(raw.get("seed", 1), "seed", errors, minimum=0)

    checkpoints = raw.get("checkpoints", list(DEFAULT_CHECKPOINTS))
    if (not isinstance(checkpoints, list) or not checkpoints or
            any(_as_int(c, f"checkpoints[{i}]", errors, minimum=1) is None
                for i, c in enumerate(checkpoints))):
        errors.append("checkpoints: expected a non-empty list of integers")
        checkpoints = list(DEFAULT_CHECKPOINTS)
    elif sorted(checkpoints) != checkpoints:
        errors.append("checkpoints: must be ascending")

    roi_radius = raw.get("roi_radius", DEFAULT_ROI_RADIUS)
    if not isinstance(roi_radius, (int, float)) or roi_radius <= 0:
        errors.append(f"roi_radius: expected a positive number, "
                      f"got {roi_radius!r}")
    pf_size = _as_int(raw.get("pf_size", 10000), "pf_size", errors,
                      minimum=10)

    setting = raw.get("reference_setting", "balanced")
    if setting not in SETTINGS:
        errors.append(f"reference_setting: unknown setting {setting!r}; "
                      f"known: {', '.join(SETTINGS)}")

    ref_overrides = raw.get("reference_points", {})
    if not isinstance(ref_overrides, dict):
        errors.append("reference_points: expected a mapping 'name:m' -> "
                      "list of floats")
        ref_overrides = {}
    else:
        for key, vec in ref_overrides.items():
            if (not isinstance(vec, list) or
                    not all(isinstance(v, (int, float)) for v in vec)):
                errors.append(f"reference_points.{key}: expected a list of "
                              "numbers")

    params = raw.get("params", {})
    if not isinstance(params, dict):
        errors.append("params: expected a mapping")
        params = {}
    for key in sorted(set(params) - set(_PARAM_FIELDS)):
        errors.append(f"params.{key}: unknown parameter")

    workers = raw.get("workers")
    if workers is not None:
        workers = _as_int(workers, "workers", errors, minimum=1)

    if not errors and problems and setting in SETTINGS:
        for name, m in problems:
            if mu is not None and mu < 2 * m:
                errors.append(f"mu: must be at least 2m = {2 * m} for "
                              f"{name}:{m}, got {mu}")
            key = f"{name}:{m}"
            if key in ref_overrides:
                vec = ref_overrides[key]
                if len(vec) != m:
                    errors.append(f"reference_points.{key}: expected {m} "
                                  f"values, got {len(vec)}")
                continue
            try:
                default_reference_point(name, m, setting)
            except KeyError as exc:
                errors.append(f"problems: {exc.args[0]}")
    if (not errors and budget is not None and mu is not None
            and checkpoints):
        last = checkpoints[-1]
        reachable = (budget // mu) * mu
        if last > budget:
            errors.append(f"checkpoints: last checkpoint {last} exceeds "
                          f"budget {budget}")
        elif last > reachable:
            errors.append(f"checkpoints: last checkpoint {last} is past the "
                          f"final generation boundary {reachable} "
                          f"(budget {budget}, mu {mu})")

    if errors:
        raise ConfigError("\n".join(errors))
    return ExperimentConfig(
        problems=problems, algorithms=list(algorithms),
        normalizations=list(normalizations), runs=runs, budget=budget,
        mu=mu, seed=seed, checkpoints=tuple(checkpoints),
        roi_radius=float(roi_radius), pf_size=pf_size,
        reference_setting=setting,
        reference_points={k: list(map(float, v))
                          for k, v in ref_overrides.items()},
        params=dict(params), workers=workers)


def load_config(path: str | Path) -> ExperimentConfig:
    """Read and validate a YAML or JSON campaign config."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        raw = yaml.safe_load(path.read_text())
    except yaml.YAMLError as exc:
        raise ConfigError(f"config parse error: {exc}")
    return validate_config(raw)


@dataclass
class RunTrace:
    """Per-checkpoint indicator records plus the final population of a run."""

    problem: str
    m: int
    algorithm: str
    normalization: str
    run_index: int
    seed: int
    records: list[dict]
    final_objs: np.ndarray

    @property
    def cell_id(self) -> str:
        return (f"{self.problem}:m{self.m}:{self.algorithm}:"
                f"{self.normalization}")

    @property
    def treatment(self) -> str:
        return f"{self.algorithm}-{self.normalization}"


def cell_id(problem: str, m: int, algorithm: str, normalization: str) -> str:
    return f"{problem}:m{m}:{algorithm}:{normalization}"


def _execute_run(problem_name: str, m: int, algorithm: str,
                 normalization: str, run_index: int, seed: int,
                 config: ExperimentConfig, z: np.ndarray,
                 roi: RoiReferenceSet) -> RunTrace:
    problem = get_problem(problem_name, m)
    engine = make_engine(seed)
    pending = sorted(config.checkpoints)
    records: list[dict] = []

    def recorder(evals, objs, state):
        while pending and evals >= pending[0]:
            checkpoint = pending.pop(0)
            records.append({
                "checkpoint": checkpoint,
                "evals": evals,
                "igd_plus_c": igd_plus_c(objs, roi),
                "e_ideal": e_ideal(state.z_lb, roi.scaler),
                "e_nadir": e_nadir(state.z_ub, roi.scaler),
                "ore": ore(state.z_lb, state.z_ub, roi.scaler),
                "z_lb": state.z_lb.copy(),
                "z_ub": state.z_ub.copy(),
            })

    final = ALGORITHMS[algorithm](
        problem, z, normalization, config.mu, config.budget, engine,
        config.algorithm_params(problem.n), recorder)
    return RunTrace(problem=problem_name, m=m, algorithm=algorithm,
                    normalization=normalization, run_index=run_index,
                    seed=seed, records=records, final_objs=final)


def build_cell_roi(config: ExperimentConfig, problem_name: str,
                   m: int) -> tuple[np.ndarray, RoiReferenceSet]:
    """Reference point and ROI reference set of one problem instance."""
    problem = get_problem(problem_name, m)
    z = config.reference_point_for(problem_name, m)
    pf_engine = make_engine(derive_run_seed(config.seed,
                                            f"pf:{problem_name}:m{m}", 0))
    pf = problem.sample_pf(config.pf_size, pf_engine)
    scaler = TrueScaler(ideal=problem.true_ideal, nadir=problem.true_nadir)
    roi = build_roi_reference_set(pf, z, config.roi_radius, scaler)
    return z, roi


def resolve_workers(config: ExperimentConfig,
                    override: int | None = None) -> int:
    if override is not None:
        return max(1, override)
    if config.workers is not None:
        return max(1, config.workers)
    env = os.environ.get(WORKERS_ENV)
    if env and env.isdigit() and int(env) > 0:
        return int(env)
    return 1


def execute_campaign(config: ExperimentConfig,
                     workers: int | None = None) -> list[RunTrace]:
    """Run every cell of the campaign; traces come back in canonical order."""
    tasks = []
    roi_cache: dict[tuple[str, int], tuple[np.ndarray, RoiReferenceSet]] = {}
    for name, m in config.problems:
        if (name, m) not in roi_cache:
            roi_cache[(name, m)] = build_cell_roi(config, name, m)
        z, roi = roi_cache[(name, m)]
        for algorithm in config.algorithms:
            for kind in config.normalizations:
                cid = cell_id(name, m, algorithm, kind)
                for run_index in range(config.runs):
                    seed = derive_run_seed(config.seed, cid, run_index)
                    tasks.append((name, m, algorithm, kind, run_index, seed,
                                  config, z, roi))
    n_workers = resolve_workers(config, workers)
    results: dict[int, RunTrace] = {}
    failures: list[str] = []

    def note_failure(task, exc):
        label = f"{cell_id(*task[:4])} run {task[4]}"
        logger.error("run failed: %s: %s", label, exc)
        failures.append(f"{label}: {exc}")

    if n_workers <= 1:
        for idx, task in enumerate(tasks):
            try:
                results[idx] = _execute_run(*task)
            except Exception as exc:
                note_failure(task, exc)
    else:
        logger.info("running %d tasks on %d workers", len(tasks), n_workers)
        with concurrent.futures.ProcessPoolExecutor(n_workers) as pool:
            futures = {pool.submit(_execute_run, *task): idx
                       for idx, task in enumerate(tasks)}
            for future in concurrent.futures.as_completed(futures):
                idx = futures[future]
                try:
                    results[idx] = future.result()
                except Exception as exc:
                    note_failure(tasks[idx], exc)
    if failures:
        raise RuntimeError("%d of %d runs failed:\n%s"
                           % (len(failures), len(tasks),
                              "\n".join(failures)))
    return [results[idx] for idx in range(len(tasks))]


def friedman_ranks_from_means(mean_table: dict[str, dict[str, float]]
                              ) -> dict[str, float]:
    """Average rank of each treatment across problems.

    Parameters
    ----------
    mean_table : dict
        ``mean_table[problem][treatment]`` is the mean indicator value
        (lower is better).  Every problem must cover the same treatments.

    Returns
    -------
    dict
        Treatment -> average rank; ties within a problem get midranks.
    """
    if not mean_table:
        raise ValueError("empty mean table")
    problems = sorted(mean_table)
    treatments = sorted(mean_table[problems[0]])
    for prob in problems:
        if sorted(mean_table[prob]) != treatments:
            raise ValueError(f"problem {prob!r} does not cover the same "
                             "treatments as the others: incomplete design")
    sums = np.zeros(len(treatments))
    for prob in problems:
        values = np.array([mean_table[prob][t] for t in treatments])
        sums += rankdata(values, method="average")
    return {t: float(s / len(problems)) for t, s in zip(treatments, sums)}


def friedman_average_ranks(traces: list[RunTrace], suite: str,
                           checkpoint: int) -> dict[str, float]:
    """Average Friedman ranks over one problem suite at one checkpoint.

    Each (problem, m) pair present in the traces and belonging to the suite
    counts as one ranking instance; treatments are ranked by their mean
    indicator value over runs.  Raises when the design is incomplete (a
    treatment missing for some problem) or the suite has no data.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; "
                         f"known: {', '.join(SUITES)}")
    members = set(SUITES[suite])
    values: dict[str, dict[str, list[float]]] = {}
    for trace in traces:
        if trace.problem not in members:
            continue
        for record in trace.records:
            if record["checkpoint"] == checkpoint:
                label = f"{trace.problem}:m{trace.m}"
                values.setdefault(label, {}).setdefault(
                    trace.treatment, []).append(record["igd_plus_c"])
    if not values:
        raise ValueError(f"no traces for suite {suite!r} at checkpoint "
                         f"{checkpoint}")
    table = {label: {t: float(np.mean(v)) for t, v in row.items()}
             for label, row in values.items()}
    return friedman_ranks_from_means(table)


def _fmt(value) -> str:
    """Stable text form: shortest round-trip repr for floats."""
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def _trace_file_stem(trace: RunTrace) -> str:
    return (f"{trace.problem}_m{trace.m}_{trace.algorithm}_"
            f"{trace.normalization}_r{trace.run_index:02d}")


def write_results(traces: list[RunTrace], config: ExperimentConfig,
                  out_dir: str | Path) -> Path:
    """Persist a campaign: per-run traces, summaries, manifest.

    Layout: ``runs/<cell>_r<k>.csv`` (one row per checkpoint),
    ``runs/<cell>_r<k>_pop.csv`` (final population objectives),
    ``summary.csv`` (final checkpoint, one row per cell),
    ``summary_checkpoints.csv`` (all checkpoints), ``manifest.json``.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if not traces:
        manifest = {
            "version": __version__,
            "config": config.canonical(),
            "config_hash": config.config_hash(),
            "seeds": {},
            "files": [],
        }
        with open(out / "manifest.json", "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return out
    (out / "runs").mkdir(exist_ok=True)
    traces = sorted(traces, key=lambda t: (t.problem, t.m, t.algorithm,
                                           t.normalization, t.run_index))
    files: list[str] = []
    for trace in traces:
        m = trace.m
        stem = _trace_file_stem(trace)
        header = (["checkpoint", "evals", "igd_plus_c", "e_ideal", "e_nadir",
                   "ore"] + [f"z_lb_{i + 1}" for i in range(m)]
                  + [f"z_ub_{i + 1}" for i in range(m)])
        rows = [[r["checkpoint"], r["evals"], r["igd_plus_c"], r["e_ideal"],
                 r["e_nadir"], r["ore"]] + list(r["z_lb"]) + list(r["z_ub"])
                for r in trace.records]
        _write_csv(out / "runs" / f"{stem}.csv", header, rows)
        _write_csv(out / "runs" / f"{stem}_pop.csv",
                   [f"f_{i + 1}" for i in range(m)],
                   [list(row) for row in trace.final_objs])
        files.append(f"runs/{stem}.csv")
        files.append(f"runs/{stem}_pop.csv")

    cells: dict[tuple, list[RunTrace]] = {}
    for trace in traces:
        cells.setdefault((trace.problem, trace.m, trace.treatment),
                         []).append(trace)

    def mean_at(group: list[RunTrace], checkpoint: int, key: str):
        vals = [r[key] for t in group for r in t.records
                if r["checkpoint"] == checkpoint]
        if not vals:
            return None
        return float(np.mean(vals)), float(np.std(vals))

    last_cp = max(config.checkpoints)
    summary_rows = []
    by_problem: dict[tuple[str, int], dict[str, float]] = {}
    for (prob, m, treatment), group in sorted(cells.items()):
        stats = mean_at(group, last_cp, "igd_plus_c")
        if stats is None:
            continue
        by_problem.setdefault((prob, m), {})[treatment] = stats[0]
        summary_rows.append([prob, m, treatment, stats[0], stats[1]])
    ranks: dict[tuple[str, int], dict[str, float]] = {}
    for key, table in by_problem.items():
        values = np.array([table[t] for t in sorted(table)])
        rk = rankdata(values, method="average")
        ranks[key] = dict(zip(sorted(table), rk))
    for row in summary_rows:
        row.append(float(ranks[(row[0], row[1])][row[2]]))
    _write_csv(out / "summary.csv",
               ["problem", "m", "treatment", "mean_igdpc", "std_igdpc",
                "rank"], summary_rows)
    files.append("summary.csv")

    cp_rows = []
    for (prob, m, treatment), group in sorted(cells.items()):
        for checkpoint in config.checkpoints:
            cols = []
            for key in ("igd_plus_c", "e_ideal", "e_nadir", "ore"):
                stats = mean_at(group, checkpoint, key)
                cols.extend(stats if stats else (None, None))
            if cols[0] is None:
                continue
            cp_rows.append([prob, m, treatment, checkpoint] + cols)
    _write_csv(out / "summary_checkpoints.csv",
               ["problem", "m", "treatment", "checkpoint",
                "mean_igdpc", "std_igdpc", "mean_e_ideal", "std_e_ideal",
                "mean_e_nadir", "std_e_nadir", "mean_ore", "std_ore"],
               cp_rows)
    files.append("summary_checkpoints.csv")

    # per-(problem, checkpoint) treatment ranks by mean indicator value
    means_by_pc: dict[tuple, dict[str, float]] = {}
    for (prob, m, treatment), group in sorted(cells.items()):
        for checkpoint in config.checkpoints:
            stats = mean_at(group, checkpoint, "igd_plus_c")
            if stats is not None:
                means_by_pc.setdefault((prob, m, checkpoint),
                                       {})[treatment] = stats[0]
    rank_rows = []
    for (prob, m, checkpoint), table in sorted(means_by_pc.items()):
        labels = sorted(table)
        ranks_pc = rankdata([table[t] for t in labels], method="average")
        for treatment, rk in zip(labels, ranks_pc):
            rank_rows.append([prob, m, checkpoint, treatment,
                              table[treatment], float(rk)])
    _write_csv(out / "ranks.csv",
               ["problem", "m", "checkpoint", "treatment", "mean_igdpc",
                "rank"], rank_rows)
    files.append("ranks.csv")

    # suite-level Friedman average ranks per checkpoint
    suite_rows = []
    all_traces = traces
    for suite in sorted(SUITES):
        members = set(SUITES[suite])
        if not any(t.problem in members for t in all_traces):
            continue
        for checkpoint in config.checkpoints:
            try:
                avg = friedman_average_ranks(all_traces, suite, checkpoint)
            except ValueError:
                continue
            count = len({(t.problem, t.m) for t in all_traces
                         if t.problem in members})
            for treatment in sorted(avg):
                suite_rows.append([suite, checkpoint, treatment,
                                   avg[treatment], count])
    if suite_rows:
        _write_csv(out / "rank_summary.csv",
                   ["suite", "checkpoint", "treatment", "avg_rank",
                    "problems"], suite_rows)
        files.append("rank_summary.csv")

    seeds: dict[str, dict[str, int]] = {}
    for trace in traces:
        seeds.setdefault(trace.cell_id, {})[str(trace.run_index)] = trace.seed
    manifest = {
        "version": __version__,
        "config": config.canonical(),
        "config_hash": config.config_hash(),
        "seeds": seeds,
        "files": files,
    }
    with open(out / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return out


def rank_from_results(out_dir: str | Path, suite: str,
                      checkpoint: int) -> dict[str, float]:
    """Friedman average ranks over one suite at one checkpoint.

    Reads ``summary_checkpoints.csv`` from a campaign directory; every
    (problem, m) pair in the suite counts as one ranking instance.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; "
                         f"known: {', '.join(SUITES)}")
    path = Path(out_dir) / "summary_checkpoints.csv"
    if not path.is_file():
        raise FileNotFoundError(f"no summary_checkpoints.csv under "
                                f"{out_dir}")
    members = set(SUITES[suite])
    table: dict[str, dict[str, float]] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            if row["problem"] not in members:
                continue
            if int(row["checkpoint"]) != checkpoint:
                continue
            label = f"{row['problem']}:m{row['m']}"
            table.setdefault(label, {})[row["treatment"]] = \
                float(row["mean_igdpc"])
    if not table:
        raise ValueError(f"no rows for suite {suite!r} at checkpoint "
                         f"{checkpoint} in {path}")
    return friedman_ranks_from_means(table)
