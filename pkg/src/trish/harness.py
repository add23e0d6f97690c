"""Experiment runner: seeded multi-run trainings, grid tuning, bound checks, CSV.

Reproducibility contract: every stochastic choice flows from
numpy.random.default_rng(base_seed + seed_index), all seeds share the
same starting point, and records are emitted in a fixed order, so a
config run twice produces identical numbers and re-emitting the same
records produces byte-identical files.  The config hash recorded in
metadata deliberately excludes base_seed: reseeding changes the
trajectories, not the experiment's identity.
"""

from __future__ import annotations

import dataclasses
import hashlib
import math
import time
from dataclasses import dataclass
from itertools import product

import numpy as np

from .core import StepsizeSchedule, TrishParams, sg_step, trish_step
from .ingest import load_libsvm, to_matrix
from .oracles import GaussianOracle, SigmaSchedule, finite_sum_minibatch
from .problems import (
    LogisticProblem,
    NonconvexPLProblem,
    QuadraticProblem,
    normalize_binary_labels,
)
from .theory import AssumptionConstants, TheoremConstants, theorem_bound

__all__ = [
    "ExperimentConfig",
    "RunRecord",
    "ExperimentResult",
    "run_experiment",
    "TuneEntry",
    "TuneResult",
    "tune_grid",
    "TheoremReport",
    "verify_theorem",
    "VerificationSetup",
    "verification_setup",
    "emit_csv",
    "emit_verify_csv",
]

RUN_CSV_HEADER = (
    "seed,checkpoint_fraction,iteration,train_loss,train_acc,"
    "test_loss,test_acc,case1,case2,case3,wall_ms"
)
VERIFY_CSV_HEADER = "k,empirical_gap,standard_error,bound,violated"

_METHODS = ("trish", "sg")
_PROBLEMS = ("logistic", "quadratic", "nonconvex_pl")


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything one experiment needs; unset schedule fields pick defaults.

    Exactly one stepsize form applies: alpha for a fixed schedule, or
    (schedule_a, schedule_b) for alpha_k = a/(b+k).  The gamma pair is
    required for the safeguarded method and ignored by plain SG.

    Synthetic problems (quadratic, nonconvex_pl) use a Gaussian oracle
    with the given constant sigma and run for max_iterations; the
    logistic problem draws mini-batches from the dataset and runs for
    epochs * ceil(n_train / batch_size) iterations from w = 0.
    """

    method: str = "trish"
    problem: str = "logistic"
    dataset: str | None = None
    test_dataset: str | None = None
    gamma1: float | None = None
    gamma2: float | None = None
    alpha: float | None = None
    schedule_a: float | None = None
    schedule_b: float | None = None
    batch_size: int = 10
    epochs: int = 1
    max_iterations: int | None = None
    n_seeds: int = 5
    base_seed: int = 0
    checkpoint_fractions: tuple[float, ...] = (0.1, 0.25, 0.5, 0.75, 1.0)
    sigma: float | None = None
    dimension: int = 1

    def __post_init__(self) -> None:
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {_METHODS}, got '{self.method}'")
        if self.problem not in _PROBLEMS:
            raise ValueError(f"problem must be one of {_PROBLEMS}, got '{self.problem}'")
        if self.method == "trish":
            if self.gamma1 is None or self.gamma2 is None:
                raise ValueError("the safeguarded method needs gamma1 and gamma2")
            TrishParams(self.gamma1, self.gamma2)  # validates the pair
        fixed = self.alpha is not None
        harmonic = self.schedule_a is not None or self.schedule_b is not None
        if fixed and harmonic:
            raise ValueError("give either alpha or (schedule_a, schedule_b), not both")
        if not fixed and not harmonic:
            raise ValueError("no stepsize given: set alpha or (schedule_a, schedule_b)")
        if harmonic and (self.schedule_a is None or self.schedule_b is None):
            raise ValueError("harmonic schedule needs both schedule_a and schedule_b")
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be at least 1, got {self.batch_size}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be at least 1, got {self.epochs}")
        if self.n_seeds < 1:
            raise ValueError(f"n_seeds must be at least 1, got {self.n_seeds}")
        if not self.checkpoint_fractions:
            raise ValueError("need at least one checkpoint fraction")
        if list(self.checkpoint_fractions) != sorted(set(self.checkpoint_fractions)):
            raise ValueError("checkpoint fractions must be strictly increasing")
        if not all(0.0 < f <= 1.0 for f in self.checkpoint_fractions):
            raise ValueError("checkpoint fractions must lie in (0, 1]")
        if self.problem == "logistic":
            if self.dataset is None:
                raise ValueError("logistic experiments need a dataset path")
        else:
            if self.max_iterations is None or self.max_iterations < 1:
                raise ValueError("synthetic problems need max_iterations >= 1")
            if self.sigma is None:
                raise ValueError("synthetic problems need the oracle sigma")
            if self.dimension < 1:
                raise ValueError(f"dimension must be at least 1, got {self.dimension}")

    def schedule(self) -> StepsizeSchedule:
        if self.alpha is not None:
            return StepsizeSchedule.fixed(self.alpha)
        return StepsizeSchedule.harmonic(self.schedule_a, self.schedule_b)

    def config_hash(self) -> str:
        """Hash of every field except base_seed; stable across reseeding."""
        payload = []
        for f in dataclasses.fields(self):
            if f.name == "base_seed":
                continue
            payload.append(f"{f.name}={getattr(self, f.name)!r}")
        digest = hashlib.sha256(";".join(payload).encode("utf-8"))
        return digest.hexdigest()[:16]


@dataclass(frozen=True)
class RunRecord:
    """Metrics for one seed at one checkpoint; mirrors the CSV columns."""

    seed: int
    checkpoint_fraction: float
    iteration: int
    train_loss: float
    train_acc: float
    test_loss: float
    test_acc: float
    case1: int
    case2: int
    case3: int
    wall_ms: float


@dataclass
class ExperimentResult:
    records: list[RunRecord]
    metadata: dict

    def final_records(self) -> list[RunRecord]:
        """The last-checkpoint record of each seed, in seed order."""
        last = max(r.checkpoint_fraction for r in self.records)
        return [r for r in self.records if r.checkpoint_fraction == last]


def _load_logistic(config: ExperimentConfig) -> LogisticProblem:
    train_rows, train_max = load_libsvm(config.dataset)
    if not train_rows:
        raise ValueError(f"dataset {config.dataset} holds no examples")
    test_rows, test_max = ([], 0)
    if config.test_dataset is not None:
        test_rows, test_max = load_libsvm(config.test_dataset)
    # One shared dimension so train and test live in the same space.
    dim = max(train_max, test_max, 1)
    features, labels = to_matrix(train_rows, dim)
    labels = normalize_binary_labels(labels)
    if test_rows:
        test_features, test_labels = to_matrix(test_rows, dim)
        return LogisticProblem(
            features, labels, test_features, normalize_binary_labels(test_labels)
        )
    return LogisticProblem(features, labels)


def _build(config: ExperimentConfig):
    """Problem, starting point, iteration budget, and gradient drawer."""
    if config.problem == "logistic":
        problem = _load_logistic(config)
        x1 = np.zeros(problem.metadata.dimension)
        per_epoch = math.ceil(problem.n_components / config.batch_size)
        total = per_epoch * config.epochs

        def draw(x, k, alpha_k, rng):
            return finite_sum_minibatch(problem, x, config.batch_size, rng)

        return problem, x1, total, draw

    if config.problem == "quadratic":
        problem = QuadraticProblem(np.ones(config.dimension))
    else:
        problem = NonconvexPLProblem(config.dimension)
    x1 = np.ones(config.dimension)
    oracle = GaussianOracle(SigmaSchedule.constant(config.sigma))

    def draw(x, k, alpha_k, rng):
        return oracle.sample(problem.gradient(x), k, rng, alpha_k)

    return problem, x1, config.max_iterations, draw


def _checkpoint_iterations(fractions: tuple[float, ...], total: int) -> list[int]:
    return [max(1, math.ceil(f * total)) for f in fractions]


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Run n_seeds independent trainings and collect checkpoint metrics.

    Seed i uses generator default_rng(base_seed + i) and the shared
    starting point.  A run that produces a non-finite loss or gradient
    stops stepping and reports nan metrics from that checkpoint on.
    """
    problem, x1, total, draw = _build(config)
    schedule = config.schedule()
    params = (
        TrishParams(config.gamma1, config.gamma2) if config.method == "trish" else None
    )
    targets = _checkpoint_iterations(config.checkpoint_fractions, total)
    records: list[RunRecord] = []

    for i in range(config.n_seeds):
        seed = config.base_seed + i
        rng = np.random.default_rng(seed)
        x = x1.copy()
        counts = [0, 0, 0]  # SG runs leave these at zero
        dead = False
        start = time.perf_counter()
        by_iteration = {}
        for k in range(1, total + 1):
            if not dead:
                alpha_k = schedule.alpha(k)
                g = draw(x, k, alpha_k, rng)
                if not np.all(np.isfinite(g)):
                    dead = True
                elif config.method == "trish":
                    x, case = trish_step(x, g, alpha_k, params)
                    counts[int(case) - 1] += 1
                else:
                    x = sg_step(x, g, alpha_k)
                if not dead and not np.all(np.isfinite(x)):
                    dead = True
            if k in by_iteration or k not in targets:
                continue
            if dead:
                metrics = (float("nan"),) * 4
            elif config.problem == "logistic":
                metrics = problem.train_metrics(x) + problem.test_metrics(x)
            else:
                value = problem.value(x)
                metrics = (float(value), float("nan"), float("nan"), float("nan"))
                if not math.isfinite(metrics[0]):
                    dead = True
            wall_ms = (time.perf_counter() - start) * 1e3
            by_iteration[k] = (metrics, wall_ms, tuple(counts))
        for frac, target in zip(config.checkpoint_fractions, targets):
            metrics, wall_ms, counts = by_iteration[target]
            records.append(
                RunRecord(
                    seed=seed,
                    checkpoint_fraction=frac,
                    iteration=target,
                    train_loss=metrics[0],
                    train_acc=metrics[1],
                    test_loss=metrics[2],
                    test_acc=metrics[3],
                    case1=counts[0],
                    case2=counts[1],
                    case3=counts[2],
                    wall_ms=wall_ms,
                )
            )

    metadata = {
        "config_hash": config.config_hash(),
        "generator": "numpy-pcg64",
        "method": config.method,
        "problem": config.problem,
        "dimension": problem.metadata.dimension,
        "iterations": total,
        "x1_policy": "zeros" if config.problem == "logistic" else "ones",
        "n_seeds": config.n_seeds,
        "base_seed": config.base_seed,
    }
    return ExperimentResult(records=records, metadata=metadata)


@dataclass(frozen=True)
class TuneEntry:
    """Mean final-checkpoint metrics for one grid point over all seeds."""

    params: dict
    mean_train_loss: float
    mean_train_acc: float
    mean_test_loss: float
    mean_test_acc: float
    diverged: bool


@dataclass
class TuneResult:
    best: ExperimentConfig
    best_params: dict
    entries: list[TuneEntry]


def _normalize_grid(grid: dict) -> dict[tuple[str, ...], list[tuple]]:
    """Grid keys become field tuples, values become aligned value tuples.

    A key may be one field name or a tuple of names swept together, e.g.
    {("gamma1", "gamma2"): [(7.0, 2.8), (11.0, 4.4)]} for a coupled pair
    that must not be crossed in the product.
    """
    normalized = {}
    for key, values in grid.items():
        fields = (key,) if isinstance(key, str) else tuple(key)
        if not fields:
            raise ValueError("grid keys must name at least one field")
        rows = []
        for value in values:
            row = tuple(value) if len(fields) > 1 else (value,)
            if len(row) != len(fields):
                raise ValueError(
                    f"grid value {value!r} does not match fields {fields}"
                )
            rows.append(row)
        if not rows:
            raise ValueError(f"empty candidate list for {fields}")
        normalized[fields] = rows
    return dict(sorted(normalized.items()))


def tune_grid(base_config: ExperimentConfig, grid: dict) -> TuneResult:
    """Evaluate every grid combination and pick the best configuration.

    grid maps ExperimentConfig field names (or tuples of names swept
    together) to candidate values; keys are iterated in sorted order so
    ties resolve the same way every run.  Selection: highest mean final
    test accuracy, then lowest mean final test loss, then the
    lexicographically first parameter combination.  Grid points whose
    runs go non-finite are kept in the table, flagged diverged, and
    excluded from selection.
    """
    normalized = _normalize_grid(grid)
    keys = list(normalized)
    entries: list[TuneEntry] = []
    candidates = []
    for combo in product(*(normalized[key] for key in keys)):
        combo_params = {
            field: value
            for fields, row in zip(keys, combo)
            for field, value in zip(fields, row)
        }
        config = dataclasses.replace(base_config, **combo_params)
        finals = run_experiment(config).final_records()
        means = [
            float(np.mean([getattr(r, f) for r in finals]))
            for f in ("train_loss", "train_acc", "test_loss", "test_acc")
        ]
        diverged = not math.isfinite(means[0])
        entry = TuneEntry(
            params=combo_params,
            mean_train_loss=means[0],
            mean_train_acc=means[1],
            mean_test_loss=means[2],
            mean_test_acc=means[3],
            diverged=diverged,
        )
        entries.append(entry)
        if not diverged:
            acc = means[3] if math.isfinite(means[3]) else -math.inf
            loss = means[2] if math.isfinite(means[2]) else means[0]
            candidates.append(((-acc, loss, combo), config, combo_params))
    if not candidates:
        raise RuntimeError("every grid point diverged; nothing to select")
    candidates.sort(key=lambda item: item[0])
    _, best, best_params = candidates[0]
    return TuneResult(best=best, best_params=best_params, entries=entries)


def _trish_step_batch(
    X: np.ndarray, G: np.ndarray, alpha: float, params: TrishParams
) -> tuple[np.ndarray, np.ndarray]:
    """Row-wise safeguarded step; returns (next iterates, case index per row).

    Matches trish_step applied to each row; kept vectorized because the
    bound checks march thousands of trajectories in lockstep.
    """
    norms = np.linalg.norm(G, axis=1)
    case1 = norms < params.lower_threshold
    case3 = norms > params.upper_threshold
    case2 = ~case1 & ~case3
    coeff = np.where(
        case1,
        params.gamma1 * alpha,
        np.where(case2, alpha / np.where(norms > 0.0, norms, 1.0), params.gamma2 * alpha),
    )
    cases = np.where(case1, 1, np.where(case2, 2, 3))
    return X - coeff[:, None] * G, cases


@dataclass
class TheoremReport:
    """Empirical curve vs guarantee curve, with per-k violation flags.

    For guarantees 1-3 the curve is the mean optimality gap at iterate
    k; for 4 it is the running average of E||grad f||^2; for 5 the
    weighted partial sums, with the weighted averages riding along.
    """

    theorem_id: int
    k: np.ndarray
    empirical: np.ndarray
    standard_error: np.ndarray
    bound: np.ndarray
    violated: np.ndarray
    n_seeds: int
    n_se: float
    weighted_average: np.ndarray | None = None

    @property
    def n_violations(self) -> int:
        return int(self.violated.sum())

    @property
    def ok(self) -> bool:
        return self.n_violations == 0


def verify_theorem(
    tc: TheoremConstants,
    problem,
    oracle: GaussianOracle,
    params: TrishParams,
    schedule: StepsizeSchedule,
    x1: np.ndarray,
    n_seeds: int,
    horizon: int,
    base_seed: int = 0,
    n_se: float = 3.0,
) -> TheoremReport:
    """March n_seeds trajectories and compare the empirical quantity
    against the guarantee's bound at every k up to the horizon.

    A point violates when empirical > bound + n_se * SE (plus a 1e-12
    relative float guard for exact-equality points such as k = 1, where
    the bound reproduces the deterministic initial gap).
    """
    if horizon < 1:
        raise ValueError(f"horizon must be at least 1, got {horizon}")
    if n_seeds < 2:
        raise ValueError(f"need at least two trajectories, got {n_seeds}")
    meta = problem.metadata
    f_star = meta.f_star if meta.f_star is not None else 0.0
    x1 = np.atleast_1d(np.asarray(x1, dtype=float))
    X = np.tile(x1, (n_seeds, 1))
    rng = np.random.default_rng(base_seed)

    ks = np.arange(1, horizon + 1)
    empirical = np.empty(horizon)
    ses = np.empty(horizon)
    cumulative = np.zeros(n_seeds)  # guarantees 4 and 5
    alpha_running = 0.0
    weighted = np.empty(horizon) if tc.theorem_id == 5 else None

    for k in range(1, horizon + 1):
        alpha_k = schedule.alpha(k)
        grad = problem.gradient(X)
        if tc.theorem_id in (1, 2, 3):
            gap = problem.value(X) - f_star
            empirical[k - 1] = gap.mean()
            ses[k - 1] = gap.std(ddof=1) / math.sqrt(n_seeds)
        elif tc.theorem_id == 4:
            cumulative += np.sum(grad**2, axis=1)
            avg = cumulative / k
            empirical[k - 1] = avg.mean()
            ses[k - 1] = avg.std(ddof=1) / math.sqrt(n_seeds)
        else:
            cumulative += alpha_k * np.sum(grad**2, axis=1)
            alpha_running += alpha_k
            empirical[k - 1] = cumulative.mean()
            ses[k - 1] = cumulative.std(ddof=1) / math.sqrt(n_seeds)
            weighted[k - 1] = empirical[k - 1] / alpha_running
        G = oracle.sample(grad, k, rng, alpha_k)
        X, _ = _trish_step_batch(X, G, alpha_k, params)

    bound = np.array([theorem_bound(tc.theorem_id, tc, int(k)) for k in ks])
    guard = 1e-12 * np.maximum(1.0, np.abs(bound))
    violated = empirical > bound + n_se * ses + guard
    return TheoremReport(
        theorem_id=tc.theorem_id,
        k=ks,
        empirical=empirical,
        standard_error=ses,
        bound=bound,
        violated=violated,
        n_seeds=n_seeds,
        n_se=n_se,
        weighted_average=weighted,
    )


@dataclass
class VerificationSetup:
    """A frozen, hypothesis-checked configuration for one guarantee."""

    tc: TheoremConstants
    problem: object
    oracle: GaussianOracle
    params: TrishParams
    schedule: StepsizeSchedule
    x1: np.ndarray
    horizon: int
    n_seeds: int


def verification_setup(
    theorem_id: int,
    n_seeds: int = 2000,
    gamma1: float | None = None,
    gamma2: float | None = None,
    alpha: float | None = None,
) -> VerificationSetup:
    """Reference configuration under which each guarantee is checked.

    Guarantees 1-3 run on the unit 1-d quadratic (c = L = 1); 4 and 5 on
    the 1-d nonconvex PL objective, whose PL constant the bounds never
    consume.  The noise regime matches the guarantee: fixed sigma for 1
    and 4, stepsize-coupled for 2 and 5, geometrically decaying for 3.
    Overridden gammas or stepsizes are re-validated against the
    hypotheses, so a bad override raises HypothesisError rather than
    silently checking a vacuous bound.
    """
    if theorem_id in (1, 2, 3):
        problem = QuadraticProblem(np.ones(1))
    elif theorem_id in (4, 5):
        problem = NonconvexPLProblem(1)
    else:
        raise ValueError(f"unknown theorem id {theorem_id}")
    meta = problem.metadata
    L = meta.smoothness
    c = meta.pl_constant

    if theorem_id == 1:
        params = TrishParams(gamma1 or 2.0, gamma2 or 1.9)
        sigma = 0.1
        ac = AssumptionConstants.for_fixed_sigma(sigma)
        x1 = np.array([1.0])
        margin = params.gamma1 - ac.h2 * (params.gamma1 - params.gamma2)
        theta1 = 0.5 * min(params.gamma2, margin)
        if alpha is None:
            alpha = min(1.0 / (2.0 * c * theta1), 1.0 / (params.gamma1 * L))
        gap1 = float(problem.value(x1)) - meta.f_star
        tc = TheoremConstants.for_theorem1(
            params, ac.h1, ac.h2, c, L, m1=sigma**2, m2=1.0, alpha=alpha,
            f_gap_initial=gap1,
        )
        oracle = GaussianOracle(SigmaSchedule.constant(sigma))
        return VerificationSetup(
            tc, problem, oracle, params, StepsizeSchedule.fixed(alpha),
            x1, horizon=200, n_seeds=n_seeds,
        )

    if theorem_id == 2:
        # Wide normalized band and a slow crawl through it: the gap then
        # genuinely tracks the 1/k envelope over the fitted window.
        params = TrishParams(gamma1 or 0.2, gamma2 or 0.04)
        a, b = 40.0, 1000.0
        alpha1 = a / (b + 1.0)
        ac = AssumptionConstants.for_coupled(alpha_max=alpha1)
        x1 = np.array([22.8])
        gap1 = float(problem.value(x1)) - meta.f_star
        tc = TheoremConstants.for_theorem2(
            params, ac.h3, ac.h4, c, L, m1=alpha1**2, m2=1.0, a=a, b=b,
            f_gap_initial=gap1,
        )
        oracle = GaussianOracle(SigmaSchedule.coupled(1.0))
        return VerificationSetup(
            tc, problem, oracle, params, StepsizeSchedule.harmonic(a, b),
            x1, horizon=500, n_seeds=n_seeds,
        )

    if theorem_id == 3:
        params = TrishParams(gamma1 or 2.0, gamma2 or 1.9)
        m3, zeta = 0.04, 0.25
        ac = AssumptionConstants.for_geometric(m3, zeta)
        if alpha is None:
            alpha = 0.45
        x1 = np.array([1.0])
        gap1 = float(problem.value(x1)) - meta.f_star
        tc = TheoremConstants.for_theorem3(
            params, ac.h5, ac.h6, ac.lam, zeta, c, L, m3=m3, alpha=alpha,
            f_gap_initial=gap1,
        )
        oracle = GaussianOracle(SigmaSchedule.geometric(m3, zeta))
        return VerificationSetup(
            tc, problem, oracle, params, StepsizeSchedule.fixed(alpha),
            x1, horizon=100, n_seeds=n_seeds,
        )

    if theorem_id == 4:
        params = TrishParams(gamma1 or 2.0, gamma2 or 1.9)
        sigma = 0.1
        ac = AssumptionConstants.for_fixed_sigma(sigma)
        if alpha is None:
            alpha = 1.0 / (params.gamma1 * L)
        x1 = np.array([1.0])
        gap1 = float(problem.value(x1)) - meta.f_star
        tc = TheoremConstants.for_theorem4(
            params, ac.h1, ac.h2, L, m1=sigma**2, m2=1.0, alpha=alpha,
            f_gap_initial=gap1,
        )
        oracle = GaussianOracle(SigmaSchedule.constant(sigma))
        return VerificationSetup(
            tc, problem, oracle, params, StepsizeSchedule.fixed(alpha),
            x1, horizon=200, n_seeds=n_seeds,
        )

    params = TrishParams(gamma1 or 2.0, gamma2 or 1.9)
    a, b = 0.5, 7.0
    alpha1 = a / (b + 1.0)
    ac = AssumptionConstants.for_coupled(alpha_max=alpha1)
    x1 = np.array([1.0])
    gap1 = float(problem.value(x1)) - meta.f_star
    tc = TheoremConstants.for_theorem5(
        params, ac.h3, ac.h4, L, m1=alpha1**2, m2=1.0, a=a, b=b,
        f_gap_initial=gap1,
    )
    oracle = GaussianOracle(SigmaSchedule.coupled(1.0))
    return VerificationSetup(
        tc, problem, oracle, params, StepsizeSchedule.harmonic(a, b),
        x1, horizon=5000, n_seeds=n_seeds,
    )


def _fmt(value) -> str:
    """Floats at 9 significant digits, everything else via str."""
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def emit_csv(records: list[RunRecord], path: str) -> None:
    """Write run records sorted by (seed, iteration, fraction).

    Emitting the same records twice yields byte-identical files; an
    empty record list writes just the header line.
    """
    ordered = sorted(
        records, key=lambda r: (r.seed, r.iteration, r.checkpoint_fraction)
    )
    lines = [RUN_CSV_HEADER]
    for r in ordered:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    r.seed, r.checkpoint_fraction, r.iteration,
                    r.train_loss, r.train_acc, r.test_loss, r.test_acc,
                    r.case1, r.case2, r.case3, r.wall_ms,
                )
            )
        )
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


def emit_verify_csv(report: TheoremReport, path: str) -> None:
    """Write the bound-check curve, one row per iteration index."""
    lines = [VERIFY_CSV_HEADER]
    for i in range(report.k.size):
        lines.append(
            ",".join(
                (
                    str(int(report.k[i])),
                    _fmt(float(report.empirical[i])),
                    _fmt(float(report.standard_error[i])),
                    _fmt(float(report.bound[i])),
                    str(int(report.violated[i])),
                )
            )
        )
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")
