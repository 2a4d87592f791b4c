"""
Size and power studies – repeated experiments under a known scenario.

Study: draw experiment → run each requested test → aggregate rejections.
Experiment e draws its data from substream (seed, EXPERIMENT, e) and runs
its CAT with a seed derived from (seed, EXPERIMENT_CAT_SEED, e), so a study
is reproducible whatever the number of worker threads.
"""
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor, as_completed

import numpy as np
from tqdm import tqdm

from lognormal_cat.config import get_settings, resolve_threads
from lognormal_cat.errors import InvalidScenario, LognormalCatError, StudyFailed
from lognormal_cat.estimation.groups import make_group_sample
from lognormal_cat.inference.cat import run_cat
from lognormal_cat.inference.lrt import run_lrt
from lognormal_cat.models.results import Method, MethodSummary, StudyResult
from lognormal_cat.models.samples import GroupSample
from lognormal_cat.models.scenario import Scenario
from lognormal_cat.monitoring.monitor import RunMonitor
from lognormal_cat.utils.rng import Stream, derive_seed, substream

logger = logging.getLogger(__name__)


def draw_experiment(scenario: Scenario, rng: np.random.Generator) -> list[GroupSample]:
    """One data set: n_i values exp(z), z ~ N(μ_i, σ²_i), per group."""
    return [
        make_group_sample(np.exp(rng.normal(mu, math.sqrt(s2), n)))
        for n, mu, s2 in zip(scenario.ns, scenario.mus, scenario.sigma2s)
    ]


def _run_experiment(scenario: Scenario, index: int) -> dict:
    """p-value (or error) and elapsed time per method for experiment `index`."""
    samples = draw_experiment(scenario, substream(scenario.seed, Stream.EXPERIMENT, index))
    outcome = {}
    for method in scenario.methods:
        start = time.perf_counter()
        try:
            if method == Method.CAT:
                result = run_cat(
                    samples,
                    m=scenario.m,
                    seed=derive_seed(scenario.seed, Stream.EXPERIMENT_CAT_SEED, index),
                    alpha=scenario.alpha,
                    threads=1,
                )
            else:
                result = run_lrt(samples, alpha=scenario.alpha)
            outcome[method] = (result.p_value, None, time.perf_counter() - start)
        except LognormalCatError as exc:
            logger.warning("[%s] experiment %d: %s failed: %s",
                           scenario.scenario_id, index, method.value, exc.message)
            outcome[method] = (None, exc.code, time.perf_counter() - start)
    return outcome


def _summarize(method: Method, outcomes: list[dict], alpha: float) -> MethodSummary:
    p_values = [o[method][0] for o in outcomes if o[method][0] is not None]
    failures = len(outcomes) - len(p_values)
    experiments = len(p_values)
    rejections = sum(p < alpha for p in p_values)
    rate = rejections / experiments if experiments else 0.0
    return MethodSummary(
        method=method,
        experiments=experiments,
        rejections=rejections,
        failures=failures,
        rejection_rate=rate,
        mc_std_error=math.sqrt(rate * (1.0 - rate) / experiments) if experiments else 0.0,
        mean_p_value=float(np.mean(p_values)) if p_values else 0.0,
        wall_time_s=sum(o[method][2] for o in outcomes),
        p_values=p_values,
    )


def run_study(
    scenario: Scenario,
    threads: int | None = None,
    progress: bool = False,
) -> StudyResult:
    if scenario.seed is None:
        raise InvalidScenario(f"scenario {scenario.scenario_id!r} has no seed")
    threads = min(resolve_threads(threads), scenario.reps)
    outcomes: list[dict | None] = [None] * scenario.reps

    logger.info(
        "[%s] Study: k=%d ns=%s reps=%d M=%d methods=%s null=%s threads=%d",
        scenario.scenario_id, scenario.k, scenario.ns, scenario.reps, scenario.m,
        [m.value for m in scenario.methods], scenario.is_null, threads,
    )

    with RunMonitor(run_id=scenario.scenario_id, kind="study") as monitor:
        with tqdm(total=scenario.reps, desc=scenario.scenario_id, disable=not progress) as bar:
            if threads == 1:
                for e in range(scenario.reps):
                    outcomes[e] = _run_experiment(scenario, e)
                    bar.update()
            else:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    futures = {
                        pool.submit(_run_experiment, scenario, e): e
                        for e in range(scenario.reps)
                    }
                    for future in as_completed(futures):
                        outcomes[futures[future]] = future.result()
                        bar.update()

        summaries = [_summarize(m, outcomes, scenario.alpha) for m in scenario.methods]
        monitor.record(
            **{f"{s.method.value}_rejection_rate": s.rejection_rate for s in summaries},
            failures={s.method.value: s.failures for s in summaries},
        )

        limit = get_settings().max_failure_fraction
        for s in summaries:
            if s.failures > limit * scenario.reps:
                raise StudyFailed(
                    f"[{scenario.scenario_id}] {s.method.value}: {s.failures} of "
                    f"{scenario.reps} experiments failed (limit {limit:.0%})"
                )

    return StudyResult(
        scenario_id=scenario.scenario_id,
        digest=scenario.digest(),
        k=scenario.k,
        ns=scenario.ns,
        alpha=scenario.alpha,
        reps=scenario.reps,
        m=scenario.m,
        seed=scenario.seed,
        is_null=scenario.is_null,
        methods=summaries,
        wall_time_s=monitor.metrics["wall_time_s"],
    )
