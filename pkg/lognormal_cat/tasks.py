"""
Test orchestration shared by the CLI and the HTTP API.
Pipeline: table → group samples → per-group summaries → CAT or LRT → report
"""
import logging

from lognormal_cat.config import get_settings
from lognormal_cat.estimation.groups import estimate_all
from lognormal_cat.inference.cat import run_cat
from lognormal_cat.inference.lrt import run_lrt
from lognormal_cat.models.results import GroupReport, Method, TestResult
from lognormal_cat.monitoring.monitor import RunMonitor
from lognormal_cat.utils.rng import check_seed, fresh_seed
from lognormal_cat.utils.table import InputTable

logger = logging.getLogger(__name__)


def run_test_pipeline(
    table: InputTable,
    method: Method,
    m: int | None = None,
    seed: int | None = None,
    alpha: float | None = None,
    threads: int | None = None,
    run_id: str = "test",
) -> dict:
    """
    Run one hypothesis test on a parsed table and build its report.

    The report holds no timing, so identical inputs and seed give an
    identical report.
    """
    settings = get_settings()
    method = Method(method)
    if seed is not None:
        check_seed(seed)
    alpha = settings.alpha if alpha is None else alpha
    if method == Method.CAT:
        m = settings.default_replicates if m is None else m
        if seed is None:
            seed = fresh_seed()
            logger.info("[%s] Generated seed %d (pass --seed to reproduce)", run_id, seed)

    with RunMonitor(run_id=run_id, kind=method.value) as monitor:
        samples = table.to_samples()
        summaries, estimates = estimate_all(samples)
        groups = [
            GroupReport(label=label, n=s.n, ybar=s.ybar, s2=s.s2, eta_hat=e.eta_hat, v_hat=e.v_hat)
            for label, s, e in zip(table.labels, summaries, estimates)
        ]

        logger.info("[%s] Running %s on %d groups", run_id, method.value.upper(), len(groups))
        result: TestResult
        if method == Method.CAT:
            result = run_cat(samples, m=m, seed=seed, alpha=alpha, threads=threads)
        else:
            result = run_lrt(samples, alpha=alpha)
        monitor.record(statistic=result.statistic, p_value=result.p_value, reject=result.reject)

    return {
        "method": result.method.value,
        "groups": [g.model_dump() for g in groups],
        "statistic": result.statistic,
        "p_value": result.p_value,
        "critical_value": result.critical_value,
        "alpha": result.alpha,
        "m": result.m,
        "seed": result.seed,
        "df": result.df,
        "reject": result.reject,
    }


def format_text_report(report: dict) -> str:
    lines = [
        f"{'group':<16}{'n':>6}{'ybar':>14}{'S2':>14}{'eta_hat':>14}{'v_hat':>14}",
    ]
    for g in report["groups"]:
        lines.append(
            f"{g['label']:<16}{g['n']:>6}{g['ybar']:>14.6g}{g['s2']:>14.6g}"
            f"{g['eta_hat']:>14.6g}{g['v_hat']:>14.6g}"
        )
    lines.append("")
    lines.append(f"method          {report['method'].upper()}")
    lines.append(f"statistic       {report['statistic']:.6g}")
    if report["critical_value"] is not None:
        lines.append(f"critical value  {report['critical_value']:.6g}")
    lines.append(f"p-value         {report['p_value']:.6g}")
    if report["m"] is not None:
        lines.append(f"replicates      {report['m']}  (seed {report['seed']})")
    if report["df"] is not None:
        lines.append(f"df              {report['df']}")
    decision = "reject H0" if report["reject"] else "do not reject H0"
    lines.append(f"decision        {decision} at alpha={report['alpha']:g}")
    return "\n".join(lines) + "\n"
