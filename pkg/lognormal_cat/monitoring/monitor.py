"""
Run monitoring – wall time and outcome of tests and studies.
"""
import json
import logging
import time

logger = logging.getLogger(__name__)


class RunMonitor:
    """
    Context manager that captures metrics for one test or study run.

    Usage:
        with RunMonitor(run_id="null_k3", kind="study") as mon:
            # ... run ...
            mon.record(failures=0)
        mon.metrics["wall_time_s"]
    """

    def __init__(self, run_id: str, kind: str):
        self.run_id = run_id
        self.kind = kind
        self._start_time = 0.0
        self._extra: dict = {}
        self.metrics: dict = {}

    def __enter__(self):
        self._start_time = time.perf_counter()
        return self

    def record(self, **fields) -> None:
        self._extra.update(fields)

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self._start_time

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.metrics = {
            "run_id": self.run_id,
            "kind": self.kind,
            "wall_time_s": round(self.elapsed, 3),
            "status": "SUCCESS" if exc_type is None else "FAILED",
            **self._extra,
        }
        if exc_type is not None:
            self.metrics["error"] = str(exc_val)

        _log_metrics(self.metrics)
        return False  # Don't suppress exceptions


def _log_metrics(metrics: dict):
    """Emit a structured JSON log line for monitoring."""
    log_line = json.dumps(metrics, separators=(",", ":"), default=str)
    if metrics.get("status") == "SUCCESS":
        logger.info("RUN_METRICS %s", log_line)
    else:
        logger.error("RUN_METRICS %s", log_line)
