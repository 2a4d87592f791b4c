"""
Result writers. Files are written to a temporary sibling and renamed into
place, so a failed run never leaves a partial file behind.
"""
import csv
import io
import json
import logging
import os
import tempfile
from pathlib import Path

from lognormal_cat.errors import OutputPathError
from lognormal_cat.models.results import CSV_COLUMNS, StudyResult

logger = logging.getLogger(__name__)


def check_output_path(path: str | Path) -> Path:
    path = Path(path)
    if not path.parent.is_dir():
        raise OutputPathError(f"output directory does not exist: {path.parent}")
    if path.is_dir():
        raise OutputPathError(f"output path is a directory: {path}")
    return path


def write_atomic(path: str | Path, text: str) -> Path:
    path = check_output_path(path)
    try:
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    except OSError as exc:
        raise OutputPathError(f"cannot write to {path.parent}: {exc.strerror}")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException as exc:
        if os.path.exists(tmp):
            os.unlink(tmp)
        if isinstance(exc, OSError):
            raise OutputPathError(f"cannot write {path}: {exc.strerror}") from exc
        raise
    logger.info("Wrote %s", path)
    return path


def dumps_json(payload) -> str:
    """Deterministic JSON; floats use the shortest exact round-trip repr."""
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def studies_to_csv(results: list[StudyResult]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for result in results:
        for row in result.csv_rows():
            writer.writerow({k: repr(v) if isinstance(v, float) else v for k, v in row.items()})
    return buf.getvalue()


def write_studies(results: list[StudyResult], csv_path: str | Path) -> tuple[Path, Path]:
    """CSV rows at csv_path, the full results as JSON next to it."""
    csv_path = check_output_path(csv_path)
    json_path = csv_path.with_suffix(".json")
    if json_path == csv_path:
        json_path = csv_path.with_name(f"{csv_path.stem}.study.json")
    payload = [r.model_dump(mode="json") for r in results]
    write_atomic(csv_path, studies_to_csv(results))
    write_atomic(json_path, dumps_json(payload))
    return csv_path, json_path
