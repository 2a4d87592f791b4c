"""
Hypothesis test router.
POST /api/test → CAT or LRT on an uploaded long-format CSV
"""
import logging
import uuid

from fastapi import APIRouter, File, Form, HTTPException, UploadFile
from fastapi.concurrency import run_in_threadpool

from lognormal_cat.config import get_settings
from lognormal_cat.errors import InputError, InvalidTable, LognormalCatError, NumericalError
from lognormal_cat.models.results import Method
from lognormal_cat.tasks import run_test_pipeline
from lognormal_cat.utils.table import parse_table

logger = logging.getLogger(__name__)
router = APIRouter(prefix="/api/test", tags=["Test"])


# Structured error codes
ERROR_CODES = {
    InputError: 400,
    NumericalError: 422,
}


def status_for(exc: LognormalCatError) -> int:
    for family, status in ERROR_CODES.items():
        if isinstance(exc, family):
            return status
    return 500


async def read_upload(upload: UploadFile) -> str:
    max_mb = get_settings().max_upload_size_mb
    data = await upload.read()
    if len(data) > max_mb * 1024 * 1024:
        raise InvalidTable(f"upload exceeds {max_mb}MB limit")
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidTable(f"upload is not valid UTF-8 ({exc.reason})")


@router.post("", summary="Test equality of log-normal means")
async def submit_test(
    data: UploadFile = File(..., description="CSV with header group,value"),
    method: Method = Form(default=Method.CAT),
    replicates: int | None = Form(default=None, description="CAT replicates M"),
    seed: int | None = Form(default=None, description="Master seed; generated if omitted"),
    alpha: float | None = Form(default=None),
):
    job_id = str(uuid.uuid4())
    try:
        table = parse_table(await read_upload(data))
        # CPU-bound; keep it off the event loop
        report = await run_in_threadpool(
            run_test_pipeline,
            table, method=method, m=replicates, seed=seed, alpha=alpha, run_id=job_id,
        )
        return {"job_id": job_id, **report}
    except LognormalCatError as exc:
        logger.error("[%s] %s: %s", job_id, exc.code, exc.message)
        raise HTTPException(
            status_code=status_for(exc),
            detail={"error": exc.code, "message": exc.message, "job_id": job_id},
        )
