"""
Health check router.
"""
import time

from fastapi import APIRouter

from lognormal_cat import __version__
from lognormal_cat.config import get_settings, resolve_threads

router = APIRouter(tags=["Health"])

_start_time = time.time()


@router.get("/health")
async def health():
    settings = get_settings()
    return {
        "status": "ok",
        "version": __version__,
        "methods": ["cat", "lrt"],
        "uptime_seconds": round(time.time() - _start_time),
        "defaults": {
            "replicates": settings.default_replicates,
            "alpha": settings.alpha,
            "threads": resolve_threads(None),
        },
    }
