"""
FastAPI application entry point – log-normal means testing service.
"""
import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from lognormal_cat import __version__
from lognormal_cat.config import configure_logging, get_settings
from lognormal_cat.routers import health, hypothesis

configure_logging()
logger = logging.getLogger(__name__)
settings = get_settings()


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info("=== Log-normal means API starting up (defaults: M=%d, alpha=%g) ===",
                settings.default_replicates, settings.alpha)
    yield
    logger.info("=== Shutting down ===")


app = FastAPI(
    title="Log-normal Means Testing API",
    version=__version__,
    description=(
        "Tests equality of k log-normal population means with the "
        "Computational Approach Test (parametric resampling under the "
        "restricted MLE) and the likelihood ratio test."
    ),
    docs_url="/docs",
    redoc_url="/redoc",
    lifespan=lifespan,
)

# CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.allowed_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# API Routers
app.include_router(health.router)
app.include_router(hypothesis.router)
