"""FastAPI application entry point.

Production features:
- Structured logging with timestamps
- Rate limiting on POST endpoints (verification suites are expensive)
- Request logging with timing
- Auto-created SQLite ledger tables
"""

import time
import logging
from collections import defaultdict
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from starlette.middleware.base import BaseHTTPMiddleware
from app.config import (
    LOG_DATEFMT,
    LOG_FORMAT,
    LOG_LEVEL,
    RATE_LIMIT_MAX_REQUESTS,
    RATE_LIMIT_WINDOW_SECONDS,
)
from app.database import init_db
from app.routers import algebra, growth, series, verification

# ── Logging Configuration ────────────────────────────────────────

logging.basicConfig(
    level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
    format=LOG_FORMAT,
    datefmt=LOG_DATEFMT,
)
logger = logging.getLogger(__name__)

init_db()
logger.info("Ledger tables created/verified")

VERSION = "1.0.0"


# ── Rate Limiting Middleware ─────────────────────────────────────

class RateLimitMiddleware(BaseHTTPMiddleware):
    """In-memory per-client limiter for POST requests."""
    def __init__(self, app, max_requests: int = 30, window_seconds: int = 60):
        super().__init__(app)
        self.max_requests = max_requests
        self.window_seconds = window_seconds
        self.requests = defaultdict(list)  # client -> [timestamps]

    async def dispatch(self, request: Request, call_next):
        if request.method == "POST":
            client = request.client.host if request.client else "unknown"
            now = time.time()
            self.requests[client] = [
                t for t in self.requests[client]
                if now - t < self.window_seconds
            ]

            if len(self.requests[client]) >= self.max_requests:
                logger.warning("Rate limit exceeded for client: %s", client)
                return JSONResponse(
                    status_code=429,
                    content={
                        "detail": f"Rate limit exceeded. Max {self.max_requests} requests per {self.window_seconds}s."
                    },
                )

            self.requests[client].append(now)

        return await call_next(request)


# ── Request Logging Middleware ───────────────────────────────────

class RequestLoggingMiddleware(BaseHTTPMiddleware):
    """Log all incoming requests with timing."""
    async def dispatch(self, request: Request, call_next):
        start = time.time()
        response = await call_next(request)
        duration = (time.time() - start) * 1000  # ms

        logger.info(
            "%s %s → %d (%.1fms)",
            request.method, request.url.path, response.status_code, duration
        )
        return response


# ── FastAPI App ──────────────────────────────────────────────────

app = FastAPI(
    title="Hilbert Series Workbench",
    description="Exact Hilbert series, Witt dimensions, Schreier formulas and growth "
                "rates for free color Lie superalgebras, with oracle cross-checks.",
    version=VERSION,
    docs_url="/docs",
    redoc_url="/redoc"
)

# Middleware
app.add_middleware(RequestLoggingMiddleware)
app.add_middleware(
    RateLimitMiddleware,
    max_requests=RATE_LIMIT_MAX_REQUESTS,
    window_seconds=RATE_LIMIT_WINDOW_SECONDS,
)

app.include_router(series.router)
app.include_router(algebra.router)
app.include_router(growth.router)
app.include_router(verification.router)


@app.get("/", tags=["Health"])
def root():
    """Health check endpoint."""
    return {
        "status": "running",
        "name": "Hilbert Series Workbench",
        "version": VERSION,
        "docs": "/docs"
    }
