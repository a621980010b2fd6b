"""Verification suites and the ledger of past runs."""

import logging
from typing import List, Optional
from fastapi import APIRouter, Depends, HTTPException, Query
from sqlalchemy.orm import Session
from app.database import get_db
from app.models import VerificationRun
from app.schemas import VerificationRunResponse, VerificationRunSummary, VerifyRequest, result_envelope
from app.services.verification import record_run, suite_names, timed_run

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/verify", tags=["Verification"])


@router.get("/suites", response_model=List[str])
def list_suites():
    """Names accepted by POST /api/verify/{suite}."""
    return suite_names()


@router.post("/{suite}")
def run_verification(suite: str, request: Optional[VerifyRequest] = None, db: Session = Depends(get_db)):
    """
    Run a suite and append the result to the ledger.
    A failed suite still returns 200; inspect ``result.passed``.
    """
    request = request or VerifyRequest()
    try:
        report, duration_ms = timed_run(suite, seed=request.seed, **request.suite_parameters())
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("Suite '%s' crashed", suite)
        raise HTTPException(status_code=500, detail=f"Suite '{suite}' failed to run: {str(e)}")

    run = record_run(db, report, duration_ms)
    result = report.model_dump(mode="json")
    result["run_id"] = run.id
    return result_envelope(result, seed=report.seed)


@router.get("/runs", response_model=List[VerificationRunSummary])
def list_runs(
    suite: Optional[str] = Query(None, description="Filter by suite name"),
    failed_only: bool = Query(False),
    limit: int = Query(50, ge=1, le=500),
    db: Session = Depends(get_db),
):
    """Most recent runs first."""
    query = db.query(VerificationRun)
    if suite:
        query = query.filter(VerificationRun.suite == suite)
    if failed_only:
        query = query.filter(VerificationRun.passed.is_(False))
    return query.order_by(VerificationRun.id.desc()).limit(limit).all()


@router.get("/runs/{run_id}", response_model=VerificationRunResponse)
def get_run(run_id: int, db: Session = Depends(get_db)):
    """A single run with all of its checks."""
    run = db.query(VerificationRun).filter(VerificationRun.id == run_id).first()
    if not run:
        raise HTTPException(status_code=404, detail=f"No verification run with id {run_id}")
    return run
