"""Closed-formula endpoints: Witt dimensions, enveloping series, Schreier ranks."""

import logging
from fastapi import APIRouter, HTTPException, Query
from app.config import DEFAULT_TRUNCATION
from app.schemas import EnvelopeRequest, SchreierLieRequest, result_envelope
from app.services.envelope import envelope_from_split
from app.services.schreier import alphabet_schreier_series, color_schreier_rank, group_schreier_rank
from app.services.series import TruncatedSeries
from app.services.witt import color_witt_dim, color_witt_series, witt_dim
from app.services.witt import witt_series as free_lie_witt_series

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api", tags=["Algebra"])


# ── Witt ─────────────────────────────────────────────────────────

@router.get("/witt")
def witt(
    rank: int = Query(..., ge=0, description="Number of even generators r"),
    odd: int = Query(0, ge=0, description="Number of odd generators s"),
    degree: int = Query(..., ge=1, le=2000),
):
    """dim Lₙ of the free color Lie superalgebra on r even and s odd generators."""
    try:
        result = color_witt_dim(rank, odd, degree) if odd else witt_dim(rank, degree)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return result_envelope(result, truncation=degree)


@router.get("/witt/series")
def witt_series(
    rank: int = Query(..., ge=0),
    odd: int = Query(0, ge=0),
    max_degree: int = Query(DEFAULT_TRUNCATION, ge=1, le=2000),
):
    """Σ dim Lₙ tⁿ up to t^N."""
    try:
        if odd:
            result = color_witt_series(rank, odd, max_degree)
        else:
            result = free_lie_witt_series(rank, max_degree)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return result_envelope(list(result.coefficients), truncation=max_degree)


# ── Enveloping algebras ──────────────────────────────────────────

@router.post("/envelope")
def envelope(request: EnvelopeRequest):
    """H(U(L)) from the parity split, or H(u(L)) when a prime is given."""
    try:
        result = envelope_from_split(
            request.even, request.odd, request.truncation,
            prime=request.prime,
            allow_small_characteristic=request.allow_small_characteristic,
        )
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("Envelope computation failed")
        raise HTTPException(status_code=500, detail=f"Envelope computation failed: {str(e)}")
    return result_envelope(list(result.coefficients), truncation=result.truncation_order)


# ── Schreier ─────────────────────────────────────────────────────

@router.get("/schreier/group")
def schreier_group(
    rank: int = Query(..., ge=1),
    index: int = Query(..., ge=1),
):
    """rank(K) = (n - 1)[G : K] + 1."""
    try:
        result = group_schreier_rank(rank, index)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return result_envelope(result)


@router.post("/schreier/lie")
def schreier_lie(request: SchreierLieRequest):
    """H(Z) = (H(X) - 1)·𝓔(H(L/K)) + 1 for a purely even alphabet."""
    try:
        alphabet = request.alphabet.to_alphabet()
        h_lk = TruncatedSeries.from_coefficients(request.quotient_coefficients, request.truncation)
        result = alphabet_schreier_series(alphabet, h_lk)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("Schreier series failed")
        raise HTTPException(status_code=500, detail=f"Schreier series failed: {str(e)}")
    return result_envelope(list(result.coefficients), truncation=result.truncation_order)


@router.get("/schreier/color")
def schreier_color(
    rank_l: int = Query(..., ge=1),
    odd_codim: int = Query(..., ge=0),
):
    """rank(K) = 2^s (rank(L) - 1) + 1 with s the odd codimension."""
    try:
        result = color_schreier_rank(rank_l, odd_codim)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return result_envelope(result)
