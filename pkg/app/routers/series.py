"""Power-series endpoints: Euler transform, its inverse, and 1/(1 - f)."""

import logging
from fastapi import APIRouter, HTTPException
from app.schemas import SeriesRequest, result_envelope
from app.services.series import (
    TruncatedSeries,
    euler_transform,
    geom_inverse,
    inverse_euler_transform,
)

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/series", tags=["Series"])


def _series(request: SeriesRequest) -> TruncatedSeries:
    return TruncatedSeries.from_coefficients(request.coefficients, request.truncation)


@router.post("/euler")
def euler(request: SeriesRequest):
    """Σ aᵢtⁱ ↦ ∏ (1 - tⁱ)^(-aᵢ), truncated at t^N."""
    try:
        result = euler_transform(_series(request))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("Euler transform failed")
        raise HTTPException(status_code=500, detail=f"Euler transform failed: {str(e)}")
    return result_envelope(list(result.coefficients), truncation=result.truncation_order)


@router.post("/inverse-euler")
def inverse_euler(request: SeriesRequest):
    """The integer series a with 𝓔(a) = f; f(0) must be 1."""
    try:
        result = inverse_euler_transform(_series(request))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("Inverse Euler transform failed")
        raise HTTPException(status_code=500, detail=f"Inverse Euler transform failed: {str(e)}")
    return result_envelope(list(result.coefficients), truncation=result.truncation_order)


@router.post("/geom-inverse")
def geometric_inverse(request: SeriesRequest):
    """1/(1 - f) for f with zero constant term."""
    try:
        result = geom_inverse(_series(request))
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("geom_inverse failed")
        raise HTTPException(status_code=500, detail=f"geom_inverse failed: {str(e)}")
    return result_envelope(list(result.coefficients), truncation=result.truncation_order)
