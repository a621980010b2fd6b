"""Growth-rate estimation endpoint."""

import logging
from fastapi import APIRouter, HTTPException
from app.config import GROWTH_TOLERANCE
from app.schemas import GrowthRequest, result_envelope
from app.services.growth import growth_rate_estimate
from app.services.series import TruncatedSeries

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/growth", tags=["Growth"])


@router.post("")
def estimate_growth(request: GrowthRequest):
    """Estimate limsup λ(n)^(1/n) over the window and classify the growth."""
    try:
        dims = TruncatedSeries.from_coefficients(request.coefficients, len(request.coefficients) - 1)
        estimate = growth_rate_estimate(dims, request.window, request.tolerance or GROWTH_TOLERANCE)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("Growth estimate failed")
        raise HTTPException(status_code=500, detail=f"Growth estimate failed: {str(e)}")
    return result_envelope(
        estimate.model_dump(mode="json"), truncation=dims.truncation_order, window=estimate.window
    )
