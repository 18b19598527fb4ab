"""
Ramsey fact model.
"""

from pydantic import BaseModel, Field

from minorlab.core.constants import VerificationLevel


class RamseyFact(BaseModel):
    """R(3,k) together with how much of it was machine-checked."""

    k: int = Field(..., ge=3, le=8)
    value: int = Field(..., description="R(3,k)")
    level: VerificationLevel = VerificationLevel.CONSTANT_ONLY
