"""
Clique separation and separator-claims audit schemas.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from minorlab.core.constants import AuditStatus, ClaimName


class SeparationStructure(BaseModel):
    """A minimum vertex cut T with the two clique components F1 (larger) and F2."""

    t: List[int] = Field(default_factory=list, description="Cut vertices")
    f1: List[int] = Field(..., description="Larger component")
    f2: List[int] = Field(..., description="Smaller component")


class ClaimCheck(BaseModel):
    """One claim evaluated on a separation."""

    claim: ClaimName
    holds: bool
    detail: str = ""
    witness: Optional[int] = Field(None, description="Offending cut vertex, if any")
    construction: Optional[List[int]] = Field(
        None, description="K5plus images built by this claim's construction, when it applies"
    )


class AuditReport(BaseModel):
    """Claims evaluated on a separation, cross-checked by an independent K5plus search."""

    status: AuditStatus
    separation: SeparationStructure
    claims: List[ClaimCheck] = Field(default_factory=list)
    k5plus_copy: Optional[List[int]] = Field(None, description="Induced K5plus found by the matcher")
    predicted_copy: Optional[List[int]] = Field(
        None, description="K5plus built from a claim violation, when one was predicted"
    )
    predicted_by: Optional[ClaimName] = Field(
        None, description="Violated claim whose construction gave predicted_copy"
    )
    discrepancies: List[str] = Field(default_factory=list)
