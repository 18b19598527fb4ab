"""
Result models for clique-minor searches.
"""

from typing import Optional

from pydantic import BaseModel, Field

from minorlab.core.constants import SearchMode, SearchStatus

from .certificates import MinorCertificate


class MinorSearchResult(BaseModel):
    """Outcome of one hadwiger_at_least call."""

    status: SearchStatus
    target: int = Field(..., ge=0, description="Requested clique-minor order t")
    mode: SearchMode
    certificate: Optional[MinorCertificate] = None
    nodes: int = Field(0, ge=0, description="Search nodes or heuristic restarts spent")
    reason: Optional[str] = None

    @property
    def found(self) -> bool:
        """Whether a K_t model was found."""
        return self.status == SearchStatus.FOUND
