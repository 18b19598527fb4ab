"""
Ramsey numbers R(3,k) for 3 <= k <= 8.

Values for k >= 6 are taken as given; k = 3, 4 can be fully re-derived here and
k = 5 has a constructed lower-bound witness.
"""

from minorlab.core.constants import R3_VALUES, VerificationLevel
from minorlab.core.errors import RamseyRangeError
from minorlab.core.logging import get_logger
from minorlab.models.ramsey import RamseyFact

from .verify import LOWER_WITNESS_RANGE, UPPER_CHECK_RANGE, verify_lower_witness, verify_upper_small

logger = get_logger(__name__)


def r3_constant(k: int) -> int:
    """
    R(3,k).

    Args:
        k (int): 3 <= k <= 8.

    Returns:
        int: 6, 9, 14, 18, 23 or 28.

    Raises:
        RamseyRangeError: If k is out of range.
    """
    try:
        return R3_VALUES[k]
    except KeyError:
        raise RamseyRangeError("r3_constant", k, sorted(R3_VALUES)) from None


def ramsey_fact(k: int, verify: bool = False, jobs: int = 1) -> RamseyFact:
    """
    R(3,k) with its verification level.

    Args:
        k (int): 3 <= k <= 8.
        verify (bool): Run the available machine checks; otherwise report constant-only.
        jobs (int): Worker processes for the exhaustive k=3 scan.

    Returns:
        RamseyFact: Value and the strongest level the checks reached.
    """
    value = r3_constant(k)
    level = VerificationLevel.CONSTANT_ONLY
    if verify and k in LOWER_WITNESS_RANGE:
        verify_lower_witness(k)
        level = VerificationLevel.LOWER_WITNESSED
        if k in UPPER_CHECK_RANGE and verify_upper_small(k, jobs=jobs):
            level = VerificationLevel.FULLY_VERIFIED
    logger.info("Ramsey fact", extra={"k": k, "value": value, "level": level.value})
    return RamseyFact(k=k, value=value, level=level)
