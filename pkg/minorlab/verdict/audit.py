"""
Audit of the separator claims on a clique separation.

For a cut T with clique components F1 (|F1| >= 6) and F2, the claims are:
every v in T has 2..3 neighbours in F1; T is complete to F2; 1 <= |F2| <= 3;
|F1| = 6. Three constructions turn a failing cut vertex v into an induced
K5plus (a K5 with one pendant vertex on its hub):

- few neighbours, 1 <= |N_F1(v)| <= |F1|-4: hub x in N_F1(v), four
  non-neighbours of v in F1, pendant v;
- many neighbours, |N_F1(v)| >= 4: hub v, four of N_F1(v), pendant in N_F2(v);
- large F2, |F2| >= 4: hub v, four of N_F2(v), pendant in N_F1(v).

The audit evaluates each claim, builds and verifies the construction that
applies, and always runs the induced matcher independently so that
disagreements are reported, never fixed.
"""

from typing import List, Optional, Tuple

from minorlab.core.constants import AuditStatus, ClaimName
from minorlab.core.errors import PreconditionError
from minorlab.core.logging import get_logger
from minorlab.graphcore.graph import Graph
from minorlab.invariants.cliques import alpha_at_most_2
from minorlab.models.audit import AuditReport, ClaimCheck, SeparationStructure
from minorlab.patterns.catalog import Pattern, get_pattern
from minorlab.patterns.matcher import Embedding, contains_induced
from minorlab.utils.bits import mask_of, members, popcount

from .separation import find_clique_separation

logger = get_logger(__name__)

AUDIT_MIN_F1 = 6


def _neighbour_copy(g: Graph, v: int, f1: int, f2: int) -> Optional[List[int]]:
    """Pattern-ordered K5plus images from the neighbour count of v in F1."""
    inside = g.adj[v] & f1
    if 1 <= popcount(inside) <= popcount(f1) - 4:
        x = members(inside)[0]
        return [x, *members(f1 & ~g.adj[v])[:4], v]
    if popcount(inside) >= 4 and g.adj[v] & f2:
        return [v, *members(inside)[:4], members(g.adj[v] & f2)[0]]
    return None


def _f2_copy(g: Graph, v: int, f1: int, f2: int) -> Optional[List[int]]:
    """Pattern-ordered K5plus images from v, four F2 neighbours and one F1 neighbour."""
    inside = g.adj[v] & f2
    if popcount(inside) < 4 or not g.adj[v] & f1:
        return None
    return [v, *members(inside)[:4], members(g.adj[v] & f1)[0]]


def _evaluate(g: Graph, sep: SeparationStructure) -> List[ClaimCheck]:
    f1 = mask_of(sep.f1)
    f2 = mask_of(sep.f2)
    checks: List[ClaimCheck] = []

    offender = next(
        (v for v in sep.t if not 2 <= popcount(g.adj[v] & f1) <= 3),
        None,
    )
    detail = ""
    if offender is not None:
        detail = f"|N_F1({offender})| = {popcount(g.adj[offender] & f1)}"
    checks.append(
        ClaimCheck(
            claim=ClaimName.NEIGHBOURS_IN_F1, holds=offender is None, detail=detail, witness=offender
        )
    )

    offender = next((v for v in sep.t if f2 & ~g.adj[v]), None)
    detail = ""
    if offender is not None:
        detail = f"{offender} misses {members(f2 & ~g.adj[offender])} in F2"
    checks.append(
        ClaimCheck(
            claim=ClaimName.T_COMPLETE_TO_F2, holds=offender is None, detail=detail, witness=offender
        )
    )

    f2_size = len(sep.f2)
    checks.append(
        ClaimCheck(claim=ClaimName.F2_SIZE, holds=1 <= f2_size <= 3, detail=f"|F2| = {f2_size}")
    )
    f1_size = len(sep.f1)
    checks.append(
        ClaimCheck(claim=ClaimName.F1_SIZE, holds=f1_size == 6, detail=f"|F1| = {f1_size}")
    )
    return checks


def _construct(
    g: Graph, sep: SeparationStructure, check: ClaimCheck, k5plus: Pattern
) -> Tuple[Optional[List[int]], List[str]]:
    """
    Build the K5plus a claim's construction gives on this separation.

    Claim 1 is tried on its offenders when it fails and on every cut vertex
    when it holds; Claim 3 only when |F2| >= 4. Claims 2 and 4 have no
    construction.

    Returns:
        Tuple[Optional[List[int]], List[str]]: The first verified images, and
        a failure record for every built map that is not an induced K5plus.
    """
    f1 = mask_of(sep.f1)
    f2 = mask_of(sep.f2)
    if check.claim == ClaimName.NEIGHBOURS_IN_F1:
        build = _neighbour_copy
        if check.holds:
            vertices = list(sep.t)
        else:
            vertices = [v for v in sep.t if not 2 <= popcount(g.adj[v] & f1) <= 3]
    elif check.claim == ClaimName.F2_SIZE and len(sep.f2) >= 4:
        build = _f2_copy
        vertices = list(sep.t)
    else:
        return None, []

    failures: List[str] = []
    for v in vertices:
        images = build(g, v, f1, f2)
        if images is None:
            continue
        if Embedding(tuple(images)).verify(g, k5plus):
            return images, failures
        failures.append(
            f"{check.claim.value} construction at {images} is not an induced K5plus"
        )
    return None, failures


def claims_audit(g: Graph) -> AuditReport:
    """
    Evaluate the separator claims on g and cross-check them with the K5plus matcher.

    Status is predicted_copy when a claim fails, the matcher finds an induced
    K5plus, and no record below applies. It is discrepancy when a claim fails
    without a copy, when every claim holds yet a copy exists, when a claim
    holds yet its construction gives a copy, or when a construction does not
    verify. Otherwise it is consistent.

    Args:
        g (Graph): Graph with alpha <= 2 having a clique separation with |F1| >= 6.

    Returns:
        AuditReport: Claim checks with their constructions, copies found and
        discrepancy records.

    Raises:
        PreconditionError: If alpha(g) > 2 or no suitable separation exists.
    """
    if not alpha_at_most_2(g):
        raise PreconditionError("claims_audit needs alpha <= 2", {"n": g.n})
    sep = find_clique_separation(g, min_large_component=AUDIT_MIN_F1)
    if sep is None:
        raise PreconditionError(
            f"no clique separation with |F1| >= {AUDIT_MIN_F1}", {"n": g.n}
        )

    k5plus = get_pattern("K5plus")
    checks = _evaluate(g, sep)
    found = contains_induced(g, k5plus)
    found_copy = list(found.images) if found is not None else None

    discrepancies: List[str] = []
    predicted = None
    predicted_by = None
    for check in checks:
        images, failures = _construct(g, sep, check, k5plus)
        check.construction = images
        discrepancies.extend(failures)
        if images is None:
            continue
        if check.holds:
            discrepancies.append(
                f"{check.claim.value} holds yet its construction gives K5plus at {images}"
            )
        elif predicted is None:
            predicted = images
            predicted_by = check.claim

    violated = [c for c in checks if not c.holds]
    if violated and found_copy is None:
        for c in violated:
            discrepancies.append(f"{c.claim.value} violated ({c.detail}) but no induced K5plus exists")
    if not violated and found_copy is not None:
        discrepancies.append(
            f"all claims hold but the matcher found an induced K5plus at {found_copy}"
        )

    if discrepancies:
        status = AuditStatus.DISCREPANCY
    elif violated:
        status = AuditStatus.PREDICTED_COPY
    else:
        status = AuditStatus.CONSISTENT

    logger.info(
        "Claims audit",
        extra={
            "n": g.n,
            "status": status.value,
            "cut": sep.t,
            "violations": len(violated),
            "predicted_by": predicted_by.value if predicted_by is not None else None,
        },
    )
    return AuditReport(
        status=status,
        separation=sep,
        claims=checks,
        k5plus_copy=found_copy,
        predicted_copy=predicted,
        predicted_by=predicted_by,
        discrepancies=discrepancies,
    )
