"""
Tests for R(3,k) constants and their machine checks.
"""

import pytest

from minorlab.core.constants import VerificationLevel
from minorlab.core.errors import RamseyRangeError
from minorlab.graphcore.graph import has_triangle
from minorlab.invariants.cliques import independence_number
from minorlab.ramsey import verify as verify_module
from minorlab.ramsey.numbers import r3_constant, ramsey_fact
from minorlab.ramsey.verify import circulant, verify_lower_witness, verify_upper_small


@pytest.mark.parametrize("k,value", [(3, 6), (4, 9), (5, 14), (6, 18), (7, 23), (8, 28)])
def test_constants(k: int, value: int):
    """
    Test the R(3,k) table.

    Args:
        k (int): Second argument.
        value (int): Known value.
    """
    assert r3_constant(k) == value
    assert ramsey_fact(k).level == VerificationLevel.CONSTANT_ONLY


@pytest.mark.parametrize("k", [2, 9])
def test_constant_out_of_range(k: int):
    """
    Test k outside 3..8.

    Args:
        k (int): Unsupported value.
    """
    with pytest.raises(RamseyRangeError):
        r3_constant(k)


def test_circulant_13():
    """Test the 13-vertex circulant with offsets 1 and 5."""
    g = circulant(13, [1, -1, 5, -5])
    assert g.edge_count() == 26
    assert not has_triangle(g)
    assert independence_number(g) == 4


@pytest.mark.parametrize("k,n", [(3, 5), (4, 8), (5, 13)])
def test_lower_witnesses(k: int, n: int):
    """
    Test each witness's order, triangle-freeness and independence number.

    Args:
        k (int): Second argument.
        n (int): R(3,k) - 1.
    """
    g = verify_lower_witness(k)
    assert g.n == n
    assert not has_triangle(g)
    assert independence_number(g) == k - 1


def test_upper_k3():
    """Test the exhaustive six-vertex scan."""
    assert verify_upper_small(3)


def test_upper_k3_reports_escape(mocker):
    """Test that one failing shard fails the whole check."""
    mocker.patch.object(verify_module, "run_parallel", return_value=[True, False, True])
    assert not verify_upper_small(3)


@pytest.mark.slow
def test_upper_k4_and_full_level():
    """Test the nine-vertex triangle-free scan and the resulting level."""
    assert verify_upper_small(4)
    assert ramsey_fact(4, verify=True).level == VerificationLevel.FULLY_VERIFIED


def test_fact_levels():
    """Test lower-witnessed and fully-verified levels."""
    assert ramsey_fact(3, verify=True).level == VerificationLevel.FULLY_VERIFIED
    assert ramsey_fact(5, verify=True).level == VerificationLevel.LOWER_WITNESSED
    assert ramsey_fact(7, verify=True).level == VerificationLevel.CONSTANT_ONLY


def test_unsupported_checks():
    """Test k outside the machine-checkable ranges."""
    with pytest.raises(RamseyRangeError):
        verify_upper_small(5)
    with pytest.raises(RamseyRangeError):
        verify_lower_witness(6)
