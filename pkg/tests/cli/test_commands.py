"""
Tests for the subcommand handlers.

This module contains tests for family resolution and for the reports the
cheaper subcommands produce.
"""

import pytest

from grlie.cli.commands import (
    KNOWN_COMPONENTS,
    chen_ranks,
    egf_check,
    lcs_ranks,
    mildness,
    poincare,
    resolve_algebra,
    resolve_group,
    resolve_poincare_family,
    resonance,
)
from grlie.cli.exceptions import UsageError
from grlie.models.job import JobConfig
from grlie.services.groups.exceptions import UnknownFamilyError

def job(command: str, **kwargs) -> JobConfig:
    return JobConfig(command=command, **kwargs)

@pytest.mark.parametrize("kwargs,expected", [
    ({"family": "vP", "n": 3}, ("vP", 3)),
    ({"family": "vP3"}, ("vP", 3)),
    ({"family": "vP4plus"}, ("vP_plus", 4)),
    ({"family": "vPplus", "n": 5}, ("vP_plus", 5)),
    ({"family": "P", "n": 4}, ("P", 4)),
])
def test_resolve_poincare_family(kwargs, expected):
    """Test short and long family spellings."""
    assert resolve_poincare_family(job("poincare", **kwargs)) == expected

def test_resolve_poincare_family_errors():
    """Test missing and unknown families."""
    with pytest.raises(UsageError):
        resolve_poincare_family(job("poincare"))
    with pytest.raises(UsageError):
        resolve_poincare_family(job("poincare", family="vP"))
    with pytest.raises(UsageError):
        resolve_poincare_family(job("poincare", family="F3"))

def test_resolve_group():
    """Test groups by parametrized family and by name."""
    assert resolve_group(job("chen-ranks", family="vP", n=3)).ngens == 6
    assert resolve_group(job("chen-ranks", family="F", n=3)).ngens == 3
    assert resolve_group(job("chen-ranks", family="Pbar4")).name == "Pbar4"
    with pytest.raises(UnknownFamilyError):
        resolve_group(job("chen-ranks", family="Q7"))
    with pytest.raises(UsageError):
        resolve_group(job("chen-ranks"))

def test_resolve_algebra():
    """Test algebras for families and for Pbar4."""
    assert resolve_algebra(job("resonance", family="vP3")).b1 == 6
    assert resolve_algebra(job("resonance", family="Z", n=2)).b2 == 1
    assert resolve_algebra(job("resonance", family="Pbar4")).b1 == 5
    with pytest.raises(UsageError):
        resolve_algebra(job("resonance", family="Pbar", n=4))

def test_poincare_report():
    """Test the Poincaré polynomial of vP_3."""
    report = poincare(job("poincare", family="vP", n=3))
    assert report.coefficients == [1, 6, 6]
    assert report.rendered == "1 + 6t + 6t^2"
    assert report.label == "vP3"

def test_lcs_ranks_report():
    """Test that the three extractions agree for vP_3^+."""
    report = lcs_ranks(job("lcs-ranks", family="vP3plus", max_degree=4))
    assert report.agree
    assert report.methods["pbw"] == [3, 2, 5, 10]

def test_chen_ranks_of_free_group():
    """Test theta_2..theta_4 of F_3 against (k - 1) C(k + 1, k)."""
    report = chen_ranks(job("chen-ranks", family="F3", max_degree=4))
    assert report.start == 2
    assert report.coefficients == [3, 8, 15]

def test_chen_ranks_rejects_low_degree():
    """Test that Chen ranks start at k = 2."""
    with pytest.raises(UsageError):
        chen_ranks(job("chen-ranks", family="F2", max_degree=1))

def test_resonance_report():
    """Test the depth-2 resonance of vP_3^+."""
    report = resonance(job("resonance", family="vPplus", n=3, depth=2))
    assert report.label == "vP3plus"
    assert report.dimension == 1
    assert len(report.ideal_generators) == 2

def test_mildness_report():
    """Test that F_2 x Z is mild."""
    report = mildness(job("mildness", family="P3", max_degree=4))
    assert report.holds
    assert report.description == "mild up to 4"

def test_egf_check_report():
    """Test the exponential generating function check."""
    report = egf_check(job("egf-check", family="vP", max_degree=5))
    assert report.holds
    assert report.description == "holds through u^5"
    with pytest.raises(UsageError):
        egf_check(job("egf-check", family="vP", n=3))
    with pytest.raises(UsageError):
        egf_check(job("egf-check", family="F"))

def test_known_components():
    """Test the recorded components used by chen-formula."""
    assert KNOWN_COMPONENTS["Pbar4"] == {2: 5}
    assert KNOWN_COMPONENTS["vP3"] == {6: 1}
