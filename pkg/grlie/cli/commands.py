"""
Subcommand handlers.

Each handler takes a validated JobConfig and returns a report model; the
entry point renders it. Family names follow the usual notation: P<n>, vP<n>,
vP<n>plus, Pbar4, F<n>, Z<k>, plus the composite names understood by
groups.named_group.
"""

import logging
import re
from typing import Callable, Dict, Tuple

from pydantic import BaseModel

from grlie.cli.exceptions import UsageError
from grlie.models.job import JobConfig
from grlie.models.presentation import load_presentation
from grlie.schemas.responses import (
    RankTableReport,
    ResonanceReport,
    SeriesReport,
    VerdictReport,
)
from grlie.services.alexander.hilbert import default_truncation
from grlie.services.alexander.theta import (
    chen_formula_difference,
    chen_formula_test,
    chen_series,
    holonomy_chen_series,
)
from grlie.services.cohomology.algebra import TwoStepAlgebra, algebra_family, presentation_algebra
from grlie.services.cohomology.poincare import egf_identity_check, poincare_closed
from grlie.services.combinatorics.lcs import lcs_ranks_mobius, lcs_ranks_pbw, lcs_ranks_powersum
from grlie.services.groups.families import family as group_family
from grlie.services.groups.families import named_group, pbar4
from grlie.services.groups.presentation import GroupPresentation
from grlie.services.lie.mildness import mildness_check
from grlie.services.numeric.series import format_polynomial
from grlie.services.resonance.catalog import candidate_components
from grlie.services.resonance.varieties import resonance_report

logger = logging.getLogger(__name__)

DEFAULT_LCS_DEGREE = 10
DEFAULT_MILDNESS_DEGREE = 6
DEFAULT_EGF_ORDER = 7
DEFAULT_FORMULA_DEGREE = 8

_FAMILY_NAME = re.compile(r"^(P|vP|F|Z)(\d+)(plus)?$")

# (family, n) keys of poincare_closed and of the algebra builders
_POINCARE_ALIASES = {"P": "P", "vP": "vP", "vPplus": "vP_plus", "vP_plus": "vP_plus"}
_ALGEBRA_ALIASES = {
    "P": "arnold",
    "vP": "beer_vP",
    "vPplus": "beer_vP_plus",
    "vP_plus": "beer_vP_plus",
    "F": "free",
    "free": "free",
    "Z": "abelian",
    "abelian": "abelian",
}
_GROUP_ALIASES = {
    "vP": "vP",
    "vPplus": "vP_plus",
    "vP_plus": "vP_plus",
    "F": "free",
    "free": "free",
    "Z": "abelian",
    "abelian": "abelian",
}

# published components h_m of R^1_1 used when none are given
KNOWN_COMPONENTS: Dict[str, Dict[int, int]] = {
    "Pbar4": {2: 5},
    "vP3": {6: 1},
    "vP3model": {6: 1},
    "vP4plus": {4: 1},
    "ZZ2": {3: 1},
    "ZZ3": {4: 1},
}


def _split_family(job: JobConfig) -> Tuple[str, int]:
    """(base name, n) from '--family vP --n 3' or '--family vP3'."""
    if not job.family:
        raise UsageError(f"{job.command} needs --family")
    match = _FAMILY_NAME.match(job.family)
    if match and job.n is None:
        base = match.group(1) + ("plus" if match.group(3) else "")
        return base, int(match.group(2))
    if job.n is None:
        raise UsageError(f"family {job.family!r} needs --n")
    return job.family, job.n


def resolve_poincare_family(job: JobConfig) -> Tuple[str, int]:
    base, n = _split_family(job)
    if base not in _POINCARE_ALIASES:
        raise UsageError(f"no Poincaré polynomial for family {base!r}; use P, vP or vPplus")
    return _POINCARE_ALIASES[base], n


def resolve_group(job: JobConfig) -> GroupPresentation:
    """Group from --presentation, or from --family (with --n for the parametrized families)."""
    if job.presentation:
        return load_presentation(job.presentation)
    if not job.family:
        raise UsageError(f"{job.command} needs --family or --presentation")
    if job.n is not None and job.family in _GROUP_ALIASES:
        return group_family(_GROUP_ALIASES[job.family], job.n)
    return named_group(job.family)


def resolve_algebra(job: JobConfig) -> TwoStepAlgebra:
    """Cohomology algebra for --family, or the algebra dual to a presentation's initial forms."""
    if job.presentation:
        return presentation_algebra(load_presentation(job.presentation))
    if job.family == "Pbar4":
        return presentation_algebra(pbar4(), 2)
    base, n = _split_family(job)
    if base not in _ALGEBRA_ALIASES:
        raise UsageError(f"no built-in algebra for family {base!r}")
    return algebra_family(_ALGEBRA_ALIASES[base], n)


def _theta_degree(job: JobConfig, G: GroupPresentation) -> int:
    """Module truncation D for Chen ranks theta_2..theta_(D+2)."""
    if job.max_degree is None:
        return default_truncation(G.ngens)
    if job.max_degree < 2:
        raise UsageError("Chen ranks start at k = 2; use --max-degree >= 2")
    return job.max_degree - 2


def poincare(job: JobConfig) -> SeriesReport:
    family, n = resolve_poincare_family(job)
    coefficients = poincare_closed(family, n)
    return SeriesReport(
        label=f"{job.family}{'' if job.n is None else job.n}",
        variable="b",
        start=0,
        coefficients=coefficients,
        rendered=format_polynomial(coefficients),
    )


def lcs_ranks(job: JobConfig) -> RankTableReport:
    family, n = resolve_poincare_family(job)
    b = poincare_closed(family, n)[1:]
    K = job.max_degree or DEFAULT_LCS_DEGREE
    label = f"{family}{n}"
    methods = {
        "mobius": list(lcs_ranks_mobius(b, K, label).ranks),
        "pbw": list(lcs_ranks_pbw(b, K, label).ranks),
        "powersum": list(lcs_ranks_powersum(b, K, label).ranks),
    }
    report = RankTableReport(label=label, methods=methods)
    if not report.agree:
        logger.warning("LCS rank methods disagree", extra={"family": label})
    return report


def chen_ranks(job: JobConfig) -> SeriesReport:
    G = resolve_group(job)
    theta = chen_series(G, _theta_degree(job, G), job.module_budget, **job.elimination_options())
    return SeriesReport(label=theta.label, variable="theta", start=2, coefficients=list(theta.coefficients))


def holonomy_chen(job: JobConfig) -> SeriesReport:
    G = resolve_group(job)
    theta = holonomy_chen_series(G, _theta_degree(job, G), job.module_budget, **job.elimination_options())
    return SeriesReport(label=theta.label, variable="theta", start=2, coefficients=list(theta.coefficients))


def resonance(job: JobConfig) -> ResonanceReport:
    A = resolve_algebra(job)
    depth = job.depth or 1
    summary = resonance_report(A, depth, candidate_components(A.name, depth))
    return ResonanceReport(label=A.name, **summary.to_dict())


def mildness(job: JobConfig) -> VerdictReport:
    G = resolve_group(job)
    verdict = mildness_check(G, job.max_degree or DEFAULT_MILDNESS_DEGREE, job.hall_budget)
    return VerdictReport(
        label=G.name,
        holds=verdict.mild,
        description=verdict.describe(),
        details={
            "phi": list(verdict.ranks),
            "anick": list(verdict.expected),
            "pbw": list(verdict.observed),
        },
    )


def egf_check(job: JobConfig) -> VerdictReport:
    if job.n is not None:
        raise UsageError("egf-check takes a family without --n")
    family = _POINCARE_ALIASES.get(job.family or "")
    if family is None:
        raise UsageError("egf-check needs --family P, vP or vPplus")
    order = job.max_degree or DEFAULT_EGF_ORDER
    check = egf_identity_check(family, order)
    failed = [n for n, _, _ in check.mismatches]
    description = f"holds through u^{order}" if check.holds else f"fails at n = {failed[0]}"
    return VerdictReport(
        label=family,
        holds=check.holds,
        description=description,
        details={"mismatched_orders": failed},
    )


def chen_formula(job: JobConfig) -> VerdictReport:
    G = resolve_group(job)
    components = job.components or KNOWN_COMPONENTS.get(G.name)
    if not components:
        raise UsageError(f"no components recorded for {G.name!r}; pass --component m=h")
    D = job.max_degree if job.max_degree is not None else DEFAULT_FORMULA_DEGREE
    if D < job.k_min:
        raise UsageError(f"--max-degree must be at least k_min = {job.k_min}")
    theta = chen_series(G, D - 2, job.module_budget, **job.elimination_options())
    verdict = chen_formula_test(theta, components, job.k_min, D)
    return VerdictReport(
        label=G.name,
        holds=verdict.holds,
        description=verdict.describe(),
        details={
            "theta": list(verdict.observed),
            "formula": list(verdict.predicted),
            "difference_from_k2": chen_formula_difference(theta, components, D),
        },
    )


COMMANDS: Dict[str, Callable[[JobConfig], BaseModel]] = {
    "poincare": poincare,
    "lcs-ranks": lcs_ranks,
    "chen-ranks": chen_ranks,
    "holonomy-chen": holonomy_chen,
    "resonance": resonance,
    "mildness": mildness,
    "egf-check": egf_check,
    "chen-formula": chen_formula,
}
