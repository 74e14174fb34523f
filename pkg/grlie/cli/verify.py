"""
Acceptance suite behind ``grlie verify``.

Every item recomputes a published invariant with the engine and compares it
exactly with the closed form or the recorded value. ``quick`` lowers the
truncation degrees and skips the Gröbner dimension computations so the suite
finishes in a couple of minutes.
"""

import logging
import time
from typing import Callable, Dict, List, Optional, Tuple

from sympy import fibonacci

from grlie.config import settings
from grlie.logging import set_logging_context
from grlie.schemas.responses import VerifyItem, VerifyReport
from grlie.services.alexander.koszul import koszul_apply, koszul_lift
from grlie.services.alexander.module import alexander_presentation, substituted_fox_rows
from grlie.services.alexander.theta import (
    ThetaSeries,
    chen_formula_difference,
    chen_formula_test,
    chen_series,
    free_chen_series,
    free_product_abelian_series,
    holonomy_chen_series,
    known_chen_series,
    theta_closed,
)
from grlie.services.cohomology.algebra import algebra_family, presentation_algebra
from grlie.services.cohomology.poincare import egf_identity_check, poincare_closed
from grlie.services.combinatorics.lcs import (
    enveloping_series,
    lcs_ranks_mobius,
    lcs_ranks_pbw,
    lcs_ranks_powersum,
)
from grlie.services.combinatorics.numbers import lah_closed, special_number, witt
from grlie.services.groebner.ideal import radical_membership
from grlie.services.groups.families import abelian, direct_product, free, named_group, pbar4, vP, vP_plus
from grlie.services.groups.fox import fox_matrix, fundamental_identity_holds, initial_forms
from grlie.services.lie.mildness import mildness_check
from grlie.services.lie.presentation import holonomy_presentation
from grlie.services.lie.quotient import graded_dims
from grlie.services.numeric.elimination import certified_elimination, eliminate
from grlie.services.numeric.exterior import wedge_basis
from grlie.services.numeric.polynomials import poly_ring
from grlie.services.numeric.series import UniRationalFunction, series_expand
from grlie.services.resonance.aomoto import aomoto_matrix, same_row_space
from grlie.services.resonance.catalog import (
    vp3_components,
    vp3_line,
    vp4plus_aomoto_rows,
    vp4plus_equations,
    vp4plus_lines,
)
from grlie.services.resonance.formulas import betti_formula_check, lemma_resonance2_check
from grlie.services.resonance.varieties import (
    resonance_dimension,
    resonance_ideal,
    sample_depth,
    subspace_in_resonance,
)

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, str]

POINCARE_GOLDEN = {
    ("P", 4): [1, 6, 11, 6],
    ("vP", 3): [1, 6, 6],
    ("vP_plus", 4): [1, 6, 7, 1],
    ("vP", 4): [1, 12, 36, 24],
}

LCS_FAMILIES = {
    "P4": [6, 11, 6],
    "vP3": [6, 6],
    "vP3plus": [3, 1],
    "vP4plus": [6, 7, 1],
}

# difference between theta_k(vP_3) and theta_k(F_6), as a series in t^(k-2)
VP3_FORMULA_DIFFERENCE = UniRationalFunction.over_one_minus_t((-6, 0, 0, 6, -5, 1), 6)


def _expand(f: UniRationalFunction, D: int) -> List[int]:
    return [int(c) for c in series_expand(f, D)]


def _mismatch(name: str, got, want) -> str:
    return f"{name}: got {list(got)}, expected {list(want)}"


class VerifySuite:
    """
    Runs the acceptance items and collects one VerifyItem each.

    Chen series computed by one item are cached for the later items that
    reuse them.
    """

    def __init__(self, quick: bool = False, seed: Optional[int] = None, primes: Optional[int] = None):
        self.quick = quick
        self.elimination = {"seed": settings.GRLIE_SEED if seed is None else seed}
        if primes is not None:
            self.elimination["primes"] = primes
        self._theta: Dict[Tuple[str, int], ThetaSeries] = {}

    def items(self) -> List[Tuple[str, Callable[[], Outcome]]]:
        return [
            ("poincare-polynomials", self.poincare_polynomials),
            ("egf-identities", self.egf_identities),
            ("enveloping-series", self.enveloping_series),
            ("lcs-rank-agreement", self.lcs_rank_agreement),
            ("holonomy-hall-dimensions", self.holonomy_hall_dimensions),
            ("mildness", self.mildness),
            ("resonance-vP4plus", self.resonance_vp4plus),
            ("resonance-vP3", self.resonance_vp3),
            ("chen-ranks-free", self.chen_ranks_free),
            ("chen-ranks-vP3", self.chen_ranks_vp3),
            ("chen-ranks-Pbar4", self.chen_ranks_pbar4),
            ("holonomy-chen-ranks", self.holonomy_chen_ranks),
            ("chen-ranks-formula", self.chen_ranks_formula),
            ("property-suites", self.property_suites),
        ]

    def degree(self, full: int, quick: int) -> int:
        return quick if self.quick else full

    def theta(self, group: str, D: int) -> ThetaSeries:
        key = (group, D)
        if key not in self._theta:
            self._theta[key] = chen_series(named_group(group), D, **self.elimination)
        return self._theta[key]

    def run(self, only: Optional[List[str]] = None) -> VerifyReport:
        report = VerifyReport()
        for name, check in self.items():
            if only and name not in only:
                continue
            set_logging_context(command="verify", item=name)
            started = time.perf_counter()
            try:
                passed, detail = check()
            except Exception as exc:
                logger.exception("verification item raised", extra={"item": name})
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            seconds = time.perf_counter() - started
            logger.info("verification item finished", extra={"item": name, "passed": passed, "seconds": seconds})
            report.items.append(VerifyItem(name=name, passed=passed, seconds=seconds, detail=detail))
        return report

    def poincare_polynomials(self) -> Outcome:
        for (family, n), golden in POINCARE_GOLDEN.items():
            got = poincare_closed(family, n)
            if got != golden:
                return False, _mismatch(f"Poin({family}{n})", got, golden)
        for n in range(1, 8):
            lah = [lah_closed(n, n - i) for i in range(n)]
            if lah != poincare_closed("vP", n):
                return False, f"Lah closed form disagrees with the recurrence at n={n}"
        for name, n, golden in (("arnold", 4, (6, 11)), ("beer_vP", 3, (6, 6)), ("beer_vP_plus", 4, (6, 7))):
            A = algebra_family(name, n)
            if (A.b1, A.b2) != golden:
                return False, _mismatch(f"{name}({n}) Betti numbers", (A.b1, A.b2), golden)
        return True, ""

    def egf_identities(self) -> Outcome:
        for family in ("P", "vP", "vP_plus"):
            check = egf_identity_check(family, 7)
            if not check.holds:
                return False, f"{family}: first mismatch at n={check.mismatches[0][0]}"
        return True, "through u^7"

    def enveloping_series(self) -> Outcome:
        got = enveloping_series([3, 1], 10)
        want = [int(fibonacci(2 * i + 2)) for i in range(11)]
        if got != want:
            return False, _mismatch("Hilb(U(gr vP3plus))", got, want)
        for n in range(1, 5):
            got = enveloping_series(poincare_closed("P", n + 1)[1:], 8)
            want = [special_number("stirling2", n + i, n) for i in range(9)]
            if got != want:
                return False, _mismatch(f"Hilb(U(gr P{n + 1}))", got, want)
        return True, ""

    def lcs_rank_agreement(self) -> Outcome:
        K = 10
        for label, b in LCS_FAMILIES.items():
            ranks = [f(b, K, label).ranks for f in (lcs_ranks_mobius, lcs_ranks_pbw, lcs_ranks_powersum)]
            if not ranks[0] == ranks[1] == ranks[2]:
                return False, f"{label}: methods disagree {ranks}"
        for n in range(2, 6):
            got = lcs_ranks_pbw(poincare_closed("P", n)[1:], K).ranks
            want = tuple(sum(witt(s, k) for s in range(1, n)) for k in range(1, K + 1))
            if got != want:
                return False, _mismatch(f"phi(P{n})", got, want)
        return True, f"k <= {K}"

    def holonomy_hall_dimensions(self) -> Outcome:
        for name, n, b, K in (("beer_vP_plus", 3, [3, 1], self.degree(6, 4)), ("beer_vP_plus", 4, [6, 7, 1], self.degree(5, 3))):
            A = algebra_family(name, n)
            got = graded_dims(holonomy_presentation(A), K, **self.elimination).dims
            want = lcs_ranks_pbw(b, K).ranks
            if got != want:
                return False, _mismatch(f"{A.name} Hall dimensions", got, want)
        return True, ""

    def mildness(self) -> Outcome:
        K = self.degree(6, 4)
        for group in ("vP3", "vP3plus", "P3"):
            verdict = mildness_check(named_group(group), K)
            if not verdict.mild:
                return False, f"{group}: {verdict.describe()}"
        for group in ("vP4plus", "vP4"):
            verdict = mildness_check(named_group(group), 3)
            if verdict.first_failure != 3:
                return False, f"{group}: expected failure at degree 3, {verdict.describe()}"
        return True, f"mild through degree {K}"

    def resonance_vp4plus(self) -> Outcome:
        A = algebra_family("beer_vP_plus", 4)
        matrix = aomoto_matrix(A)
        ring = matrix.domain.ring
        if not same_row_space(matrix, vp4plus_aomoto_rows(ring)):
            return False, "Aomoto matrix differs from the printed one"
        lines = vp4plus_lines()
        failed = [name for name, L in lines.items() if not subspace_in_resonance(A, L, 2)]
        if failed:
            return False, f"lines outside R^1_2: {failed}"
        per_line = max(1, self.degree(500, 65) // len(lines))
        for name, L in lines.items():
            sample = sample_depth(A, L, per_line, seed=self.elimination["seed"])
            if sample.max_depth != 2:
                return False, f"line {name} has a point of depth {sample.max_depth}"
        if self.quick:
            return True, "Gröbner dimensions skipped"
        if resonance_dimension(A, 1) != 4:
            return False, "R^1_1 does not have dimension 4"
        I1 = resonance_ideal(A, 1)
        if not all(radical_membership(f, I1) for f in vp4plus_equations(I1.ring)):
            return False, "a printed cubic is not in the radical of the minors ideal"
        if resonance_dimension(A, 2) != 1:
            return False, "R^1_2 does not have dimension 1"
        return True, ""

    def resonance_vp3(self) -> Outcome:
        A = algebra_family("beer_vP", 3)
        if not resonance_ideal(A, 1).is_zero():
            return False, "depth-1 ideal is not zero"
        failed = [name for name, L in vp3_components().items() if not subspace_in_resonance(A, L, 2)]
        if failed:
            return False, f"components outside R^1_2: {failed}"
        if not subspace_in_resonance(A, vp3_line(), 5):
            return False, "the common line is not in R^1_5"
        lemma = lemma_resonance2_check(A, samples=100, seed=self.elimination["seed"])
        if not lemma.holds:
            return False, f"b2 identity fails at {len(lemma.failures)} points"
        return True, f"{lemma.checked} sampled points"

    def chen_ranks_free(self) -> Outcome:
        D = self.degree(8, 4)
        for n in range(2, 6):
            got = chen_series(free(n), D, **self.elimination).coefficients
            series = _expand(free_chen_series(n), D)
            closed = [theta_closed("free", n, k) for k in range(2, D + 3)]
            if list(got) != series or series != closed:
                return False, _mismatch(f"theta(F{n})", got, closed)
        return True, f"D = {D}"

    def chen_ranks_vp3(self) -> Outcome:
        D = self.degree(8, 3)
        got = self.theta("vP3model", D).coefficients
        want = _expand(known_chen_series("vP3"), D)
        if list(got) != want:
            return False, _mismatch("theta(vP3)", got, want)
        return True, f"theta_2..theta_{D + 2}"

    def chen_ranks_pbar4(self) -> Outcome:
        D = self.degree(6, 3)
        got = self.theta("Pbar4", D).coefficients
        want = [4] + [5 * (k - 1) for k in range(3, D + 3)]
        if list(got) != want:
            return False, _mismatch("theta(Pbar4)", got, want)
        return True, ""

    def holonomy_chen_ranks(self) -> Outcome:
        checks = (
            ("vP4plus", vP_plus(4), self.degree(4, 2)),
            ("vP5plus", vP_plus(5), self.degree(2, 1)),
            ("vP6plus", vP_plus(6), 0),
        )
        for name, G, D in checks:
            got = holonomy_chen_series(G, D, **self.elimination).coefficients
            want = _expand(known_chen_series(name), D)
            if list(got) != want:
                return False, _mismatch(f"theta(h({name}))", got, want)
        D = self.degree(4, 2)
        group = self.theta("vP4plus", D).coefficients
        holonomy = holonomy_chen_series(vP_plus(4), D, **self.elimination).coefficients
        if group != holonomy:
            return False, _mismatch("theta(vP4plus) against its holonomy", group, holonomy)
        return True, ""

    def chen_ranks_formula(self) -> Outcome:
        D = self.degree(6, 3)
        if not chen_formula_test(self.theta("Pbar4", D), {2: 5}, 3, D + 2).holds:
            return False, "formula fails for Pbar4"

        D = self.degree(8, 3)
        theta = self.theta("vP3model", D)
        if chen_formula_test(theta, {6: 1}, 3, D + 2).holds:
            return False, "formula unexpectedly holds for vP3"
        difference = chen_formula_difference(theta, {6: 1}, D + 2)
        if difference != _expand(VP3_FORMULA_DIFFERENCE, D):
            return False, _mismatch("vP3 difference series", difference, _expand(VP3_FORMULA_DIFFERENCE, D))

        D = self.degree(4, 2)
        for k in (2, 3):
            n = k + 1
            theta = self.theta(f"ZZ{k}", D)
            if chen_formula_test(theta, {n: 1}, 3, D + 2).holds:
                return False, f"formula unexpectedly holds for ZZ{k}"
            want = _expand(free_product_abelian_series(n) - free_chen_series(n), D)
            if chen_formula_difference(theta, {n: 1}, D + 2) != want:
                return False, f"ZZ{k} discrepancy differs from the closed form"

        D = self.degree(4, 2)
        if chen_formula_test(self.theta("vP4plus", D), {4: 1}, 3, D + 2).holds:
            return False, "formula unexpectedly holds for vP4plus"
        return True, ""

    def property_suites(self) -> Outcome:
        groups = [vP(3), vP_plus(4), vP_plus(5), pbar4(), abelian(3), named_group("vP3model"), named_group("ZZ2")]
        for G in groups:
            if not all(fundamental_identity_holds(row) for row in fox_matrix(G).rows):
                return False, f"Fox fundamental identity fails for {G.name}"

        for n in range(2, 6):
            ring = poly_ring(n)
            for p in range(2, n + 1):
                size = len(wedge_basis(n, p))
                for s in range(size):
                    unit = [ring.one if i == s else ring.zero for i in range(size)]
                    if any(koszul_apply(n, p - 1, koszul_apply(n, p, unit, ring), ring)):
                        return False, f"delta_{p - 1} delta_{p} is nonzero for n={n}"

        for G in (vP_plus(4), pbar4()):
            ring = poly_ring(G.ngens)
            for v in substituted_fox_rows(G):
                if koszul_apply(G.ngens, 2, koszul_lift(v, ring), ring) != v:
                    return False, f"Koszul lift postcondition fails for {G.name}"
            alexander_presentation(G)

        D = self.degree(6, 3)
        product = chen_series(direct_product(abelian(2), free(2)), D, **self.elimination)
        parts = chen_series(abelian(2), D, **self.elimination) + chen_series(free(2), D, **self.elimination)
        if product.coefficients != parts.coefficients:
            return False, _mismatch("theta(Z2 x F2)", product.coefficients, parts.coefficients)

        betti = betti_formula_check(
            algebra_family("beer_vP_plus", 3), algebra_family("free", 2), 100, seed=self.elimination["seed"]
        )
        if not betti.holds:
            return False, f"Aomoto Betti formulas fail at {len(betti.mismatches)} points"

        rows = [{c: v for c, v in enumerate(row) if v} for row in initial_forms(vP(4))]
        certified = certified_elimination(rows, **self.elimination)
        if certified.rank != eliminate(rows).rank or certified.method != "modular":
            return False, "modular elimination disagrees with rational elimination"
        if certified.rank != presentation_algebra(vP(4)).b2:
            return False, "initial-form rank differs from the presentation algebra"
        return True, ""


def run_verify(quick: bool = False, seed: Optional[int] = None, primes: Optional[int] = None) -> VerifyReport:
    """Run every acceptance item and return the per-item report."""
    report = VerifySuite(quick, seed, primes).run()
    logger.info("verification finished", extra={"passed": report.passed, "items": len(report.items)})
    return report
