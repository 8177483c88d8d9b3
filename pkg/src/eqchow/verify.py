"""The aggregated verification suite behind ``eqchow verify-all``.

Every check is named, timed, and carries its degree bound; the merged report
is deterministic apart from the timings (checks are sorted by name).  The
rank-4 twist-3 ideal-simplification claim is adjudicated as an informational
check: its verdict is recorded either way and never gates the suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import properties
from .ideal import GradedIdeal, compare_up_to, equal_up_to
from .localization import veronese_pushforward
from .pipeline import (
    VerificationFailure,
    alpha_family,
    m01,
    orthogonal,
    reduced_quadrics,
)
from .poly import var
from .symfunc import build_roots, symmetric_to_chern, total_chern_poly

REPORT_SCHEMA_ID = "eqchow-verify-report/1"


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "info"
    seconds: float
    degree_bound: int | None = None
    cases: int | None = None
    detail: dict | None = None

    def to_json_obj(self) -> dict:
        obj: dict = {
            "name": self.name,
            "status": self.status,
            "seconds": round(self.seconds, 3),
        }
        if self.degree_bound is not None:
            obj["degree_bound"] = self.degree_bound
        if self.cases is not None:
            obj["cases"] = self.cases
        if self.detail is not None:
            obj["detail"] = self.detail
        return obj


def _check_m01() -> CheckResult:
    t0 = time.perf_counter()
    try:
        pres = m01()
        rels = [g.to_text() for g in pres.relations.generators]
        ok = rels == ["4*c3", "2*c1*c3", "c1^2*c3"]
        return CheckResult(
            "m01-theorem-presentation",
            "pass" if ok else "fail",
            time.perf_counter() - t0,
            degree_bound=pres.max_degree,
            detail={"relations": rels},
        )
    except VerificationFailure as exc:
        return CheckResult(
            "m01-theorem-presentation",
            "fail",
            time.perf_counter() - t0,
            detail=exc.report,
        )


def _check_pushforward_displays() -> CheckResult:
    t0 = time.perf_counter()
    H, c1, c2, c3 = var("H"), var("c1"), var("c2"), var("c3")
    rhat = H**3 - 2 * c1 * H**2 + (c1**2 + c2) * H + (c3 - c1 * c2)
    expected = [4 * rhat, 2 * H * rhat, H**2 * rhat]
    ok = all(veronese_pushforward(3, r) == expected[r] for r in range(3))
    return CheckResult(
        "pushforward-displays-rank3",
        "pass" if ok else "fail",
        time.perf_counter() - t0,
        cases=3,
    )


def _check_factorization() -> CheckResult:
    t0 = time.perf_counter()
    H, c1, c2, c3 = var("H"), var("c1"), var("c2"), var("c3")
    image = symmetric_to_chern(total_chern_poly(build_roots(3, "Sym2(E*)"), "H"), 3)
    lhs = H**3 - 2 * c1 * H**2 + 4 * c2 * H - 8 * c3
    rhs = H**3 - 2 * c1 * H**2 + (c1**2 + c2) * H + (c3 - c1 * c2)
    ok = image == lhs * rhs
    return CheckResult(
        "hyperplane-relation-factorization-rank3",
        "pass" if ok else "fail",
        time.perf_counter() - t0,
    )


def _check_oracle() -> CheckResult:
    t0 = time.perf_counter()
    cases = properties.oracle_equivalence(6)
    return CheckResult(
        "pushforward-interpolation-oracle",
        "pass",
        time.perf_counter() - t0,
        cases=cases,
    )


def _check_quadrics() -> CheckResult:
    t0 = time.perf_counter()
    try:
        baseline = m01()
        detail = {}
        for n in range(2, 6):
            for k in range(4):
                reduced_quadrics(n, k)
        cross = equal_up_to(
            reduced_quadrics(3, 1).relations, baseline.relations, 12
        )
        detail["rank3-twist1-matches-m01"] = cross
        return CheckResult(
            "quadrics-presentations",
            "pass" if cross else "fail",
            time.perf_counter() - t0,
            cases=16,
            detail=detail,
        )
    except VerificationFailure as exc:
        return CheckResult(
            "quadrics-presentations",
            "fail",
            time.perf_counter() - t0,
            detail=exc.report,
        )


def _check_orthogonal() -> CheckResult:
    t0 = time.perf_counter()
    try:
        for n in range(2, 9):
            orthogonal(n, 0)
        pres = orthogonal(4, 1)
        c1, c3 = var("c1"), var("c3")
        literal = GradedIdeal(
            pres.relations.variables, [2 * c1, c1**2, 2 * c3, c1 * c3]
        )
        simplified = GradedIdeal(pres.relations.variables, pres.simplified)
        ok = equal_up_to(simplified, literal, 10)
        return CheckResult(
            "orthogonal-presentations",
            "pass" if ok else "fail",
            time.perf_counter() - t0,
            degree_bound=10,
            detail={"rank4-twist1-simplified": [g.to_text() for g in pres.simplified]},
        )
    except VerificationFailure as exc:
        return CheckResult(
            "orthogonal-presentations",
            "fail",
            time.perf_counter() - t0,
            detail=exc.report,
        )


def _check_alpha_elimination() -> CheckResult:
    t0 = time.perf_counter()
    H, c1 = var("H"), var("c1")
    family = alpha_family(3)
    a1, a2 = family.polys[0], family.polys[1]
    ok = a2 == H * a1
    for k in range(6):
        ideal = GradedIdeal(("c1", "c2", "c3"), [a1.substitute("H", k * c1)])
        image = a2.substitute("H", k * c1)
        if image:
            ok = ok and ideal.contains(image)
    return CheckResult(
        "alpha-elimination-rank3",
        "pass" if ok else "fail",
        time.perf_counter() - t0,
        cases=7,
    )


def _check_rank4_twist3_remark() -> CheckResult:
    """Informational: compare the raw alpha ideal at rank 4, twist 3 with the
    quoted simplified ideal; the verdict is recorded, not gated."""
    t0 = time.perf_counter()
    c1, c2, c3 = var("c1"), var("c2"), var("c3")
    vs = ("c1", "c2", "c3", "c4")
    raw = GradedIdeal(vs, alpha_family(4).substituted(3))
    quoted = GradedIdeal(
        vs,
        [10 * c1, 5 * c1**2, c1**3 + 6 * c1 * c2 - 2 * c3, c1**2 * c2 - c1 * c3],
    )
    cmp = compare_up_to(raw, quoted, 10)
    mismatch_data = next(
        (entry for entry in cmp.per_degree if not entry["equal"]), None
    )
    return CheckResult(
        "rank4-twist3-remark-adjudication",
        "info",
        time.perf_counter() - t0,
        degree_bound=10,
        detail={
            "equal": cmp.equal,
            "first_mismatch": cmp.first_mismatch,
            "mismatch": mismatch_data,
            "raw_generators": [g.to_text() for g in raw.generators],
            "quoted_generators": [g.to_text() for g in quoted.generators],
        },
    )


def _property_check(name: str, fn) -> CheckResult:
    t0 = time.perf_counter()
    try:
        cases = fn()
        return CheckResult(
            f"property-{name}", "pass", time.perf_counter() - t0, cases=cases
        )
    except AssertionError as exc:
        return CheckResult(
            f"property-{name}",
            "fail",
            time.perf_counter() - t0,
            detail={"error": str(exc)},
        )


def run_verify_all() -> dict:
    """Run every check and return the machine-readable report."""
    results = [
        _check_m01(),
        _check_pushforward_displays(),
        _check_factorization(),
        _check_oracle(),
        _check_quadrics(),
        _check_orthogonal(),
        _check_alpha_elimination(),
        _check_rank4_twist3_remark(),
    ]
    for name, fn in properties.ALL_SUITES.items():
        results.append(_property_check(name, fn))
    results.sort(key=lambda r: r.name)
    all_passed = all(r.status != "fail" for r in results)
    from . import __version__

    return {
        "schema": REPORT_SCHEMA_ID,
        "version": __version__,
        "all_passed": all_passed,
        "checks": [r.to_json_obj() for r in results],
    }
