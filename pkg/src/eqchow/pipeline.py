"""Pipelines producing the Chow ring presentations.

Three assemblies over the lower layers:

* ``m01``              - the ring of the moduli stack of rational curves with
                         at most one node (rank 3, determinant-twist 1),
* ``reduced_quadrics`` - the rings of stacks of reduced quadrics for general
                         rank n and twist k,
* ``orthogonal``       - the rings of the orthogonal-type classifying stacks,
                         via the closed-form alpha generators and,
                         independently, a total-Chern-series division.

Every pipeline records a replayable provenance log (step name + parameters;
``replay_provenance`` rebuilds the presentation bit-exactly) and runs its
verification checks as it goes.  A failed check raises VerificationFailure
carrying the full per-degree lattice report; mismatches are data, not crashes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .ideal import GradedIdeal, IdealComparison, compare_up_to
from .localization import closed_form_pushforward, veronese_pushforward
from .poly import ONE, Polynomial, ZERO, var
from .symfunc import build_roots, symmetric_to_chern, total_chern_poly


class VerificationFailure(Exception):
    """A pipeline cross-check failed; ``report`` holds the per-degree data."""

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


@dataclass
class RingPresentation:
    """Generators-with-weights plus a graded relation ideal.

    ``provenance`` is an ordered log of construction steps; replaying it with
    ``replay_provenance`` reproduces ``relations`` exactly.  ``verification``
    summarizes the checks the pipeline ran; ``simplified`` is a small
    generating set for the same ideal when the pipeline computed one.
    """

    variables: tuple[tuple[str, int], ...]
    relations: GradedIdeal
    provenance: tuple[dict, ...]
    hyperplane: str | None = None
    max_degree: int | None = None
    verification: tuple[dict, ...] = ()
    simplified: tuple[Polynomial, ...] | None = None

    def display_generators(self) -> tuple[Polynomial, ...]:
        return self.relations.generators

    def to_text(self) -> str:
        vars_part = ", ".join(name for name, _ in self.variables)
        rels = ", ".join(g.to_text() for g in self.display_generators())
        return f"Z[{vars_part}] / ({rels})"

    def to_latex(self) -> str:
        vars_part = ", ".join(
            _latex_name(name) for name, _ in self.variables
        )
        rels = ",\\, ".join(g.to_latex() for g in self.display_generators())
        return f"\\mathbb{{Z}}[{vars_part}]/\\left({rels}\\right)"

    def to_json_obj(self) -> dict:
        return {
            "variables": [{"name": n, "weight": w} for n, w in self.variables],
            "relations": [g.to_text() for g in self.relations.generators],
            "simplified": (
                [g.to_text() for g in self.simplified]
                if self.simplified is not None
                else None
            ),
            "provenance": list(self.provenance),
            "max_degree": self.max_degree,
            "verification": list(self.verification),
        }


def _latex_name(name: str) -> str:
    return var(name).to_latex()


def _chern_variables(n: int) -> tuple[tuple[str, int], ...]:
    return tuple((f"c{i}", i) for i in range(1, n + 1))


def _record_comparison(name: str, cmp: IdealComparison) -> dict:
    return {
        "name": name,
        "equal": cmp.equal,
        "max_degree": cmp.max_degree,
        "first_mismatch": cmp.first_mismatch,
    }


def _require(name: str, cmp: IdealComparison) -> dict:
    if not cmp.equal:
        raise VerificationFailure(
            f"check {name!r} failed at degree {cmp.first_mismatch}",
            {"name": name, **cmp.to_json_obj()},
        )
    return _record_comparison(name, cmp)


# -- generic pipeline steps -----------------------------------------------------


def projective_bundle(roots, hyperplane: str = "H") -> RingPresentation:
    """Presentation of the equivariant ring of P(V): the Chern variables plus
    the hyperplane class, modulo the total Chern relation of V."""
    relation = symmetric_to_chern(total_chern_poly(roots, hyperplane), roots.rank)
    variables = _chern_variables(roots.rank) + ((hyperplane, 1),)
    ideal = GradedIdeal([v for v, _ in variables], [relation])
    step = {
        "step": "projective_bundle",
        "module": roots.label,
        "rank": roots.rank,
        "hyperplane": hyperplane,
    }
    return RingPresentation(
        variables=variables,
        relations=ideal,
        provenance=(step,),
        hyperplane=hyperplane,
    )


def excise_veronese(
    pres: RingPresentation, n: int, method: str = "localization"
) -> RingPresentation:
    """Append the pushforwards of 1, K, ..., K^(n-1) along the squaring
    embedding as new relations (excision of the rank-one locus)."""
    if method not in ("localization", "closed_form"):
        raise ValueError(f"unknown excision method {method!r}")
    if pres.hyperplane is None:
        raise ValueError("presentation has no hyperplane variable")
    push = veronese_pushforward if method == "localization" else closed_form_pushforward
    extra = [push(n, r, pres.hyperplane) for r in range(n)]
    ideal = GradedIdeal(
        pres.relations.variables, list(pres.relations.generators) + extra
    )
    step = {
        "step": "excise_veronese",
        "rank": n,
        "method": method,
        "hyperplane": pres.hyperplane,
    }
    return RingPresentation(
        variables=pres.variables,
        relations=ideal,
        provenance=pres.provenance + (step,),
        hyperplane=pres.hyperplane,
    )


def torsor_quotient(pres: RingPresentation, k: int) -> RingPresentation:
    """Pass to the multiplicative-group torsor: substitute H -> k*c1 in every
    relation, drop relations that become zero, and remove H from the ring."""
    if pres.hyperplane is None:
        raise ValueError("presentation has no hyperplane variable")
    h = pres.hyperplane
    c1 = var("c1")
    new_rels = []
    for g in pres.relations.generators:
        image = g.substitute(h, k * c1)
        if image:
            new_rels.append(image)
    variables = tuple((v, w) for v, w in pres.variables if v != h)
    ideal = GradedIdeal([v for v, _ in variables], new_rels)
    step = {"step": "torsor_quotient", "k": k, "hyperplane": h}
    return RingPresentation(
        variables=variables,
        relations=ideal,
        provenance=pres.provenance + (step,),
        hyperplane=None,
    )


def _drop_redundant_bundle_relation(
    pres: RingPresentation, bundle_image: Polynomial
) -> RingPresentation:
    """Remove the residual projective-bundle relation after checking it is
    contained in the ideal of the remaining ones.  If the relation already
    vanished under the torsor substitution there is nothing to drop."""
    gens = pres.relations.generators
    index = next((i for i, g in enumerate(gens) if g == bundle_image), None)
    if index is None:
        step = {"step": "drop_redundant_bundle_relation", "index": None}
        return RingPresentation(
            variables=pres.variables,
            relations=pres.relations,
            provenance=pres.provenance + (step,),
            hyperplane=pres.hyperplane,
        )
    rest = GradedIdeal(
        pres.relations.variables, gens[:index] + gens[index + 1 :]
    )
    if not rest.contains(gens[index]):
        raise VerificationFailure(
            "projective-bundle relation is not redundant",
            {
                "name": "drop_redundant_bundle_relation",
                "relation": gens[index].to_text(),
            },
        )
    step = {"step": "drop_redundant_bundle_relation", "index": index}
    return RingPresentation(
        variables=pres.variables,
        relations=rest,
        provenance=pres.provenance + (step,),
        hyperplane=pres.hyperplane,
    )


def _simplify(
    pres: RingPresentation, max_degree: int, replace: bool = True
) -> RingPresentation:
    """Compute a small generating set; with ``replace`` the presentation's
    relations become that set, otherwise it is only recorded alongside."""
    simplified = pres.relations.simplified_generators(max_degree)
    step = {
        "step": "simplify_generators",
        "max_degree": max_degree,
        "record_only": not replace,
    }
    ideal = (
        GradedIdeal(pres.relations.variables, simplified)
        if replace
        else pres.relations
    )
    return RingPresentation(
        variables=pres.variables,
        relations=ideal,
        provenance=pres.provenance + (step,),
        hyperplane=pres.hyperplane,
        simplified=simplified,
    )


# -- degree bounds ------------------------------------------------------------------


def default_degree_bound(kind: str, n: int) -> int:
    """Certification horizons, printed in every report: the underlying ideal
    identities hold in all degrees, the artifact certifies a finite range."""
    if kind == "m01":
        return 12
    if kind == "quadrics":
        return 2 * comb(n, 2) + n
    if kind == "orthogonal":
        return 2 * n + 2
    raise ValueError(f"unknown pipeline kind {kind!r}")


# -- the rank-3 node stack ------------------------------------------------------------


def m01(max_degree: int | None = None) -> RingPresentation:
    """Chow ring of the stack of rational curves with at most one node.

    Runs the honest localization pipeline at rank 3 and twist 1, simplifies,
    and certifies the result against the ideal (4c3, 2c1c3, c1^2 c3).
    """
    bound = default_degree_bound("m01", 3) if max_degree is None else max_degree
    pres = projective_bundle(build_roots(3, "Sym2(E*)"), "H")
    pres = excise_veronese(pres, 3, method="localization")
    pres = torsor_quotient(pres, 1)
    c1, c3 = var("c1"), var("c3")
    literal = GradedIdeal(
        pres.relations.variables, [4 * c3, 2 * c1 * c3, c1**2 * c3]
    )
    checks = [
        _require(
            "m01-relations-match-literal-ideal",
            compare_up_to(pres.relations, literal, bound),
        )
    ]
    pres = _simplify(pres, bound)
    pres.max_degree = bound
    pres.verification = tuple(checks)
    return pres


# -- reduced quadrics ------------------------------------------------------------------


def reduced_quadrics(
    n: int, k: int, max_degree: int | None = None
) -> RingPresentation:
    """Chow ring of the stack of reduced quadrics in P^(n-1) with twist k.

    The pipeline relations are cross-checked against the closed generator
    family {2^(n-1-r) (k c1)^r e_top(n,k)}; for even k the single generator
    2^(n-1) e_top(n,k) is verified to give the same ideal.
    """
    if n < 2 or k < 0:
        raise ValueError("need n >= 2 and k >= 0")
    bound = default_degree_bound("quadrics", n) if max_degree is None else max_degree
    pres = projective_bundle(build_roots(n, "Sym2(E*)"), "H")
    bundle_relation = pres.relations.generators[0]
    pres = excise_veronese(pres, n, method="closed_form")
    pres = torsor_quotient(pres, k)
    pres = _drop_redundant_bundle_relation(
        pres, bundle_relation.substitute("H", k * var("c1"))
    )

    from .symfunc import e_top

    c1 = var("c1")
    e = e_top(n, k)
    family = GradedIdeal(
        pres.relations.variables,
        [2 ** (n - 1 - r) * (k * c1) ** r * e for r in range(n)],
    )
    checks = [
        _require(
            "quadrics-relations-match-generator-family",
            compare_up_to(pres.relations, family, bound),
        )
    ]
    if k % 2 == 0:
        single = GradedIdeal(pres.relations.variables, [2 ** (n - 1) * e])
        checks.append(
            _require(
                "even-twist-single-generator",
                compare_up_to(pres.relations, single, bound),
            )
        )
    pres = _simplify(pres, bound, replace=False)
    pres.max_degree = bound
    pres.verification = tuple(checks)
    return pres


# -- orthogonal-type classifying stacks ---------------------------------------------------


@dataclass(frozen=True)
class AlphaFamily:
    """The closed-form relation polynomials for the orthogonal-type rings:
    alpha_i is homogeneous of degree i, with an extra -2c_i term exactly when
    i is odd, so alpha_i(0) is -2c_i for odd i and 0 for even i."""

    rank: int
    polys: tuple[Polynomial, ...]

    def __post_init__(self):
        for i, a in enumerate(self.polys, start=1):
            if a.weighted_degree() != i or not a.is_homogeneous():
                raise ValueError(f"alpha_{i} is not homogeneous of degree {i}")

    def substituted(self, k: int) -> list[Polynomial]:
        c1 = var("c1")
        return [a.substitute("H", k * c1) for a in self.polys]


@lru_cache(maxsize=None)
def alpha_family(n: int, hyperplane: str = "H") -> AlphaFamily:
    """alpha_i(H) = sum_{j<i} binom(n-j, i-j) (-1)^j c_j H^(i-j), minus 2c_i
    for odd i (c_0 = 1)."""
    if n < 2:
        raise ValueError("need n >= 2")
    H = var(hyperplane)
    cs = [ONE] + [var(f"c{j}") for j in range(1, n + 1)]
    polys = []
    for i in range(1, n + 1):
        a = ZERO
        for j in range(i):
            a = a + comb(n - j, i - j) * (-1) ** j * cs[j] * H ** (i - j)
        if i % 2:
            a = a - 2 * cs[i]
        polys.append(a)
    return AlphaFamily(n, tuple(polys))


def chern_series_divide(n: int, hyperplane: str = "H") -> tuple[Polynomial, ...]:
    """First n graded components of the formal series P/R, where P is the
    total Chern class of the twisted dual bundle and R that of the standard
    bundle (c_0 = 1).

    Both series are handled as graded component tuples; the division is the
    degree-ascending recursion beta_i = P_i - sum_{j<i} beta_j R_(i-j).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    H = var(hyperplane)
    cs = [ONE] + [var(f"c{j}") for j in range(1, n + 1)]
    P = ZERO
    for j in range(n + 1):
        P = P + (-1) ** j * cs[j] * (1 + H) ** (n - j)
    P_parts = P.homogeneous_components()
    betas: dict[int, Polynomial] = {0: ONE}
    for i in range(1, n + 1):
        b = P_parts.get(i, ZERO)
        for j in range(i):
            m = i - j
            if m <= n:
                b = b - betas[j] * cs[m]
        betas[i] = b
    return tuple(betas[i] for i in range(1, n + 1))


def orthogonal(
    n: int,
    k: int,
    max_degree: int | None = None,
    cross_check: bool | None = None,
) -> RingPresentation:
    """Chow ring of the classifying stack of the twisted orthogonal group.

    Relations are the alpha_i evaluated at H = k*c1.  With ``cross_check``
    (default for n <= 5) the alpha generators are verified to generate the
    same ideal as the series-division generators before substituting; for
    k = 0 the presentation is certified against (2c1, 2c3, 2c5, ...).
    """
    if n < 2 or k < 0:
        raise ValueError("need n >= 2 and k >= 0")
    bound = default_degree_bound("orthogonal", n) if max_degree is None else max_degree
    if cross_check is None:
        cross_check = n <= 5

    family = alpha_family(n)
    relations = [a for a in family.substituted(k) if a]
    variables = _chern_variables(n)
    ideal = GradedIdeal([v for v, _ in variables], relations)
    step = {"step": "alpha_relations", "rank": n, "k": k}
    pres = RingPresentation(
        variables=variables,
        relations=ideal,
        provenance=(step,),
    )

    checks = []
    if cross_check:
        hvars = [v for v, _ in variables] + ["H"]
        alpha_ideal = GradedIdeal(hvars, family.polys)
        beta_ideal = GradedIdeal(hvars, chern_series_divide(n))
        checks.append(
            _require(
                "alpha-vs-series-division",
                compare_up_to(alpha_ideal, beta_ideal, 2 * n),
            )
        )
    if k == 0:
        odd = [2 * var(f"c{i}") for i in range(1, n + 1, 2)]
        literal = GradedIdeal([v for v, _ in variables], odd)
        checks.append(
            _require(
                "zero-twist-odd-chern-presentation",
                compare_up_to(ideal, literal, bound),
            )
        )
    pres = _simplify(pres, bound, replace=False)
    pres.max_degree = bound
    pres.verification = tuple(checks)
    return pres


# -- provenance replay -----------------------------------------------------------------


def replay_provenance(steps) -> RingPresentation:
    """Rebuild a presentation from its provenance log.

    Only construction steps participate; verification summaries are not part
    of provenance.  The result's relations are bit-exact equal to the original
    presentation's.
    """
    pres: RingPresentation | None = None
    for step in steps:
        name = step["step"]
        if name == "projective_bundle":
            pres = projective_bundle(
                build_roots(step["rank"], step["module"]), step["hyperplane"]
            )
        elif name == "excise_veronese":
            pres = excise_veronese(pres, step["rank"], step["method"])
        elif name == "torsor_quotient":
            pres = torsor_quotient(pres, step["k"])
        elif name == "drop_redundant_bundle_relation":
            gens = pres.relations.generators
            index = step["index"]
            relations = (
                pres.relations
                if index is None
                else GradedIdeal(
                    pres.relations.variables, gens[:index] + gens[index + 1 :]
                )
            )
            pres = RingPresentation(
                variables=pres.variables,
                relations=relations,
                provenance=pres.provenance + (dict(step),),
                hyperplane=pres.hyperplane,
            )
        elif name == "simplify_generators":
            pres = _simplify(
                pres, step["max_degree"], replace=not step.get("record_only")
            )
        elif name == "alpha_relations":
            family = alpha_family(step["rank"])
            relations = [a for a in family.substituted(step["k"]) if a]
            variables = _chern_variables(step["rank"])
            pres = RingPresentation(
                variables=variables,
                relations=GradedIdeal([v for v, _ in variables], relations),
                provenance=(dict(step),),
            )
        else:
            raise ValueError(f"unknown provenance step {name!r}")
    if pres is None:
        raise ValueError("empty provenance log")
    return pres
