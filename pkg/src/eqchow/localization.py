"""Torus fixed points on P(V) and the pushforward along the squaring embedding
P(E*) -> P(Sym2 E*).

Each root m_j of V gives one fixed point of P(V); the hyperplane class
restricts to -m_j there and the tangent weights are {m_i - m_j : i != j}.
The pushforward of K^r along the squaring map is computed by an explicit
localization sum over the source fixed points, with denominators cleared by
``sum_fractions``; the interpolation shortcut 2^(n-1-r) H^r R(H) is implemented
independently as ``closed_form_pushforward`` and their agreement is a test,
never an assumption.

The sum is evaluated in the l-variable ring and converted to Chern classes only
after the denominators clear; the intermediate sum is not expressible in the
c-variables, symmetry only emerges after summation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .poly import (
    ONE,
    Polynomial,
    StructuredFraction,
    sum_fractions,
    var,
)
from .symfunc import (
    NotSymmetric,
    RepRoots,
    build_roots,
    symmetric_to_chern,
    total_chern_poly,
)


class RepeatedRoots(ValueError):
    """Two roots coincide, so localization denominators would vanish."""


class InternalInconsistency(RuntimeError):
    """A localization sum failed to clear denominators or to be symmetric;
    this indicates an implementation bug, not a user error."""


@dataclass(frozen=True)
class FixedPoint:
    """One torus fixed point of P(V), indexed by the root it corresponds to."""

    index: int
    root: Polynomial
    hyperplane_restriction: Polynomial
    tangent_weights: tuple[Polynomial, ...]


def fixed_points(roots: RepRoots) -> list[FixedPoint]:
    """One fixed point per root; requires pairwise distinct roots."""
    rs = roots.roots
    for i, j in itertools.combinations(range(len(rs)), 2):
        if rs[i] == rs[j]:
            raise RepeatedRoots(f"roots {i} and {j} coincide: {rs[i]}")
    points = []
    for j, m in enumerate(rs):
        weights = tuple(rs[i] - m for i in range(len(rs)) if i != j)
        points.append(FixedPoint(j, m, -m, weights))
    return points


def fundamental_class(roots: RepRoots, index: int, hyperplane: str = "H") -> Polynomial:
    """Equivariant class of the fixed point as a complete intersection of the
    coordinate hyperplanes: prod over the other roots m of (H + m)."""
    rs = roots.roots
    for i, j in itertools.combinations(range(len(rs)), 2):
        if rs[i] == rs[j]:
            raise RepeatedRoots(f"roots {i} and {j} coincide: {rs[i]}")
    if not 0 <= index < len(rs):
        raise IndexError(f"fixed point index {index} out of range")
    x = var(hyperplane)
    result = ONE
    for i, m in enumerate(rs):
        if i != index:
            result = result * (x + m)
    return result


@dataclass(frozen=True)
class VeroneseCorrespondence:
    """Fixed-point matching of the squaring embedding: the source point with
    root l_j maps to the target point with root 2*l_j."""

    rank: int
    source: RepRoots
    target: RepRoots
    point_map: tuple[int, ...]


@lru_cache(maxsize=None)
def veronese_correspondence(n: int) -> VeroneseCorrespondence:
    source = build_roots(n, "E*")
    target = build_roots(n, "Sym2(E*)")
    mapping = []
    for r in source.roots:
        doubled = 2 * r
        mapping.append(target.roots.index(doubled))
    if len(set(mapping)) != len(mapping):
        raise InternalInconsistency("squared roots are not pairwise distinct")
    return VeroneseCorrespondence(n, source, target, tuple(mapping))


@lru_cache(maxsize=None)
def _wedge_total_chern(n: int, hyperplane: str = "H") -> Polynomial:
    """prod over pairs i<j of (H + l_i + l_j), in l-variables."""
    return total_chern_poly(build_roots(n, "Wedge2(E*)"), hyperplane)


@lru_cache(maxsize=None)
def _wedge_total_chern_classes(n: int, hyperplane: str = "H") -> Polynomial:
    return symmetric_to_chern(_wedge_total_chern(n, hyperplane), n)


@lru_cache(maxsize=None)
def veronese_pushforward(n: int, r: int, hyperplane: str = "H") -> Polynomial:
    """Pushforward of K^r to P(Sym2 E*), by explicit localization.

    Sums over the source fixed points P_j the class restriction (-l_j)^r times
    the target point class divided by the tangent weights at P_j.  The target
    point class factors as (prod_{k != j} (H + 2 l_k)) * (prod_{i<j} (H + l_i
    + l_j)); the second factor is independent of j and is multiplied back in
    after the sum, which keeps the summands small (the factorization is itself
    asserted by the test suite against ``fundamental_class``).
    """
    if n < 2 or not 0 <= r <= n - 1:
        raise ValueError("need n >= 2 and 0 <= r <= n-1")
    corr = veronese_correspondence(n)
    points = fixed_points(corr.source)
    x = var(hyperplane)
    fractions = []
    for p in points:
        numerator = Polynomial.constant(1)
        for q in points:
            if q.index != p.index:
                numerator = numerator * (x + 2 * q.root)
        numerator = numerator * p.hyperplane_restriction**r
        fractions.append(StructuredFraction.make(numerator, p.tangent_weights))
    total = sum_fractions(fractions)
    if not total.is_polynomial():
        raise InternalInconsistency(
            f"localization sum kept a denominator: {total}"
        )
    full = total.as_polynomial() * _wedge_total_chern(n, hyperplane)
    try:
        return symmetric_to_chern(full, n)
    except NotSymmetric as exc:
        raise InternalInconsistency(f"localization sum is not symmetric: {exc}")


@lru_cache(maxsize=None)
def pushforward_via_fixed_point_classes(
    n: int, r: int, hyperplane: str = "H"
) -> Polynomial:
    """Unfactored localization sum, using the target fixed-point classes as
    plain fundamental_class products.  Quadratically more expensive than
    ``veronese_pushforward``; used as an independent cross-check at small n.
    """
    if n < 2 or not 0 <= r <= n - 1:
        raise ValueError("need n >= 2 and 0 <= r <= n-1")
    corr = veronese_correspondence(n)
    points = fixed_points(corr.source)
    fractions = []
    for p in points:
        target_index = corr.point_map[p.index]
        numerator = fundamental_class(corr.target, target_index, hyperplane)
        numerator = numerator * p.hyperplane_restriction**r
        fractions.append(StructuredFraction.make(numerator, p.tangent_weights))
    total = sum_fractions(fractions)
    if not total.is_polynomial():
        raise InternalInconsistency(
            f"localization sum kept a denominator: {total}"
        )
    try:
        return symmetric_to_chern(total.as_polynomial(), n)
    except NotSymmetric as exc:
        raise InternalInconsistency(f"localization sum is not symmetric: {exc}")


@lru_cache(maxsize=None)
def closed_form_pushforward(n: int, r: int, hyperplane: str = "H") -> Polynomial:
    """Interpolation shortcut: 2^(n-1-r) * H^r * (Chern image of the pair-sum
    product), bypassing the localization sum entirely."""
    if n < 2 or not 0 <= r <= n - 1:
        raise ValueError("need n >= 2 and 0 <= r <= n-1")
    x = var(hyperplane)
    return 2 ** (n - 1 - r) * x**r * _wedge_total_chern_classes(n, hyperplane)
