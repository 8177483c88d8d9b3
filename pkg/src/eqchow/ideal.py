"""Homogeneous ideal arithmetic over Z in a weighted-graded polynomial ring.

Every query is answered per graded degree: the degree-d piece of an ideal is
the integer lattice spanned by the coordinate vectors of all products
(monomial x generator) of weighted degree d, inside the free module on the
degree-d monomials.  Lattices are kept in integer row-echelon form and
canonicalized to the (unique) Hermite normal form, so equality of graded
pieces is equality of HNF matrices and membership is an exact integer
triangular solve.

Ideal equality is certified up to a stated degree bound; the bound is part of
every report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from .poly import Mono, Polynomial, mono_str, term_key, var_key, var_weight


class NotHomogeneous(ValueError):
    """Polynomial is not homogeneous in the weighted grading."""


@lru_cache(maxsize=None)
def monomials_of_degree(variables: tuple[str, ...], degree: int) -> tuple[Mono, ...]:
    """All monomials of exact weighted degree, in canonical monomial order.

    ``variables`` must be sorted by the fixed variable order.
    """
    if degree < 0:
        return ()
    if degree == 0:
        return ((),)
    if not variables:
        return ()
    first, rest = variables[0], variables[1:]
    w = var_weight(first)
    out: list[Mono] = []
    for e in range(degree // w, -1, -1):
        for tail in monomials_of_degree(rest, degree - e * w):
            out.append((((first, e),) + tail) if e else tail)
    out.sort(key=term_key)
    return tuple(out)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return x, y, g


class IntegerLattice:
    """Sublattice of Z^dim spanned by inserted integer vectors.

    Rows are kept in integer echelon form (one pivot per column, rows ordered
    by pivot column); ``hnf`` canonicalizes to positive pivots with entries
    above each pivot reduced into [0, pivot), which is unique for the lattice.
    """

    __slots__ = ("dim", "rows", "pivot_cols", "_col_to_row", "_hnf")

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[int]] = []
        self.pivot_cols: list[int] = []
        self._col_to_row: dict[int, int] = {}
        self._hnf: tuple[tuple[int, ...], ...] | None = None

    @property
    def rank(self) -> int:
        return len(self.rows)

    def insert(self, vec: list[int]) -> bool:
        """Add a vector to the lattice; returns True if the lattice changed."""
        if len(vec) != self.dim:
            raise ValueError("vector has the wrong dimension")
        vec = list(vec)
        changed = False
        j = 0
        while True:
            while j < self.dim and not vec[j]:
                j += 1
            if j >= self.dim:
                break
            i = self._col_to_row.get(j)
            if i is None:
                where = 0
                while where < len(self.rows) and self.pivot_cols[where] < j:
                    where += 1
                self.rows.insert(where, vec)
                self.pivot_cols.insert(where, j)
                for col, row_idx in self._col_to_row.items():
                    if row_idx >= where:
                        self._col_to_row[col] = row_idx + 1
                self._col_to_row[j] = where
                changed = True
                break
            row = self.rows[i]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec[j:] = [u - q * v for u, v in zip(vec[j:], row[j:])]
            else:
                x, y, g = _xgcd(a, b)
                ag, bg = a // g, b // g
                new_row = [x * u + y * v for u, v in zip(row[j:], vec[j:])]
                vec[j:] = [ag * v - bg * u for u, v in zip(row[j:], vec[j:])]
                row[j:] = new_row
                changed = True
        if changed:
            self._hnf = None
        return changed

    def _walk(self, vec: list[int], exact: bool) -> list[int] | None:
        out = list(vec)
        for i, j in enumerate(self.pivot_cols):
            v = out[j]
            if not v:
                continue
            p = self.rows[i][j]
            q, rem = divmod(v, p)
            if exact and rem:
                return None
            if q:
                row = self.rows[i]
                out[j:] = [u - q * w for u, w in zip(out[j:], row[j:])]
        return out

    def contains(self, vec: list[int]) -> bool:
        out = self._walk(vec, exact=True)
        return out is not None and not any(out)

    def reduce(self, vec: list[int]) -> list[int]:
        """Canonical coset representative (entries at pivot columns reduced
        into [0, pivot))."""
        return self._walk(vec, exact=False)

    def hnf(self) -> tuple[tuple[int, ...], ...]:
        if self._hnf is None:
            rows = [list(r) for r in self.rows]
            for i, j in enumerate(self.pivot_cols):
                if rows[i][j] < 0:
                    rows[i] = [-u for u in rows[i]]
            for i, j in enumerate(self.pivot_cols):
                p = rows[i][j]
                for a in range(i):
                    q = rows[a][j] // p
                    if q:
                        rows[a][j:] = [
                            u - q * v for u, v in zip(rows[a][j:], rows[i][j:])
                        ]
            self._hnf = tuple(tuple(r) for r in rows)
        return self._hnf


@dataclass(frozen=True)
class GradedPiece:
    """Degree-d slice of an ideal: monomial basis plus the HNF of the lattice
    of ideal elements in that degree."""

    degree: int
    basis: tuple[Mono, ...]
    hnf: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.hnf)


class GradedIdeal:
    """Homogeneous ideal given by generators in a weighted polynomial ring."""

    def __init__(self, variables, generators):
        self.variables: tuple[str, ...] = tuple(
            sorted(set(variables), key=var_key)
        )
        gens = []
        for g in generators:
            if isinstance(g, int):
                g = Polynomial.constant(g)
            if not g:
                continue
            if not g.is_homogeneous():
                raise NotHomogeneous(f"generator is not homogeneous: {g}")
            unknown = set(g.variables()) - set(self.variables)
            if unknown:
                raise ValueError(f"generator uses variables outside the ring: {unknown}")
            gens.append(g)
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._lattices: dict[int, IntegerLattice] = {}

    def __repr__(self) -> str:
        gens = ", ".join(g.to_text() for g in self.generators)
        return f"GradedIdeal[{', '.join(self.variables)}]({gens})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedIdeal):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.generators == other.generators
        )

    def max_generator_degree(self) -> int:
        return max((g.weighted_degree() for g in self.generators), default=0)

    def _basis_index(self, degree: int) -> dict[Mono, int]:
        basis = monomials_of_degree(self.variables, degree)
        return {m: i for i, m in enumerate(basis)}

    def _vector(self, p: Polynomial, index: dict[Mono, int]) -> list[int]:
        vec = [0] * len(index)
        for m, c in p.terms.items():
            vec[index[m]] = c
        return vec

    def lattice(self, degree: int) -> IntegerLattice:
        if degree not in self._lattices:
            basis = monomials_of_degree(self.variables, degree)
            index = {m: i for i, m in enumerate(basis)}
            lat = IntegerLattice(len(basis))
            for g in self.generators:
                e = g.weighted_degree()
                if e > degree:
                    continue
                for m in monomials_of_degree(self.variables, degree - e):
                    lat.insert(self._vector(g.mono_shift(m), index))
            self._lattices[degree] = lat
        return self._lattices[degree]

    def graded_piece(self, degree: int) -> GradedPiece:
        if degree < 0:
            raise ValueError("degree must be non-negative")
        basis = monomials_of_degree(self.variables, degree)
        return GradedPiece(degree, basis, self.lattice(degree).hnf())

    def contains(self, p: Polynomial) -> bool:
        """Exact ideal membership for a homogeneous polynomial."""
        if not p:
            return True
        if not p.is_homogeneous():
            raise NotHomogeneous(f"membership query needs a homogeneous input: {p}")
        if set(p.variables()) - set(self.variables):
            return False
        degree = p.weighted_degree()
        index = self._basis_index(degree)
        return self.lattice(degree).contains(self._vector(p, index))

    def simplified_generators(self, max_degree: int | None = None) -> tuple[Polynomial, ...]:
        """Small generating set reproducing every graded piece up to the bound.

        Walks degrees upward; in each degree keeps only the HNF basis vectors
        not already generated by the output so far, each reduced modulo the
        lattice of the previously kept ones.  Ties inside a degree follow the
        canonical basis order.
        """
        if max_degree is None:
            max_degree = 2 * self.max_generator_degree()
        if max_degree < self.max_generator_degree():
            raise ValueError("bound is below the maximal generator degree")
        kept: list[Polynomial] = []
        for d in range(max_degree + 1):
            piece = self.graded_piece(d)
            if not piece.hnf:
                continue
            basis = piece.basis
            index = {m: i for i, m in enumerate(basis)}
            partial = IntegerLattice(len(basis))
            for g in kept:
                e = g.weighted_degree()
                for m in monomials_of_degree(self.variables, d - e):
                    partial.insert(self._vector(g.mono_shift(m), index))
            for row in piece.hnf:
                row = list(row)
                if not partial.contains(row):
                    red = partial.reduce(row)
                    kept.append(
                        Polynomial({basis[i]: c for i, c in enumerate(red) if c})
                    )
                    partial.insert(red)
        return tuple(kept)


@dataclass
class IdealComparison:
    """Per-degree equality report between two ideals up to a degree bound."""

    equal: bool
    max_degree: int
    first_mismatch: int | None
    per_degree: list[dict] = field(repr=False)

    def to_json_obj(self) -> dict:
        return {
            "equal": self.equal,
            "max_degree": self.max_degree,
            "first_mismatch": self.first_mismatch,
            "per_degree": self.per_degree,
        }


def compare_up_to(lhs: GradedIdeal, rhs: GradedIdeal, max_degree: int) -> IdealComparison:
    """Compare graded pieces degree by degree; mismatching degrees carry the
    two HNF matrices and the monomial basis as the audit trail."""
    if lhs.variables != rhs.variables:
        raise ValueError("ideals live in different ambient rings")
    per_degree: list[dict] = []
    first_mismatch: int | None = None
    for d in range(max_degree + 1):
        a = lhs.graded_piece(d)
        b = rhs.graded_piece(d)
        if a.hnf == b.hnf:
            per_degree.append({"degree": d, "equal": True, "rank": a.rank})
        else:
            if first_mismatch is None:
                first_mismatch = d
            per_degree.append(
                {
                    "degree": d,
                    "equal": False,
                    "basis": [mono_str(m) for m in a.basis],
                    "lhs_hnf": [list(r) for r in a.hnf],
                    "rhs_hnf": [list(r) for r in b.hnf],
                }
            )
    return IdealComparison(
        equal=first_mismatch is None,
        max_degree=max_degree,
        first_mismatch=first_mismatch,
        per_degree=per_degree,
    )


def equal_up_to(lhs: GradedIdeal, rhs: GradedIdeal, max_degree: int) -> bool:
    return compare_up_to(lhs, rhs, max_degree).equal
