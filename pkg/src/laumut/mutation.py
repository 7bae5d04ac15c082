"""Mutations of Laurent polynomials.

A mutation divides one variable direction by a polynomial in the
remaining directions: pick a primitive functional u, a unimodular basis
adapted to it (kernel vectors first, then w with u(w) = 1), and a
divisor g in the kernel variables. Writing f = sum_i f_i t^i in the
adapted frame (t the divided variable, levels i = u(e)), the mutation
replaces f_i by f_i / g^i. It is defined exactly when g^i divides f_i
for every positive level, and then it is an involution up to the sign
flip of the divided variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlat import (
    IntMat,
    IntVec,
    adapted_basis,
    content,
    dot,
    inverse_unimodular,
    is_unimodular,
    matrix_columns,
    matrix_from_columns,
    mat_vec,
    primitive_from_rational,
    vsub,
)
from .laurent import LaurentPolynomial, SliceDecomposition, act_unimodular, divide_exact, parse, slices, to_string
from .polyhedra import Polyhedron, contains_origin_interior, polygon_edges


class MutationError(ValueError):
    """A slice at a positive level is not divisible; ``level`` says which."""

    def __init__(self, level: int):
        super().__init__(f"slice at level {level} is not divisible by the divisor power")
        self.level = level


@dataclass(frozen=True)
class MutationSpec:
    """Direction, adapted basis, and divisor of a mutation.

    ``basis`` columns are the kernel basis followed by a vector w with
    u(w) = 1; the divisor lives in the kernel coordinates (rank one
    less). Exponents transport to the adapted frame by the inverse
    basis matrix and back by the basis itself.
    """

    rank: int
    direction: IntVec
    basis: IntMat
    divisor: LaurentPolynomial

    def __post_init__(self):
        n = self.rank
        if len(self.direction) != n:
            raise ValueError("direction length does not match rank")
        if content(self.direction) != 1:
            raise ValueError("mutation direction must be primitive")
        if len(self.basis) != n or any(len(row) != n for row in self.basis):
            raise ValueError("basis must be a square matrix of the full rank")
        if not is_unimodular(self.basis):
            raise ValueError("basis is not unimodular")
        cols = matrix_columns(self.basis)
        pairing = [dot(self.direction, c) for c in cols]
        if pairing != [0] * (n - 1) + [1]:
            raise ValueError("basis is not adapted: direction must kill the kernel columns and pair to 1 with the last")
        if self.divisor.rank != n - 1:
            raise ValueError("divisor must have rank one less than the ambient rank")
        if self.divisor.is_zero():
            raise ValueError("divisor must be nonzero")

    @staticmethod
    def from_direction(direction: Sequence[int], divisor: LaurentPolynomial) -> "MutationSpec":
        """Build the canonical adapted basis for u; the divisor is given in
        the original coordinates and must be supported on ker u."""
        u = tuple(int(c) for c in direction)
        w, kernel = adapted_basis(u)
        basis = matrix_from_columns(list(kernel) + [w])
        if divisor.rank != len(u):
            raise ValueError("divisor rank does not match the direction")
        inv = inverse_unimodular(basis)
        terms = []
        for e, c in divisor.terms:
            if dot(u, e) != 0:
                raise ValueError("divisor is not supported on the kernel of the direction")
            te = mat_vec(inv, e)
            terms.append((te[:-1], c))
        return MutationSpec(len(u), u, basis, LaurentPolynomial.from_terms(len(u) - 1, terms))

    @staticmethod
    def from_adapted(direction: Sequence[int], basis: Sequence[Sequence[int]], divisor: LaurentPolynomial) -> "MutationSpec":
        return MutationSpec(
            len(tuple(direction)),
            tuple(int(c) for c in direction),
            tuple(tuple(int(c) for c in row) for row in basis),
            divisor,
        )

    def inverse(self) -> "MutationSpec":
        """Same divisor, opposite direction; undoes this mutation."""
        cols = list(matrix_columns(self.basis))
        cols[-1] = tuple(-c for c in cols[-1])
        return MutationSpec(
            self.rank,
            tuple(-c for c in self.direction),
            matrix_from_columns(cols),
            self.divisor,
        )

    def divisor_in_ambient(self) -> LaurentPolynomial:
        """The divisor transported back to the original coordinates."""
        terms = [(mat_vec(self.basis, e + (0,)), c) for e, c in self.divisor.terms]
        return LaurentPolynomial.from_terms(self.rank, terms)

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "direction": [str(c) for c in self.direction],
            "basis": [[str(c) for c in row] for row in self.basis],
            "divisor": to_string(self.divisor),
        }

    @staticmethod
    def from_dict(data: dict) -> "MutationSpec":
        rank = int(data["rank"])
        direction = tuple(int(Fraction(c)) for c in data["direction"])
        basis = tuple(tuple(int(Fraction(c)) for c in row) for row in data["basis"])
        divisor = parse(data["divisor"], rank=rank - 1)
        return MutationSpec(rank, direction, basis, divisor)


@dataclass(frozen=True)
class SliceCheck:
    level: int
    divisible: bool


@dataclass(frozen=True)
class MutationCheck:
    """Per-level divisibility report for a polynomial against a spec."""

    low: int
    high: int
    checks: tuple[SliceCheck, ...]

    @property
    def all_divisible(self) -> bool:
        return all(c.divisible for c in self.checks)

    def failing_levels(self) -> list[int]:
        return [c.level for c in self.checks if not c.divisible]

    def to_dict(self) -> dict:
        return {
            "low": self.low,
            "high": self.high,
            "levels": [{"level": c.level, "divisible": c.divisible} for c in self.checks],
            "is_mutation": self.all_divisible,
        }


def _to_adapted(f: LaurentPolynomial, spec: MutationSpec) -> LaurentPolynomial:
    return act_unimodular(f, inverse_unimodular(spec.basis))


def is_mutation(f: LaurentPolynomial, spec: MutationSpec) -> tuple[bool, MutationCheck]:
    """Check divisibility of every positive-level slice; never raises on
    a clean domain failure, the report carries the failing levels."""
    if f.rank != spec.rank:
        raise ValueError("polynomial rank does not match the mutation spec")
    if f.is_zero():
        raise ValueError("cannot mutate the zero polynomial")
    sd = slices(_to_adapted(f, spec), spec.rank - 1)
    checks = []
    for level in sorted(sd.slices):
        if level <= 0:
            continue
        q = divide_exact(sd.slices[level], spec.divisor ** level)
        checks.append(SliceCheck(level, q is not None))
    report = MutationCheck(sd.low, sd.high, tuple(checks))
    return report.all_divisible, report


def apply_mutation(f: LaurentPolynomial, spec: MutationSpec) -> LaurentPolynomial:
    """The mutated polynomial; raises :class:`MutationError` at the first
    non-divisible positive level."""
    if f.rank != spec.rank:
        raise ValueError("polynomial rank does not match the mutation spec")
    if f.is_zero():
        raise ValueError("cannot mutate the zero polynomial")
    sd = slices(_to_adapted(f, spec), spec.rank - 1)
    parts: dict[int, LaurentPolynomial] = {}
    for level in sorted(sd.slices):
        part = sd.slices[level]
        if level > 0:
            q = divide_exact(part, spec.divisor ** level)
            if q is None:
                raise MutationError(level)
            parts[level] = q
        elif level < 0:
            parts[level] = part * spec.divisor ** (-level)
        else:
            parts[level] = part
    rebuilt = SliceDecomposition(spec.rank, spec.rank - 1, parts, sd.low, sd.high).reassemble()
    return act_unimodular(rebuilt, spec.basis)


# -- facet mutations of polygons ----------------------------------------------


@dataclass(frozen=True)
class FacetInfo:
    """One edge of a polygon together with its standard mutation data."""

    index: int
    vertices: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    direction: IntVec  # primitive outward normal
    height: Fraction  # value of the normal on the edge

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "vertices": [[str(c) for c in v] for v in self.vertices],
            "direction": [str(c) for c in self.direction],
            "height": str(self.height),
        }


def polygon_facets(p: Polyhedron) -> list[FacetInfo]:
    """Edges of a rank-2 polytope in ccw order from the lex-min vertex."""
    if p.rank != 2:
        raise ValueError("facet enumeration is defined for rank 2")
    if p.rays:
        raise ValueError("facet enumeration needs a bounded polytope")
    if p.dim() != 2:
        raise ValueError("facet enumeration needs a full-dimensional polygon")
    out = []
    for i, (a, b) in enumerate(polygon_edges(p)):
        d = primitive_from_rational(vsub(b, a))
        normal = (d[1], -d[0])
        out.append(FacetInfo(i, (a, b), normal, Fraction(dot(normal, a))))
    return out


def facet_mutation_spec(p: Polyhedron, facet_index: int) -> MutationSpec:
    """Standard mutation attached to one edge of a lattice polygon.

    The polygon must be a lattice polygon with primitive vertices and
    the origin in its interior. The direction is the primitive outward
    normal of the chosen edge, and the divisor is 1 + t in the
    lex-positive primitive direction t along the edge, so the divided
    variable is the one the edge normal grades by.
    """
    if not contains_origin_interior(p):
        raise ValueError("facet mutations need the origin in the polygon's interior")
    for v in p.vertices:
        if any(c.denominator != 1 for c in v) or content(int(c) for c in v) != 1:
            raise ValueError("facet mutations need primitive lattice vertices")
    facets = polygon_facets(p)
    if not 0 <= facet_index < len(facets):
        raise ValueError(f"facet index out of range 0..{len(facets) - 1}")
    u = facets[facet_index].direction
    divisor = LaurentPolynomial.from_terms(1, {(0,): Fraction(1), (1,): Fraction(1)})
    w, kernel = adapted_basis(u)
    basis = matrix_from_columns(list(kernel) + [w])
    return MutationSpec(2, u, basis, divisor)
