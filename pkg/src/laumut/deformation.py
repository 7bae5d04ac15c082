"""Flat toric families attached to mutations.

A polynomial f with 0 interior to its Newton polytope spans a cone
sigma over Delta(f) placed at height 1 along a new grading coordinate
(put first). Slicing sigma by the divided-variable functional u at
levels +1, 0, -1 produces polyhedra Delta_0, tau, Delta_inf in the
(grading, kernel) coordinates. A divisor g that makes f mutable splits
Delta_0 into a Minkowski sum Delta_0^0 + Delta_0^1, and regluing the
pieces with opposite signs of the divided coordinate yields a second
cone sigma_inf describing the other end of the family. The central
verification is that sigma_inf equals the cone built the same way from
the mutated polynomial.

Family coordinates are (grading, kernel..., divided); slice coordinates
drop the divided one, so they are simply the first n coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactlat import IntVec, primitive_from_rational, unit_vector
from .laurent import LaurentPolynomial, divide_exact, newton_polytope, slices, to_string
from .mutation import MutationSpec, apply_mutation, is_mutation, _to_adapted
from .polyhedra import (
    AdmissibilityVerdict,
    Cone,
    Polyhedron,
    STATUS_YES,
    cone_over,
    contains_origin_interior,
    dual_ehrhart_counts,
    hull,
    is_admissible_pair,
    is_lattice_polyhedron,
    kernel_slice,
    minkowski_sum,
    slice_project,
    tailcone,
)


class FamilyError(ValueError):
    """A hypothesis needed for the family construction fails.

    ``failures`` lists short machine-readable reasons.
    """

    def __init__(self, message: str, failures: Optional[list] = None):
        super().__init__(message)
        self.failures = failures or []


def general_fiber_is_toric(delta_inf: Polyhedron) -> bool:
    """Whether the -1 slice degenerates to a single lattice point, which
    makes the far fiber itself a toric variety."""
    return len(delta_inf.vertices) == 1 and is_lattice_polyhedron(delta_inf)


def sigma_infinity_from_decomposition(
    tail: Cone,
    delta00: Polyhedron,
    delta01: Polyhedron,
    delta_inf: Polyhedron,
) -> Cone:
    """Cone spanned by tail rays, delta00 at divided height +1, and
    delta01 + delta_inf at divided height -1.

    All three polyhedra must share ``tail`` as tailcone and the pairs
    (delta00, delta01) and (delta01, delta_inf) must be certified
    admissible; otherwise the glued cone need not be the dual of a
    lattice-friendly description and a FamilyError is raised carrying
    the failing verdict.
    """
    rank = tail.rank
    for name, p in (("delta00", delta00), ("delta01", delta01), ("delta_inf", delta_inf)):
        if p.rank != rank:
            raise ValueError(f"{name} has rank {p.rank}, expected {rank}")
        if tailcone(p) != tail:
            raise FamilyError(f"{name} does not have the required tailcone", [f"tailcone:{name}"])
    for name, pair in (
        ("delta00/delta01", (delta00, delta01)),
        ("delta01/delta_inf", (delta01, delta_inf)),
    ):
        verdict = is_admissible_pair(*pair)
        if verdict.status != STATUS_YES:
            err = FamilyError(
                f"admissibility of the pair {name} is not certified: "
                f"{verdict.status} ({verdict.reason})",
                [f"admissibility:{name}"],
            )
            err.verdict = verdict
            raise err
    low = minkowski_sum(delta01, delta_inf)
    gens = [r + (0,) for r in tail.rays]
    gens += [primitive_from_rational(v + (Fraction(1),)) for v in delta00.vertices]
    gens += [primitive_from_rational(v + (Fraction(-1),)) for v in low.vertices]
    return Cone.from_generators(rank + 1, gens)


@dataclass(frozen=True)
class FamilyData:
    """Everything the cone construction produces for one mutation."""

    f: LaurentPolynomial
    spec: MutationSpec
    sigma: Cone  # over Delta(f) in the adapted frame, grading first
    direction: IntVec  # divided-coordinate functional on the family space
    grading: IntVec
    tail: Cone
    delta0: Polyhedron
    delta_inf: Polyhedron
    delta00: Polyhedron
    delta01: Polyhedron
    admissibility: tuple[AdmissibilityVerdict, AdmissibilityVerdict]
    sigma_inf: Cone

    def to_dict(self) -> dict:
        return {
            "polynomial": to_string(self.f),
            "spec": self.spec.to_dict(),
            "sigma": self.sigma.to_dict(),
            "direction": [str(c) for c in self.direction],
            "grading": [str(c) for c in self.grading],
            "tail": self.tail.to_dict(),
            "delta0": self.delta0.to_dict(),
            "delta_inf": self.delta_inf.to_dict(),
            "delta00": self.delta00.to_dict(),
            "delta01": self.delta01.to_dict(),
            "admissibility": [v.to_dict() for v in self.admissibility],
            "sigma_infinity": self.sigma_inf.to_dict(),
            "general_fiber_is_toric": general_fiber_is_toric(self.delta_inf),
        }


def _hypothesis_failures(f: LaurentPolynomial, spec: MutationSpec) -> tuple[list[str], dict]:
    ok, report = is_mutation(f, spec)
    failures = []
    details: dict = {"mutation": report.to_dict()}
    if not ok:
        failures.append("mutation:non-divisible levels " + str(report.failing_levels()))
    nf = newton_polytope(_to_adapted(f, spec))
    origin_ok = contains_origin_interior(nf)
    details["origin_interior"] = origin_ok
    if not origin_ok:
        failures.append("origin:not in the interior of the Newton polytope")
    levels_ok = report.low < 0 < report.high
    details["levels"] = {"low": report.low, "high": report.high, "straddles_zero": levels_ok}
    if not levels_ok:
        failures.append("levels:divided exponents must straddle zero")
    return failures, details


def build_family(f: LaurentPolynomial, spec: MutationSpec) -> FamilyData:
    """Run the whole construction; FamilyError on any hypothesis failure."""
    failures, _ = _hypothesis_failures(f, spec)
    if failures:
        raise FamilyError("; ".join(failures), failures)
    n = spec.rank
    fa = _to_adapted(f, spec)
    sigma = cone_over(newton_polytope(fa), 0)
    u = (0,) * n + (1,)
    grading = unit_vector(n + 1, 0)
    delta0 = slice_project(sigma, u, 1)
    delta_inf = slice_project(sigma, u, -1)
    tail = kernel_slice(sigma, u)
    assert tailcone(delta0) == tail and tailcone(delta_inf) == tail, "slice tailcones must agree with the kernel slice"

    sd = slices(fa, n - 1)
    g = spec.divisor
    pts00 = []
    for level in sorted(sd.slices):
        if level <= 0:
            continue
        q = divide_exact(sd.slices[level], g ** level)
        assert q is not None
        pts00 += [
            (Fraction(1, level),) + tuple(Fraction(c, level) for c in e)
            for e in q.support()
        ]
    delta00 = hull(pts00, tail.rays)
    pts01 = [(Fraction(0),) + tuple(Fraction(c) for c in e) for e in g.support()]
    delta01 = hull(pts01, tail.rays)
    assert minkowski_sum(delta00, delta01) == delta0, "divisor decomposition must rebuild the +1 slice"

    adm = (is_admissible_pair(delta00, delta01), is_admissible_pair(delta01, delta_inf))
    sigma_inf = sigma_infinity_from_decomposition(tail, delta00, delta01, delta_inf)
    return FamilyData(
        f=f,
        spec=spec,
        sigma=sigma,
        direction=u,
        grading=grading,
        tail=tail,
        delta0=delta0,
        delta_inf=delta_inf,
        delta00=delta00,
        delta01=delta01,
        admissibility=adm,
        sigma_inf=sigma_inf,
    )


# -- theorem verification ------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    details: dict

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "details": self.details}


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    checks: tuple[CheckResult, ...]
    data: dict

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "data": self.data,
        }

    @staticmethod
    def from_dict(d: dict) -> "VerificationReport":
        return VerificationReport(
            bool(d["passed"]),
            tuple(CheckResult(c["name"], c["status"], c["details"]) for c in d["checks"]),
            d["data"],
        )


def _grading_last(rays) -> list[list[str]]:
    return [[str(c) for c in r[1:] + (r[0],)] for r in rays]


def verify_main_theorem(f: LaurentPolynomial, spec: MutationSpec, kmax: int = 6) -> VerificationReport:
    """Drive every combinatorial consequence of the construction.

    Checks, in order: the hypotheses; the family construction with its
    admissibility certificates; equality of the glued cone with the cone
    built from the mutated polynomial; preservation of the degree-zero
    slice; the far-fiber classification predicate (evaluated and
    cross-checked, its truth value is data, not a requirement); and
    agreement of the lattice point counts of the polar duals' dilates
    (skipped when a polar dual does not exist).
    """
    checks: list[CheckResult] = []
    data: dict = {"polynomial": to_string(f), "spec": spec.to_dict()}

    failures, details = _hypothesis_failures(f, spec)
    checks.append(CheckResult("hypotheses", "fail" if failures else "pass", {**details, "failures": failures}))
    if failures:
        for name in ("family", "mutation_cone_match", "tailcone_preserved", "fiber_class", "dual_lattice_counts"):
            checks.append(CheckResult(name, "skipped", {"reason": "hypotheses failed"}))
        return VerificationReport(False, tuple(checks), data)

    try:
        family = build_family(f, spec)
        fam_ok = True
        fam_details = {
            "delta0": family.delta0.to_dict(),
            "delta_inf": family.delta_inf.to_dict(),
            "delta00": family.delta00.to_dict(),
            "delta01": family.delta01.to_dict(),
            "tail": family.tail.to_dict(),
            "admissibility": [v.to_dict() for v in family.admissibility],
        }
    except FamilyError as exc:  # pragma: no cover - hypotheses already vetted
        fam_ok = False
        fam_details = {"error": str(exc), "failures": exc.failures}
    checks.append(CheckResult("family", "pass" if fam_ok else "fail", fam_details))
    if not fam_ok:  # pragma: no cover
        for name in ("mutation_cone_match", "tailcone_preserved", "fiber_class", "dual_lattice_counts"):
            checks.append(CheckResult(name, "skipped", {"reason": "family construction failed"}))
        return VerificationReport(False, tuple(checks), data)

    mutated = apply_mutation(f, spec)
    mutated_adapted = _to_adapted(mutated, spec)
    sigma_prime = cone_over(newton_polytope(mutated_adapted), 0)
    data["mutated"] = to_string(mutated)
    data["sigma_rays"] = [[str(c) for c in r] for r in family.sigma.rays]
    data["sigma_infinity_rays"] = [[str(c) for c in r] for r in family.sigma_inf.rays]
    data["sigma_infinity_rays_grading_last"] = _grading_last(family.sigma_inf.rays)
    data["sigma_prime_rays"] = [[str(c) for c in r] for r in sigma_prime.rays]

    cone_ok = family.sigma_inf == sigma_prime
    checks.append(
        CheckResult(
            "mutation_cone_match",
            "pass" if cone_ok else "fail",
            {
                "sigma_infinity_rays": data["sigma_infinity_rays"],
                "sigma_prime_rays": data["sigma_prime_rays"],
            },
        )
    )

    u = family.direction
    tail_prime = kernel_slice(sigma_prime, u)
    tail_ok = tail_prime == family.tail
    checks.append(
        CheckResult(
            "tailcone_preserved",
            "pass" if tail_ok else "fail",
            {
                "tail_rays": [[str(c) for c in r] for r in family.tail.rays],
                "tail_prime_rays": [[str(c) for c in r] for r in tail_prime.rays],
            },
        )
    )

    toric = general_fiber_is_toric(family.delta_inf)
    consistent = toric == (
        len(family.delta_inf.vertices) == 1
        and all(c.denominator == 1 for c in family.delta_inf.vertices[0])
    )
    checks.append(
        CheckResult(
            "fiber_class",
            "pass" if consistent else "fail",
            {
                "general_fiber_is_toric": toric,
                "delta_inf_vertices": [[str(c) for c in v] for v in family.delta_inf.vertices],
            },
        )
    )

    nf = newton_polytope(f)
    nf_mut = newton_polytope(mutated)
    if contains_origin_interior(nf) and contains_origin_interior(nf_mut):
        counts_f = dual_ehrhart_counts(nf, kmax)
        counts_m = dual_ehrhart_counts(nf_mut, kmax)
        counts_ok = counts_f == counts_m
        checks.append(
            CheckResult(
                "dual_lattice_counts",
                "pass" if counts_ok else "fail",
                {"input": counts_f, "mutated": counts_m},
            )
        )
    else:
        checks.append(
            CheckResult(
                "dual_lattice_counts",
                "skipped",
                {"reason": "a polar dual does not exist (origin not interior)"},
            )
        )

    passed = all(c.status != "fail" for c in checks) and all(
        c.status == "pass" for c in checks[:4]
    )
    return VerificationReport(passed, tuple(checks), data)
