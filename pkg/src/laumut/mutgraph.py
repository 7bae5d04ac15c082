"""Mutation graphs of lattice polygons.

Nodes are GL(2,Z)-classes of Newton polytopes, represented by a
canonical form: over every (vertex, adjacent edge) flag of the polygon,
in both orientations and with both determinant signs, build the
unimodular map sending the edge's primitive direction to e1 and
shearing the first off-axis image vertex into the fundamental strip
0 <= x < |y|; the canonical form is the lexicographically smallest
image vertex cycle. Two polygons get the same form iff some unimodular
map carries one onto the other, and the composite of the two canonical
maps is exactly such a map, kept as a merge certificate.

Exploration is breadth-first over facet mutations, deterministic, with
divisibility failures recorded rather than raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exactlat import (
    IntMat,
    IntVec,
    content,
    inverse_unimodular,
    mat_mul,
    mat_vec,
    primitive_vector,
    vsub,
    xgcd,
)
from .laurent import LaurentPolynomial, newton_polytope, to_string
from .mutation import (
    FacetInfo,
    MutationSpec,
    apply_mutation,
    facet_mutation_spec,
    is_mutation,
    polygon_facets,
)
from .polyhedra import Polyhedron, contains_origin_interior, vertex_cycle


def validate_mutable_polygon(p: Polyhedron) -> None:
    """Raise unless p is a lattice polygon with primitive vertices and
    the origin in its interior (the setting where every facet carries a
    standard mutation attempt)."""
    if p.rank != 2:
        raise ValueError("mutation graphs are defined for rank 2")
    if not contains_origin_interior(p):
        raise ValueError("polygon must contain the origin in its interior")
    for v in p.vertices:
        if any(c.denominator != 1 for c in v):
            raise ValueError("polygon must be a lattice polygon")
        if content(int(c) for c in v) != 1:
            raise ValueError("polygon vertices must be primitive")


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical vertex cycle of a polygon's unimodular class."""

    vertices: tuple[IntVec, ...]

    def key(self) -> str:
        return ";".join(f"{x},{y}" for x, y in self.vertices)


def canonical_form(p: Polyhedron) -> tuple[CanonicalForm, IntMat]:
    """Canonical form and a unimodular map carrying p onto it."""
    if p.rank != 2:
        raise ValueError("canonical forms are defined for rank 2")
    if p.rays:
        raise ValueError("canonical forms need a bounded polytope")
    if any(c.denominator != 1 for v in p.vertices for c in v):
        raise ValueError("canonical forms need a lattice polygon")
    if p.dim() != 2:
        raise ValueError("canonical forms need a full-dimensional polygon")
    cyc = [tuple(int(c) for c in v) for v in vertex_cycle(p)]
    m = len(cyc)
    best: Optional[tuple[IntVec, ...]] = None
    best_map: Optional[IntMat] = None
    for seq0 in (cyc, list(reversed(cyc))):
        for start in range(m):
            seq = seq0[start:] + seq0[:start]
            d = primitive_vector(vsub(seq[1], seq[0]))
            _, alpha, beta = xgcd(d[0], d[1])
            for sign in (1, -1):
                base = ((alpha, beta), (-sign * d[1], sign * d[0]))
                img = [mat_vec(base, v) for v in seq]
                j = next(i for i, w in enumerate(img) if w[1])
                x, y = img[j]
                t = (x % abs(y) - x) // y
                shear = ((1, t), (0, 1))
                cand = tuple(mat_vec(shear, w) for w in img)
                if best is None or cand < best:
                    best = cand
                    best_map = mat_mul(shear, base)
    assert best is not None and best_map is not None
    return CanonicalForm(best), best_map


def certificate_between(
    p: Polyhedron, p_map: IntMat, q: Polyhedron, q_map: IntMat
) -> IntMat:
    """Unimodular map carrying p's vertex set onto q's, given canonical
    maps with equal forms. Verified before returning."""
    cert = mat_mul(inverse_unimodular(q_map), p_map)
    src = {tuple(int(c) for c in v) for v in p.vertices}
    dst = {tuple(int(c) for c in v) for v in q.vertices}
    if {mat_vec(cert, v) for v in src} != dst:
        raise AssertionError("canonical maps do not induce a vertex bijection")
    return cert


# -- neighbors and exploration --------------------------------------------------


@dataclass(frozen=True)
class NeighborOutcome:
    facet: FacetInfo
    spec: MutationSpec
    succeeded: bool
    mutated: Optional[LaurentPolynomial]
    failing_levels: tuple[int, ...]


def mutation_neighbors(f: LaurentPolynomial) -> list[NeighborOutcome]:
    """Attempt the standard mutation at every facet of Delta(f).

    Divisibility failures are outcomes, not errors; polygon-level
    precondition violations (origin, primitivity) do raise.
    """
    p = newton_polytope(f)
    validate_mutable_polygon(p)
    out = []
    for info in polygon_facets(p):
        spec = facet_mutation_spec(p, info.index)
        ok, report = is_mutation(f, spec)
        mutated = apply_mutation(f, spec) if ok else None
        out.append(NeighborOutcome(info, spec, ok, mutated, tuple(report.failing_levels())))
    return out


@dataclass(frozen=True)
class GraphNode:
    key: str
    vertices: tuple[IntVec, ...]  # canonical cycle
    representative: LaurentPolynomial
    transform: IntMat  # maps Delta(representative) onto the canonical cycle
    depth: int


@dataclass(frozen=True)
class GraphEdge:
    source: str
    target: str
    facet_index: int
    direction: IntVec
    divisor: str


@dataclass(frozen=True)
class FailureRecord:
    node: str
    facet_index: int
    direction: IntVec
    reason: str
    failing_levels: tuple[int, ...]


@dataclass(frozen=True)
class MergeRecord:
    node: str
    arrived_from: str
    facet_index: int
    certificate: IntMat  # maps the rediscovered polytope onto the node representative's


@dataclass
class MutationGraph:
    depth: int
    nodes: dict[str, GraphNode] = field(default_factory=dict)
    edges: list[GraphEdge] = field(default_factory=list)
    failures: list[FailureRecord] = field(default_factory=list)
    merges: list[MergeRecord] = field(default_factory=list)
    frontier: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "nodes": [
                {
                    "key": n.key,
                    "vertices": [[str(c) for c in v] for v in n.vertices],
                    "representative": to_string(n.representative),
                    "depth": n.depth,
                }
                for n in sorted(self.nodes.values(), key=lambda n: n.key)
            ],
            "edges": [
                {
                    "source": e.source,
                    "target": e.target,
                    "facet_index": e.facet_index,
                    "direction": [str(c) for c in e.direction],
                    "divisor": e.divisor,
                }
                for e in self.edges
            ],
            "failures": [
                {
                    "node": r.node,
                    "facet_index": r.facet_index,
                    "direction": [str(c) for c in r.direction],
                    "reason": r.reason,
                    "failing_levels": list(r.failing_levels),
                }
                for r in self.failures
            ],
            "merges": [
                {
                    "node": m.node,
                    "arrived_from": m.arrived_from,
                    "facet_index": m.facet_index,
                    "certificate": [[str(c) for c in row] for row in m.certificate],
                }
                for m in self.merges
            ],
            "frontier": list(self.frontier),
        }

    def to_dot(self) -> str:
        lines = ["digraph mutations {", "  node [shape=box];"]
        for n in sorted(self.nodes.values(), key=lambda n: n.key):
            label = " ".join(f"({x},{y})" for x, y in n.vertices)
            lines.append(f'  "{n.key}" [label="{label}"];')
        for e in self.edges:
            lines.append(f'  "{e.source}" -> "{e.target}" [label="facet {e.facet_index}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def explore_graph(f: LaurentPolynomial, depth: int) -> MutationGraph:
    """Breadth-first mutation closure up to the given depth.

    Nodes merge by canonical form; the first polynomial reaching a form
    becomes its representative and later arrivals leave a verified
    certificate. Output is deterministic for a fixed input.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    p0 = newton_polytope(f)
    validate_mutable_polygon(p0)
    form0, map0 = canonical_form(p0)
    graph = MutationGraph(depth)
    key0 = form0.key()
    graph.nodes[key0] = GraphNode(key0, form0.vertices, f, map0, 0)
    frontier = [key0]
    for level in range(depth):
        discovered: list[str] = []
        for key in frontier:
            node = graph.nodes[key]
            for res in mutation_neighbors(node.representative):
                if not res.succeeded:
                    graph.failures.append(
                        FailureRecord(
                            key,
                            res.facet.index,
                            res.facet.direction,
                            "slice not divisible by the divisor power",
                            res.failing_levels,
                        )
                    )
                    continue
                q = newton_polytope(res.mutated)
                try:
                    validate_mutable_polygon(q)
                except ValueError as exc:
                    graph.failures.append(
                        FailureRecord(
                            key,
                            res.facet.index,
                            res.facet.direction,
                            f"mutated polytope not explorable: {exc}",
                            (),
                        )
                    )
                    continue
                qform, qmap = canonical_form(q)
                tkey = qform.key()
                if tkey not in graph.nodes:
                    graph.nodes[tkey] = GraphNode(tkey, qform.vertices, res.mutated, qmap, level + 1)
                    discovered.append(tkey)
                else:
                    known = graph.nodes[tkey]
                    cert = certificate_between(
                        q, qmap, newton_polytope(known.representative), known.transform
                    )
                    graph.merges.append(MergeRecord(tkey, key, res.facet.index, cert))
                graph.edges.append(
                    GraphEdge(
                        key,
                        tkey,
                        res.facet.index,
                        res.facet.direction,
                        to_string(res.spec.divisor_in_ambient()),
                    )
                )
        frontier = discovered
    graph.frontier = frontier
    return graph
