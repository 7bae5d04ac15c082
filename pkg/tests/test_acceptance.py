"""Acceptance suite: eight end-to-end checks with one status line each.

Run with ``python3 -m pytest tests/test_acceptance.py``; the per-check
status lines are echoed in an "acceptance criteria" section of the
terminal summary (and inline when running with ``-s``).
"""

import json
import random
from fractions import Fraction

from laumut.deformation import build_family, verify_main_theorem
from laumut.exactlat import inverse_unimodular, mat_vec
from laumut.laurent import (
    LaurentPolynomial,
    act_unimodular,
    newton_polytope,
    parse,
)
from laumut.mutation import MutationSpec, apply_mutation, is_mutation
from laumut.mutgraph import (
    canonical_form,
    certificate_between,
    explore_graph,
    mutation_neighbors,
)
from laumut.polyhedra import (
    Cone,
    dual_cone,
    dual_ehrhart_counts,
    from_halfspaces,
    hull,
    is_admissible_pair,
    minkowski_sum,
    verify_admissibility,
)

F = Fraction
F3 = "x^-1*y + 2*y + x*y + y^-1"
F4 = "x^-1 + x^-1*y + y + y^-1 + x*y^-1"


def _report(recorder, number: int, name: str, run):
    try:
        run()
    except BaseException:
        line = f"ACCEPTANCE {number} [fail] {name}"
        recorder(line)
        print(line, flush=True)
        raise
    line = f"ACCEPTANCE {number} [pass] {name}"
    recorder(line)
    print(line, flush=True)


def worked_spec():
    return MutationSpec.from_direction((0, 1), parse("1 + x", rank=2))


def random_unimodular(rng, n):
    if n == 1:
        return ((rng.choice([-1, 1]),),)
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(8):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        for k in range(n):
            m[i][k] += c * m[j][k]
    return tuple(tuple(r) for r in m)


def random_poly(rng, rank, terms, positive=False):
    out = {}
    while len(out) < terms:
        e = tuple(rng.randint(-3, 3) for _ in range(rank))
        c = rng.randint(1, 5) if positive else rng.choice([-2, -1, 1, 2])
        out[e] = F(c)
    return LaurentPolynomial.from_terms(rank, out)


def random_mutable_pair(rng, rank):
    basis = random_unimodular(rng, rank)
    direction = tuple(inverse_unimodular(basis)[-1])
    g = random_poly(rng, rank - 1, terms=rng.randint(1, 3), positive=True)
    spec = MutationSpec.from_adapted(direction, basis, g)
    terms = []
    for level in range(-rng.randint(1, 2), rng.randint(1, 2) + 1):
        if level > 0:
            part = random_poly(rng, rank - 1, terms=rng.randint(1, 2)) * g ** level
        else:
            part = random_poly(rng, rank - 1, terms=rng.randint(1, 3))
        for e, c in part.terms:
            terms.append((e + (level,), c))
    adapted = LaurentPolynomial.from_terms(rank, terms)
    return act_unimodular(adapted, basis), spec


def test_acceptance_1_pipeline_projective_plane_weights_112(acceptance_recorder):
    def run():
        rep = verify_main_theorem(parse(F3), worked_spec())
        assert rep.passed
        assert [c.status for c in rep.checks] == ["pass"] * 6
        rays = {
            tuple(int(c) for c in r)
            for r in rep.data["sigma_infinity_rays_grading_last"]
        }
        assert rays == {(-1, 1, 1), (0, 1, 1), (0, -1, 1), (1, -1, 1)}

    _report(acceptance_recorder, 1, "degenerate-quadric pipeline with reordered cone rays", run)


def test_acceptance_2_exact_mutation_output(acceptance_recorder):
    def run():
        g = apply_mutation(parse(F3), worked_spec())
        assert g == parse("x^-1*y + y + y^-1 + x*y^-1")

    _report(acceptance_recorder, 2, "worked mutation matches the expected polynomial exactly", run)


def test_acceptance_3_degree_seven_example(acceptance_recorder):
    def run():
        g = apply_mutation(parse(F4), worked_spec())
        assert set(g.support()) == {(-1, 0), (-1, 1), (0, -1), (1, -1), (2, -1)}
        assert g.coefficient((1, -1)) == 2
        rep = verify_main_theorem(parse(F4), worked_spec())
        assert rep.passed

    _report(acceptance_recorder, 3, "degree-seven example support and full verification", run)


def test_acceptance_4_dual_count_invariance(acceptance_recorder):
    def run():
        pairs = []
        for text in (F3, F4):
            f = parse(text)
            pairs.append((f, apply_mutation(f, worked_spec())))
        graph = explore_graph(parse(F4), 3)
        for node in graph.nodes.values():
            if node.depth >= 3:
                continue
            for outcome in mutation_neighbors(node.representative):
                if outcome.succeeded:
                    pairs.append((node.representative, outcome.mutated))
        assert len(pairs) >= 10
        for f, g in pairs:
            a = dual_ehrhart_counts(newton_polytope(f), 6)
            b = dual_ehrhart_counts(newton_polytope(g), 6)
            assert a == b
        first = dual_ehrhart_counts(newton_polytope(parse(F3)), 6)
        assert first[0] == 9

    _report(acceptance_recorder, 4, "dual lattice counts agree across every mutation edge", run)


def test_acceptance_5_round_trip_property(acceptance_recorder):
    def run():
        rng = random.Random(101)
        for rank, trials in ((2, 100), (3, 20)):
            for _ in range(trials):
                f, spec = random_mutable_pair(rng, rank)
                ok, _ = is_mutation(f, spec)
                assert ok
                g = apply_mutation(f, spec)
                assert apply_mutation(g, spec.inverse()) == f

    _report(acceptance_recorder, 5, "mutation followed by its inverse is the identity", run)


def test_acceptance_6_geometry_kernel_suite(acceptance_recorder):
    def run():
        rng = random.Random(103)
        for _ in range(200):
            rank = rng.randint(2, 4)
            gens = [
                tuple(rng.randint(-4, 4) for _ in range(rank))
                for _ in range(rng.randint(1, rank + 2))
            ]
            cone = Cone.from_generators(rank, gens)
            assert dual_cone(dual_cone(cone)) == cone
        for _ in range(200):
            rank = rng.randint(2, 3)
            pts = [
                tuple(F(rng.randint(-5, 5)) for _ in range(rank))
                for _ in range(rng.randint(1, rank + 3))
            ]
            p = hull(pts)
            assert from_halfspaces(p.halfspaces, rank) == p
        for _ in range(200):
            rank = rng.randint(1, 3)
            f = random_poly(rng, rank, terms=rng.randint(1, 4), positive=True)
            g = random_poly(rng, rank, terms=rng.randint(1, 4), positive=True)
            s = minkowski_sum(newton_polytope(f), newton_polytope(g))
            assert newton_polytope(f * g) == s

    _report(acceptance_recorder, 6, "double dual, halfspace round trip, product polytopes", run)


def test_acceptance_7_admissibility_verdicts(acceptance_recorder):
    def run():
        tau = [(2, -1), (2, 1)]
        delta01 = hull([(F(0), F(0)), (F(0), F(1))], tau)
        delta_inf = hull([(F(1), F(0))], tau)
        v1 = is_admissible_pair(delta01, delta_inf)
        assert v1.status == "yes"
        assert verify_admissibility(delta01, delta_inf, v1)

        p = hull([(F(1, 2),)])
        q = hull([(F(1, 3),)])
        v2 = is_admissible_pair(p, q)
        assert v2.status == "no" and v2.witness == (1,)
        assert verify_admissibility(p, q, v2)

        r = hull([(F(0),)])
        v3 = is_admissible_pair(p, r)
        assert v3.status == "yes"
        assert verify_admissibility(p, r, v3)

        for text in (F3, F4):
            fam = build_family(parse(text), worked_spec())
            checks = [
                (fam.delta00, fam.delta01, fam.admissibility[0]),
                (fam.delta01, fam.delta_inf, fam.admissibility[1]),
            ]
            for a, b, verdict in checks:
                assert verdict.status == "yes"
                assert verdict.certificate is not None
                assert verify_admissibility(a, b, verdict)

    _report(acceptance_recorder, 7, "worked admissibility verdicts and family certificates", run)


def test_acceptance_8_graph_determinism_and_dedup(acceptance_recorder):
    def run():
        f = parse(F4)
        a = json.dumps(explore_graph(f, 2).to_dict(), sort_keys=True)
        b = json.dumps(explore_graph(f, 2).to_dict(), sort_keys=True)
        assert a == b

        diamond = hull([(F(1), F(0)), (F(0), F(1)), (F(-1), F(0)), (F(0), F(-1))])
        para = hull([(F(1), F(1)), (F(0), F(1)), (F(-1), F(-1)), (F(0), F(-1))])
        fd, md = canonical_form(diamond)
        fp, mp = canonical_form(para)
        assert fd == fp
        cert = certificate_between(para, mp, diamond, md)
        image = {mat_vec(cert, (int(x), int(y))) for x, y in para.vertices}
        assert image == {(int(x), int(y)) for x, y in diamond.vertices}

    _report(acceptance_recorder, 8, "deterministic exploration and canonical-form dedup", run)
