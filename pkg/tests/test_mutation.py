import random
from fractions import Fraction

import pytest

from laumut.exactlat import (
    inverse_unimodular,
    mat_vec,
    matrix_columns,
    matrix_from_columns,
    transpose,
)
from laumut.laurent import (
    LaurentPolynomial,
    act_unimodular,
    divide_exact,
    newton_polytope,
    parse,
    slices,
    to_string,
)
from laumut.mutation import (
    MutationCheck,
    MutationError,
    MutationSpec,
    apply_mutation,
    facet_mutation_spec,
    is_mutation,
    polygon_facets,
)
from laumut.polyhedra import hull, minkowski_sum


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
        out[e] = Fraction(c)
    return LaurentPolynomial.from_terms(rank, out)


def random_mutable_pair(rng, rank):
    """A polynomial guaranteed divisible at its positive levels, plus its spec.

    Built in the adapted frame: level i > 0 carries q_i * g^i, the other
    levels are arbitrary, then everything transports through a random
    unimodular basis.
    """
    basis = random_unimodular(rng, rank)
    inv = inverse_unimodular(basis)
    direction = tuple(inv[-1])
    g = random_poly(rng, rank - 1, terms=rng.randint(1, 3), positive=True)
    spec = MutationSpec.from_adapted(direction, basis, g)
    high = rng.randint(1, 2)
    low = -rng.randint(1, 2)
    terms = []
    for level in range(low, high + 1):
        if level > 0:
            part = random_poly(rng, rank - 1, terms=rng.randint(1, 2)) * g ** level
        elif rng.random() < 0.8 or level == low:
            part = random_poly(rng, rank - 1, terms=rng.randint(1, 3))
        else:
            continue
        for e, c in part.terms:
            terms.append((e + (level,), c))
    adapted = LaurentPolynomial.from_terms(rank, terms)
    return act_unimodular(adapted, basis), spec


def test_from_direction_worked_example():
    spec = MutationSpec.from_direction((0, 1), parse("1 + x", rank=2))
    assert spec.direction == (0, 1)
    assert spec.divisor == parse("1 + x", rank=1)
    assert spec.divisor_in_ambient() == parse("1 + x", rank=2)
    cols = matrix_columns(spec.basis)
    # kernel column pairs to zero, last column to one
    assert sum(a * b for a, b in zip((0, 1), cols[0])) == 0
    assert sum(a * b for a, b in zip((0, 1), cols[1])) == 1


def test_from_direction_rejects_divisor_off_kernel():
    with pytest.raises(ValueError):
        MutationSpec.from_direction((0, 1), parse("1 + y"))


def test_spec_validation():
    with pytest.raises(ValueError):
        MutationSpec.from_adapted((0, 2), ((1, 0), (0, 1)), parse("1 + x"))
    with pytest.raises(ValueError):
        MutationSpec.from_adapted((0, 1), ((1, 0), (0, 2)), parse("1 + x"))
    with pytest.raises(ValueError):
        MutationSpec.from_adapted((0, 1), ((1, 0), (0, 1)), LaurentPolynomial.zero(1))


def test_is_mutation_failure_level():
    f = parse("x^-1*y + 2*y + x*y + y^-1")
    spec = MutationSpec.from_direction((0, 1), parse("1 + x^2", rank=2))
    ok, check = is_mutation(f, spec)
    assert not ok
    assert check.failing_levels() == [1]
    with pytest.raises(MutationError) as info:
        apply_mutation(f, spec)
    assert info.value.level == 1


def test_worked_mutation_and_involution():
    f = parse("x^-1*y + 2*y + x*y + y^-1")
    spec = MutationSpec.from_direction((0, 1), parse("1 + x", rank=2))
    ok, check = is_mutation(f, spec)
    assert ok and check.low == -1 and check.high == 1
    g = apply_mutation(f, spec)
    assert g == parse("x^-1*y + y + y^-1 + x*y^-1")
    assert apply_mutation(g, spec.inverse()) == f


def test_monomial_divisor_always_mutable():
    rng = random.Random(23)
    spec = MutationSpec.from_direction((0, 1), parse("x^2", rank=2))
    for _ in range(10):
        f = random_poly(rng, 2, terms=5)
        ok, _ = is_mutation(f, spec)
        assert ok


def test_zero_polynomial_rejected():
    spec = MutationSpec.from_direction((0, 1), parse("1 + x", rank=2))
    with pytest.raises(ValueError):
        is_mutation(LaurentPolynomial.zero(2), spec)


def test_random_involution_rank2():
    rng = random.Random(29)
    for _ in range(60):
        f, spec = random_mutable_pair(rng, 2)
        ok, _ = is_mutation(f, spec)
        assert ok
        g = apply_mutation(f, spec)
        assert apply_mutation(g, spec.inverse()) == f


def test_random_involution_rank3():
    rng = random.Random(31)
    for _ in range(25):
        f, spec = random_mutable_pair(rng, 3)
        g = apply_mutation(f, spec)
        assert apply_mutation(g, spec.inverse()) == f


def test_conjugation_equivariance():
    rng = random.Random(37)
    for _ in range(25):
        rank = rng.choice([2, 3])
        f, spec = random_mutable_pair(rng, rank)
        a = random_unimodular(rng, rank)
        u2 = mat_vec(transpose(inverse_unimodular(a)), spec.direction)
        basis2 = tuple(
            tuple(sum(a[i][k] * spec.basis[k][j] for k in range(rank)) for j in range(rank))
            for i in range(rank)
        )
        spec2 = MutationSpec.from_adapted(u2, basis2, spec.divisor)
        left = apply_mutation(act_unimodular(f, a), spec2)
        right = act_unimodular(apply_mutation(f, spec), a)
        assert left == right


def test_newton_slices_shift_by_divisor_polytope():
    rng = random.Random(41)
    for _ in range(20):
        f, spec = random_mutable_pair(rng, 2)
        g = apply_mutation(f, spec)
        inv = inverse_unimodular(spec.basis)
        fa = act_unimodular(f, inv)
        ga = act_unimodular(g, inv)
        dp = newton_polytope(spec.divisor)
        sf = slices(fa, fa.rank - 1)
        sg = slices(ga, ga.rank - 1)
        assert set(sf.slices) == set(sg.slices)
        for i, part in sf.slices.items():
            before = newton_polytope(part)
            after = newton_polytope(sg.slices[i])
            if i > 0:
                scaled = dp
                for _ in range(i - 1):
                    scaled = minkowski_sum(scaled, dp)
                assert minkowski_sum(after, scaled) == before
            elif i < 0:
                scaled = dp
                for _ in range(-i - 1):
                    scaled = minkowski_sum(scaled, dp)
                assert after == minkowski_sum(before, scaled)
            else:
                assert after == before


def test_polygon_facets_worked_example():
    p = newton_polytope(parse("x^-1 + x^-1*y + y + y^-1 + x*y^-1"))
    facets = polygon_facets(p)
    assert [fc.vertices[0] for fc in facets] == [
        (-1, 0),
        (0, -1),
        (1, -1),
        (0, 1),
        (-1, 1),
    ]
    top = facets[3]
    assert top.direction == (0, 1)
    assert top.height == 1
    assert all(fc.height > 0 for fc in facets)


def test_polygon_facets_rejects_bad_input():
    with pytest.raises(ValueError):
        polygon_facets(hull([(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))]))
    with pytest.raises(ValueError):
        polygon_facets(hull([(Fraction(0), Fraction(0))], [(1, 0), (0, 1)]))


def test_facet_mutation_spec_square():
    square = hull([(Fraction(a), Fraction(b)) for a in (-1, 1) for b in (-1, 1)])
    spec = facet_mutation_spec(square, 1)
    assert spec.direction == (1, 0)
    assert spec.divisor_in_ambient() == parse("1 + y")


def test_facet_mutation_spec_top_edge():
    p = newton_polytope(parse("x^-1 + x^-1*y + y + y^-1 + x*y^-1"))
    spec = facet_mutation_spec(p, 3)
    assert spec.direction == (0, 1)
    assert spec.divisor_in_ambient() == parse("1 + x", rank=2)


def test_facet_mutation_spec_errors():
    p = newton_polytope(parse("x^-1 + x^-1*y + y + y^-1 + x*y^-1"))
    with pytest.raises(ValueError):
        facet_mutation_spec(p, 17)
    shifted = p.translate((Fraction(5), Fraction(0)))
    with pytest.raises(ValueError):
        facet_mutation_spec(shifted, 0)
    nonprim = hull([(Fraction(2), Fraction(0)), (Fraction(-2), Fraction(2)), (Fraction(0), Fraction(-2))])
    with pytest.raises(ValueError):
        facet_mutation_spec(nonprim, 0)


def test_spec_dict_round_trip():
    spec = MutationSpec.from_direction((2, 3), parse("1 + 2*x^3*y^-2 + x^6*y^-4"))
    again = MutationSpec.from_dict(spec.to_dict())
    assert again == spec


def test_check_dict_shape():
    f = parse("x^-1*y + 2*y + x*y + y^-1")
    spec = MutationSpec.from_direction((0, 1), parse("1 + x", rank=2))
    _, check = is_mutation(f, spec)
    d = check.to_dict()
    assert d["is_mutation"] is True
    assert d["low"] == -1 and d["high"] == 1
    assert {lv["level"] for lv in d["levels"]} == {1}
