import random
from fractions import Fraction

import pytest

from laumut.laurent import (
    LaurentPolynomial,
    ParseError,
    act_unimodular,
    divide_exact,
    newton_polytope,
    parse,
    slices,
    to_string,
)
from laumut.exactlat import inverse_unimodular, mat_mul
from laumut.polyhedra import minkowski_sum


def random_poly(rng, rank, terms=5, span=4, positive=False):
    out = {}
    while len(out) < terms:
        e = tuple(rng.randint(-span, span) for _ in range(rank))
        c = rng.randint(1, 9) if positive else rng.choice([-3, -2, -1, 1, 2, 3])
        out[e] = Fraction(c)
    return LaurentPolynomial.from_terms(rank, out)


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


def test_parse_basic():
    f = parse("x^-1*y + 2*y + x*y + y^-1")
    assert f.rank == 2
    assert len(f.support()) == 4
    assert f.coefficient((0, 1)) == 2
    assert f.coefficient((-1, 1)) == 1
    assert f.coefficient((5, 5)) == 0


def test_parse_cancellation_gives_zero():
    assert parse("x - x").is_zero()
    assert parse("x + -1*x").is_zero()
    assert to_string(LaurentPolynomial.zero(2)) == "0"


def test_parse_rational_coefficients():
    h = parse("-3/2*x^-2*y + y^-1")
    assert h.coefficient((-2, 1)) == Fraction(-3, 2)
    assert h.coefficient((0, -1)) == 1


def test_parse_merges_repeated_variables():
    assert parse("x^2*x^-1") == parse("x")


def test_parse_zn_style():
    f = parse("z1*z4 + z2^-3")
    assert f.rank == 4
    assert f.coefficient((1, 0, 0, 1)) == 1
    assert f.coefficient((0, -3, 0, 0)) == 1


def test_parse_explicit_rank_pads():
    f = parse("y + x", rank=3)
    assert f.rank == 3
    assert f.coefficient((0, 1, 0)) == 1


@pytest.mark.parametrize(
    "text,fragment,position",
    [
        ("(x+1)", "parentheses", 0),
        ("x + X", "unknown variable", 4),
        ("x*z1", "cannot mix", 2),
        ("z0", "indices start at z1", 0),
        ("", "empty polynomial", 0),
        ("1/0", "zero denominator", 2),
        ("x^^2", "integer exponent", 2),
        ("x^1.5", "unexpected character", 3),
        ("3x", "between terms", 1),
        ("x + ", "expected a variable", 4),
    ],
)
def test_parse_errors(text, fragment, position):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert fragment in str(info.value)
    assert info.value.position == position


def test_parse_rank_exceeded_reports_position():
    with pytest.raises(ParseError) as info:
        parse("x*y", rank=1)
    assert "exceeds rank 1" in str(info.value)
    assert info.value.position == 2


def test_to_string_round_trip():
    rng = random.Random(7)
    for _ in range(50):
        rank = rng.randint(1, 4)
        f = random_poly(rng, rank, terms=rng.randint(1, 6))
        assert parse(to_string(f), rank=rank) == f


def test_newton_polytope_vertices():
    f = parse("x^-1*y + 2*y + x*y + y^-1")
    p = newton_polytope(f)
    # the interior point (0,1) is dropped
    assert set(p.vertices) == {(-1, 1), (1, 1), (0, -1)}
    assert p.rays == ()
    with pytest.raises(ValueError):
        newton_polytope(LaurentPolynomial.zero(2))


def test_slices_and_reassemble():
    f = parse("x^-1*y + 2*y + x*y + y^-1")
    dec = slices(f, 1)
    assert dec.low == -1 and dec.high == 1
    assert dec.slices[1] == parse("x^-1 + 2 + x")
    assert dec.slices[-1] == parse("1", rank=1)
    assert dec.reassemble() == f


def test_slices_random_reassemble():
    rng = random.Random(11)
    for _ in range(40):
        rank = rng.randint(1, 4)
        f = random_poly(rng, rank, terms=rng.randint(1, 7))
        j = rng.randrange(rank)
        dec = slices(f, j)
        assert dec.reassemble() == f
        for part in dec.slices.values():
            assert part.rank == rank - 1 and not part.is_zero()


def test_slices_rejects_bad_input():
    with pytest.raises(ValueError):
        slices(LaurentPolynomial.zero(2), 0)
    with pytest.raises(ValueError):
        slices(parse("x + y"), 2)


def test_divide_exact_examples():
    a = parse("x^-1 + 2 + x")
    b = parse("1 + x")
    assert divide_exact(a, b) == parse("x^-1 + 1")
    assert divide_exact(parse("1 + x"), parse("x")) == parse("x^-1 + 1")
    assert divide_exact(parse("1 + x"), parse("1 + x + x^2")) is None
    assert divide_exact(LaurentPolynomial.zero(1), b) == LaurentPolynomial.zero(1)
    with pytest.raises(ZeroDivisionError):
        divide_exact(b, LaurentPolynomial.zero(1))


def test_divide_exact_random_products():
    rng = random.Random(13)
    for positive in (True, False):
        for _ in range(40):
            rank = rng.randint(1, 3)
            q = random_poly(rng, rank, terms=rng.randint(1, 4), positive=positive)
            b = random_poly(rng, rank, terms=rng.randint(1, 4), positive=positive)
            got = divide_exact(q * b, b)
            assert got == q


def test_act_unimodular_exponent_map():
    f = parse("x^2*y^3")
    # exponents transform as columns: [[1,0],[1,1]] @ (2,3) = (2,5)
    g = act_unimodular(f, ((1, 0), (1, 1)))
    assert g == parse("x^2*y^5")


def test_act_unimodular_group_action():
    rng = random.Random(17)
    for _ in range(30):
        rank = rng.randint(1, 4)
        f = random_poly(rng, rank)
        a = random_unimodular(rng, rank)
        b = random_unimodular(rng, rank)
        assert act_unimodular(act_unimodular(f, a), b) == act_unimodular(f, mat_mul(b, a))
        back = act_unimodular(act_unimodular(f, a), inverse_unimodular(a))
        assert back == f


def test_act_unimodular_rejects_singular():
    with pytest.raises(ValueError):
        act_unimodular(parse("x + y"), ((1, 0), (0, 2)))


def test_newton_of_product_is_minkowski_sum():
    rng = random.Random(19)
    for _ in range(15):
        rank = rng.randint(1, 3)
        f = random_poly(rng, rank, terms=rng.randint(1, 4), positive=True)
        g = random_poly(rng, rank, terms=rng.randint(1, 4), positive=True)
        left = newton_polytope(f * g)
        right = minkowski_sum(newton_polytope(f), newton_polytope(g))
        assert left == right


def test_pow():
    f = parse("1 + x")
    assert f ** 3 == parse("1 + 3*x + 3*x^2 + x^3")
    assert f ** 0 == LaurentPolynomial.constant(1, 1)
    m = parse("2*x^3")
    assert m ** -2 == parse("1/4*x^-6")
    with pytest.raises(ValueError):
        f ** -1
