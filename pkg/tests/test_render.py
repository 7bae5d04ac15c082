from fractions import Fraction

import pytest

from laumut.deformation import build_family
from laumut.laurent import newton_polytope, parse
from laumut.mutation import MutationSpec
from laumut.polyhedra import hull
from laumut.render import _fmt, render_svg

F = Fraction


def test_fmt_exact():
    assert _fmt(0) == "0.000"
    assert _fmt(F(-3, 2)) == "-1.500"
    assert _fmt(F(1, 3)) == "0.333"
    assert _fmt(F(2, 3)) == "0.667"
    assert _fmt(7) == "7.000"


def test_byte_identical_output():
    p = newton_polytope(parse("x^-1 + x^-1*y + y + y^-1 + x*y^-1"))
    a = render_svg([("D", p)])
    b = render_svg([("D", p)])
    assert a == b
    assert a.startswith('<?xml version="1.0"')


def test_rejects_wrong_rank_and_empty():
    with pytest.raises(ValueError):
        render_svg([])
    with pytest.raises(ValueError):
        render_svg([("bad", hull([(F(0), F(0), F(0))]))])


def test_single_point_marker_only():
    svg = render_svg([("pt", hull([(F(2), F(1))]))])
    assert svg.count("<circle") == 1
    assert "<path" not in svg


def test_unbounded_clipped_without_marking_cut_vertices():
    p = hull([(F(0), F(0))], [(2, 1), (1, 2)])
    svg = render_svg([("tau", p)])
    # only the true vertex at the origin gets a dot
    assert svg.count("<circle") == 1
    assert "<path" in svg


def test_family_render_has_four_labels(tmp_path):
    spec = MutationSpec.from_direction((0, 1), parse("1 + x", rank=2))
    fam = build_family(parse("x^-1*y + 2*y + x*y + y^-1"), spec)
    items = [
        ("Delta_0", fam.delta0),
        ("Delta_inf", fam.delta_inf),
        ("Delta_0^0", fam.delta00),
        ("Delta_0^1", fam.delta01),
    ]
    out = tmp_path / "family.svg"
    svg = render_svg(items, str(out))
    assert out.read_text() == svg
    for label, _ in items:
        assert f">{label}</text>" in svg
    assert svg.count("<path") >= 4


def test_mutation_pair_render():
    f = parse("x^-1*y + 2*y + x*y + y^-1")
    g = parse("x^-1*y + y + y^-1 + x*y^-1")
    svg = render_svg([("before", newton_polytope(f)), ("after", newton_polytope(g))])
    assert ">before</text>" in svg and ">after</text>" in svg
