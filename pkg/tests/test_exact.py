from fractions import Fraction

import pytest

from errors import GeometryError
from geometry.exact import (
    Point,
    Rect,
    Transform,
    compose,
    format_rat,
    invert,
    is_positive,
    parse_rat,
)
from shapes.generators import random_positive_transform


def test_rationals_are_exact_and_reduced():
    assert parse_rat("6/4") == Fraction(3, 2)
    assert format_rat(Fraction(3, 2)) == "3/2"
    assert format_rat(Fraction(4, 2)) == "2"
    assert format_rat(Fraction(-1, 3)) == "-1/3"


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "abc"])
def test_parse_rat_rejects_inexact_or_malformed(text):
    with pytest.raises(GeometryError):
        parse_rat(text)


def test_rect_refuses_floats():
    with pytest.raises(GeometryError) as e:
        Rect(0.5, 1, 0, 1)
    assert e.value.code == "not-exact"


def test_rect_must_not_be_inverted():
    with pytest.raises(GeometryError) as e:
        Rect(2, 1, 0, 1)
    assert e.value.code == "bad-rect"


def test_degenerate_rects_are_allowed():
    seg = Rect(0, 3, 1, 1)
    assert seg.height == 0
    assert seg.contains_point(Point(2, 1))
    assert not seg.contains_point(Point(2, Fraction(3, 2)))


def test_rect_intersection():
    assert Rect(0, 2, 0, 2).intersection(Rect(1, 3, 1, 3)) == Rect(1, 2, 1, 2)
    assert Rect(0, 1, 0, 1).intersection(Rect(2, 3, 0, 1)) is None
    # closed rects touching along an edge meet in a segment
    assert Rect(0, 1, 0, 1).intersection(Rect(1, 2, 0, 1)) == Rect(1, 1, 0, 1)


def test_rect_strings():
    r = Rect(Fraction(1, 3), 2, 0, Fraction(5, 2))
    assert r.as_strings() == ["1/3", "2", "0", "5/2"]
    assert Rect.from_strings(r.as_strings()) == r


def test_transform_scaling_and_reflection():
    assert Transform(2, 1).apply_rect(Rect(1, 2, 0, 3)) == Rect(2, 4, 0, 3)
    assert Transform.reflection().apply_rect(Rect(1, 2, 0, 1)) == Rect(-2, -1, 0, 1)


def test_transform_needs_nonzero_scale():
    with pytest.raises(GeometryError):
        Transform(0, 1)


def test_compose_applies_second_argument_first():
    t1 = Transform(2, 1, 1, 0)
    t2 = Transform(1, 3, 0, 5)
    p = Point(1, 1)
    assert compose(t1, t2).apply_point(p) == t1.apply_point(t2.apply_point(p))


def test_identity_and_inverse():
    t = Transform(2, 1, 3, 0)
    assert compose(t, Transform.identity()) == t
    inv = invert(t)
    assert inv.a == Fraction(1, 2) and inv.c == Fraction(-3, 2)
    assert compose(t, inv) == Transform.identity()
    assert compose(inv, t) == Transform.identity()


def test_is_positive():
    assert is_positive(Transform(2, 3))
    assert not is_positive(Transform(-1, 1))
    assert not is_positive(Transform(1, -1))


def test_matching_sends_corners_to_corners():
    src, dst = Rect(0, 3, 0, 3), Rect(1, 3, Fraction(5, 3), 2)
    t = Transform.matching(src, dst)
    assert t.apply_rect(src) == dst
    assert t.is_positive()


def test_group_laws_on_random_positive_transforms(rng):
    for _ in range(100):
        a, b, c = (random_positive_transform(rng) for _ in range(3))
        assert compose(a, compose(b, c)) == compose(compose(a, b), c)
        assert compose(a, invert(a)) == Transform.identity()
        assert is_positive(compose(a, b))
        assert is_positive(invert(a))
