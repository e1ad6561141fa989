from fractions import Fraction

import pytest

from errors import ShapeError
from geometry.arrangement import Arrangement
from geometry.exact import Point, Rect
from geometry.region import Region
from helpers import make_frame
from shapes.generators import preset, random_positive_transform, random_pouna
from shapes.pouna import (
    Shape,
    interior_gap_witness,
    is_pouna,
    is_strong,
    left_edge_set,
    materialize_territory,
    reflect,
    strongify,
    ter_member,
    territory_contains,
    territory_meets,
)

HALF = Fraction(3, 2)


@pytest.mark.parametrize(
    "region, expected",
    [
        (Region([Rect(0, 3, 0, 3)]), False),
        (make_frame(0, 3, 0, 3).region, True),
        (Region([Rect(0, 3, 1, 1)]), False),
        (Region([Rect(0, 1, 0, 1), Rect(1, 3, 0, 1)]), False),
        (Region([Rect(0, 1, 0, 1), Rect(2, 3, 0, 1)]), False),
        (Region(), False),
    ],
)
def test_is_pouna(region, expected):
    assert is_pouna(region) is expected


def test_shape_of_rejects_rects():
    with pytest.raises(ShapeError) as e:
        Shape.of(Region([Rect(0, 3, 0, 3)]))
    assert e.value.code == "not-pouna"


def test_ter_member(frame_shape, gamma_shape):
    assert ter_member(Point(HALF, HALF), frame_shape)
    assert not ter_member(Point(3, HALF), frame_shape)
    assert not ter_member(Point(HALF, HALF), gamma_shape)
    # the top edge of the frame has no frame point to its right
    assert not ter_member(Point(HALF, 4), frame_shape)


def test_strongness(frame_shape, gamma_shape):
    assert is_strong(frame_shape)
    assert not is_strong(gamma_shape)
    strong, reflected = strongify(gamma_shape)
    assert reflected
    assert is_strong(strong)
    assert strong.region == reflect(gamma_shape).region
    assert strongify(frame_shape) == (frame_shape, False)


def test_strongify_rejects_non_pouna():
    with pytest.raises(ShapeError) as e:
        strongify(Shape("R", Region([Rect(0, 1, 0, 1)])))
    assert e.value.code == "not-pouna"


def test_left_edge_set(frame_shape):
    assert left_edge_set(frame_shape) == Region([Rect(0, 0, 0, 3)])
    assert left_edge_set(make_frame(4, 12, 2, 8)) == Region([Rect(4, 4, 2, 8)])


def test_territory_of_frame_is_its_open_interior(frame_shape):
    assert territory_contains(frame_shape, Rect(1, 2, 1, 2))
    assert not territory_contains(frame_shape, Rect(0, 2, 1, 2))
    assert territory_meets(frame_shape, Rect(2, 5, 1, 2))
    assert not territory_meets(frame_shape, Rect(4, 5, 1, 2))


def test_materialized_territory_of_frame(frame_shape):
    cells = materialize_territory(frame_shape)
    assert [c.rect for c in cells] == [Rect(0, 3, 0, 3)]
    cell = cells[0]
    assert cell.open_left and cell.open_right and cell.open_bottom and cell.open_top


def test_presets():
    assert preset("frame").region == make_frame(0, 3, 0, 3).region
    with pytest.raises(ShapeError) as e:
        preset("circle")
    assert e.value.code == "unknown-shape"


def test_interior_gap_witness_on_random_shapes(rng):
    for _ in range(200):
        s = random_pouna(rng)
        p = interior_gap_witness(s)
        assert s.l < p.x < s.r and s.b < p.y < s.t
        assert not s.region.contains_point(p)


def test_shape_or_its_reflection_is_strong(rng):
    for _ in range(100):
        s = random_pouna(rng)
        assert is_strong(s) or is_strong(reflect(s))


def test_territory_commutes_with_positive_transforms(rng):
    for _ in range(200):
        s = random_pouna(rng)
        t = random_positive_transform(rng)
        moved = s.transformed(t)
        arr = Arrangement.of(s.region)
        for _, _, p in arr.samples():
            assert ter_member(p, s) == ter_member(t.apply_point(p), moved)


def test_face_territory_matches_point_territory(rng):
    for _ in range(100):
        s = random_pouna(rng)
        arr = Arrangement.of(s.region)
        ter = arr.territory(s.region)
        for i, j, p in arr.samples():
            assert bool(ter[i, j]) == ter_member(p, s)
