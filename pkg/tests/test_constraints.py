from fractions import Fraction

import pytest

from errors import ConstraintError
from geometry.exact import Rect, Transform
from geometry.region import Region
from helpers import make_frame
from relations.constraints import (
    check_constraints,
    oriented_intersection_graph,
    positive_copy_transform,
)
from relations.relations import Family, transform_family
from shapes.generators import frame, random_positive_transform
from shapes.pouna import Shape

C = make_frame(0, 10, 0, 10, id="C")
B = make_frame(4, 12, 2, 8, id="B")
# inside Ter(B), and crossing the right side of C
A = make_frame(5, 11, 3, 7, id="A")


def test_singleton_family_passes_everything():
    f = Family([frame(id="s0")], base=(frame(), False))
    report = check_constraints(f)
    assert report.passed
    assert sorted(report.constraints) == ["C1", "C2", "C3", "C4", "C5", "C6"]


def test_c6_is_skipped_without_a_base():
    report = check_constraints(Family([C]))
    assert "C6" not in report.constraints
    with pytest.raises(ConstraintError) as e:
        check_constraints(Family([C]), constraints=["C6"])
    assert e.value.code == "no-base"


def test_unknown_constraint():
    with pytest.raises(ConstraintError) as e:
        check_constraints(Family([C]), constraints=["C9"])
    assert e.value.code == "unknown-constraint"


def test_arrow_pair_satisfies_c1():
    report = check_constraints(Family([C, B]), constraints=["C1"])
    assert report.constraints["C1"].passed
    assert report.constraints["C1"].checked == 1


def test_pairwise_intersecting_frames_break_c5():
    third = make_frame(6, 14, 3, 7, id="D")
    report = check_constraints(Family([C, B, third]), constraints=["C5"])
    assert not report.passed
    assert report.constraints["C5"].violations == [["C", "B", "D"]]


def test_prec_and_two_arrows_into_one_shape_break_c4():
    f = Family([C, B, A])
    report = check_constraints(f)
    assert report.failing() == ["C4"]
    assert report.constraints["C4"].violations == [["A", "B", "C"]]


def test_violations_are_capped():
    shapes = [make_frame(0, 10, 0, 10, id="C")]
    shapes += [make_frame(4 + i, 12 + i, 2, 8, id=f"B{i}") for i in range(3)]
    report = check_constraints(Family(shapes), constraints=["C5"], cap=1)
    result = report.constraints["C5"]
    assert len(result.violations) == 1
    assert result.truncated


def test_c6_detects_foreign_shapes():
    base = (frame(), False)
    # a scaled frame is still a positive copy of the frame
    assert check_constraints(Family([frame(id="s0"), C], base=base), constraints=["C6"]).passed
    plus = Shape.of(Region([Rect(0, 3, 1, 2), Rect(1, 2, 0, 3)]), "P")
    report = check_constraints(Family([frame(id="s0"), plus], base=base), constraints=["C6"])
    assert report.constraints["C6"].violations == [["P"]]


def test_positive_copy_transform(gamma_shape):
    S = frame()
    t = positive_copy_transform(make_frame(1, 7, 2, 3), S)
    assert t == Transform(2, Fraction(1, 3), 1, 2)
    assert positive_copy_transform(gamma_shape, S) is None


def test_sampled_check_is_deterministic(frame_scenes):
    f = frame_scenes[3].family
    first = check_constraints(f, sample=200, seed=7)
    assert first.sampled and first.passed
    assert first == check_constraints(f, sample=200, seed=7)


def test_generated_families_pass_and_stay_valid_under_transforms(frame_scenes, rng):
    f = frame_scenes[2].family
    assert check_constraints(f).passed
    for _ in range(5):
        moved = transform_family(f, random_positive_transform(rng))
        assert check_constraints(moved).passed


def test_oriented_intersection_graph():
    g = oriented_intersection_graph(Family([C]))
    assert g.vertices == ("C",) and not g.arcs
    g = oriented_intersection_graph(Family([C, B]))
    assert g.arcs == {("B", "C")}


def test_oriented_graph_of_second_level(frame_scenes):
    g = oriented_intersection_graph(frame_scenes[2].family)
    assert len(g.vertices) == 3 and len(g.arcs) == 1
    touched = {v for arc in g.arcs for v in arc}
    assert set(g.vertices) - touched == {"s0"}


def test_orientation_needs_c1():
    crossing = make_frame(2, 8, -2, 12, id="X")
    with pytest.raises(ConstraintError) as e:
        oriented_intersection_graph(Family([C, crossing]))
    assert e.value.code == "not-c1"
