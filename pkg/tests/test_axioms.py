import pytest

from burling.axioms import OGraph, Triple, Violation, check_axioms, is_burling_set
from burling.derive import derive_triple, graph_with_witness
from burling.recognition import ACCEPTED, recognize_oriented
from errors import ConstraintError, GraphError
from helpers import make_frame
from relations.relations import Family


def triple(elements, prec=(), arrow=()):
    return Triple(tuple(elements), frozenset(prec), frozenset(arrow))


def test_vacuous_triple_is_burling():
    assert check_axioms(triple("v")) == []


def test_prec_must_be_a_strict_order():
    violations = check_axioms(triple("ab", prec=[("a", "b"), ("b", "a")]))
    assert violations[0].axiom == "not-strict-order"
    violations = check_axioms(triple("abc", prec=[("a", "b"), ("b", "c")]))
    assert violations == [Violation("not-strict-order", ("a", "b", "c"))]


def test_arrows_must_be_acyclic():
    violations = check_axioms(triple("ab", arrow=[("a", "b"), ("b", "a")]))
    assert [v.axiom for v in violations] == ["arrow-cycle"]


def test_a1():
    violations = check_axioms(triple("xyz", prec=[("x", "y"), ("x", "z")]))
    assert violations == [Violation("A1", ("x", "y", "z"))]


def test_a2():
    violations = check_axioms(triple("abc", arrow=[("a", "b"), ("a", "c")]))
    assert violations == [Violation("A2", ("a", "b", "c"))]
    fixed = triple("abc", prec=[("b", "c")], arrow=[("a", "b"), ("a", "c")])
    assert check_axioms(fixed) == []


def test_a3():
    violations = check_axioms(triple("xyz", prec=[("x", "z")], arrow=[("x", "y")]))
    assert violations == [Violation("A3", ("x", "y", "z"))]


def test_prec_alongside_arrow_is_allowed_and_flagged():
    t = triple("xy", prec=[("x", "y")], arrow=[("x", "y")])
    assert check_axioms(t) == []
    g = OGraph(("x", "y"), frozenset({("x", "y")}))
    cert = recognize_oriented(g, hint=[("x", "y")])
    assert cert.verdict == ACCEPTED and cert.nodes == 0
    assert cert.prec_and_arrow == (("x", "y"),)
    # A3 still binds every other z
    t = triple("xyz", prec=[("x", "y"), ("x", "z")], arrow=[("x", "y")])
    assert Violation("A3", ("x", "y", "z")) in check_axioms(t)


def test_a4():
    violations = check_axioms(triple("xyz", prec=[("y", "z")], arrow=[("x", "y")]))
    assert violations == [Violation("A4", ("x", "y", "z"))]
    assert is_burling_set(triple("xyz", prec=[("y", "z")], arrow=[("x", "y"), ("x", "z")]))
    assert is_burling_set(triple("xyz", prec=[("y", "z"), ("x", "z")], arrow=[("x", "y")]))


def test_cap_limits_the_report():
    t = triple("abcd", arrow=[("a", "b"), ("a", "c"), ("a", "d")])
    assert len(check_axioms(t)) == 3
    assert len(check_axioms(t, cap=1)) == 1


def test_ograph_validation():
    with pytest.raises(GraphError) as e:
        OGraph(("a", "a"), frozenset())
    assert e.value.code == "duplicate-vertex"
    with pytest.raises(GraphError) as e:
        OGraph(("a",), frozenset({("a", "b")}))
    assert e.value.code == "bad-vertex"
    with pytest.raises(GraphError) as e:
        OGraph(("a",), frozenset({("a", "a")}))
    assert e.value.code == "loop"


def test_induced_structures():
    t = triple("abc", prec=[("b", "c")], arrow=[("a", "b"), ("a", "c")])
    sub = t.induced(["a", "b"])
    assert sub.elements == ("a", "b")
    assert sub.prec == frozenset() and sub.arrow == {("a", "b")}
    assert t.graph().induced(["c", "a"]).arcs == {("a", "c")}
    with pytest.raises(GraphError):
        t.induced(["z"])


def test_burling_sets_are_hereditary():
    t = triple("abc", prec=[("b", "c")], arrow=[("a", "b"), ("a", "c")])
    for subset in (["a"], ["a", "b"], ["a", "c"], ["b", "c"]):
        assert is_burling_set(t.induced(subset))


def test_derive_triple_of_small_families():
    single = derive_triple(Family([make_frame(0, 3, 0, 3, id="S")]))
    assert single.elements == ("S",) and not single.prec and not single.arrow
    pair = derive_triple(Family([make_frame(0, 10, 0, 10, id="C"), make_frame(4, 12, 2, 8, id="B")]))
    assert pair.arrow == {("B", "C")} and pair.prec == frozenset()


def test_derive_triple_refuses_unconstrained_families():
    f = Family(
        [make_frame(0, 10, 0, 10, id="C"), make_frame(4, 12, 2, 8, id="B"), make_frame(5, 11, 3, 7, id="A")]
    )
    with pytest.raises(ConstraintError) as e:
        derive_triple(f)
    assert e.value.code == "not-constrained"


def test_generated_families_are_burling_sets(frame_scenes, gamma_scene3):
    for sc in (*frame_scenes.values(), gamma_scene3):
        t = derive_triple(sc.family)
        assert check_axioms(t) == []


def test_graph_needs_only_c1():
    f = Family(
        [make_frame(0, 10, 0, 10, id="C"), make_frame(4, 12, 2, 8, id="B"), make_frame(5, 11, 3, 7, id="A")]
    )
    g, prec = graph_with_witness(f)
    assert g.arcs == {("A", "C"), ("B", "C")}
    assert prec is None


def test_graph_of_a_constrained_family_carries_its_witness(frame_scenes):
    f = frame_scenes[3].family
    g, prec = graph_with_witness(f)
    t = derive_triple(f)
    assert prec == t.prec and g.arcs == t.arrow
