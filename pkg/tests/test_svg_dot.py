import re

import networkx as nx

from analysis.report import analyze
from burling.axioms import OGraph
from burling.recognition import recognize_oriented, recognize_unoriented
from construction.sequence import initial_scene
from relations.constraints import oriented_intersection_graph
from serializers.dot import graph_to_dot
from serializers.svg import render_svg
from shapes.generators import frame


def test_svg_is_deterministic(frame_scenes):
    sc = frame_scenes[3]
    assert render_svg(sc) == render_svg(sc)
    assert render_svg(sc, territories=True) == render_svg(sc, territories=True)


def test_svg_canvas():
    svg = render_svg(initial_scene(frame()))
    assert svg.startswith("<svg")
    assert 'width="1000.000"' in svg and 'height="1000.000"' in svg
    # four sides of the frame, drawn as lines
    assert svg.split('id="shapes"')[1].count("<line") == 4
    assert svg.count("data-prob=") == 1
    small = render_svg(initial_scene(frame()), canvas_size=300)
    assert 'width="300.000"' in small


def test_prob_is_placed_with_the_y_axis_flipped():
    svg = render_svg(initial_scene(frame()))
    # prob [1,3]x[1,2] on a [0,3]^2 box scaled to 1000
    prob = re.search(r"<rect data-prob=\"p0\"[^>]*>", svg).group(0)
    assert 'x="333.333"' in prob and 'y="333.333"' in prob
    assert 'width="666.667"' in prob and 'height="333.333"' in prob


def test_territories_are_hatched(frame_scenes):
    plain = render_svg(frame_scenes[2])
    hatched = render_svg(frame_scenes[2], territories=True)
    assert 'id="territories"' not in plain
    assert 'id="territories"' in hatched and "url(#hatch)" in hatched


def test_dot_of_an_oriented_graph(frame_scenes):
    g = oriented_intersection_graph(frame_scenes[2].family)
    source = graph_to_dot(g)
    assert source.startswith("// Oriented intersection graph")
    assert "digraph" in source
    assert source.count("->") == len(g.arcs)


def test_dot_carries_the_verdict():
    g = OGraph(("a", "b"), frozenset({("a", "b"), ("b", "a")}))
    source = graph_to_dot(g, recognize_oriented(g))
    assert "rejected" in source and "violates arrow-cycle" in source
    assert "lightcoral" in source


def test_dot_of_an_accepted_plain_graph_is_oriented():
    g = nx.relabel_nodes(nx.cycle_graph(6), str)
    source = graph_to_dot(g, recognize_unoriented(g))
    assert "digraph" in source and "accepted" in source
    assert source.count("->") >= 6


def test_dot_of_a_plain_graph():
    source = graph_to_dot(nx.complete_graph(3))
    assert source.lstrip("/ ").startswith("Intersection graph")
    assert source.count("--") == 3


def test_dot_carries_the_analysis():
    g = nx.relabel_nodes(nx.cycle_graph(5), str)
    source = graph_to_dot(g, analysis=analyze(g))
    assert "ω = 2" in source and "triangle-free" in source and "χ = 3" in source
    bracket = analyze(nx.mycielski_graph(4), budget=0)
    assert "χ in [3, " in graph_to_dot(nx.mycielski_graph(4), analysis=bracket)
    assert "has triangles" in graph_to_dot(nx.complete_graph(3), analysis=analyze(nx.complete_graph(3)))
