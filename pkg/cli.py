"""Command-line surface: generate, check, graph, recognize, analyze, render.

Documents go to stdout unless --out/--svg is given, and "-" reads a document
from stdin, so `generate ... | check -` works. Any BurlingError is printed as
JSON on stderr with exit code 3.
"""

import logging
import sys
from contextlib import contextmanager
from typing import Optional

import typer
from rich.console import Console
from rich.logging import RichHandler

from analysis.report import analyze as analyze_graph
from burling.axioms import OGraph
from burling.derive import graph_with_witness
from burling.recognition import ACCEPTED, BUDGET_EXCEEDED, recognize_oriented, recognize_unoriented
from config import settings
from construction.sequence import burling_sequence
from errors import BurlingError, GraphError
from models import GraphDoc
from serializers.documents import (
    cert_to_doc,
    doc_to_graph,
    dump_document,
    error_doc,
    graph_to_doc,
    parse_document,
    parse_scene,
    read_text,
    resolve_shape,
    scene_to_doc,
    underlying,
    write_text,
)
from serializers.dot import graph_to_dot
from serializers.svg import render_svg

app = typer.Typer(help="Burling graphs from constrained families of Pouna shapes")

logger = logging.getLogger(__name__)


def setup_logging(level: str):
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@app.callback()
def main(log_level: str = typer.Option(settings.log_level, "--log-level", help="Logging level")):
    setup_logging(log_level)


@contextmanager
def reporting_errors():
    try:
        yield
    except BurlingError as e:
        typer.echo(error_doc(e), err=True)
        raise typer.Exit(3)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return read_text(path)


def _emit(text: str, out: Optional[str]):
    if out:
        write_text(out, text)
    else:
        typer.echo(text)


@app.command()
def generate(
    shape: str = typer.Option("frame", help="frame, gamma or file:PATH"),
    k: int = typer.Option(..., "--k", help="Level of the family to build"),
    out: Optional[str] = typer.Option(None, help="Write the scene here instead of stdout"),
    max_level: Optional[int] = typer.Option(None, help="Override the level cap"),
    verify: bool = typer.Option(True, help="Re-check every level while building"),
):
    """Build (F_k, P_k) and write it as a scene document."""
    with reporting_errors():
        sc = burling_sequence(resolve_shape(shape), k, max_level=max_level, verify=verify)
        _emit(dump_document(scene_to_doc(sc)), out)


@app.command()
def check(
    scene: str = typer.Argument(..., help="Scene document, or - for stdin"),
    constraints: bool = typer.Option(False, "--constraints", help="Check C1-C6"),
    stability: bool = typer.Option(False, "--stability", help="Check that probs are stable and disjoint"),
    sample: Optional[int] = typer.Option(None, help="Check constraints on this many random pairs and triples"),
    seed: Optional[int] = typer.Option(None, help="Seed for sampled checks"),
):
    """Verify a scene; exits 1 with the report when anything fails."""
    if not constraints and not stability:
        constraints = stability = True
    with reporting_errors():
        sc = parse_scene(_read(scene))
        report = sc.verify(sample=sample, seed=seed, constraints=constraints, stability=stability)
    typer.echo(dump_document(report))
    if not report.passed:
        raise typer.Exit(1)


@app.command()
def graph(
    scene: str = typer.Argument(..., help="Scene document, or - for stdin"),
    out: Optional[str] = typer.Option(None, help="Write the graph document here"),
    dot: Optional[str] = typer.Option(None, help="Also write DOT source here"),
):
    """The oriented intersection graph of a scene.

    The geometric ≺ is attached as witness when the family satisfies C1-C5.
    """
    with reporting_errors():
        sc = parse_scene(_read(scene))
        g, prec = graph_with_witness(sc.family)
        _emit(dump_document(graph_to_doc(g, witness_prec=prec)), out)
        if dot:
            write_text(dot, graph_to_dot(g))


@app.command()
def recognize(
    graph: str = typer.Argument(..., help="Graph document, or - for stdin"),
    oriented: bool = typer.Option(False, "--oriented", help="Keep the arcs as given"),
    budget: Optional[int] = typer.Option(None, help="Search node limit"),
    dot: Optional[str] = typer.Option(None, help="Write the annotated graph as DOT here"),
):
    """Decide whether a graph is an (oriented) abstract Burling graph.

    Exit code 0 accepted, 1 rejected, 2 budget exceeded.
    """
    with reporting_errors():
        doc = parse_document(_read(graph), GraphDoc)
        if oriented:
            g = doc_to_graph(doc)
            if not isinstance(g, OGraph):
                raise GraphError("no-arcs", "--oriented needs a graph document with arcs")
            hint = [tuple(p) for p in doc.witness_prec] if doc.witness_prec else None
            cert = recognize_oriented(g, budget=budget, hint=hint)
            typer.echo(dump_document(cert_to_doc(cert, g)))
        else:
            g = underlying(doc)
            cert = recognize_unoriented(g, budget=budget)
            typer.echo(dump_document(cert_to_doc(cert)))
        if dot:
            write_text(dot, graph_to_dot(g, cert))
    if cert.verdict == BUDGET_EXCEEDED:
        raise typer.Exit(2)
    if cert.verdict != ACCEPTED:
        raise typer.Exit(1)


@app.command()
def analyze(
    graph: str = typer.Argument(..., help="Graph document, or - for stdin"),
    chi: bool = typer.Option(False, "--chi", help="Chromatic number"),
    triangles: bool = typer.Option(False, "--triangle-free", help="Triangle-freeness"),
    budget: Optional[int] = typer.Option(None, help="Colouring search node limit"),
    dot: Optional[str] = typer.Option(None, help="Write the graph labelled with the results as DOT here"),
):
    """Clique number plus, on request, triangle-freeness and chromatic number."""
    if not chi and not triangles:
        chi = triangles = True
    with reporting_errors():
        g = underlying(parse_document(_read(graph), GraphDoc))
        doc = analyze_graph(g, chi=chi, triangles=triangles, budget=budget)
        if dot:
            write_text(dot, graph_to_dot(g, analysis=doc))
    typer.echo(dump_document(doc))


@app.command()
def render(
    scene: str = typer.Argument(..., help="Scene document, or - for stdin"),
    svg: Optional[str] = typer.Option(None, "--svg", help="Write the figure here instead of stdout"),
    territories: bool = typer.Option(False, "--territories", help="Hatch the territories"),
):
    """Draw a scene as SVG."""
    with reporting_errors():
        _emit(render_svg(parse_scene(_read(scene)), territories=territories), svg)


if __name__ == "__main__":
    app()
