import logging

import click

from vtypes.cantor_core import format_address
from vtypes.classification import (
    classify,
    clopen_partition,
    eventual_label_set,
    export_dot,
    stable_child_closed_subsets,
    tail_points,
    type_graph,
)
from vtypes.utils.errors import VTypesError
from vtypes.utils.inputs import read_system
from vtypes.utils.reports import Report, emit, emit_failure

logger = logging.getLogger(__name__)

structure_bp = click.Group("structure")


@structure_bp.command("classify")
@click.argument("source")
@click.pass_context
def classify_command(ctx, source):
    """Nuclear / multinuclear / quasinuclear verdict with nuclei and depths."""
    inputs = {"file": source}
    try:
        t = read_system(source)
        c = classify(t)
        verdicts = c.to_dict()
        verdicts["stable_subsets"] = [list(s) for s in stable_child_closed_subsets(t)]
        emit(Report("classify", inputs, verdicts), ctx.obj["json"])
        logger.info(f"✅ {source}: {c.describe()}")
    except VTypesError as e:
        logger.error(f"❌ classify failed: {e.message}")
        emit_failure(ctx, "classify", inputs, e)


@structure_bp.command("graph")
@click.argument("source")
@click.option("--dot", "as_dot", is_flag=True, help="Print the type graph in DOT format.")
@click.pass_context
def graph_command(ctx, source, as_dot):
    """Type graph of a system."""
    inputs = {"file": source}
    try:
        t = read_system(source)
        g = type_graph(t)
        if as_dot:
            click.echo(export_dot(g))
            return
        eventual, depth = eventual_label_set(t)
        emit(Report("graph", inputs, {
            "vertices": list(g.vertices),
            "edges": [f"{s} -{b}-> {d}" for s, b, d in g.edges],
            "eventual": list(eventual),
            "t": depth,
        }), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ graph failed: {e.message}")
        emit_failure(ctx, "graph", inputs, e)


@structure_bp.command("tails")
@click.argument("source")
@click.pass_context
def tails_command(ctx, source):
    """Rational points fixed setwise by the stabilizer of a non-branching quasinuclear system."""
    inputs = {"file": source}
    try:
        t = read_system(source)
        c = classify(t)
        points = tail_points(c, t)
        emit(Report("tails", inputs, {
            "cycle_word": c.cycle_word,
            "tail_points": [{"preperiod": format_address(p.preperiod), "period": p.period} for p in points],
        }), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ tails failed: {e.message}")
        emit_failure(ctx, "tails", inputs, e)


@structure_bp.command("partition")
@click.argument("source")
@click.pass_context
def partition_command(ctx, source):
    """Cones of the clopen set belonging to each nucleus."""
    inputs = {"file": source}
    try:
        t = read_system(source)
        c = classify(t)
        blocks = clopen_partition(c, t)
        emit(Report("partition", inputs, {
            "nuclei": [list(n) for n in c.nuclei],
            "cones": [[format_address(a) for a in block] for block in blocks],
        }), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ partition failed: {e.message}")
        emit_failure(ctx, "partition", inputs, e)
