import logging

import click

from vtypes.cantor_core import parse_address
from vtypes.classification import export_dot
from vtypes.infinite_family import (
    IncreasingSeq,
    family_type_of,
    identification_witness,
    truncated_diagram,
)
from vtypes.utils.errors import VTypesError
from vtypes.utils.reports import Report, emit, emit_failure

logger = logging.getLogger(__name__)

family_bp = click.Group("family")


@family_bp.group("family")
@click.option("--seq", "seq_text", required=True, help="Comma separated terms a0,a1,...")
@click.option("--tail-step", type=int, default=None, help="Extend the sequence by this step.")
@click.pass_context
def family_group(ctx, seq_text, tail_step):
    """The infinite family of types built from an increasing sequence."""
    ctx.obj["seq_text"] = seq_text
    ctx.obj["tail_step"] = tail_step


def _sequence(ctx):
    return IncreasingSeq.parse(ctx.obj["seq_text"], ctx.obj["tail_step"])


@family_group.command("type")
@click.argument("address")
@click.pass_context
def family_type_command(ctx, address):
    """Index n of the type P(n) of ADDRESS."""
    inputs = {"seq": ctx.obj["seq_text"], "tail_step": ctx.obj["tail_step"], "address": address}
    try:
        a = _sequence(ctx)
        emit(Report("family type", inputs, {"type": family_type_of(a, parse_address(address))}), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ family type failed: {e.message}")
        emit_failure(ctx, "family type", inputs, e)


@family_group.command("witness")
@click.argument("i", type=int)
@click.argument("j", type=int)
@click.argument("k", type=int)
@click.pass_context
def family_witness_command(ctx, i, j, k):
    """Word 1^m 0^r taking P(i) to P(0) and P(j) to P(k)."""
    inputs = {"seq": ctx.obj["seq_text"], "tail_step": ctx.obj["tail_step"], "i": i, "j": j, "k": k}
    try:
        a = _sequence(ctx)
        w = identification_witness(a, i, j, k)
        emit(Report("family witness", inputs, {
            "m": w.m,
            "r": w.r,
            "word": w.word,
            "gaps": list(w.gaps),
            "from_i": family_type_of(a, w.word, start=i),
            "from_j": family_type_of(a, w.word, start=j),
        }), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ family witness failed: {e.message}")
        emit_failure(ctx, "family witness", inputs, e)


@family_group.command("dot")
@click.argument("depth", type=click.IntRange(0))
@click.pass_context
def family_dot_command(ctx, depth):
    """DOT drawing of the types reachable within DEPTH steps."""
    inputs = {"seq": ctx.obj["seq_text"], "tail_step": ctx.obj["tail_step"], "depth": depth}
    try:
        truncation = truncated_diagram(_sequence(ctx), depth)
        click.echo(export_dot(truncation.to_type_graph(), open_vertices={f"P{n}" for n in truncation.open}))
    except VTypesError as e:
        logger.error(f"❌ family dot failed: {e.message}")
        emit_failure(ctx, "family dot", inputs, e)
