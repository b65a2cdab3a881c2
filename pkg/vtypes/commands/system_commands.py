import logging

import click

from vtypes import gallery
from vtypes.cantor_core import format_address, parse_address
from vtypes.type_systems import (
    canonical_form,
    class_finiteness,
    diagram_automorphisms,
    format_diagram,
    is_simple,
    quotient_by_pair,
    reduce,
    type_of,
)
from vtypes.utils.errors import VTypesError
from vtypes.utils.inputs import read_diagram, read_system
from vtypes.utils.reports import Report, emit, emit_failure

logger = logging.getLogger(__name__)

system_bp = click.Group("system")


@system_bp.command("validate")
@click.argument("source")
@click.pass_context
def validate_command(ctx, source):
    """Check that a .lts diagram is a reduced type system."""
    inputs = {"file": source}
    try:
        t = read_system(source)
        sizes = class_finiteness(t)
        emit(Report("validate", inputs, {
            "valid": True,
            "labels": list(t.labels),
            "root": t.root,
            "canonical_form": canonical_form(t),
            "classes": {label: str(size) for label, size in sizes.items()},
        }), ctx.obj["json"])
        logger.info(f"✅ {source} is a type system with {len(t.labels)} labels")
    except VTypesError as e:
        logger.error(f"❌ validate failed: {e.message}")
        emit_failure(ctx, "validate", inputs, e)


@system_bp.command("reduce")
@click.argument("source")
@click.pass_context
def reduce_command(ctx, source):
    """Merge labels whose descendants eventually agree."""
    inputs = {"file": source}
    try:
        d = read_diagram(source)
        t, blocks = reduce(d)
        emit(Report("reduce", inputs, {
            "labels_before": len(d.labels),
            "labels_after": len(t.labels),
            "blocks": [list(b) for b in blocks],
            "diagram": format_diagram(t),
        }), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ reduce failed: {e.message}")
        emit_failure(ctx, "reduce", inputs, e)


@system_bp.command("type")
@click.argument("source")
@click.argument("address")
@click.pass_context
def type_command(ctx, source, address):
    """Label of an address ('e' for the empty word)."""
    inputs = {"file": source, "address": address}
    try:
        t = read_system(source)
        a = parse_address(address)
        emit(Report("type", inputs, {"address": format_address(a), "type": type_of(t, a)}), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ type failed: {e.message}")
        emit_failure(ctx, "type", inputs, e)


@system_bp.command("quotient")
@click.argument("source")
@click.argument("p")
@click.argument("q")
@click.pass_context
def quotient_command(ctx, source, p, q):
    """Smallest quotient identifying labels P and Q."""
    inputs = {"file": source, "p": p, "q": q}
    try:
        t = read_system(source)
        for label in (p, q):
            if label not in t.labels:
                raise VTypesError(f"unknown label {label!r}", label=label)
        if p == q:
            raise VTypesError("labels must differ", label=p)
        quotient, blocks = quotient_by_pair(t, p, q)
        emit(Report("quotient", inputs, {
            "universal": len(quotient.labels) == 1,
            "blocks": [list(b) for b in blocks],
            "diagram": format_diagram(quotient),
        }), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ quotient failed: {e.message}")
        emit_failure(ctx, "quotient", inputs, e)


@system_bp.command("simple")
@click.argument("source")
@click.pass_context
def simple_command(ctx, source):
    """Decide whether every proper quotient is universal."""
    inputs = {"file": source}
    try:
        t = read_system(source)
        verdict = is_simple(t)
        verdicts = {"simple": verdict.simple}
        if not verdict.simple:
            verdicts["witness_pair"] = list(verdict.witness_pair)
            verdicts["witness_blocks"] = [list(b) for b in verdict.witness_blocks]
        emit(Report("simple", inputs, verdicts), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ simple failed: {e.message}")
        emit_failure(ctx, "simple", inputs, e)


@system_bp.command("automorphisms")
@click.argument("source")
@click.pass_context
def automorphisms_command(ctx, source):
    """Label permutations commuting with the child maps."""
    inputs = {"file": source}
    try:
        t = read_system(source)
        found = diagram_automorphisms(t)
        emit(Report("automorphisms", inputs, {
            "order": len(found),
            "permutations": [" ".join(f"{a}->{b}" for a, b in sigma.items()) for sigma in found],
        }), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ automorphisms failed: {e.message}")
        emit_failure(ctx, "automorphisms", inputs, e)


@system_bp.command("gallery")
@click.argument("name", required=False)
@click.pass_context
def gallery_command(ctx, name):
    """List the bundled diagrams, or print one."""
    inputs = {"name": name}
    try:
        if name is None:
            emit(Report("gallery", inputs, {"names": gallery.gallery_names()}), ctx.obj["json"])
        else:
            click.echo(gallery.diagram_text(name), nl=False)
    except VTypesError as e:
        logger.error(f"❌ gallery failed: {e.message}")
        emit_failure(ctx, "gallery", inputs, e)
