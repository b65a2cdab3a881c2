import logging

import click

from vtypes.cantor_core import parse_address
from vtypes.classification import Kind, classify
from vtypes.semigroup import semigroup_info, stype_of
from vtypes.utils.errors import VTypesError
from vtypes.utils.inputs import read_system
from vtypes.utils.reports import Report, emit, emit_failure

logger = logging.getLogger(__name__)

semigroup_bp = click.Group("semigroup")


@semigroup_bp.command("semigroup")
@click.argument("source")
@click.pass_context
def semigroup_command(ctx, source):
    """H0 = coker(I - A) invariants and the derived facts about Fix(V,P)."""
    inputs = {"file": source}
    try:
        t = read_system(source)
        c = classify(t)
        infos = semigroup_info(t, c)
        if c.kind is Kind.NUCLEAR:
            verdicts = infos[0].to_dict()
        else:
            verdicts = {"kind": c.describe(), "nuclei": [info.to_dict() for info in infos]}
        emit(Report("semigroup", inputs, verdicts), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ semigroup failed: {e.message}")
        emit_failure(ctx, "semigroup", inputs, e)


@semigroup_bp.command("stype")
@click.argument("source")
@click.argument("cones", nargs=-1, required=True)
@click.pass_context
def stype_command(ctx, source, cones):
    """Canonical semigroup element of a union of disjoint cones."""
    inputs = {"file": source, "cones": list(cones)}
    try:
        t = read_system(source)
        c = classify(t)
        x = stype_of(t, c, [parse_address(a) for a in cones])
        emit(Report("stype", inputs, {"coordinates": list(x.coordinates), "moduli": list(x.moduli)}), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ stype failed: {e.message}")
        emit_failure(ctx, "stype", inputs, e)
