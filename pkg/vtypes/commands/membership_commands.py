import logging

import click

from vtypes.cantor_core import format_address, parse_address
from vtypes.classification import classify
from vtypes.membership import in_fix, in_stab, induced_class_permutation, witness_conjugator
from vtypes.utils.errors import VTypesError
from vtypes.utils.inputs import read_element, read_system
from vtypes.utils.reports import Report, emit, emit_failure
from vtypes.utils.sampling import make_rng, random_element
from vtypes.v_elements import format_element

logger = logging.getLogger(__name__)

membership_bp = click.Group("membership")


@membership_bp.command("member")
@click.argument("source")
@click.option("--element", "element_source", required=True, help="Element file (.vel) or @name.")
@click.option("--fix", "check_fix", is_flag=True, help="Only test membership in Fix(V,P).")
@click.option("--stab", "check_stab", is_flag=True, help="Only test membership in Stab(V,P).")
@click.option("--deep", is_flag=True, help="Re-verify Fix pointwise three levels below the pairs.")
@click.pass_context
def member_command(ctx, source, element_source, check_fix, check_stab, deep):
    """Decide whether an element lies in Fix(V,P) and/or Stab(V,P)."""
    inputs = {"file": source, "element": element_source}
    both = not check_fix and not check_stab
    try:
        t = read_system(source)
        g = read_element(element_source)
        verdicts = {"element": str(g)}
        if check_fix or both:
            verdicts["fix"] = in_fix(t, g, deep=deep)
        if check_stab or both:
            stab = in_stab(t, g)
            verdicts["stab"] = stab.member
            verdicts["relation"] = [f"{p}->{q}" for p, q in stab.relation.pairs]
            if stab.member:
                verdicts["class_permutation"] = str(induced_class_permutation(t, g))
        emit(Report("member", inputs, verdicts), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ member failed: {e.message}")
        emit_failure(ctx, "member", inputs, e)


@membership_bp.command("witness")
@click.argument("source")
@click.argument("alpha")
@click.argument("alpha2")
@click.argument("beta")
@click.argument("beta2")
@click.pass_context
def witness_command(ctx, source, alpha, alpha2, beta, beta2):
    """Element of Fix(V,P) with ALPHA -> ALPHA2 and BETA -> BETA2."""
    inputs = {"file": source, "alpha": alpha, "alpha2": alpha2, "beta": beta, "beta2": beta2}
    try:
        t = read_system(source)
        c = classify(t)
        addresses = [parse_address(a) for a in (alpha, alpha2, beta, beta2)]
        g = witness_conjugator(t, c, *addresses, budget=ctx.obj["max_carets"])
        emit(Report("witness", inputs, {
            "pairs": [f"{format_address(a)} -> {format_address(b)}" for a, b in g.pairs],
            "element": format_element(g),
            "in_fix": in_fix(t, g),
        }), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ witness failed: {e.message}")
        emit_failure(ctx, "witness", inputs, e)


@membership_bp.command("selfcheck")
@click.argument("source")
@click.option("--samples", type=click.IntRange(1), default=200, show_default=True)
@click.pass_context
def selfcheck_command(ctx, source, samples):
    """Sample random elements and cross-check the Fix and Stab tests."""
    inputs = {"file": source, "samples": samples, "seed": ctx.obj["seed"]}
    try:
        t = read_system(source)
        rng = make_rng(ctx.obj["seed"])
        disagreements = []
        in_fix_count = in_stab_count = 0
        for _ in range(samples):
            g = random_element(rng)
            fast, deep = in_fix(t, g), in_fix(t, g, deep=True)
            stab = in_stab(t, g).member
            in_fix_count += fast
            in_stab_count += stab
            if fast != deep or (fast and not stab):
                disagreements.append(str(g))
        emit(Report("selfcheck", inputs, {
            "in_fix": in_fix_count,
            "in_stab": in_stab_count,
            "disagreements": len(disagreements),
        }, disagreements), ctx.obj["json"])
    except VTypesError as e:
        logger.error(f"❌ selfcheck failed: {e.message}")
        emit_failure(ctx, "selfcheck", inputs, e)
