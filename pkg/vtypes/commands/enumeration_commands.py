import logging

import click

from vtypes.enumeration import MAX_LABELS, census, verify_classification, verify_stable_subset_counts, write_census_csv
from vtypes.utils.reports import Report, emit

logger = logging.getLogger(__name__)

enumeration_bp = click.Group("enumeration")


@enumeration_bp.command("enumerate")
@click.option("--max-labels", type=click.IntRange(1, MAX_LABELS), required=True)
@click.option("--simple-only", is_flag=True, help="Keep only simple systems in the census.")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, writable=True), help="Write the census as CSV.")
@click.option("--workers", type=click.IntRange(1), default=None, help="Worker processes (default VTYPES_THREADS).")
@click.pass_context
def enumerate_command(ctx, max_labels, simple_only, csv_path, workers):
    """Census of all small reduced type systems, checking the classification theorem."""
    inputs = {"max_labels": max_labels, "simple_only": simple_only}
    rows = census(max_labels, workers=workers)
    classification = verify_classification(max_labels, rows=rows)
    subsets = verify_stable_subset_counts(max_labels, rows=rows)
    if simple_only:
        rows = [r for r in rows if r.simple]

    kinds = {}
    for row in rows:
        kinds[row.kind] = kinds.get(row.kind, 0) + 1

    if csv_path:
        write_census_csv(rows, csv_path)
        logger.info(f"📤 census written to {csv_path}")

    diagnostics = classification.violations + subsets.violations
    for message in diagnostics:
        logger.error(f"❌ {message}")
    emit(Report("enumerate", inputs, {
        "systems": len(rows),
        "kinds": dict(sorted(kinds.items())),
        "simple": classification.simple,
        "simple_kinds": dict(sorted(classification.counts.items())),
        "stable_subset_counts": {str(k): v for k, v in sorted(subsets.counts.items())},
        "theorem_holds": classification.ok and subsets.ok,
    }, diagnostics), ctx.obj["json"])
