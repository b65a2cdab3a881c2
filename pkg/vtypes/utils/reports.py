import json
from dataclasses import dataclass, field

import click
from rich.console import Console
from rich.table import Table

REPORT_VERSION = "1.0"


@dataclass
class Report:
    """Outcome of one command; fields serialize in declaration order."""

    command: str
    inputs: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)
    version: str = REPORT_VERSION

    def to_dict(self):
        return {
            "version": self.version,
            "command": self.command,
            "inputs": self.inputs,
            "verdicts": self.verdicts,
            "diagnostics": self.diagnostics,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), ensure_ascii=False, default=str)


def _text(value):
    if isinstance(value, (list, tuple)):
        return ", ".join(_text(v) for v in value) if value else "-"
    if isinstance(value, dict):
        return "; ".join(f"{k}: {_text(v)}" for k, v in value.items())
    if value is None:
        return "-"
    return str(value)


def emit(report, as_json=False):
    if as_json:
        click.echo(report.to_json())
        return
    table = Table(title=report.command, show_header=False)
    table.add_column("field", style="bold")
    table.add_column("value")
    for key, value in report.verdicts.items():
        table.add_row(key, _text(value))
    for message in report.diagnostics:
        table.add_row("diagnostic", _text(message))
    Console(soft_wrap=True).print(table)


def emit_failure(ctx, command, inputs, error):
    """Report a VTypesError and stop with its exit status."""
    emit(Report(command, inputs, {}, [error.to_dict()]), ctx.obj["json"])
    ctx.exit(error.exit_code)
