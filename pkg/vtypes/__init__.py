import click

from vtypes.config import Config

__version__ = "0.1.0"


def create_cli():
    @click.group()
    @click.option("--json", "as_json", is_flag=True, help="Emit JSON reports.")
    @click.option("--seed", type=int, default=Config.SEED, show_default=True, help="Seed for randomized sampling.")
    @click.option("--max-carets", type=click.IntRange(0), default=Config.MAX_CARETS, show_default=True,
                  help="Caret budget of matched decomposition searches.")
    @click.option("--log-level", default=Config.LOG_LEVEL, show_default=True,
                  type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False))
    @click.version_option(__version__)
    @click.pass_context
    def cli(ctx, as_json, seed, max_carets, log_level):
        """Type systems on binary addresses and their stabilizers in Thompson's group V."""
        from vtypes.utils.logging_setup import configure_logging

        configure_logging(log_level)
        ctx.ensure_object(dict)
        ctx.obj.update(json=as_json, seed=seed, max_carets=max_carets)

    # Register command groups
    from vtypes.commands.system_commands import system_bp
    from vtypes.commands.structure_commands import structure_bp
    from vtypes.commands.semigroup_commands import semigroup_bp
    from vtypes.commands.membership_commands import membership_bp
    from vtypes.commands.enumeration_commands import enumeration_bp
    from vtypes.commands.family_commands import family_bp

    for bp in (system_bp, structure_bp, semigroup_bp, membership_bp, enumeration_bp, family_bp):
        for name, command in bp.commands.items():
            cli.add_command(command, name)

    return cli
