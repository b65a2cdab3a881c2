from vtypes import create_cli

cli = create_cli()  # Factory builds the command group

if __name__ == "__main__":
    cli(prog_name="vtypes")
