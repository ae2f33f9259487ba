"""
Command line verbs, grouped like the services they call.
"""

import click

from config.config import Config
from services.command_service import Command, CommandService

poly_option = click.option("--poly", required=True, help="Polynomial, e.g. 'y^3 + x*y^2 + y'.")
lambda_option = click.option(
    "--lambda", "lambda_spec", help="Fiber value: a rational, root(p(t)) or generic."
)
json_option = click.option("--json", "as_json", is_flag=True, help="Print the JSON document.")


def emit(verb: str, **fields) -> None:
    """Run one verb and exit with its code."""
    ctx = click.get_current_context()
    settings = (ctx.obj or {}).get("settings", Config)
    code, output = CommandService.run_command(Command(verb, **fields), settings)
    click.echo(output)
    ctx.exit(code)
