"""
Command line factory and initialization.
"""

import click

from config.config import config
from commands.analysis import analysis_commands
from commands.oracle import oracle
from commands.witness import witness
from utils.logging_config import setup_logging
from utils.error_handlers import register_error_handlers


def create_cli(config_name="default"):
    """Create the gradinf command group with the given configuration."""

    @click.group(name="gradinf")
    @click.option(
        "--config",
        "config_override",
        type=click.Choice(sorted(config)),
        default=None,
        help="Configuration to run with.",
    )
    @click.pass_context
    def cli(ctx, config_override):
        """Lojasiewicz exponents at infinity of polynomials in two variables."""
        settings = config[config_override or config_name]

        # Initialize logging
        setup_logging(settings)

        ctx.obj = {"settings": settings}

    # Register commands
    for command in analysis_commands + (oracle, witness):
        cli.add_command(command)

    # Register error handlers
    register_error_handlers(cli)

    return cli
