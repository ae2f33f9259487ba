"""
Error handlers for the command line.
"""

import logging

import click

from utils.exceptions import GradinfError, ParseError
from utils.report import render_text


def error_document(error: GradinfError) -> dict:
    """The error body printed in place of a report."""
    body = {"kind": error.kind, "message": str(error), "exit_code": error.exit_code}
    if isinstance(error, ParseError) and error.column:
        body["column"] = error.column
    return {"error": body}


def register_error_handlers(cli):
    """Turn uncaught GradinfError into an error document and its exit code."""
    invoke = cli.invoke

    def guarded_invoke(ctx):
        try:
            return invoke(ctx)
        except GradinfError as error:
            logging.error("Command failed: %s", error)
            click.echo(render_text(error_document(error)), err=True)
            ctx.exit(error.exit_code)
            return None

    cli.invoke = guarded_invoke
