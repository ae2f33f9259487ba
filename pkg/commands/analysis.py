"""
Classifier verbs: analyze, exponent, fiber, compare and resultant.
"""

import click

from commands import emit, json_option, lambda_option, poly_option


@click.command()
@poly_option
@json_option
def analyze(poly, as_json):
    """Full report: exponent function, critical values, comparisons."""
    emit("analyze", poly=poly, as_json=as_json)


@click.command()
@poly_option
@lambda_option
@json_option
def exponent(poly, lambda_spec, as_json):
    """The exponent near one fiber, or the generic value."""
    emit("exponent", poly=poly, lambda_spec=lambda_spec, as_json=as_json)


@click.command()
@poly_option
@lambda_option
@json_option
def fiber(poly, lambda_spec, as_json):
    """The exponent of the gradient on the fiber itself."""
    emit("fiber", poly=poly, lambda_spec=lambda_spec, as_json=as_json)


@click.command()
@poly_option
@lambda_option
@json_option
def compare(poly, lambda_spec, as_json):
    """Exponent near the fiber against the exponent on it."""
    emit("compare", poly=poly, lambda_spec=lambda_spec, as_json=as_json)


@click.command()
@poly_option
@json_option
def resultant(poly, as_json):
    """The resultant profile of the normal form."""
    emit("resultant", poly=poly, as_json=as_json)


analysis_commands = (analyze, exponent, fiber, compare, resultant)
