"""
The Newton-Puiseux cross-check verb.
"""

import click

from commands import emit, json_option, lambda_option, poly_option


@click.command()
@poly_option
@lambda_option
@json_option
def oracle(poly, lambda_spec, as_json):
    """Recompute the exponents from Puiseux branches; exit 3 on disagreement."""
    emit("oracle", poly=poly, lambda_spec=lambda_spec, as_json=as_json)
