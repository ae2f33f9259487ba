"""
The curve witness verb, in any number of variables.
"""

import click

from commands import emit, json_option, lambda_option, poly_option


@click.command()
@poly_option
@lambda_option
@click.option("--vars", "variables", default="x,y", help="Comma separated variable names.")
@click.option("--curve", required=True, help="Comma separated Laurent polynomials in t.")
@json_option
def witness(poly, lambda_spec, variables, curve, as_json):
    """Degrees along a meromorphic curve and the bound it gives."""
    names = tuple(name.strip() for name in variables.split(",") if name.strip())
    emit(
        "witness",
        poly=poly,
        lambda_spec=lambda_spec,
        curve=curve,
        variables=names,
        as_json=as_json,
    )
