"""
Main entry point for the command line.
"""

from app import create_cli

cli = create_cli("production")

if __name__ == "__main__":
    cli(prog_name="gradinf")  # pylint: disable=no-value-for-parameter
