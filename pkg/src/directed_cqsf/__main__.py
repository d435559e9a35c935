"""CLI entry point."""

from directed_cqsf.cli import cli

if __name__ == "__main__":
    cli()
