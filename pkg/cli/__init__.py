"""
Command-line surface for orbitspec
"""

from .main import CliInvocation, Subcommand, dispatch, exit_code_for, main, print_catalog, run_cli

__all__ = ["CliInvocation", "Subcommand", "dispatch", "exit_code_for", "main", "print_catalog", "run_cli"]
