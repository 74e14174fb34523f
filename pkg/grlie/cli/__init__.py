"""
Command-line layer: subcommands, rendering, exit codes and the acceptance suite.
"""
