"""Run two quick suites through the command line entry point and print a markdown report."""
import sys

from pafiber.report_cli import main

code = main(["verify", "gluing", "--format", "markdown", "--deterministic"])
print(f"exit code {code}", file=sys.stderr)
code = main(["search", "--budget", "13", "--format", "markdown"])
print(f"exit code {code}", file=sys.stderr)
