"""
Command-line entry point.

This module sets up:
- Logging configuration (JSON records on stderr)
- The argument parser with one subcommand per computation
- Dispatch to the handlers and mapping of failures to exit codes

Reports go to stdout; diagnostics and errors go to stderr.
"""

import argparse
import sys
from typing import List, Optional, TextIO, Tuple

from grlie import __version__
from grlie.cli.commands import COMMANDS
from grlie.cli.exceptions import EXIT_OK, VerifyFailedError, handle_exception
from grlie.cli.formatting import FORMATS, render
from grlie.cli.verify import run_verify
from grlie.config import settings
from grlie.logging import get_logger, set_logging_context, setup_logging
from grlie.models.job import COMMANDS as COMMAND_NAMES
from grlie.models.job import JobConfig

logger = get_logger(__name__)

HELP = {
    "poincare": "Poincaré polynomial of P_n, vP_n or vP_n^+",
    "lcs-ranks": "LCS ranks by three independent extractions",
    "chen-ranks": "Chen ranks theta_k from the Alexander invariant",
    "holonomy-chen": "Chen ranks of the holonomy Lie algebra",
    "resonance": "resonance variety R^1_d of a cohomology algebra",
    "mildness": "Anick mildness criterion",
    "egf-check": "exponential generating function identities",
    "chen-formula": "Chen ranks formula verdict",
    "verify": "run the acceptance suite",
}


def _component(text: str) -> Tuple[int, int]:
    try:
        m, h = text.split("=")
        return int(m), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m=h, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grlie", description="Graded Lie invariants of finitely presented groups")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", help="family or group name (vP, vPplus, P, Pbar4, F, Z, vP3, ZZ2, ...)")
    common.add_argument("--n", type=int, help="family parameter")
    common.add_argument("--presentation", help="presentation JSON file")
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--seed", type=int, default=settings.GRLIE_SEED)
    common.add_argument("--max-degree", type=int, dest="max_degree")
    common.add_argument("--hall-budget", type=int, dest="hall_budget")
    common.add_argument("--module-budget", type=int, dest="module_budget")
    common.add_argument("--primes", type=int)

    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMAND_NAMES:
        sub = subparsers.add_parser(name, parents=[common], help=HELP[name])
        if name == "resonance":
            sub.add_argument("--depth", type=int, default=1)
        if name == "chen-formula":
            sub.add_argument("--component", type=_component, action="append", dest="components", default=[])
            sub.add_argument("--k-min", type=int, dest="k_min", default=3)
        if name == "verify":
            sub.add_argument("--quick", action="store_true")
    return parser


def _job(args: argparse.Namespace) -> JobConfig:
    values = {key: value for key, value in vars(args).items() if value is not None}
    if "components" in values:
        values["components"] = dict(values["components"])
    return JobConfig(**values)


def run(argv: Optional[List[str]] = None, stdout: TextIO = None) -> int:
    """
    Parse arguments, run one subcommand and write its report.

    Args:
        argv: arguments without the program name (defaults to sys.argv[1:])
        stdout: stream for the report (defaults to sys.stdout)

    Returns:
        The process exit code
    """
    args = build_parser().parse_args(argv)
    stdout = stdout or sys.stdout
    try:
        job = _job(args)
        set_logging_context(command=job.command, family=job.family or job.presentation)
        logger.info("running command", extra={"command": job.command})
        if job.command == "verify":
            report = run_verify(job.quick, job.seed, job.primes)
            stdout.write(render(report, job.format))
            if not report.passed:
                failed = [item.name for item in report.items if not item.passed]
                raise VerifyFailedError(f"failed items: {', '.join(failed)}")
            return EXIT_OK
        report = COMMANDS[job.command](job)
        stdout.write(render(report, job.format))
        return EXIT_OK
    except Exception as exc:
        return handle_exception(exc)


def main() -> None:
    """Console script entry point."""
    setup_logging(settings)
    sys.exit(run())


if __name__ == "__main__":
    main()
