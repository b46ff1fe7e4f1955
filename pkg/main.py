"""Main entry point for the linearity defect engine."""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from asymptotics.rees import PowerKind
from asymptotics.sequences import Variant
from cli.report import json_document, render_text, write_report
from config import AppConfig
from engine import LindEngine

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger("lind")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lind", description="Linearity defect of graded modules and of powers of ideals")
    parser.add_argument("input", help="Session file ('-' for standard input)")
    parser.add_argument("--field", help="Coefficient field override: QQ or a prime")
    parser.add_argument("--json", action="store_true", help="Print a JSON document instead of tables")
    parser.add_argument("--output", help="Also write the JSON document to this file")
    parser.add_argument("--log-level", help="Logging level (default from LIND_LOG_LEVEL)")
    parser.add_argument("--workers", type=int, help="Thread pool size for lind-seq")
    parser.add_argument("--timeout", type=float, help="Per-entry time budget for lind-seq, in seconds")
    parser.add_argument("--glind-bound", type=int, help="Upper bound for glind of the base ring")
    parser.add_argument("--max-length", type=int, help="Truncate resolutions after this many steps")
    sub = parser.add_subparsers(dest="command", required=True)

    def target(p, module=True):
        p.add_argument("--ideal", help="Name of an ideal in the session")
        if module:
            p.add_argument("--module", help="Name of a module in the session")
        return p

    target(sub.add_parser("lind", help="Linearity defect"))
    target(sub.add_parser("resolve", help="Minimal free resolution")).add_argument(
        "--betti", action="store_true", help="Print the Betti table")
    for name, help_text in (("rees", "Rees-algebra presentation"), ("threshold", "Stabilization threshold N(C)")):
        p = target(sub.add_parser(name, help=help_text))
        p.add_argument("--kind", choices=[PowerKind.POWER.value, PowerKind.GRADED_PIECE.value],
                       default=PowerKind.POWER.value)
        if name == "threshold":
            p.add_argument("--certify", action="store_true", help="Add the initial-form readings")
    p = target(sub.add_parser("lind-seq", help="lind over n = 1..max-n"))
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.POWER.value)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--threshold", action="store_true", help="Certify constancy past N(C)")
    p.add_argument("--certify", action="store_true", help="Add the initial-form readings")
    target(sub.add_parser("saturate", help="Saturation of I^n by the maximal ideal"), module=False).add_argument(
        "--power", type=int, default=1)
    p = target(sub.add_parser("sega", help="Tor_i(R/m^(q+1), M) -> Tor_i(R/m^q, M)"))
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    return parser


def apply_overrides(config: AppConfig, args: argparse.Namespace):
    """Command-line flags win over environment values."""
    if args.log_level:
        config.log_level = args.log_level.upper()
    if args.workers is not None:
        config.asymptotics.workers = max(1, args.workers)
    if args.timeout is not None:
        config.asymptotics.sequence_timeout_seconds = args.timeout
    if args.glind_bound is not None:
        config.asymptotics.glind_bound = args.glind_bound
    if args.max_length is not None:
        config.resolution.max_length = args.max_length


def read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    config = AppConfig.from_env()
    apply_overrides(config, args)
    logging.basicConfig(
        level=getattr(logging, config.log_level, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    engine = LindEngine(config)
    try:
        session = engine.load(read_input(args.input))
        result = engine.run(session, args)
    except (ValueError, OSError) as e:
        logger.error("%s failed: %s", args.command, e)
        return 2
    except Exception:
        logger.exception("Unexpected error while running %s", args.command)
        return 1

    document = json_document(result, session)
    if args.output:
        output = Path(args.output)
        if not output.is_absolute() and output.parent == Path("."):
            output = Path(config.reports.report_dir) / output
        write_report(str(output), document)
    sys.stdout.write(document if args.json else render_text(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
