"""Script to recompute the two worked examples and store their JSON reports."""
import argparse
import json
import logging
import sys
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from asymptotics.sequences import Variant, lind_sequence
from cli.parser import parse_input
from cli.report import write_report
from config import AppConfig
from groebner.limits import computation_limits

logger = logging.getLogger("run_examples")

# seconds per saturated power; n = 7 already takes minutes
DEFAULT_FERMAT_TIMEOUT = 1800.0

THREE_GENERATOR_INPUT = """
ring p=32003 vars=x,y,z;
ideal I = x^2, x*y, z^2;
"""

# 9973 = 1 mod 3, so x^3 - y^3 splits into linear forms
FERMAT_INPUT = """
ring p=9973 vars=x,y,z;
ideal F = x*(y^3-z^3), y*(x^3-z^3), z*(x^3-y^3);
"""


def run_three_generator(config: AppConfig, max_n: int) -> dict:
    session = parse_input(THREE_GENERATOR_INPUT)
    ideal = session.ideal("I")
    settings = config.asymptotics
    power = lind_sequence(ideal, min(max_n, 4), Variant.POWER, threshold=True, certify=True,
                          glind_bound=settings.glind_bound, workers=settings.workers,
                          window=settings.artin_rees_window, max_h=settings.artin_rees_max)
    quotient = lind_sequence(ideal, min(max_n, 3), Variant.QUOTIENT, workers=settings.workers)
    return {"power": power.to_dict(), "quotient": quotient.to_dict()}


def run_fermat(config: AppConfig, max_n: int, timeout: float) -> dict:
    session = parse_input(FERMAT_INPUT)
    ideal = session.ideal("F")
    settings = config.asymptotics
    report = lind_sequence(ideal, max_n, Variant.SATURATION_POWER, workers=settings.workers,
                           timeout_seconds=timeout,
                           saturation_steps=config.groebner.saturation_max_steps, progress=True)
    return report.to_dict()


def main():
    parser = argparse.ArgumentParser(description="Recompute the worked examples")
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--timeout", type=float, default=None,
                        help="Seconds per Fermat entry (default: LIND_SEQUENCE_TIMEOUT_SECONDS or 1800)")
    parser.add_argument("--skip-fermat", action="store_true")
    args = parser.parse_args()

    config = AppConfig.from_env()
    logging.basicConfig(level=getattr(logging, config.log_level, logging.INFO))
    output_dir = Path(config.reports.report_dir)

    with computation_limits(max_pairs=config.groebner.max_pairs):
        reports = {"three-generator": run_three_generator(config, args.max_n)}
        if not args.skip_fermat:
            timeout = args.timeout
            if timeout is None:
                timeout = config.asymptotics.sequence_timeout_seconds or DEFAULT_FERMAT_TIMEOUT
            reports["fermat"] = run_fermat(config, args.max_n, timeout)

    for name, data in reports.items():
        path = output_dir / f"{name}.json"
        write_report(str(path), json.dumps(data, indent=2, sort_keys=True) + "\n")
        logger.info("Wrote %s report to %s", name, path)
    certificate = reports["three-generator"]["power"]["certificate"]
    print(f"N = {certificate['N']}")


if __name__ == "__main__":
    main()
