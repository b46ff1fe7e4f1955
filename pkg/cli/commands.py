"""Command implementations behind the command line."""
import logging
import sys
from argparse import Namespace
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from algebra.free_module import FreeElement
from algebra.polynomial import PolynomialRing
from asymptotics.persistence import degree_json
from asymptotics.rees import PowerKind, ideal_power, rees_presentation
from asymptotics.sequences import Variant, lind_sequence
from asymptotics.threshold import stability_threshold
from config import AppConfig
from groebner.operations import maximal_ideal_power, saturation
from groebner.submodule import PresentedModule, Submodule
from linearity.linear_part import is_componentwise_linear, linearity_defect
from linearity.tor import sega_map
from resolutions.betti import BettiTable
from resolutions.resolution import free_resolution

from .errors import UnknownNameError
from .parser import SessionInput
from .report import CommandResult, format_rows, format_table

logger = logging.getLogger(__name__)


@dataclass
class CommandContext:
    """Everything a command needs: the session, its ring and the effective settings."""
    session: SessionInput
    ring: PolynomialRing
    config: AppConfig


def vector_text(v: FreeElement) -> str:
    return str(v.component(0)) if v.module.rank == 1 else str(v)


def _ideal(ctx: CommandContext, args: Namespace) -> Tuple[str, Submodule]:
    if not getattr(args, "ideal", None):
        raise ValueError(f"{args.command} needs --ideal")
    return args.ideal, ctx.session.ideal(args.ideal, ctx.ring)


def _module(ctx: CommandContext, args: Namespace) -> Tuple[str, PresentedModule]:
    name = getattr(args, "module", None) or getattr(args, "ideal", None)
    if not name:
        raise ValueError(f"{args.command} needs --ideal or --module")
    return name, ctx.session.module(name, ctx.ring)


def _base_module(ctx: CommandContext, args: Namespace) -> Optional[PresentedModule]:
    name = getattr(args, "module", None)
    return ctx.session.module(name, ctx.ring) if name else None


def lind_command(ctx: CommandContext, args: Namespace) -> CommandResult:
    name, module = _module(ctx, args)
    value = linearity_defect(module)
    data = {"target": name, "lind": value}
    if name in ctx.session.ideals and not getattr(args, "module", None):
        data["componentwiseLinear"] = is_componentwise_linear(ctx.session.ideal(name, ctx.ring))
    return CommandResult("lind", data, format_rows(data.items()))


def resolve_command(ctx: CommandContext, args: Namespace) -> CommandResult:
    name, module = _module(ctx, args)
    resolution = free_resolution(module, ctx.config.resolution.max_length)
    table = BettiTable.from_resolution(resolution)
    data = {
        "target": name,
        "ranks": resolution.ranks(),
        "projectiveDimension": table.projective_dimension,
        "regularity": table.regularity,
        "betti": table.as_dict(),
    }
    text = format_rows([("target", name), ("ranks", resolution.ranks()),
                        ("pd", table.projective_dimension), ("regularity", table.regularity)])
    result = CommandResult("resolve", data, text)
    if args.betti:
        result.sections["Betti table"] = table.to_text()
    return result


def rees_command(ctx: CommandContext, args: Namespace) -> CommandResult:
    name, ideal = _ideal(ctx, args)
    presentation = rees_presentation(ideal, _base_module(ctx, args), PowerKind(args.kind))
    variables = presentation.ring.variables
    kernel = [vector_text(g) for g in presentation.kernel.generators]
    data = {
        "target": name,
        "kind": presentation.kind.value,
        "reesVariables": list(variables.rees_vars),
        "reesDegrees": list(variables.rees_degrees),
        "idealGenerators": [str(g) for g in presentation.generators],
        "kernel": kernel,
    }
    rows = [(f"{w} -> {g}", f"degree ({d}, 1)")
            for w, g, d in zip(variables.rees_vars, presentation.generators, variables.rees_degrees)]
    result = CommandResult("rees", data, format_rows(rows))
    result.sections["Kernel"] = "\n".join(kernel) if kernel else "0"
    return result


def threshold_command(ctx: CommandContext, args: Namespace) -> CommandResult:
    name, ideal = _ideal(ctx, args)
    settings = ctx.config.asymptotics
    presentation = rees_presentation(ideal, _base_module(ctx, args), PowerKind(args.kind))
    certificate = stability_threshold(presentation, settings.glind_bound, args.certify,
                                      settings.artin_rees_window, settings.artin_rees_max)
    data = {"target": name, **certificate.to_dict()}
    rows = [(level.i, level.artin_rees, ", ".join(str(degree_json(c)) for c in level.persistence),
             degree_json(level.value)) for level in certificate.levels]
    text = format_rows([("target", name), ("pd", certificate.pd), ("glind bound", certificate.glind_bound),
                        ("n(0)", degree_json(certificate.n0)), ("N", degree_json(certificate.threshold))])
    result = CommandResult("threshold", data, text)
    if rows:
        result.sections["Levels"] = format_table(["i", "T(i)", "c(i,q)", "n(i)"], rows)
    return result


def lind_seq_command(ctx: CommandContext, args: Namespace) -> CommandResult:
    name, ideal = _ideal(ctx, args)
    settings = ctx.config.asymptotics
    report = lind_sequence(
        ideal, args.max_n, Variant(args.variant), _base_module(ctx, args),
        workers=settings.workers, timeout_seconds=settings.sequence_timeout_seconds,
        threshold=args.threshold, certify=args.certify, glind_bound=settings.glind_bound,
        window=settings.artin_rees_window, max_h=settings.artin_rees_max,
        saturation_steps=ctx.config.groebner.saturation_max_steps,
        progress=sys.stderr.isatty(),
    )
    data = {"target": name, **report.to_dict()}
    rows = [(n, "timeout" if v is None else v) for n, v in report.values.items()]
    summary = [("target", name), ("variant", report.variant.value)]
    if report.stable_value is not None:
        summary.append(("stable value", f"{report.stable_value} from n = {report.stabilization_index}"))
    if report.quasiperiod is not None:
        summary.append(("quasiperiod", f"{report.quasiperiod.pattern} from n = {report.quasiperiod.start}"))
    if report.certificate is not None:
        summary.append(("N", degree_json(report.certificate.threshold)))
    result = CommandResult("lind-seq", data, format_rows(summary))
    result.sections["Values"] = format_table(["n", "lind"], rows)
    return result


def saturate_command(ctx: CommandContext, args: Namespace) -> CommandResult:
    name, ideal = _ideal(ctx, args)
    power = ideal_power(ideal, args.power)
    saturated = saturation(power, maximal_ideal_power(ctx.ring, 1),
                           ctx.config.groebner.saturation_max_steps).minimal_generators()
    gens = [vector_text(g) for g in saturated.generators]
    degrees = sorted(g.internal_degree() for g in saturated.generators)
    data = {
        "target": name,
        "power": args.power,
        "generators": gens,
        "generatorDegrees": degrees,
        "minimalDegree": degrees[0] if degrees else None,
        "equalsPower": saturated.is_subset(power),
    }
    result = CommandResult("saturate", data, format_rows([(k, data[k]) for k in ("target", "power", "minimalDegree",
                                                                                "equalsPower")]))
    result.sections["Generators"] = "\n".join(gens) if gens else "0"
    return result


def sega_command(ctx: CommandContext, args: Namespace) -> CommandResult:
    name, module = _module(ctx, args)
    resolution = free_resolution(module)
    tor = sega_map(resolution, args.i, args.q)
    pieces = [{"internal": p.internal, "sourceDim": p.source_dim, "targetDim": p.target_dim, "rank": p.rank}
              for p in tor.pieces if p.source_dim or p.target_dim]
    data = {"target": name, "i": args.i, "q": args.q, "isZero": tor.is_zero, "rank": tor.rank, "pieces": pieces}
    result = CommandResult("sega", data, format_rows([(k, data[k]) for k in ("target", "i", "q", "isZero", "rank")]))
    if pieces:
        result.sections["Pieces"] = format_table(
            ["degree", "source", "target", "rank"],
            [(p["internal"], p["sourceDim"], p["targetDim"], p["rank"]) for p in pieces])
    return result


COMMANDS: Dict[str, Callable[[CommandContext, Namespace], CommandResult]] = {
    "lind": lind_command,
    "resolve": resolve_command,
    "rees": rees_command,
    "threshold": threshold_command,
    "lind-seq": lind_seq_command,
    "saturate": saturate_command,
    "sega": sega_command,
}


def run_command(ctx: CommandContext, args: Namespace) -> CommandResult:
    """
    Raises:
        UnknownNameError: for an unknown command or target name
    """
    handler = COMMANDS.get(args.command)
    if handler is None:
        raise UnknownNameError(args.command)
    logger.info("Running %s", args.command)
    return handler(ctx, args)
