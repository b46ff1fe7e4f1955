"""lind of the modules I^n M, I^n M/I^{n+1} M, M/I^n M and of saturated powers, over a range of n."""
import contextvars
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from groebner.errors import ComputationLimitError
from groebner.limits import computation_limits
from groebner.operations import DEFAULT_SATURATION_STEPS, maximal_ideal_power, saturation
from groebner.submodule import PresentedModule, Submodule
from linearity.errors import LiftingConditionError
from linearity.linear_part import linearity_defect
from linearity.mapping_cone import Inclusion, mapping_cone_lind

from .errors import ThresholdViolation
from .persistence import NEG_INF, degree_json
from .rees import PowerKind, ideal_power, module_power, rees_presentation, unit_module
from .threshold import DEFAULT_MAX_H, DEFAULT_WINDOW, StabilityCertificate, stability_threshold

logger = logging.getLogger(__name__)


class Variant(str, Enum):
    POWER = "power"
    GRADED_PIECE = "graded-piece"
    QUOTIENT = "quotient"
    SATURATION_POWER = "saturation-power"


@dataclass
class Quasiperiod:
    period: int
    start: int
    pattern: List[int]

    def to_dict(self) -> dict:
        return {"period": self.period, "start": self.start, "pattern": list(self.pattern)}


@dataclass
class AsymptoticReport:
    """Computed lind values by n, with the observed tail behaviour."""
    variant: Variant
    values: Dict[int, Optional[int]]
    stable_value: Optional[int] = None
    stabilization_index: Optional[int] = None
    quasiperiod: Optional[Quasiperiod] = None
    certificate: Optional[StabilityCertificate] = None
    timed_out: List[int] = field(default_factory=list)
    extras: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        data = {
            "variant": self.variant.value,
            "values": {str(n): v for n, v in sorted(self.values.items())},
            "stableValue": self.stable_value,
            "stabilizationIndex": self.stabilization_index,
            "quasiperiod": self.quasiperiod.to_dict() if self.quasiperiod else None,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "timedOut": list(self.timed_out),
        }
        data.update(self.extras)
        return data


def _computed_tail(values: Dict[int, Optional[int]]) -> List[Tuple[int, int]]:
    """(n, value) after the last missing entry."""
    tail: List[Tuple[int, int]] = []
    for n in sorted(values):
        if values[n] is None:
            tail = []
        else:
            tail.append((n, values[n]))
    return tail


def detect_stable(values: Dict[int, Optional[int]]) -> Tuple[Optional[int], Optional[int]]:
    """
    The constant value of the longest constant tail and where it starts,
    when that tail holds at least two entries.
    """
    tail = _computed_tail(values)
    if len(tail) < 2:
        return None, None
    last = tail[-1][1]
    start = len(tail) - 1
    while start > 0 and tail[start - 1][1] == last:
        start -= 1
    if len(tail) - start < 2:
        return None, None
    return last, tail[start][0]


def detect_quasiperiod(values: Dict[int, Optional[int]]) -> Optional[Quasiperiod]:
    """
    Smallest period p >= 2 such that some tail of the computed values repeats
    with period p and covers two full periods. Constant tails are not reported.
    """
    tail = _computed_tail(values)
    seq = [v for _, v in tail]
    for period in range(2, len(seq) // 2 + 1):
        start = len(seq) - 2 * period
        while start > 0 and seq[start - 1] == seq[start - 1 + period]:
            start -= 1
        window = seq[start:]
        if any(window[k] != window[k + period] for k in range(len(window) - period)):
            continue
        pattern = window[:period]
        if len(set(pattern)) == 1:
            continue
        return Quasiperiod(period, tail[start][0], pattern)
    return None


def _entry_module(ideal: Submodule, module: PresentedModule, variant: Variant, n: int,
                  saturation_steps: int) -> Tuple[PresentedModule, Optional[Submodule]]:
    if variant == Variant.SATURATION_POWER:
        power = ideal_power(ideal, n)
        saturated = saturation(power, maximal_ideal_power(ideal.ring, 1), saturation_steps).minimal_generators()
        return PresentedModule.from_submodule(saturated), saturated
    return module_power(ideal, n, module, PowerKind(variant.value)), None


def lind_sequence(ideal: Submodule, n_max: int, variant: Variant = Variant.POWER,
                  module: Optional[PresentedModule] = None, workers: int = 1,
                  timeout_seconds: float = 0, threshold: bool = False, certify: bool = False,
                  glind_bound: Optional[int] = None, window: int = DEFAULT_WINDOW,
                  max_h: int = DEFAULT_MAX_H, saturation_steps: int = DEFAULT_SATURATION_STEPS,
                  progress: bool = False) -> AsymptoticReport:
    """
    Compute lind for n = 1..n_max.

    Args:
        ideal: The homogeneous ideal I
        n_max: Last power
        variant: Which module family
        module: M (default: the ring itself); ignored for saturated powers
        workers: Thread pool size, entries are assembled by n
        timeout_seconds: Per-entry budget, 0 for none; late entries are recorded as None
        threshold: Compute the stability certificate (power and graded-piece only)
        certify: Add the initial-form readings to the certificate
        glind_bound: Passed to stability_threshold
        progress: Show a progress bar

    Raises:
        ThresholdViolation: if the values move past the certified threshold
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    module = module or unit_module(ideal.ring)

    def entry(n: int):
        with computation_limits(timeout_seconds=timeout_seconds or None):
            presented, saturated = _entry_module(ideal, module, variant, n, saturation_steps)
            value = linearity_defect(presented)
        return n, value, saturated

    values: Dict[int, Optional[int]] = {}
    timed_out: List[int] = []
    saturated_powers: Dict[int, Submodule] = {}
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = {pool.submit(contextvars.copy_context().run, entry, n): n for n in range(1, n_max + 1)}
        for future in tqdm(as_completed(futures), total=len(futures), disable=not progress, desc=variant.value):
            n = futures[future]
            try:
                _, value, saturated = future.result()
            except ComputationLimitError as e:
                logger.warning("Entry n=%d stopped: %s", n, e)
                values[n] = None
                timed_out.append(n)
                continue
            values[n] = value
            if saturated is not None:
                saturated_powers[n] = saturated
            logger.info("%s n=%d: lind = %d", variant.value, n, value)

    report = AsymptoticReport(variant, dict(sorted(values.items())), timed_out=sorted(timed_out))
    report.stable_value, report.stabilization_index = detect_stable(values)
    report.quasiperiod = detect_quasiperiod(values)

    if variant == Variant.SATURATION_POWER:
        report.extras["minimalDegrees"] = {
            str(n): min(g.internal_degree() for g in sat.generators) for n, sat in sorted(saturated_powers.items())
        }
    if variant == Variant.QUOTIENT:
        report.extras["mappingCone"] = _mapping_cone_checks(ideal, module, values)
    if threshold and variant in (Variant.POWER, Variant.GRADED_PIECE):
        presentation = rees_presentation(ideal, module, PowerKind(variant.value))
        report.certificate = stability_threshold(presentation, glind_bound, certify, window, max_h)
        _check_constancy(report.certificate.threshold, values)
    return report


def _mapping_cone_checks(ideal: Submodule, module: PresentedModule, values: Dict[int, Optional[int]]) -> dict:
    """Compare lind(M/I^n M) with max(lind M, lind I^n M + 1) where the lift lands in m^2."""
    checks = {}
    basis = [module.free.basis(k) for k in range(module.free.rank)]
    for n, value in sorted(values.items()):
        if value is None:
            continue
        gens = [p * b for p in ideal_power(ideal, n).polynomials() for b in basis]
        try:
            cone = mapping_cone_lind(Inclusion(module, gens))
        except LiftingConditionError as e:
            checks[str(n)] = {"liftingFailsAt": e.degree}
            continue
        checks[str(n)] = {"predicted": cone.predicted, "agrees": cone.predicted == value}
    return checks


def _check_constancy(threshold, values: Dict[int, Optional[int]]):
    start = 1 if threshold == NEG_INF else max(1, int(threshold))
    tail = [v for n, v in sorted(values.items()) if n >= start and v is not None]
    if len(set(tail)) > 1:
        raise ThresholdViolation(degree_json(threshold), tail)
