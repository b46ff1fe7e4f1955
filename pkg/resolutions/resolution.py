"""Graded free resolutions: construction, minimization and syzygy modules."""
import logging
from typing import List, Optional

from algebra.free_module import FreeElement, FreeModule
from algebra.polynomial import Polynomial
from groebner.submodule import PresentedModule, Submodule

from .errors import ResolutionError
from .maps import ChainComplex, ModuleMap

logger = logging.getLogger(__name__)


class Resolution(ChainComplex):
    """A free resolution F_0 <- F_1 <- ... of a presented module."""

    def __init__(self, maps, module: PresentedModule, base: Optional[FreeModule] = None, minimal: bool = False):
        super().__init__(maps, base if base is not None else module.free)
        self.module_resolved = module
        self.minimal = minimal

    def is_minimal(self) -> bool:
        return all(not d.constant_entries() for d in self.maps)

    def ranks(self) -> List[int]:
        return [m.rank for m in self.modules[:self.length + 1]]


def free_resolution(module: PresentedModule, max_length: Optional[int] = None,
                    minimal: bool = True) -> Resolution:
    """
    Resolve a graded module by iterated syzygies.

    Each step maps onto minimal generators of the previous syzygy module,
    using a Schreyer-induced order on the new free module. Unit entries that
    a non-minimal presentation introduces are removed by ``minimize``.

    Args:
        module: Presented module, relations homogeneous
        max_length: Stop after this many differentials (default: number of variables)
        minimal: Prune unit entries afterwards

    Returns:
        Resolution of the module
    """
    ring = module.ring
    limit = ring.nvars if max_length is None else max_length
    maps: List[ModuleMap] = []
    target = module.free
    current = module.relations.minimal_generators()
    while not current.is_zero() and len(maps) < limit:
        source = current.source_module()
        maps.append(ModuleMap(source, target, current.generators))
        syz = current.syzygies()
        current = Submodule(source, [FreeElement(source, v.terms) for v in syz.generators], syz.order)
        target = source
        logger.debug("Resolution step %d: rank %d", len(maps), source.rank)
    if not current.is_zero():
        logger.info("Resolution truncated at length %d", limit)
    result = Resolution(maps, module, module.free)
    return minimize(result) if minimal else result


def _constant_unit(column_entries: List[List[Polynomial]]):
    for c, column in enumerate(column_entries):
        for r, entry in enumerate(column):
            if not entry.is_zero() and entry.is_constant():
                return r, c, entry
    return None


def minimize(resolution: Resolution) -> Resolution:
    """
    Remove unit entries: for a unit a at (r, c) in ∂_i, replace ∂_i by
    ∂[r'][c'] - ∂[r'][c] a^{-1} ∂[r][c'] without row r and column c, drop
    row c of ∂_{i+1} and column r of ∂_{i-1}. Repeats until no unit is left.
    """
    ring = resolution.ring
    field = ring.field
    shifts = [list(m.shifts) for m in resolution.modules]
    matrices = [[col.components() for col in d.columns] for d in resolution.maps]
    pruned = 0
    while True:
        step = None
        for i, columns in enumerate(matrices):
            unit = _constant_unit(columns)
            if unit is not None:
                step = (i, unit)
                break
        if step is None:
            break
        i, (r, c, a) = step
        inverse = field.inv(a.terms[ring.one_exps])
        pivot = matrices[i][c]
        updated = []
        for c2, column in enumerate(matrices[i]):
            if c2 == c:
                continue
            factor = column[r].scale(inverse)
            updated.append([column[k] - factor * pivot[k] for k in range(len(column)) if k != r])
        matrices[i] = updated
        if i + 1 < len(matrices):
            matrices[i + 1] = [[v for k, v in enumerate(column) if k != c] for column in matrices[i + 1]]
        if i >= 1:
            del matrices[i - 1][r]
        shifts[i + 1].pop(c)
        shifts[i].pop(r)
        pruned += 1

    modules = [FreeModule(ring, tuple(s)) for s in shifts]
    maps = [ModuleMap(modules[i + 1], modules[i], tuple(modules[i].element(col) for col in columns))
            for i, columns in enumerate(matrices)]
    while maps and maps[-1].source.rank == 0:
        maps.pop()
    if pruned:
        logger.debug("Minimization removed %d unit entries", pruned)
    return Resolution(maps, resolution.module_resolved, modules[0], minimal=True)


def syzygy_module(resolution: Resolution, i: int) -> Submodule:
    """
    The i-th syzygy module M_i = im(∂_i) ⊆ F_{i-1}.

    Raises:
        ResolutionError: for i < 1 or i beyond length + 1
    """
    if i < 1 or i > resolution.length + 1:
        raise ResolutionError(f"Syzygy index {i} out of range 1..{resolution.length + 1}")
    d = resolution.differential(i)
    target = resolution.module(i - 1)
    if d is None:
        return Submodule(target)
    return Submodule(target, d.columns)


