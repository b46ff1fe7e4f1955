"""Homogeneous maps of free modules and chain complexes of free modules."""
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from algebra.errors import RingMismatchError
from algebra.free_module import FreeElement, FreeModule
from algebra.polynomial import Polynomial
from groebner.submodule import Submodule

from .errors import ResolutionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ModuleMap:
    """
    A map F -> G given by the images of the basis of F (its columns).
    """
    source: FreeModule
    target: FreeModule
    columns: Tuple[FreeElement, ...]

    def __post_init__(self):
        if len(self.columns) != self.source.rank:
            raise ResolutionError(f"Map needs {self.source.rank} columns, got {len(self.columns)}")
        if self.source.ring != self.target.ring:
            raise RingMismatchError("Source and target of a map live over different rings")
        object.__setattr__(self, "columns", tuple(self.target.rebase(c) for c in self.columns))

    @classmethod
    def from_matrix(cls, source: FreeModule, target: FreeModule,
                    rows: Sequence[Sequence[Polynomial]]) -> "ModuleMap":
        columns = [target.element([rows[r][c] for r in range(target.rank)]) for c in range(source.rank)]
        return cls(source, target, tuple(columns))

    @classmethod
    def zero(cls, source: FreeModule, target: FreeModule) -> "ModuleMap":
        return cls(source, target, tuple(target.zero() for _ in range(source.rank)))

    def entry(self, r: int, c: int) -> Polynomial:
        return self.columns[c].component(r)

    def matrix(self) -> List[List[Polynomial]]:
        cols = [c.components() for c in self.columns]
        return [[cols[c][r] for c in range(self.source.rank)] for r in range(self.target.rank)]

    def apply(self, v: FreeElement) -> FreeElement:
        result = self.target.zero()
        for c, coeff in enumerate(v.components()):
            if not coeff.is_zero():
                result = result + coeff * self.columns[c]
        return result

    def compose(self, inner: "ModuleMap") -> "ModuleMap":
        """self ∘ inner."""
        if not inner.target.same_underlying(self.source):
            raise ResolutionError("Maps are not composable")
        return ModuleMap(inner.source, self.target, tuple(self.apply(c) for c in inner.columns))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.columns)

    def is_homogeneous(self) -> bool:
        """True when every column has the bidegree of its source generator."""
        for c, column in enumerate(self.columns):
            if column.is_zero():
                continue
            if column.bidegree() != self.source.shifts[c]:
                return False
        return True

    def constant_entries(self) -> List[Tuple[int, int]]:
        """(row, column) positions holding a nonzero constant."""
        found = []
        for c, column in enumerate(self.columns):
            for r, comp in enumerate(column.components()):
                if not comp.is_zero() and comp.is_constant():
                    found.append((r, c))
        return found

    def map_entries(self, transform: Callable[[Polynomial], Polynomial]) -> "ModuleMap":
        columns = [self.target.element([transform(p) for p in col.components()]) for col in self.columns]
        return ModuleMap(self.source, self.target, tuple(columns))

    def image(self) -> Submodule:
        return Submodule(self.target, self.columns)

    def kernel(self) -> Submodule:
        """Minimal generators of the kernel, as a submodule of the source."""
        syz = self.image().syzygies()
        return Submodule(self.source, [FreeElement(self.source, v.terms) for v in syz.generators])

    def __str__(self) -> str:
        rows = self.matrix()
        if not rows or not self.source.rank:
            return f"0 : rank {self.source.rank} -> rank {self.target.rank}"
        return "\n".join("| " + "  ".join(str(p) for p in row) + " |" for row in rows)


class ChainComplex:
    """
    F_0 <- F_1 <- ... with ``maps[i-1]`` the differential F_i -> F_{i-1}.
    """

    def __init__(self, maps: Sequence[ModuleMap], base: Optional[FreeModule] = None):
        self.maps: List[ModuleMap] = list(maps)
        if not self.maps and base is None:
            raise ResolutionError("A complex without maps needs its module F_0")
        self.base = base if base is not None else self.maps[0].target
        for i in range(1, len(self.maps)):
            if not self.maps[i].target.same_underlying(self.maps[i - 1].source):
                raise ResolutionError(f"Differential {i + 1} does not land in F_{i}")

    @property
    def ring(self):
        return self.base.ring

    @property
    def modules(self) -> List[FreeModule]:
        return [self.base] + [d.source for d in self.maps]

    def module(self, i: int) -> FreeModule:
        modules = self.modules
        if 0 <= i < len(modules):
            return modules[i]
        return FreeModule(self.ring, ())

    def differential(self, i: int) -> Optional[ModuleMap]:
        """The map F_i -> F_{i-1} for 1 <= i <= len(maps)."""
        if 1 <= i <= len(self.maps):
            return self.maps[i - 1]
        return None

    @property
    def length(self) -> int:
        """Largest i with F_i nonzero (0 for an empty complex)."""
        modules = self.modules
        for i in range(len(modules) - 1, -1, -1):
            if modules[i].rank:
                return i
        return 0

    def is_complex(self) -> bool:
        for i in range(1, len(self.maps)):
            if not self.maps[i - 1].compose(self.maps[i]).is_zero():
                return False
        return True

    def homology_vanishes(self, i: int) -> bool:
        """
        Decide H_i = ker ∂_i / im ∂_{i+1} = 0 by Gröbner membership of the
        kernel generators in the image.
        """
        if i < 0:
            raise ResolutionError("Homology index must be non-negative")
        module = self.module(i)
        if module.rank == 0:
            return True
        d = self.differential(i)
        if i == 0 or d is None:
            cycles = [module.basis(k) for k in range(module.rank)]
        else:
            cycles = list(d.kernel().generators)
        following = self.differential(i + 1)
        image = following.image() if following is not None else Submodule(module)
        image = Submodule(module, [FreeElement(module, v.terms) for v in image.generators])
        vanishes = all(image.contains(FreeElement(module, z.terms)) for z in cycles)
        logger.debug("H_%d over %d cycles: %s", i, len(cycles), "zero" if vanishes else "nonzero")
        return vanishes

    def __str__(self) -> str:
        return " <- ".join(str(m.rank) for m in self.modules)
