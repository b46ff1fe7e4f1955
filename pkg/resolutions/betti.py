"""Graded Betti numbers of a minimal resolution."""
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from algebra.monomials import Bidegree

from .errors import ResolutionError
from .resolution import Resolution


@dataclass
class BettiTable:
    """beta_{i,(a,b)} = number of generators of F_i in bidegree (a, b)."""
    entries: Dict[Tuple[int, Bidegree], int] = field(default_factory=dict)

    @classmethod
    def from_resolution(cls, resolution: Resolution) -> "BettiTable":
        """
        Raises:
            ResolutionError: if the resolution has a unit entry
        """
        if not resolution.is_minimal():
            raise ResolutionError("Betti numbers need a minimal resolution")
        entries: Dict[Tuple[int, Bidegree], int] = {}
        for i, module in enumerate(resolution.modules):
            for shift, count in Counter(module.shifts).items():
                entries[(i, shift)] = count
        return cls(entries)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def total(self, i: int) -> int:
        return sum(c for (j, _), c in self.entries.items() if j == i)

    def internal(self, i: int, degree: int) -> int:
        return sum(c for (j, s), c in self.entries.items() if j == i and s.internal == degree)

    def shifts(self, i: int) -> List[Bidegree]:
        """Multiset of bidegrees of F_i, sorted."""
        return sorted(s for (j, s), c in self.entries.items() if j == i for _ in range(c))

    @property
    def regularity(self) -> int:
        """max_i (largest internal shift of F_i) - i."""
        return max((s.internal - i for i, s in self.entries), default=0)

    def is_linear(self, degree: int) -> bool:
        """True when F_i is generated in internal degree degree + i for every i."""
        return all(s.internal == degree + i for i, s in self.entries)

    def to_text(self) -> str:
        """Triangular table, rows indexed by internal degree minus i."""
        if not self.entries:
            return "total: 0"
        pd = self.projective_dimension
        rows = sorted({s.internal - i for i, s in self.entries})
        width = max(len(str(self.total(i))) for i in range(pd + 1))
        width = max(width, len(str(pd)))
        label = max(len(f"{r}:") for r in rows + [0])
        label = max(label, len("total:"))
        lines = [" " * label + " " + " ".join(str(i).rjust(width) for i in range(pd + 1))]
        lines.append("total:".rjust(label) + " " + " ".join(str(self.total(i)).rjust(width) for i in range(pd + 1)))
        for r in rows:
            cells = []
            for i in range(pd + 1):
                count = self.internal(i, r + i)
                cells.append((str(count) if count else ".").rjust(width))
            lines.append(f"{r}:".rjust(label) + " " + " ".join(cells))
        return "\n".join(lines)

    def as_dict(self) -> Dict[str, Dict[str, int]]:
        result: Dict[str, Dict[str, int]] = {}
        for (i, s), c in sorted(self.entries.items()):
            result.setdefault(str(i), {})[f"{s.internal},{s.rees}"] = c
        return result
