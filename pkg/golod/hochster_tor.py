"""
Hochster Decomposition of Tor
=============================

dim Tor_{i,2j}(k[K], k) = sum over |I| = j of b̃^{j-i-1}(K_I; k), and the
moment-angle complex has dim H^l(Z_K; k) = sum over I of b̃^{l-|I|-1}(K_I; k).
Subsets are visited in colex order; I = ∅ contributes the empty complex with
b̃^{-1} = 1, which is Tor_{0,0}.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import partial
from typing import Dict, List, Optional, Tuple

try:
    from .complex_core import SimplicialComplex, full_subcomplex, popcount, submasks, vertices_of
    from .errors import CapExceededError
    from .homology import BettiVector, bounded_cache, reduced_betti
    from .linalg import FieldSpec
    from .parallel import SubsetMapper, resolve_mapper
    from .settings import AnalysisSettings
except ImportError:
    from complex_core import SimplicialComplex, full_subcomplex, popcount, submasks, vertices_of
    from errors import CapExceededError
    from homology import BettiVector, bounded_cache, reduced_betti
    from linalg import FieldSpec
    from parallel import SubsetMapper, resolve_mapper
    from settings import AnalysisSettings

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PoincareSeries:
    """dim H^l(Z_K; k) for l = 0 .. m + dim K + 1."""

    dims: Tuple[int, ...]

    def total(self) -> int:
        return sum(self.dims)

    def __getitem__(self, degree: int) -> int:
        return self.dims[degree] if 0 <= degree < len(self.dims) else 0


@dataclass
class TorTable:
    """Bigraded Tor dimensions with the per-subset breakdown behind them.

    ``entries`` and ``breakdown`` keep non-zero data only. Breakdown values are
    reduced Betti vectors of K_I indexed by cohomological degree.
    """

    field: FieldSpec
    m: int
    dim: int
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)
    breakdown: Dict[int, BettiVector] = field(default_factory=dict)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def breakdown_total(self) -> int:
        return sum(b.total for b in self.breakdown.values())

    def betti(self, mask: int) -> Optional[BettiVector]:
        return self.breakdown.get(mask)

    def poincare(self) -> PoincareSeries:
        dims = [0] * (self.m + self.dim + 2)
        for (i, j), value in self.entries.items():
            dims[2 * j - i] += value
        return PoincareSeries(tuple(dims))

    def same_dimensions(self, other: "TorTable") -> bool:
        return self.entries == other.entries

    def to_json(self) -> Dict[str, object]:
        return {
            "field": self.field.label,
            "m": self.m,
            "entries": [
                {"i": i, "j": j, "dim": value}
                for (i, j), value in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            ],
            "breakdown": [
                {"subset": list(vertices_of(mask)), "betti": betti.as_dict()}
                for mask, betti in sorted(self.breakdown.items(), key=lambda kv: (popcount(kv[0]), kv[0]))
            ],
            "poincare": list(self.poincare().dims),
        }

    def render_text(self) -> str:
        """Aligned grid: rows i, columns j."""
        if not self.entries:
            return "(empty)"
        max_i = max(i for i, _ in self.entries)
        max_j = max(j for _, j in self.entries)
        width = max(3, max(len(str(v)) for v in self.entries.values()) + 1)
        lines = [f"Tor over {self.field}  (rows i, columns j; entry dim Tor_(i,2j))"]
        lines.append("i\\j".rjust(4) + "".join(str(j).rjust(width) for j in range(max_j + 1)))
        for i in range(max_i + 1):
            cells = "".join((str(self.get(i, j)) if self.get(i, j) else ".").rjust(width)
                            for j in range(max_j + 1))
            lines.append(str(i).rjust(4) + cells)
        series = " ".join(str(d) for d in self.poincare().dims)
        lines.append(f"H*(Z_K) dims by degree: {series}")
        return "\n".join(lines)


@bounded_cache
def subset_betti(K: SimplicialComplex, k: FieldSpec, mask: int) -> BettiVector:
    """Reduced Betti numbers of the full subcomplex K_mask."""
    return reduced_betti(full_subcomplex(K, mask), k)


def _subset_betti_values(K: SimplicialComplex, k: FieldSpec, mask: int) -> Tuple[int, ...]:
    return subset_betti(K, k, mask).values


def check_subset_cap(K: SimplicialComplex, settings: AnalysisSettings) -> None:
    n = popcount(K.universe)
    if n > settings.hochster_max_m and not settings.force:
        raise CapExceededError("vertex universe size", n, settings.hochster_max_m,
                               "2^m full subcomplexes; pass --force to scan anyway")


def hochster_table(K: SimplicialComplex, k: FieldSpec,
                   settings: Optional[AnalysisSettings] = None,
                   mapper: Optional[SubsetMapper] = None) -> TorTable:
    """Assemble the bigraded Tor table from every full subcomplex.

    Raises:
        CapExceededError: If the universe exceeds ``settings.hochster_max_m``
            and ``settings.force`` is not set
    """
    settings = settings or AnalysisSettings()
    check_subset_cap(K, settings)
    mapper = resolve_mapper(mapper)

    masks = list(submasks(K.universe))
    LOGGER.info("Hochster scan over %d subsets with coefficients in %s", len(masks), k)
    results = mapper.map(partial(_subset_betti_values, K, k), masks)

    entries: Dict[Tuple[int, int], int] = defaultdict(int)
    breakdown: Dict[int, BettiVector] = {}
    for mask, values in zip(masks, results):
        betti = BettiVector(values)
        if betti.is_zero():
            continue
        breakdown[mask] = betti
        j = popcount(mask)
        for d in betti.degrees():
            entries[(j - d - 1, j)] += betti[d]
    return TorTable(field=k, m=popcount(K.universe), dim=K.dim,
                    entries=dict(entries), breakdown=breakdown)


def zk_poincare(K: SimplicialComplex, k: FieldSpec,
                settings: Optional[AnalysisSettings] = None,
                mapper: Optional[SubsetMapper] = None) -> PoincareSeries:
    """Dimensions of H^l(Z_K; k) through the degree shift l = |I| + d + 1."""
    return hochster_table(K, k, settings, mapper).poincare()


def poincare_product(a: PoincareSeries, b: PoincareSeries) -> List[int]:
    """Coefficients of the product of two series, trailing zeros dropped."""
    out = [0] * (len(a.dims) + len(b.dims) - 1)
    for x, da in enumerate(a.dims):
        for y, db in enumerate(b.dims):
            out[x + y] += da * db
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
