"""
Koszul Complex Tor Oracle
=========================

Computes Tor(k[K], k) directly as the homology of k[K] ⊗ Λ[u_1 .. u_m] with
∂(u_S v_T) = Σ_j (-1)^(j-1) u_(S - s_j) v_(T ∪ s_j), where s_j is the j-th
element of S ascending and v_(T ∪ s_j) = 0 unless T ∪ s_j is a face.

Only squarefree multidegrees d are built: every other multidegree of the
Stanley-Reisner Koszul complex is acyclic. In multidegree d the basis is
u_(d - T) v_T over the faces T ⊆ d, with homological degree i = |d| - |T|.
Degrees follow |u_i| = 1, |v_i| = 2.

Nothing here calls the Hochster or cross-product code; the two are compared in
the tests.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import partial
from typing import Dict, List, Optional, Tuple

import numpy as np

try:
    from .complex_core import SimplicialComplex, popcount, submasks, vertices_of
    from .errors import CapExceededError, ConsistencyError
    from .hochster_tor import TorTable
    from .homology import BettiVector, bounded_cache
    from .linalg import FieldSpec, coerce, independent_columns, matmul, nullspace, rank
    from .parallel import SubsetMapper, resolve_mapper
    from .settings import AnalysisSettings
except ImportError:
    from complex_core import SimplicialComplex, popcount, submasks, vertices_of
    from errors import CapExceededError, ConsistencyError
    from hochster_tor import TorTable
    from homology import BettiVector, bounded_cache
    from linalg import FieldSpec, coerce, independent_columns, matmul, nullspace, rank
    from parallel import SubsetMapper, resolve_mapper
    from settings import AnalysisSettings

LOGGER = logging.getLogger(__name__)

PairKey = Tuple[int, int, int, int]


@dataclass(frozen=True)
class KoszulComplexData:
    """The Koszul complex of k[K] in one squarefree multidegree.

    ``bases[i]`` lists the faces T (as masks, colex order) spanning degree i;
    ``differentials[i]`` maps degree i to degree i - 1 with rows following
    ``bases[i - 1]``.
    """

    multidegree: int
    bases: Dict[int, Tuple[int, ...]]
    differentials: Dict[int, np.ndarray]

    @property
    def length(self) -> int:
        return popcount(self.multidegree)

    def size(self, i: int) -> int:
        return len(self.bases.get(i, ()))

    def differential(self, i: int) -> np.ndarray:
        if i in self.differentials:
            return self.differentials[i]
        return np.zeros((self.size(i - 1), self.size(i)), dtype=np.int64)

    def dimension(self) -> int:
        return sum(len(b) for b in self.bases.values())


def koszul_complex(K: SimplicialComplex, d: int) -> KoszulComplexData:
    """Build the multidegree-``d`` strand.

    Raises:
        ValueError: If ``d`` leaves the vertex universe
        ConsistencyError: If ∂∂ is non-zero
    """
    if d & ~K.universe:
        raise ValueError(f"multidegree {list(vertices_of(d))} leaves the vertex universe")
    n = popcount(d)
    grouped: Dict[int, List[int]] = defaultdict(list)
    for T in submasks(d):
        if T in K.face_set:
            grouped[n - popcount(T)].append(T)
    bases = {i: tuple(faces) for i, faces in grouped.items()}

    differentials: Dict[int, np.ndarray] = {}
    for i, basis in bases.items():
        if i == 0 or i - 1 not in bases:
            continue
        rows = {T: r for r, T in enumerate(bases[i - 1])}
        matrix = np.zeros((len(rows), len(basis)), dtype=np.int64)
        for col, T in enumerate(basis):
            for j, s in enumerate(vertices_of(d & ~T)):
                target = T | (1 << (s - 1))
                if target in rows:
                    matrix[rows[target], col] = -1 if j % 2 else 1
        differentials[i] = matrix

    for i in differentials:
        if i - 1 in differentials and np.any(differentials[i - 1] @ differentials[i]):
            raise ConsistencyError(
                f"Koszul differential squares to non-zero in multidegree {list(vertices_of(d))}, degree {i}")
    return KoszulComplexData(multidegree=d, bases=bases, differentials=differentials)


@bounded_cache
def cached_koszul_complex(K: SimplicialComplex, d: int) -> KoszulComplexData:
    return koszul_complex(K, d)


def _homology_dims(K: SimplicialComplex, k: FieldSpec, d: int) -> Tuple[int, ...]:
    """dim H_i of the strand for i = 0 .. |d|."""
    kc = cached_koszul_complex(K, d)
    ranks = {i: rank(m, k) for i, m in kc.differentials.items()}
    return tuple(kc.size(i) - ranks.get(i, 0) - ranks.get(i + 1, 0)
                 for i in range(kc.length + 1))


def check_oracle_cap(K: SimplicialComplex, settings: AnalysisSettings) -> None:
    n = popcount(K.universe)
    if n > settings.oracle_max_m:
        raise CapExceededError("vertex universe size", n, settings.oracle_max_m,
                               "the Koszul oracle is a small-instance cross-check")


def koszul_tor_table(K: SimplicialComplex, k: FieldSpec,
                     settings: Optional[AnalysisSettings] = None,
                     mapper: Optional[SubsetMapper] = None) -> TorTable:
    """Tor_(i,2j) from Koszul homology, laid out like ``hochster_table``.

    The breakdown stores H_i of multidegree d as a reduced Betti number in
    degree |d| - i - 1, so it compares entry by entry with the Hochster
    breakdown.

    Raises:
        CapExceededError: If the universe exceeds ``settings.oracle_max_m``;
            ``force`` does not lift this cap
    """
    settings = settings or AnalysisSettings()
    check_oracle_cap(K, settings)
    mapper = resolve_mapper(mapper)

    degrees = list(submasks(K.universe))
    LOGGER.info("Koszul oracle over %d multidegrees with coefficients in %s", len(degrees), k)
    results = mapper.map(partial(_homology_dims, K, k), degrees)

    entries: Dict[Tuple[int, int], int] = defaultdict(int)
    breakdown: Dict[int, BettiVector] = {}
    for d, dims in zip(degrees, results):
        if not any(dims):
            continue
        n = popcount(d)
        values = [0] * (n + 1)
        for i, h in enumerate(dims):
            if h:
                entries[(i, n)] += h
                values[n - i] = h
        while values and values[-1] == 0:
            values.pop()
        breakdown[d] = BettiVector(tuple(values))
    return TorTable(field=k, m=popcount(K.universe), dim=K.dim,
                    entries=dict(entries), breakdown=breakdown)


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------

def exterior_sign(S1: int, S2: int) -> int:
    """Sign of u_S1 ∧ u_S2 = ± u_(S1 ∪ S2): one factor -1 per x ∈ S1, y ∈ S2 with x > y."""
    swaps = sum(popcount(S1 >> y) for y in vertices_of(S2))
    return -1 if swaps % 2 else 1


def multiply_basis(K: SimplicialComplex, d1: int, T1: int,
                   d2: int, T2: int) -> Optional[Tuple[int, int]]:
    """(T, sign) with u_(d1-T1) v_T1 · u_(d2-T2) v_T2 = sign · u_(d-T) v_T.

    Returns None when the product is zero in k[K] ⊗ Λ or leaves the
    squarefree strands (overlapping multidegrees).
    """
    if d1 & d2:
        return None
    T = T1 | T2
    if T not in K.face_set:
        return None
    return T, exterior_sign(d1 & ~T1, d2 & ~T2)


@dataclass(frozen=True)
class KoszulClasses:
    """Cycles representing a basis of H_i in one multidegree, plus the boundaries."""

    multidegree: int
    degree: int
    cycles: np.ndarray
    boundaries: np.ndarray

    @property
    def rank(self) -> int:
        return self.cycles.shape[1]


@bounded_cache
def koszul_classes(K: SimplicialComplex, k: FieldSpec, d: int, i: int) -> KoszulClasses:
    kc = cached_koszul_complex(K, d)
    n = kc.size(i)
    if n == 0:
        empty = k.zeros((0, 0))
        return KoszulClasses(d, i, empty, empty)
    boundaries = coerce(kc.differential(i + 1), k)
    cycles = nullspace(kc.differential(i), k)
    offset = boundaries.shape[1]
    chosen = [c - offset for c in independent_columns(np.hstack([boundaries, cycles]), k) if c >= offset]
    return KoszulClasses(d, i, cycles[:, chosen], boundaries)


def _product_matrix(K: SimplicialComplex, d1: int, i1: int, d2: int, i2: int) -> np.ndarray:
    """Chain-level multiplication C_i1(d1) ⊗ C_i2(d2) → C_(i1+i2)(d1 ∪ d2); columns a-major."""
    left = cached_koszul_complex(K, d1).bases.get(i1, ())
    right = cached_koszul_complex(K, d2).bases.get(i2, ())
    target = cached_koszul_complex(K, d1 | d2).bases.get(i1 + i2, ())
    rows = {T: r for r, T in enumerate(target)}
    matrix = np.zeros((len(target), len(left) * len(right)), dtype=np.int64)
    for a, T1 in enumerate(left):
        for b, T2 in enumerate(right):
            hit = multiply_basis(K, d1, T1, d2, T2)
            if hit is not None:
                T, sign = hit
                matrix[rows[T], a * len(right) + b] = sign
    return matrix


def multiply_classes(K: SimplicialComplex, k: FieldSpec, d1: int, i1: int,
                     d2: int, i2: int) -> np.ndarray:
    """Products of every pair of class representatives, as chains of degree i1 + i2."""
    left = koszul_classes(K, k, d1, i1)
    right = koszul_classes(K, k, d2, i2)
    P = _product_matrix(K, d1, i1, d2, i2)
    columns = []
    for a in range(left.rank):
        for b in range(right.rank):
            columns.append(np.outer(left.cycles[:, a], right.cycles[:, b]).reshape(-1))
    if not columns or P.shape[0] == 0:
        return k.zeros((P.shape[0], len(columns)))
    return matmul(P, np.stack(columns, axis=1), k)


def _product_rank(K: SimplicialComplex, k: FieldSpec, key: Tuple[int, int, int, int]) -> int:
    d1, i1, d2, i2 = key
    products = multiply_classes(K, k, d1, i1, d2, i2)
    if products.size == 0:
        return 0
    boundaries = koszul_classes(K, k, d1 | d2, i1 + i2).boundaries
    if boundaries.size == 0:
        return rank(products, k)
    return rank(np.hstack([boundaries, products]), k) - rank(boundaries, k)


def _positive_classes(table: TorTable) -> List[Tuple[int, int]]:
    out = []
    for d in sorted(table.breakdown):
        if not d:
            continue
        n = popcount(d)
        for reduced in table.breakdown[d].degrees():
            out.append((d, n - reduced - 1))
    return out


def _pair_keys(table: TorTable) -> List[Tuple[int, int, int, int]]:
    classes = _positive_classes(table)
    return [(d1, i1, d2, i2) for d1, i1 in classes for d2, i2 in classes
            if d1 < d2 and not d1 & d2]


def koszul_product_ranks(K: SimplicialComplex, k: FieldSpec,
                         settings: Optional[AnalysisSettings] = None,
                         mapper: Optional[SubsetMapper] = None,
                         table: Optional[TorTable] = None) -> Dict[PairKey, int]:
    """Rank of Tor_(i1, d1) ⊗ Tor_(i2, d2) → Tor_(i1+i2, d1 ∪ d2) for disjoint d1 < d2.

    Keys use the reduced-cohomology indexing (d1, d2, |d1| - i1 - 1,
    |d2| - i2 - 1), the same keys ``product_ranks`` uses.
    """
    settings = settings or AnalysisSettings()
    check_oracle_cap(K, settings)
    mapper = resolve_mapper(mapper)
    table = table if table is not None else koszul_tor_table(K, k, settings, mapper)

    keys = _pair_keys(table)
    ranks = mapper.map(partial(_product_rank, K, k), keys)
    return {(d1, d2, popcount(d1) - i1 - 1, popcount(d2) - i2 - 1): r
            for (d1, i1, d2, i2), r in zip(keys, ranks)}


def koszul_product_nontrivial(K: SimplicialComplex, k: FieldSpec,
                              settings: Optional[AnalysisSettings] = None,
                              mapper: Optional[SubsetMapper] = None) -> bool:
    """True iff two positive-degree Tor classes have a non-zero product.

    Raises:
        CapExceededError: If the universe exceeds ``settings.oracle_max_m``
    """
    ranks = koszul_product_ranks(K, k, settings, mapper)
    found = any(ranks.values())
    LOGGER.info("Koszul oracle over %s: %d pairings, product %s", k, len(ranks),
                "non-trivial" if found else "trivial")
    return found


def commutation_defect(K: SimplicialComplex, k: FieldSpec, d1: int, i1: int,
                       d2: int, i2: int) -> np.ndarray:
    """x·y - (-1)^(i1 i2) y·x over all representative pairs; zero for a graded-commutative product."""
    forward = multiply_classes(K, k, d1, i1, d2, i2)
    backward = multiply_classes(K, k, d2, i2, d1, i1)
    left = koszul_classes(K, k, d1, i1).rank
    right = koszul_classes(K, k, d2, i2).rank
    # reorder backward columns from (b, a) to (a, b)
    order = [b * left + a for a in range(left) for b in range(right)]
    backward = backward[:, order] if backward.size else backward
    sign = -1 if (i1 * i2) % 2 else 1
    return k.reduce(forward - backward * sign) if forward.size else forward
