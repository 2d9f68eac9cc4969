"""
Reduced Simplicial Homology
===========================

Augmented chain complexes with faces oriented by ascending vertex labels,
reduced Betti numbers over Q and Z/p, and integral homology through Smith
normal form invariants.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from sympy import Matrix, factorint
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ

try:
    from .complex_core import (
        SimplicialComplex,
        face_masks,
        full_subcomplex,
        submasks,
        vertices_of,
    )
    from .errors import ConsistencyError
    from .linalg import FieldSpec, rank
    from .parallel import SubsetMapper, resolve_mapper
except ImportError:
    from complex_core import (
        SimplicialComplex,
        face_masks,
        full_subcomplex,
        submasks,
        vertices_of,
    )
    from errors import ConsistencyError
    from linalg import FieldSpec, rank
    from parallel import SubsetMapper, resolve_mapper

LOGGER = logging.getLogger(__name__)

PROXY_LABEL = "homological proxy for hodim ≤ 1"

# Entries kept per memoised function; keys are (complex, field, subset mask).
CACHE_SIZE = 4096

_CACHES: List[Any] = []


def bounded_cache(func):
    """``lru_cache`` capped at CACHE_SIZE and registered with clear_caches()."""
    cached = lru_cache(maxsize=CACHE_SIZE)(func)
    _CACHES.append(cached)
    return cached


def clear_caches() -> None:
    """Drop every memoised chain complex, Betti vector and cohomology basis."""
    for cached in _CACHES:
        cached.cache_clear()
    LOGGER.debug("cleared %d subset caches", len(_CACHES))


@dataclass(frozen=True)
class ChainComplexData:
    """Face bases from dimension -1 up and integer boundary matrices.

    ``boundaries[d]`` maps C_d to C_{d-1}: rows follow ``bases[d - 1]``,
    columns follow ``bases[d]``.
    """

    bases: Dict[int, Tuple[int, ...]]
    boundaries: Dict[int, np.ndarray]
    dim: int

    def size(self, d: int) -> int:
        return len(self.bases.get(d, ()))

    def boundary(self, d: int) -> np.ndarray:
        """∂_d, or a correctly shaped zero matrix outside the stored range."""
        if d in self.boundaries:
            return self.boundaries[d]
        return np.zeros((self.size(d - 1), self.size(d)), dtype=np.int64)

    def index(self, d: int) -> Dict[int, int]:
        return {f: i for i, f in enumerate(self.bases.get(d, ()))}


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers; ``values[0]`` is the dimension -1 entry."""

    values: Tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        i = d + 1
        return self.values[i] if 0 <= i < len(self.values) else 0

    def degrees(self) -> List[int]:
        """Degrees with a non-zero Betti number, ascending."""
        return [i - 1 for i, b in enumerate(self.values) if b]

    @property
    def total(self) -> int:
        return sum(self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def as_dict(self) -> Dict[str, int]:
        return {str(d): self[d] for d in self.degrees()}


@dataclass(frozen=True)
class IntegralHomology:
    """Per dimension (from -1): free rank and torsion coefficients."""

    free: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]

    def free_rank(self, d: int) -> int:
        i = d + 1
        return self.free[i] if 0 <= i < len(self.free) else 0

    def torsion_in(self, d: int) -> Tuple[int, ...]:
        i = d + 1
        return self.torsion[i] if 0 <= i < len(self.torsion) else ()

    def describe(self, d: int) -> str:
        parts = ["Z"] * self.free_rank(d) + [f"Z/{t}" for t in self.torsion_in(d)]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> List[Dict[str, object]]:
        return [
            {"dim": i - 1, "free_rank": self.free[i], "torsion": list(self.torsion[i])}
            for i in range(len(self.free))
        ]


def _boundary_matrix(rows: Tuple[int, ...], cols: Tuple[int, ...]) -> np.ndarray:
    index = {f: i for i, f in enumerate(rows)}
    matrix = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, face in enumerate(cols):
        for position, v in enumerate(vertices_of(face)):
            matrix[index[face & ~(1 << (v - 1))], j] = -1 if position % 2 else 1
    return matrix


def chain_complex(K: SimplicialComplex) -> ChainComplexData:
    """Augmented chain complex of K.

    Raises:
        ConsistencyError: If ∂_{d-1} ∂_d is not zero (never expected)
    """
    bases = {d: tuple(face_masks(K, d)) for d in range(-1, K.dim + 1)}
    boundaries = {d: _boundary_matrix(bases[d - 1], bases[d]) for d in range(0, K.dim + 1)}
    for d in range(1, K.dim + 1):
        if np.any(boundaries[d - 1] @ boundaries[d]):
            raise ConsistencyError(f"boundary of boundary is non-zero in dimension {d}")
    return ChainComplexData(bases=bases, boundaries=boundaries, dim=K.dim)


@bounded_cache
def cached_chain_complex(K: SimplicialComplex) -> ChainComplexData:
    return chain_complex(K)


@bounded_cache
def reduced_betti(K: SimplicialComplex, k: FieldSpec) -> BettiVector:
    """b̃_d(K; k) = dim ker ∂_d - rank ∂_{d+1}, for d = -1 .. dim K."""
    cc = cached_chain_complex(K)
    ranks = {d: rank(cc.boundary(d), k) for d in range(0, K.dim + 1)}
    values = []
    for d in range(-1, K.dim + 1):
        values.append(cc.size(d) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return BettiVector(tuple(values))


def _unit_pivot_reduce(matrix: np.ndarray) -> Tuple[int, np.ndarray]:
    """Eliminate ±1 entries by integer row operations.

    Each ±1 pivot contributes an invariant factor 1; its row and column are
    dropped. Returns the count and the remaining matrix.
    """
    A = np.array(matrix, dtype=np.int64).astype(object)
    units = 0
    while A.size:
        hits = np.argwhere((A == 1) | (A == -1))
        if hits.size == 0:
            break
        r, c = (int(x) for x in hits[0])
        pivot = A[r, c]
        others = np.nonzero(A[:, c] != 0)[0]
        others = others[others != r]
        if others.size:
            A[others] = A[others] - np.outer(A[others, c] * pivot, A[r])
        A = np.delete(np.delete(A, r, axis=0), c, axis=1)
        units += 1
    return units, A


def smith_invariants(matrix: np.ndarray) -> List[int]:
    """Non-zero invariant factors of an integer matrix, as a divisibility chain."""
    units, rest = _unit_pivot_reduce(matrix)
    factors = [1] * units
    if rest.size and np.any(rest != 0):
        raw = invariant_factors(Matrix(rest.tolist()), domain=ZZ)
        factors.extend(abs(int(f)) for f in raw if int(f) != 0)
    return _divisibility_chain(factors)


def _divisibility_chain(factors: List[int]) -> List[int]:
    # Rebuild from prime powers so the chain holds whatever order sympy used.
    powers: Dict[int, List[int]] = defaultdict(list)
    for f in factors:
        if f > 1:
            for prime, exponent in factorint(f).items():
                powers[prime].append(prime ** exponent)
    chain = [1] * max((len(v) for v in powers.values()), default=0)
    for prime_powers in powers.values():
        prime_powers.sort(reverse=True)
        for i, q in enumerate(prime_powers):
            chain[len(chain) - 1 - i] *= q
    return [1] * (len(factors) - len(chain)) + sorted(chain)


def integral_homology(K: SimplicialComplex) -> IntegralHomology:
    """Reduced integral homology from the Smith invariants of each ∂_d."""
    cc = cached_chain_complex(K)
    invariants = {d: smith_invariants(cc.boundary(d)) for d in range(0, K.dim + 1)}
    free, torsion = [], []
    for d in range(-1, K.dim + 1):
        incoming = invariants.get(d + 1, [])
        outgoing = invariants.get(d, [])
        free.append(cc.size(d) - len(outgoing) - len(incoming))
        torsion.append(tuple(t for t in incoming if t > 1))
    return IntegralHomology(free=tuple(free), torsion=tuple(torsion))


def betti_from_integral(H: IntegralHomology, k: FieldSpec) -> BettiVector:
    """Universal coefficients: Betti numbers over k from integral homology."""
    p = k.characteristic
    values = []
    for i in range(len(H.free)):
        d = i - 1
        b = H.free_rank(d)
        if p:
            b += sum(1 for t in H.torsion_in(d) if t % p == 0)
            b += sum(1 for t in H.torsion_in(d - 1) if t % p == 0)
        values.append(b)
    return BettiVector(tuple(values))


def homological_dim_le_1(K: SimplicialComplex) -> bool:
    """Homological proxy for homotopy dimension at most 1.

    True iff H̃₂(K; Z) = 0 and H̃₁(K; Z) is torsion-free.

    Raises:
        ValueError: If dim K > 2
    """
    if K.dim > 2:
        raise ValueError(f"{PROXY_LABEL} needs dim K <= 2, got {K.dim}")
    if K.dim <= 1:
        return True
    cc = cached_chain_complex(K)
    invariants = smith_invariants(cc.boundary(2))
    return len(invariants) == cc.size(2) and all(t == 1 for t in invariants)


def _proxy_for_mask(K: SimplicialComplex, mask: int) -> bool:
    return homological_dim_le_1(full_subcomplex(K, mask))


def proper_full_subcomplexes_pass_proxy(
    K: SimplicialComplex,
    mapper: Optional[SubsetMapper] = None,
    batch_size: int = 512,
) -> Tuple[bool, Optional[int]]:
    """Run the proxy on every K_I with ∅ ≠ I ⊊ universe.

    Returns:
        (all passed, first failing mask in colex order or None)
    """
    mapper = resolve_mapper(mapper)
    masks = [I for I in submasks(K.universe) if I and I != K.universe]
    LOGGER.info("checking %s on %d proper full subcomplexes", PROXY_LABEL, len(masks))
    check = partial(_proxy_for_mask, K)
    for start in range(0, len(masks), batch_size):
        batch = masks[start:start + batch_size]
        for I, passed in zip(batch, mapper.map(check, batch)):
            if not passed:
                LOGGER.info("proxy fails on %s", list(vertices_of(I)))
                return False, I
    return True, None


__all__ = [
    "PROXY_LABEL",
    "ChainComplexData",
    "BettiVector",
    "IntegralHomology",
    "chain_complex",
    "reduced_betti",
    "integral_homology",
    "smith_invariants",
    "betti_from_integral",
    "homological_dim_le_1",
    "proper_full_subcomplexes_pass_proxy",
]
