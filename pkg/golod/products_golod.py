"""
Products on the Hochster Decomposition and Golod Verdicts
=========================================================

For disjoint non-empty I, J the product of Tor classes coming from
H̃^p(K_I) and H̃^q(K_J) is the class of the join cross product restricted to
K_{I∪J}, landing in H̃^{p+q+1}(K_{I∪J}). Products with overlapping subsets
vanish, so only disjoint pairs are scanned.

Sign convention: a face ω of K_{I∪J} splits as (ω∩I, ω∩J); its sign is the
parity of the shuffle taking (ω∩I ascending, ω∩J ascending) to ω ascending.

Cohomology classes of K_U are compared through a basis of homology cycles:
over a field a cocycle is a coboundary iff it vanishes on every cycle.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

try:
    from .complex_core import (
        SimplicialComplex,
        face_masks,
        full_subcomplex,
        is_k_neighborly,
        is_surface_triangulation,
        mask_of,
        neighborliness_degree,
        one_skeleton,
        popcount,
        submasks,
        vertices_of,
    )
    from .errors import CapExceededError, ConsistencyError
    from .graph_chordal import is_chordal
    from .hochster_tor import TorTable, hochster_table
    from .homology import PROXY_LABEL, bounded_cache, cached_chain_complex, proper_full_subcomplexes_pass_proxy, reduced_betti
    from .linalg import RATIONALS, FieldSpec, coerce, independent_columns, is_zero, matmul, nullspace, parse_field, prime_field, rank, solve
    from .parallel import SubsetMapper, resolve_mapper
    from .settings import AnalysisSettings
except ImportError:
    from complex_core import (
        SimplicialComplex,
        face_masks,
        full_subcomplex,
        is_k_neighborly,
        is_surface_triangulation,
        mask_of,
        neighborliness_degree,
        one_skeleton,
        popcount,
        submasks,
        vertices_of,
    )
    from errors import CapExceededError, ConsistencyError
    from graph_chordal import is_chordal
    from hochster_tor import TorTable, hochster_table
    from homology import PROXY_LABEL, bounded_cache, cached_chain_complex, proper_full_subcomplexes_pass_proxy, reduced_betti
    from linalg import RATIONALS, FieldSpec, coerce, independent_columns, is_zero, matmul, nullspace, parse_field, prime_field, rank, solve
    from parallel import SubsetMapper, resolve_mapper
    from settings import AnalysisSettings

LOGGER = logging.getLogger(__name__)

Candidate = Tuple[int, int, int, int]


# ---------------------------------------------------------------------------
# Cohomology of full subcomplexes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubsetCohomology:
    """Cocycle and cycle representatives of H̃^r(K_I; k) and H̃_r(K_I; k).

    ``cocycles`` and ``cycles`` are (faces x b) arrays whose columns are the
    representatives; ``pairing[a, c]`` is the value of cocycle a on cycle c.
    """

    field: FieldSpec
    mask: int
    degree: int
    basis: Tuple[int, ...]
    cocycles: np.ndarray
    cycles: np.ndarray
    pairing: np.ndarray

    @property
    def rank(self) -> int:
        return self.cocycles.shape[1]

    @property
    def index(self) -> Dict[int, int]:
        return {f: i for i, f in enumerate(self.basis)}

    def evaluate(self, cochains: np.ndarray) -> np.ndarray:
        """Values of cochain columns on the cycle representatives (b x n)."""
        return matmul(self.cycles.T, cochains, self.field)

    def coordinates(self, cochain: np.ndarray) -> np.ndarray:
        """Coordinates of a cocycle's class in the ``cocycles`` basis."""
        values = self.evaluate(np.asarray(cochain).reshape(-1, 1)).reshape(-1)
        solution = solve(self.pairing.T, values, self.field)
        if solution is None:
            raise ConsistencyError("cocycle/cycle pairing is singular")
        return solution


def _representatives(spanning: np.ndarray, candidates: np.ndarray, k: FieldSpec) -> np.ndarray:
    # columns of ``candidates`` independent modulo the span of ``spanning``
    offset = spanning.shape[1]
    combined = np.hstack([spanning, candidates])
    chosen = [c - offset for c in independent_columns(combined, k) if c >= offset]
    return candidates[:, chosen]


@bounded_cache
def subset_cohomology(K: SimplicialComplex, k: FieldSpec, mask: int, degree: int) -> SubsetCohomology:
    """Representatives for degree ``degree`` of the full subcomplex K_mask.

    Raises:
        ConsistencyError: If the cocycle and cycle counts disagree
    """
    sub = full_subcomplex(K, mask)
    cc = cached_chain_complex(sub)
    basis = tuple(cc.bases.get(degree, ()))
    n = len(basis)
    if n == 0:
        empty = k.zeros((0, 0))
        return SubsetCohomology(k, mask, degree, basis, empty, empty, empty)

    up = cc.boundary(degree + 1)
    down = cc.boundary(degree)
    cocycles = _representatives(coerce(down.T, k), nullspace(up.T, k), k)
    cycles = _representatives(coerce(up, k), nullspace(down, k), k)
    if cocycles.shape[1] != cycles.shape[1]:
        raise ConsistencyError(
            f"cohomology and homology ranks differ on {list(vertices_of(mask))} in degree {degree}")
    pairing = matmul(cocycles.T, cycles, k)
    return SubsetCohomology(k, mask, degree, basis, cocycles, cycles, pairing)


# ---------------------------------------------------------------------------
# Cross products
# ---------------------------------------------------------------------------

def shuffle_sign(sigma: int, tau: int) -> int:
    """(-1)^(number of pairs x in sigma, y in tau with x > y)."""
    inversions = 0
    for y in vertices_of(tau):
        inversions += popcount(sigma >> y)
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class _CrossLayout:
    rows: np.ndarray
    left: np.ndarray
    right: np.ndarray
    signs: np.ndarray


def _cross_layout(target: SubsetCohomology, left: SubsetCohomology,
                  right: SubsetCohomology, I: int, J: int, p: int) -> _CrossLayout:
    left_index, right_index = left.index, right.index
    rows, li, ri, signs = [], [], [], []
    for t, omega in enumerate(target.basis):
        sigma, tau = omega & I, omega & J
        if popcount(sigma) != p + 1:
            continue
        rows.append(t)
        li.append(left_index[sigma])
        ri.append(right_index[tau])
        signs.append(shuffle_sign(sigma, tau))
    return _CrossLayout(np.array(rows, dtype=np.int64), np.array(li, dtype=np.int64),
                        np.array(ri, dtype=np.int64), np.array(signs, dtype=np.int64))


def _cross_cochains(layout: _CrossLayout, alphas: np.ndarray, betas: np.ndarray,
                    size: int, k: FieldSpec) -> np.ndarray:
    """Cross-product cochains for every (alpha column, beta column) pair, alpha-major."""
    a, b = alphas.shape[1], betas.shape[1]
    out = k.zeros((size, a * b))
    if layout.rows.size == 0 or a * b == 0:
        return out
    left = alphas[layout.left, :]
    right = betas[layout.right, :]
    products = (left[:, :, None] * right[:, None, :]).reshape(len(layout.rows), a * b)
    out[layout.rows, :] = k.reduce(products * layout.signs[:, None])
    return out


def _check_cocycles(K: SimplicialComplex, U: int, degree: int, cochains: np.ndarray,
                    k: FieldSpec) -> None:
    up = cached_chain_complex(full_subcomplex(K, U)).boundary(degree + 1)
    if up.shape[1] and cochains.size and not is_zero(matmul(up.T, cochains, k)):
        raise ConsistencyError(
            f"cross product is not a cocycle on {list(vertices_of(U))} in degree {degree}")


def _validate_pair(K: SimplicialComplex, I: int, J: int) -> None:
    if not I or not J:
        raise ValueError("cross product needs non-empty vertex subsets")
    if I & J:
        raise ValueError(f"subsets overlap in {list(vertices_of(I & J))}")
    if (I | J) & ~K.universe:
        raise ValueError("subsets must lie in the vertex universe")


def _as_mask(subset: Any) -> int:
    return subset if isinstance(subset, int) else mask_of(subset)


def _pair_data(K: SimplicialComplex, I: int, J: int, p: int, q: int, k: FieldSpec):
    U, r = I | J, p + q + 1
    left = subset_cohomology(K, k, I, p)
    right = subset_cohomology(K, k, J, q)
    target = subset_cohomology(K, k, U, r)
    layout = _cross_layout(target, left, right, I, J, p)
    cochains = _cross_cochains(layout, left.cocycles, right.cocycles, len(target.basis), k)
    _check_cocycles(K, U, r, cochains, k)
    return left, right, target, cochains


def cross_product_map(K: SimplicialComplex, I: Any, J: Any, p: int, q: int,
                      k: FieldSpec) -> np.ndarray:
    """Matrix of H̃^p(K_I) ⊗ H̃^q(K_J) → H̃^{p+q+1}(K_{I∪J}).

    Columns run over (a, b) basis pairs with a major; rows are coordinates in
    the target's cocycle basis.

    Raises:
        ValueError: If I or J is empty or they overlap
    """
    I, J = _as_mask(I), _as_mask(J)
    _validate_pair(K, I, J)
    left, right, target, cochains = _pair_data(K, I, J, p, q, k)
    out = k.zeros((target.rank, cochains.shape[1]))
    for col in range(cochains.shape[1]):
        if target.rank:
            out[:, col] = target.coordinates(cochains[:, col])
    return out


def _pairing_rank(K: SimplicialComplex, k: FieldSpec, candidate: Candidate) -> int:
    I, J, p, q = candidate
    _, _, target, cochains = _pair_data(K, I, J, p, q, k)
    if target.rank == 0 or cochains.shape[1] == 0:
        return 0
    return rank(target.evaluate(cochains), k)


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------

@dataclass
class ProductWitness:
    """A non-trivial product with explicit cochains, re-checkable from K alone."""

    field: FieldSpec
    I: int
    J: int
    p: int
    q: int
    basis_I: Tuple[int, ...]
    basis_J: Tuple[int, ...]
    basis_U: Tuple[int, ...]
    alpha: Tuple[Any, ...]
    beta: Tuple[Any, ...]
    gamma: Tuple[Any, ...]
    gamma_class: Tuple[Any, ...]

    @property
    def target_degree(self) -> int:
        return self.p + self.q + 1

    @property
    def union(self) -> int:
        return self.I | self.J

    def verify(self, K: SimplicialComplex) -> bool:
        """Recompute everything from K: cocycles, cross product, non-triviality."""
        k = self.field
        try:
            _validate_pair(K, self.I, self.J)
        except ValueError:
            return False
        U, r = self.union, self.target_degree
        if (tuple(face_masks(full_subcomplex(K, self.I), self.p)) != self.basis_I
                or tuple(face_masks(full_subcomplex(K, self.J), self.q)) != self.basis_J
                or tuple(face_masks(full_subcomplex(K, U), r)) != self.basis_U):
            return False

        alpha = coerce(np.array(self.alpha, dtype=object).reshape(-1, 1), k)
        beta = coerce(np.array(self.beta, dtype=object).reshape(-1, 1), k)
        gamma = coerce(np.array(self.gamma, dtype=object).reshape(-1, 1), k)
        for mask, degree, cochain in ((self.I, self.p, alpha), (self.J, self.q, beta), (U, r, gamma)):
            up = cached_chain_complex(full_subcomplex(K, mask)).boundary(degree + 1)
            if up.shape[1] and not is_zero(matmul(up.T, cochain, k)):
                return False

        left = _BasisOnly(self.basis_I)
        right = _BasisOnly(self.basis_J)
        target = _BasisOnly(self.basis_U)
        layout = _cross_layout(target, left, right, self.I, self.J, self.p)
        recomputed = _cross_cochains(layout, alpha, beta, len(self.basis_U), k)
        if np.any(recomputed != gamma):
            return False

        down = cached_chain_complex(full_subcomplex(K, U)).boundary(r)
        if down.shape[1] == 0:
            return not is_zero(gamma)
        return solve(coerce(down.T, k), gamma.reshape(-1), k) is None

    def to_json(self) -> Dict[str, Any]:
        k = self.field
        return {
            "field": k.label,
            "I": list(vertices_of(self.I)),
            "J": list(vertices_of(self.J)),
            "p": self.p,
            "q": self.q,
            "target_degree": self.target_degree,
            "basis_I": [list(vertices_of(f)) for f in self.basis_I],
            "basis_J": [list(vertices_of(f)) for f in self.basis_J],
            "basis_U": [list(vertices_of(f)) for f in self.basis_U],
            "alpha": [k.format(x) for x in self.alpha],
            "beta": [k.format(x) for x in self.beta],
            "gamma": [k.format(x) for x in self.gamma],
            "gamma_class": [k.format(x) for x in self.gamma_class],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "ProductWitness":
        k = parse_field(data["field"])
        return cls(
            field=k,
            I=mask_of(data["I"]),
            J=mask_of(data["J"]),
            p=int(data["p"]),
            q=int(data["q"]),
            basis_I=tuple(mask_of(f) for f in data["basis_I"]),
            basis_J=tuple(mask_of(f) for f in data["basis_J"]),
            basis_U=tuple(mask_of(f) for f in data["basis_U"]),
            alpha=tuple(k.parse(x) for x in data["alpha"]),
            beta=tuple(k.parse(x) for x in data["beta"]),
            gamma=tuple(k.parse(x) for x in data["gamma"]),
            gamma_class=tuple(k.parse(x) for x in data["gamma_class"]),
        )


@dataclass(frozen=True)
class _BasisOnly:
    basis: Tuple[int, ...]

    @property
    def index(self) -> Dict[int, int]:
        return {f: i for i, f in enumerate(self.basis)}


def _materialize_witness(K: SimplicialComplex, k: FieldSpec, candidate: Candidate) -> ProductWitness:
    I, J, p, q = candidate
    left, right, target, cochains = _pair_data(K, I, J, p, q, k)
    for col in range(cochains.shape[1]):
        coords = target.coordinates(cochains[:, col])
        if is_zero(coords):
            continue
        a, b = divmod(col, right.rank)
        return ProductWitness(
            field=k, I=I, J=J, p=p, q=q,
            basis_I=left.basis, basis_J=right.basis, basis_U=target.basis,
            alpha=tuple(left.cocycles[:, a]),
            beta=tuple(right.cocycles[:, b]),
            gamma=tuple(cochains[:, col]),
            gamma_class=tuple(coords),
        )
    raise ConsistencyError("pairing has positive rank but every basis product is trivial")


# ---------------------------------------------------------------------------
# Scans
# ---------------------------------------------------------------------------

def check_pair_cap(K: SimplicialComplex, settings: AnalysisSettings) -> None:
    pairs = 3 ** popcount(K.universe)
    if pairs > settings.pair_scan_limit and not settings.force:
        raise CapExceededError("disjoint pair count 3^m", pairs, settings.pair_scan_limit,
                               "pass --force to scan anyway")


def iter_candidates(table: TorTable, target: Optional[int] = None,
                    target_degree: Optional[int] = None) -> Iterator[Candidate]:
    """(I, J, p, q) with all three Betti numbers non-zero.

    Order: union U by (|U|, colex), then I ascending, then (p, q) ascending.
    """
    unions = [U for U in table.breakdown if popcount(U) >= 2 and (target is None or U == target)]
    unions.sort(key=lambda U: (popcount(U), U))
    for U in unions:
        target_betti = table.breakdown[U]
        for I in submasks(U):
            if I == 0 or I == U:
                continue
            left = table.breakdown.get(I)
            right = table.breakdown.get(U ^ I)
            if left is None or right is None:
                continue
            for p in left.degrees():
                for q in right.degrees():
                    r = p + q + 1
                    if target_betti[r] and (target_degree is None or r == target_degree):
                        yield I, U ^ I, p, q


def find_nontrivial_product(K: SimplicialComplex, k: FieldSpec,
                            settings: Optional[AnalysisSettings] = None,
                            mapper: Optional[SubsetMapper] = None,
                            target: Optional[int] = None,
                            target_degree: Optional[int] = None,
                            table: Optional[TorTable] = None,
                            batch_size: int = 64) -> Optional[ProductWitness]:
    """First non-trivial product in scan order, with explicit cochains.

    Batches are evaluated through ``mapper`` and reduced in order, so the
    witness does not depend on worker scheduling.

    Raises:
        CapExceededError: If 3^m exceeds ``settings.pair_scan_limit`` without force
    """
    settings = settings or AnalysisSettings()
    check_pair_cap(K, settings)
    mapper = resolve_mapper(mapper)
    table = table if table is not None else hochster_table(K, k, settings, mapper)

    evaluate = partial(_pairing_rank, K, k)
    batch: List[Candidate] = []
    scanned = 0

    def flush() -> Optional[Candidate]:
        for candidate, value in zip(batch, mapper.map(evaluate, batch)):
            if value > 0:
                return candidate
        return None

    for candidate in iter_candidates(table, target, target_degree):
        batch.append(candidate)
        if len(batch) >= batch_size:
            scanned += len(batch)
            hit = flush()
            if hit is not None:
                return _materialize_witness(K, k, hit)
            batch = []
    if batch:
        scanned += len(batch)
        hit = flush()
        if hit is not None:
            return _materialize_witness(K, k, hit)
    LOGGER.info("no non-trivial product over %s after %d candidate pairings", k, scanned)
    return None


def product_ranks(K: SimplicialComplex, k: FieldSpec,
                  settings: Optional[AnalysisSettings] = None,
                  mapper: Optional[SubsetMapper] = None,
                  table: Optional[TorTable] = None) -> Dict[Candidate, int]:
    """Rank of every pairing with non-zero source, keyed (I, J, p, q) with I < J."""
    settings = settings or AnalysisSettings()
    check_pair_cap(K, settings)
    mapper = resolve_mapper(mapper)
    table = table if table is not None else hochster_table(K, k, settings, mapper)

    nonempty = sorted(mask for mask in table.breakdown if mask)
    keys: List[Candidate] = []
    for I in nonempty:
        for J in nonempty:
            if J <= I or I & J:
                continue
            for p in table.breakdown[I].degrees():
                for q in table.breakdown[J].degrees():
                    keys.append((I, J, p, q))
    return dict(zip(keys, mapper.map(partial(_pairing_rank, K, k), keys)))


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------

class GolodStatus(str, Enum):
    CERTIFIED = "GolodCertified"
    NOT_GOLOD = "NotGolod"
    INCONCLUSIVE = "Inconclusive"


class GolodReason(str, Enum):
    NEIGHBORLY = "Neighborly"
    SURFACE = "SurfaceTheorem"
    RATIONAL = "RationalCriterion"
    ONE_DIM_CHORDAL = "OneDimChordal"


REASON_STATEMENTS = {
    GolodReason.NEIGHBORLY: "a ⌈dim K/2⌉-neighborly complex is Golod",
    GolodReason.SURFACE: "a surface triangulation is Golod iff it is 1-neighborly",
    GolodReason.RATIONAL: ("a 2-dimensional complex with chordal 1-skeleton, rationally acyclic, "
                           "all of whose proper full subcomplexes have homotopy dimension ≤ 1, "
                           "is rationally Golod"),
    GolodReason.ONE_DIM_CHORDAL: "a complex of dimension ≤ 1 is Golod iff its 1-skeleton is chordal",
}

MASSEY_NOTE = ("products are trivial but higher Massey products were not examined; "
               "product triviality alone does not imply Golodness")


@dataclass
class GolodVerdict:
    field: FieldSpec
    status: GolodStatus
    reason: Optional[GolodReason] = None
    witness: Optional[ProductWitness] = None
    notes: List[str] = field(default_factory=list)
    path: List[str] = field(default_factory=list)
    consistent: bool = True

    def to_json(self, include_witness: bool = True) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "field": self.field.label,
            "status": self.status.value,
            "reason": self.reason.value if self.reason else None,
            "theorem": REASON_STATEMENTS[self.reason] if self.reason else None,
            "path": list(self.path),
            "notes": list(self.notes),
            "consistent": self.consistent,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json() if include_witness else {
                "I": list(vertices_of(self.witness.I)),
                "J": list(vertices_of(self.witness.J)),
                "p": self.witness.p,
                "q": self.witness.q,
            }
        return out


def golod_verdict(K: SimplicialComplex, k: FieldSpec,
                  settings: Optional[AnalysisSettings] = None,
                  mapper: Optional[SubsetMapper] = None,
                  table: Optional[TorTable] = None) -> GolodVerdict:
    """Walk the decision cascade and record every step taken."""
    settings = settings or AnalysisSettings()
    path: List[str] = []
    notes: List[str] = []

    def verdict(status: GolodStatus, reason: Optional[GolodReason] = None, **kwargs) -> GolodVerdict:
        return GolodVerdict(field=k, status=status, reason=reason, notes=notes, path=path, **kwargs)

    products_trivial = False
    try:
        witness = find_nontrivial_product(K, k, settings, mapper, table=table)
    except CapExceededError as e:
        path.append(f"product scan skipped: {e}")
        witness = None
    else:
        if witness is not None:
            path.append("product scan: non-trivial product found")
            return verdict(GolodStatus.NOT_GOLOD, witness=witness)
        products_trivial = True
        path.append("product scan: all products trivial")

    chordal, _ = is_chordal(one_skeleton(K))
    ghost_safe = products_trivial or not K.ghost_mask

    if K.dim <= 1:
        path.append(f"dimension {K.dim}: 1-skeleton {'is' if chordal else 'is not'} chordal")
        if chordal and ghost_safe:
            return verdict(GolodStatus.CERTIFIED, GolodReason.ONE_DIM_CHORDAL)

    degree = neighborliness_degree(K)
    neighborly = is_k_neighborly(K, degree)
    path.append(f"{degree}-neighborly: {neighborly}")
    if neighborly:
        return verdict(GolodStatus.CERTIFIED, GolodReason.NEIGHBORLY)

    consistent = True
    if is_surface_triangulation(K):
        one_neighborly = is_k_neighborly(K, 1)
        path.append(f"surface triangulation, 1-neighborly: {one_neighborly}")
        if one_neighborly:
            return verdict(GolodStatus.CERTIFIED, GolodReason.SURFACE)
        if k.characteristic == 2 and products_trivial:
            LOGGER.error("non-1-neighborly surface without a product witness over Z/2")
            notes.append("internal inconsistency: the surface theorem forces a product over Z/2")
            consistent = False
        else:
            notes.append(f"not 1-neighborly, so not Golod over every ring; no product over {k} shows it")

    if k.is_rational and K.dim == 2 and ghost_safe:
        passed, failing = proper_full_subcomplexes_pass_proxy(K, mapper)
        acyclic = reduced_betti(K, RATIONALS).is_zero()
        path.append(f"{PROXY_LABEL} on proper full subcomplexes: {passed}"
                    + ("" if passed else f" (fails on {list(vertices_of(failing))})"))
        path.append(f"chordal 1-skeleton: {chordal}")
        path.append(f"rationally acyclic: {acyclic}")
        if passed and chordal and acyclic:
            return verdict(GolodStatus.CERTIFIED, GolodReason.RATIONAL, consistent=consistent)

    if products_trivial:
        notes.append(MASSEY_NOTE)
    return verdict(GolodStatus.INCONCLUSIVE, consistent=consistent)


@dataclass
class SurfaceReport:
    one_neighborly: bool
    verdict: GolodVerdict
    top_class_witness: Optional[ProductWitness]
    agree: bool
    notes: List[str] = field(default_factory=list)

    @property
    def golod(self) -> bool:
        return self.verdict.status is GolodStatus.CERTIFIED

    def to_json(self) -> Dict[str, Any]:
        return {
            "one_neighborly": self.one_neighborly,
            "golod_over_z2": self.golod,
            "agree": self.agree,
            "verdict": self.verdict.to_json(include_witness=False),
            "top_class_witness": self.top_class_witness.to_json() if self.top_class_witness else None,
            "notes": list(self.notes),
        }


def surface_golod_equivalence_report(K: SimplicialComplex,
                                     settings: Optional[AnalysisSettings] = None,
                                     mapper: Optional[SubsetMapper] = None) -> SurfaceReport:
    """Compare product-Golodness over Z/2 with 1-neighborliness on a surface.

    Raises:
        ValueError: If K is not a surface triangulation
    """
    if not is_surface_triangulation(K):
        raise ValueError("input is not a surface triangulation")
    k = prime_field(2)
    settings = settings or AnalysisSettings()
    table = hochster_table(K, k, settings, mapper)
    one_neighborly = is_k_neighborly(K, 1)
    verdict = golod_verdict(K, k, settings, mapper, table=table)
    notes: List[str] = []

    top = None
    if one_neighborly:
        agree = verdict.status is GolodStatus.CERTIFIED
    else:
        top = find_nontrivial_product(K, k, settings, mapper, target=K.universe,
                                      target_degree=2, table=table)
        agree = verdict.status is GolodStatus.NOT_GOLOD and top is not None
        if top is None:
            notes.append("no product lands in the top class")
    if not agree or not verdict.consistent:
        LOGGER.error("surface theorem disagreement: 1-neighborly=%s, verdict=%s",
                     one_neighborly, verdict.status.value)
        notes.append("disagreement with the surface theorem: this is a bug")
        agree = False
    return SurfaceReport(one_neighborly, verdict, top, agree, notes)
