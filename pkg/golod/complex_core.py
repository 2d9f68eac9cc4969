"""
Simplicial Complexes on [m]
===========================

Faces are stored as bitmasks: vertex ``v`` is bit ``1 << (v - 1)``. Ordering
faces by mask value is the colexicographic order, which every enumeration in
the toolkit uses so reports and witnesses are reproducible.

A complex also carries a vertex *universe*: the label set it lives on. For a
complex read from input this is all of [m]; a full subcomplex K_I lives on I.
Universe elements that are not vertices are ghost vertices.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx


def bit(v: int) -> int:
    return 1 << (v - 1)


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> Tuple[int, ...]:
    """Ascending vertex labels of a mask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in ascending order, starting with 0."""
    sub = 0
    while True:
        yield sub
        sub = (sub - mask) & mask
        if sub == 0:
            return


def _maximal(masks: Iterable[int]) -> Tuple[int, ...]:
    unique = sorted(set(masks), key=lambda f: (-popcount(f), f))
    kept: List[int] = []
    for f in unique:
        if not any(f & g == f for g in kept):
            kept.append(f)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable simplicial complex stored by its facets.

    Attributes:
        m: Size of the ambient label range [m]
        facets: Inclusion-maximal faces as ascending bitmasks
        universe: Vertex labels the complex lives on, as a bitmask
    """

    m: int
    facets: Tuple[int, ...]
    universe: int

    @cached_property
    def faces(self) -> Tuple[int, ...]:
        """Every face, the empty face included, in colex order."""
        found = {0}
        for facet in self.facets:
            found.update(submasks(facet))
        return tuple(sorted(found))

    @cached_property
    def face_set(self) -> FrozenSet[int]:
        return frozenset(self.faces)

    @cached_property
    def vertex_mask(self) -> int:
        mask = 0
        for facet in self.facets:
            mask |= facet
        return mask

    @cached_property
    def dim(self) -> int:
        return max((popcount(f) for f in self.facets), default=0) - 1

    @property
    def ghost_mask(self) -> int:
        return self.universe & ~self.vertex_mask

    @property
    def vertices(self) -> Tuple[int, ...]:
        return vertices_of(self.vertex_mask)

    def contains(self, face: Iterable[int]) -> bool:
        return mask_of(face) in self.face_set

    def __contains__(self, face_mask: int) -> bool:
        return face_mask in self.face_set

    def facet_lists(self) -> List[List[int]]:
        return [list(vertices_of(f)) for f in self.facets]

    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, facets={self.facet_lists()})"


def new_from_facets(m: int, facets: Sequence[Sequence[int]],
                    universe: Optional[Iterable[int]] = None) -> SimplicialComplex:
    """Build a complex from a facet list, absorbing dominated faces.

    Args:
        m: Vertex count, labels run 1..m
        facets: Faces as vertex lists; duplicates and non-maximal faces are allowed
        universe: Optional label subset the complex lives on (default all of [m])

    Returns:
        SimplicialComplex storing the inclusion-maximal input faces

    Raises:
        ValueError: If m < 1, a face is empty, or a vertex is out of range
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"vertex count m must be a positive integer, got {m!r}")
    universe_mask = (1 << m) - 1 if universe is None else mask_of(universe)
    for v in vertices_of(universe_mask):
        if v > m:
            raise ValueError(f"universe vertex {v} outside 1..{m}")
    masks = []
    for index, face in enumerate(facets):
        if len(face) == 0:
            raise ValueError(f"facet {index} is empty")
        for v in face:
            if not isinstance(v, int) or v < 1 or v > m:
                raise ValueError(f"facet {index}: vertex {v!r} outside 1..{m}")
        mask = mask_of(face)
        if mask & ~universe_mask:
            raise ValueError(f"facet {index} leaves the vertex universe")
        masks.append(mask)
    return SimplicialComplex(m=m, facets=_maximal(masks), universe=universe_mask)


def face_masks(K: SimplicialComplex, d: int) -> List[int]:
    """Masks of the d-dimensional faces in colex order."""
    return [f for f in K.faces if popcount(f) == d + 1]


def faces(K: SimplicialComplex, d: int) -> List[Tuple[int, ...]]:
    """Faces of dimension ``d`` as vertex tuples; ``d = -1`` gives the empty face."""
    return [vertices_of(f) for f in face_masks(K, d)]


def vertex_set(K: SimplicialComplex) -> FrozenSet[int]:
    """Labels i with {i} a face; ghost vertices are not included."""
    return frozenset(K.vertices)


def f_vector(K: SimplicialComplex) -> Tuple[int, ...]:
    """Face counts indexed from dimension -1 (so the first entry is always 1)."""
    counts = [0] * (K.dim + 2)
    for f in K.faces:
        counts[popcount(f)] += 1
    return tuple(counts)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Unreduced Euler characteristic: sum of (-1)^d f_d over d >= 0."""
    return sum((-1) ** (n - 1) * count for n, count in enumerate(f_vector(K)) if n > 0)


def full_subcomplex(K: SimplicialComplex, I: int) -> SimplicialComplex:
    """K_I: the faces of K inside ``I``, on the universe ``I``.

    Labels are kept as in K. ``I = 0`` gives the empty complex {∅}.
    """
    I &= K.universe
    restricted = [f & I for f in K.facets]
    return SimplicialComplex(m=K.m, facets=_maximal(f for f in restricted if f), universe=I)


def link(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """lk_K(v), on the universe of its own vertices.

    Raises:
        ValueError: If ``v`` is not a vertex of K
    """
    b = bit(v) if v >= 1 else 0
    if not b or not K.vertex_mask & b:
        raise ValueError(f"{v} is not a vertex of the complex")
    pieces = [f & ~b for f in K.facets if f & b]
    facets = _maximal(f for f in pieces if f)
    universe = 0
    for f in facets:
        universe |= f
    return SimplicialComplex(m=K.m, facets=facets, universe=universe)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """K * L on the union of the two universes.

    Raises:
        ValueError: If the vertex universes overlap
    """
    overlap = K.universe & L.universe
    if overlap:
        raise ValueError(f"join needs disjoint vertex labels, both contain {list(vertices_of(overlap))}")
    if not K.facets:
        facets = L.facets
    elif not L.facets:
        facets = K.facets
    else:
        facets = _maximal(f | g for f in K.facets for g in L.facets)
    return SimplicialComplex(m=max(K.m, L.m), facets=facets, universe=K.universe | L.universe)


def minimal_non_faces(K: SimplicialComplex) -> List[Tuple[int, ...]]:
    """Minimal non-faces inside the universe, ghost singletons included."""
    return [vertices_of(s) for s in minimal_non_face_masks(K)]


def minimal_non_face_masks(K: SimplicialComplex) -> List[int]:
    found = set()
    universe_vertices = [bit(v) for v in vertices_of(K.universe)]
    for f in K.faces:
        for b in universe_vertices:
            if f & b:
                continue
            sigma = f | b
            if sigma in K.face_set or sigma in found:
                continue
            if all((sigma & ~c) in K.face_set for c in universe_vertices if sigma & c):
                found.add(sigma)
    return sorted(found)


def hat_closure(K: SimplicialComplex) -> SimplicialComplex:
    """K̂: K with all of its minimal non-faces added."""
    added = minimal_non_face_masks(K)
    return SimplicialComplex(m=K.m, facets=_maximal(list(K.facets) + added), universe=K.universe)


def is_k_neighborly(K: SimplicialComplex, k: int) -> bool:
    """True iff every (k+1)-subset of the universe is a face."""
    if k < 0:
        return True
    universe_vertices = [bit(v) for v in vertices_of(K.universe)]
    if k + 1 > len(universe_vertices):
        # every subset of the universe must then be a face
        return K.universe in K.face_set
    for combo in combinations(universe_vertices, k + 1):
        if sum(combo) not in K.face_set:
            return False
    return True


def neighborliness_degree(K: SimplicialComplex) -> int:
    """The k with ⌈dim K / 2⌉ used by the neighborly Golod criterion."""
    return math.ceil(K.dim / 2)


def one_skeleton(K: SimplicialComplex) -> nx.Graph:
    """Graph on the vertices of K whose edges are the 1-faces."""
    G = nx.Graph()
    G.add_nodes_from(K.vertices)
    G.add_edges_from(vertices_of(f) for f in K.faces if popcount(f) == 2)
    return G


def is_surface_triangulation(K: SimplicialComplex) -> bool:
    """Closed-surface check: pure 2-dimensional, connected, edges in exactly two
    facets, every vertex link a single cycle. Ghost vertices disqualify."""
    if K.ghost_mask or K.dim != 2:
        return False
    if any(popcount(f) != 3 for f in K.facets):
        return False
    if not nx.is_connected(one_skeleton(K)):
        return False

    edge_degree = {}
    for f in K.facets:
        for edge in combinations(vertices_of(f), 2):
            edge_degree[edge] = edge_degree.get(edge, 0) + 1
    if any(count != 2 for count in edge_degree.values()):
        return False

    for v in K.vertices:
        lk = one_skeleton(link(K, v))
        if lk.number_of_nodes() < 3 or not nx.is_connected(lk):
            return False
        if any(degree != 2 for _, degree in lk.degree()):
            return False
    return True
