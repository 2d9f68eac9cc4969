"""
Triangulated Mod-p Moore Spaces
===============================

M(2) is a 7-vertex real projective plane with a fixed facet list. For p > 2,
M(p) glues a 3p-gon that p-fold covers a triangle v1 v2 v3 to a p-gon
w1 .. wp, with a ring of vertices u1 .. up between them.

Labels: v_i -> i, w_i -> 3 + i, u_i -> 3 + p + i.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

try:
    from .complex_core import SimplicialComplex, mask_of, new_from_facets, one_skeleton, vertices_of
    from .graph_chordal import is_chordal, neighborhood, verify_peo
    from .homology import PROXY_LABEL, integral_homology, proper_full_subcomplexes_pass_proxy
    from .parallel import SubsetMapper
except ImportError:
    from complex_core import SimplicialComplex, mask_of, new_from_facets, one_skeleton, vertices_of
    from graph_chordal import is_chordal, neighborhood, verify_peo
    from homology import PROXY_LABEL, integral_homology, proper_full_subcomplexes_pass_proxy
    from parallel import SubsetMapper

LOGGER = logging.getLogger(__name__)

# Transcribed from the 7-vertex picture of RP^2 with the apex 7 over the
# triangle 1 2 3. The transcription is validated by verify_moore: closed
# surface, H1 = Z/2, N(7) = {1, 2, 3}.
M2_FACETS: Tuple[Tuple[int, int, int], ...] = (
    (1, 2, 7), (2, 3, 7), (1, 3, 7),
    (1, 2, 5), (2, 3, 4), (1, 3, 6),
    (1, 4, 5), (1, 4, 6), (2, 5, 6),
    (2, 4, 6), (3, 4, 5), (3, 5, 6),
)


@dataclass(frozen=True)
class MooreSpec:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2:
            raise ValueError(f"Moore space order p must be an integer >= 2, got {self.p!r}")

    @property
    def m(self) -> int:
        return 7 if self.p == 2 else 3 + 2 * self.p

    def v(self, i: int) -> int:
        return i

    def w(self, i: int) -> int:
        """w_i with the index taken cyclically in 1..p."""
        return 3 + ((i - 1) % self.p) + 1

    def u(self, i: int) -> int:
        return 3 + self.p + ((i - 1) % self.p) + 1

    def vertex_names(self) -> Dict[int, str]:
        if self.p == 2:
            return {i: str(i) for i in range(1, 8)}
        names = {self.v(i): f"v{i}" for i in (1, 2, 3)}
        names.update({self.w(i): f"w{i}" for i in range(1, self.p + 1)})
        names.update({self.u(i): f"u{i}" for i in range(1, self.p + 1)})
        return names

    def facet_lists(self) -> List[List[int]]:
        if self.p == 2:
            return [list(f) for f in M2_FACETS]
        p, v, w, u = self.p, self.v, self.w, self.u
        facets = []
        for i in range(1, p + 1):
            facets.append([v(1), v(2), w(i)])
            facets.append([v(2), v(3), w(i)])
        for i in range(1, p + 1):
            facets.append([v(3), v(1), u(i)])
            facets.append([v(3), u(i), w(i)])
            facets.append([v(1), u(i), w(i + 1)])
            facets.append([u(i), w(i), w(i + 1)])
        for i in range(1, p - 1):
            facets.append([w(i), w(i + 1), w(p)])
        return [sorted(f) for f in facets]


def moore_complex(p: int) -> SimplicialComplex:
    """The triangulation M(p); 12 facets for p = 2 and 7p - 2 otherwise.

    Raises:
        ValueError: If p < 2
    """
    spec = MooreSpec(p)
    return new_from_facets(spec.m, spec.facet_lists())


def collar_peo(p: int) -> Tuple[int, ...]:
    """The elimination order u1 < .. < up < w1 < .. < wp < v1 < v2 < v3 (p > 2)."""
    spec = MooreSpec(p)
    if p == 2:
        raise ValueError("the u/w/v elimination order is defined for p > 2")
    return (tuple(spec.u(i) for i in range(1, p + 1))
            + tuple(spec.w(i) for i in range(1, p + 1))
            + (spec.v(1), spec.v(2), spec.v(3)))


def expected_neighborhoods(p: int) -> Dict[int, Set[int]]:
    """Neighborhoods of the 1-skeleton of M(p), p > 2, as the construction lists them.

    N(u_i) = {v1, v3, w_i, w_(i+1)}; N(w_i) = {v1, v2, v3, w_(i-1), w_(i+1),
    u_(i-1), u_i} plus W_i, with W_1 = W_(p-1) = ∅, W_p = {w2 .. w_(p-2)} and
    W_i = {w_p} otherwise. v1 and v3 see every other vertex; v2 sees the
    triangle and the w-block only.
    """
    spec = MooreSpec(p)
    v, w, u = spec.v, spec.w, spec.u
    ws = {w(i) for i in range(1, p + 1)}
    us = {u(i) for i in range(1, p + 1)}
    expected: Dict[int, Set[int]] = {
        v(1): {v(2), v(3)} | ws | us,
        v(2): {v(1), v(3)} | ws,
        v(3): {v(1), v(2)} | ws | us,
    }
    for i in range(1, p + 1):
        expected[u(i)] = {v(1), v(3), w(i), w(i + 1)}
        if i in (1, p - 1):
            extra: Set[int] = set()
        elif i == p:
            extra = {w(j) for j in range(2, p - 1)}
        else:
            extra = {w(p)}
        expected[w(i)] = {v(1), v(2), v(3), w(i - 1), w(i + 1), u(i - 1), u(i)} | extra
    return expected


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> Dict[str, object]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class MooreVerification:
    p: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)

    def to_json(self) -> Dict[str, object]:
        return {"p": self.p, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def _names(vertices, spec: MooreSpec) -> str:
    names = spec.vertex_names()
    return "{" + ", ".join(names[x] for x in sorted(vertices)) + "}"


def verify_moore(K: SimplicialComplex, p: int,
                 mapper: Optional[SubsetMapper] = None) -> MooreVerification:
    """Check homology, chordality, the proxy scan and the neighborhood data.

    Mismatches are reported in each check's ``detail``, never raised.
    """
    spec = MooreSpec(p)
    report = MooreVerification(p=p)

    if K.m != spec.m:
        report.checks.append(CheckResult("vertex_count", False, f"expected m = {spec.m}, got {K.m}"))
        return report

    H = integral_homology(K)
    homology_ok = (H.free_rank(0) == 0 and not H.torsion_in(0)
                   and H.free_rank(1) == 0 and H.torsion_in(1) == (p,)
                   and H.free_rank(2) == 0 and not H.torsion_in(2))
    report.checks.append(CheckResult(
        "integral_homology", homology_ok,
        "H~0 = {}, H~1 = {}, H~2 = {} (expected 0, Z/{}, 0)".format(
            H.describe(0), H.describe(1), H.describe(2), p)))

    G = one_skeleton(K)
    chordal, order = is_chordal(G)
    detail = f"Lex-BFS elimination order {list(order)}" if chordal else "no perfect elimination ordering"
    chordal_ok = chordal
    if p > 2:
        fixed = collar_peo(p)
        fixed_ok = verify_peo(G, fixed)
        chordal_ok = chordal_ok and fixed_ok
        detail += f"; u/w/v order {'accepted' if fixed_ok else 'rejected'} by verify_peo"
    report.checks.append(CheckResult("chordal_one_skeleton", chordal_ok, detail))

    passed, failing = proper_full_subcomplexes_pass_proxy(K, mapper)
    report.checks.append(CheckResult(
        "proper_subcomplex_proxy", passed,
        f"{PROXY_LABEL} on all {2 ** K.m - 2} proper non-empty full subcomplexes"
        + ("" if passed else f"; fails on {_names(vertices_of(failing), spec)}")))

    report.checks.append(_neighborhood_check(G, spec))
    for check in report.checks:
        if not check.passed:
            LOGGER.warning("M(%d) check %s failed: %s", p, check.name, check.detail)
    return report


def _neighborhood_check(G, spec: MooreSpec) -> CheckResult:
    p = spec.p
    if p == 2:
        n7 = set(neighborhood(G, 7))
        missing_67 = not G.has_edge(6, 7)
        ok = n7 == {1, 2, 3} and missing_67
        return CheckResult("neighborhoods", ok,
                           f"N(7) = {sorted(n7)}, edge {{6,7}} {'absent' if missing_67 else 'present'}")

    diffs = []
    for vertex, expected in sorted(expected_neighborhoods(p).items()):
        actual = set(neighborhood(G, vertex))
        if actual != expected:
            diffs.append(f"N({spec.vertex_names()[vertex]}): missing {_names(expected - actual, spec)}, "
                         f"unexpected {_names(actual - expected, spec)}")
    return CheckResult("neighborhoods", not diffs,
                       "; ".join(diffs) if diffs else f"all {spec.m} neighborhoods match")


def non_edges(K: SimplicialComplex) -> List[Tuple[int, int]]:
    """Vertex pairs that are not edges, in colex order."""
    G = one_skeleton(K)
    vertices = sorted(G.nodes)
    pairs = [(a, b) for b in vertices for a in vertices if a < b and not G.has_edge(a, b)]
    return pairs


def witness_split(p: int) -> Tuple[int, int]:
    """(I, J) masks of the pinch-map product: {6,7} | [5] for p = 2, {w1, w_(p-1)} | rest for p >= 4.

    Raises:
        ValueError: If p = 3, where w1 and w2 are adjacent and K_I has no H~0 class
    """
    spec = MooreSpec(p)
    if p == 3:
        raise ValueError("w1 and w_(p-1) are adjacent in M(3)")
    full = (1 << spec.m) - 1
    I = mask_of([6, 7]) if p == 2 else mask_of([spec.w(1), spec.w(p - 1)])
    return I, full & ~I
