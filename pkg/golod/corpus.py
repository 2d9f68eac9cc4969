"""
Named Complexes
===============

Small complexes with known answers, used by the tests, the acceptance
script and the random fixture generator.
"""

import random
from itertools import combinations
from typing import Callable, Dict, List, Optional

try:
    from .complex_core import SimplicialComplex, new_from_facets
    from .moore_complexes import moore_complex
except ImportError:
    from complex_core import SimplicialComplex, new_from_facets
    from moore_complexes import moore_complex


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on [n]."""
    return new_from_facets(n, [list(range(1, n + 1))])


def boundary_simplex(n: int) -> SimplicialComplex:
    """Boundary of the simplex on [n], a sphere of dimension n - 2 (n >= 2)."""
    if n < 2:
        raise ValueError(f"boundary of a simplex needs n >= 2, got {n}")
    return new_from_facets(n, [list(c) for c in combinations(range(1, n + 1), n - 1)])


def discrete_points(n: int) -> SimplicialComplex:
    return new_from_facets(n, [[v] for v in range(1, n + 1)])


def cycle_complex(n: int) -> SimplicialComplex:
    """The n-cycle 1-2-..-n-1 as a 1-dimensional complex (n >= 3)."""
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return new_from_facets(n, [[i, i % n + 1] for i in range(1, n + 1)])


def rp2_six_vertex() -> SimplicialComplex:
    """The 1-neighborly 6-vertex real projective plane."""
    facets = ["123", "134", "145", "156", "162", "235", "346", "452", "563", "624"]
    return new_from_facets(6, [[int(c) for c in f] for f in facets])


def torus_seven_vertex() -> SimplicialComplex:
    """The 1-neighborly 7-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    facets = []
    for i in range(7):
        facets.append([i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1])
        facets.append([i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1])
    return new_from_facets(7, facets)


def octahedron_boundary() -> SimplicialComplex:
    """Octahedral 2-sphere; antipodal pairs (1,2), (3,4), (5,6) are non-edges."""
    return new_from_facets(6, [[a, b, c] for a in (1, 2) for b in (3, 4) for c in (5, 6)])


def bipyramid_boundary() -> SimplicialComplex:
    """Suspension of the triangle 1 2 3 with poles 4 and 5."""
    return new_from_facets(5, [[a, b, pole] for a, b in ((1, 2), (2, 3), (1, 3)) for pole in (4, 5)])


def triangle_with_tail() -> SimplicialComplex:
    """Facets {1,2,3} and {3,4}: not 1-neighborly yet Golod over Q."""
    return new_from_facets(4, [[1, 2, 3], [3, 4]])


def random_complex(m: int, rng: random.Random, max_facets: int = 6,
                   max_size: int = 3) -> SimplicialComplex:
    """A random complex on [m]; unused labels become ghost vertices.

    Args:
        m: Label range
        rng: Seeded generator, so fixtures are reproducible
        max_facets: Upper bound on the number of generated faces
        max_size: Upper bound on the vertex count of each generated face
    """
    count = rng.randint(1, max_facets)
    facets: List[List[int]] = []
    for _ in range(count):
        size = rng.randint(1, min(max_size, m))
        facets.append(sorted(rng.sample(range(1, m + 1), size)))
    return new_from_facets(m, facets)


SURFACES: Dict[str, Callable[[], SimplicialComplex]] = {
    "tetrahedron_boundary": lambda: boundary_simplex(4),
    "rp2_six_vertex": rp2_six_vertex,
    "torus_seven_vertex": torus_seven_vertex,
    "moore_2": lambda: moore_complex(2),
    "octahedron_boundary": octahedron_boundary,
    "bipyramid_boundary": bipyramid_boundary,
}


NAMED: Dict[str, Callable[[], SimplicialComplex]] = {
    "simplex_3": lambda: simplex(3),
    "triangle_boundary": lambda: boundary_simplex(3),
    "two_points": lambda: discrete_points(2),
    "three_points": lambda: discrete_points(3),
    "square": lambda: cycle_complex(4),
    "pentagon": lambda: cycle_complex(5),
    "triangle_with_tail": triangle_with_tail,
    **SURFACES,
}


def named_complex(name: str) -> SimplicialComplex:
    """Look up a corpus complex by name.

    Raises:
        ValueError: If the name is unknown
    """
    try:
        return NAMED[name]()
    except KeyError:
        raise ValueError(f"unknown corpus complex {name!r}; choose from {sorted(NAMED)}") from None


def oracle_corpus(seed: int = 2024, random_count: int = 20, max_m: int = 8,
                  rng: Optional[random.Random] = None) -> Dict[str, SimplicialComplex]:
    """Named complexes with m <= max_m plus seeded random ones."""
    rng = rng or random.Random(seed)
    corpus = {name: build() for name, build in NAMED.items()}
    corpus = {name: K for name, K in corpus.items() if K.m <= max_m}
    for index in range(random_count):
        m = rng.randint(3, max_m)
        corpus[f"random_{index:02d}"] = random_complex(m, rng)
    return corpus
