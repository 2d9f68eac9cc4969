"""
Test chain complexes, Betti numbers and integral homology
"""

import random
import sys
from pathlib import Path

import numpy as np
import pytest

# Add golod module to path
sys.path.insert(0, str(Path(__file__).parent.parent / "golod"))

from cli import main
from complex_core import euler_characteristic, full_subcomplex, mask_of, new_from_facets
from corpus import (
    boundary_simplex,
    cycle_complex,
    discrete_points,
    random_complex,
    rp2_six_vertex,
    simplex,
    torus_seven_vertex,
)
from hochster_tor import subset_betti
from homology import (
    CACHE_SIZE,
    betti_from_integral,
    cached_chain_complex,
    chain_complex,
    clear_caches,
    homological_dim_le_1,
    integral_homology,
    proper_full_subcomplexes_pass_proxy,
    reduced_betti,
    smith_invariants,
)
from koszul_oracle import cached_koszul_complex, koszul_classes
from linalg import RATIONALS, prime_field
from moore_complexes import moore_complex
from products_golod import golod_verdict, subset_cohomology

FIELDS = [RATIONALS, prime_field(2), prime_field(3)]


class TestReducedBetti:
    """Test reduced Betti numbers on known complexes."""

    def test_simplex_is_acyclic(self):
        assert reduced_betti(simplex(3), RATIONALS).is_zero()

    def test_spheres(self):
        assert reduced_betti(boundary_simplex(3), RATIONALS).as_dict() == {"1": 1}
        assert reduced_betti(boundary_simplex(4), prime_field(2)).as_dict() == {"2": 1}

    def test_points(self):
        assert reduced_betti(discrete_points(2), RATIONALS).as_dict() == {"0": 1}
        assert reduced_betti(discrete_points(3), RATIONALS)[0] == 2

    def test_empty_complex(self):
        empty = full_subcomplex(simplex(3), 0)
        betti = reduced_betti(empty, RATIONALS)
        assert betti[-1] == 1
        assert betti.degrees() == [-1]

    def test_ghost_vertices_do_not_matter(self):
        K = new_from_facets(5, [[1, 2], [2, 3], [1, 3]])
        assert reduced_betti(K, RATIONALS).as_dict() == {"1": 1}

    def test_moore_2_depends_on_the_field(self):
        M = moore_complex(2)
        assert reduced_betti(M, prime_field(2)).as_dict() == {"1": 1, "2": 1}
        assert reduced_betti(M, RATIONALS).is_zero()
        assert reduced_betti(M, prime_field(3)).is_zero()

    def test_torus(self):
        assert reduced_betti(torus_seven_vertex(), RATIONALS).as_dict() == {"1": 2, "2": 1}


class TestIntegralHomology:
    """Test Smith invariants and integral homology."""

    def test_smith_invariants(self):
        assert smith_invariants(np.array([[2, 0], [0, 3]])) == [1, 6]
        assert smith_invariants(np.array([[2, 4], [6, 8]])) == [2, 4]
        assert smith_invariants(np.array([[1, 0], [0, 0]])) == [1]
        assert smith_invariants(np.zeros((2, 3), dtype=np.int64)) == []

    def test_projective_planes(self):
        for K in (moore_complex(2), rp2_six_vertex()):
            H = integral_homology(K)
            assert H.free_rank(1) == 0
            assert H.torsion_in(1) == (2,)
            assert H.free_rank(2) == 0
            assert H.describe(1) == "Z/2"

    def test_moore_3(self):
        H = integral_homology(moore_complex(3))
        assert H.torsion_in(1) == (3,)
        assert H.describe(0) == "0"

    def test_torus(self):
        H = integral_homology(torus_seven_vertex())
        assert H.describe(1) == "Z + Z"
        assert H.describe(2) == "Z"

    def test_to_json(self):
        rows = integral_homology(moore_complex(2)).to_json()
        assert rows[0] == {"dim": -1, "free_rank": 0, "torsion": []}
        assert rows[2] == {"dim": 1, "free_rank": 0, "torsion": [2]}


class TestHomologicalProxy:
    """Test the hodim <= 1 proxy and the proper-subcomplex scan."""

    def test_examples(self):
        assert homological_dim_le_1(simplex(3))
        assert homological_dim_le_1(cycle_complex(5))
        assert not homological_dim_le_1(boundary_simplex(4))
        assert not homological_dim_le_1(moore_complex(2))

    def test_rejects_high_dimension(self):
        with pytest.raises(ValueError):
            homological_dim_le_1(boundary_simplex(5))

    def test_moore_2_proper_subcomplexes_pass(self):
        assert proper_full_subcomplexes_pass_proxy(moore_complex(2)) == (True, None)

    def test_first_failure_in_colex_order(self):
        # tetrahedron boundary on 1..4 plus an isolated vertex 5
        K = new_from_facets(5, boundary_simplex(4).facet_lists() + [[5]])
        assert proper_full_subcomplexes_pass_proxy(K) == (False, mask_of([1, 2, 3, 4]))


class TestRandomComplexes:
    """Seeded property checks on random complexes."""

    @pytest.mark.parametrize("seed", range(200))
    def test_chain_identities(self, seed):
        rng = random.Random(seed)
        K = random_complex(rng.randint(1, 7), rng, max_facets=7, max_size=4)
        cc = chain_complex(K)
        for d in range(1, K.dim + 1):
            assert not np.any(cc.boundary(d - 1) @ cc.boundary(d))

        # reduced Euler characteristic
        betti = reduced_betti(K, RATIONALS)
        alternating = sum((-1) ** d * betti[d] for d in range(-1, K.dim + 1))
        assert alternating == euler_characteristic(K) - 1

        # universal coefficients
        H = integral_homology(K)
        for k in FIELDS:
            assert betti_from_integral(H, k).as_dict() == reduced_betti(K, k).as_dict()


class TestSubsetCaches:
    """Memoised subset computations stay bounded and can be released."""

    def setup_method(self):
        clear_caches()
        self.cached = [cached_chain_complex, reduced_betti, subset_betti, subset_cohomology,
                       cached_koszul_complex, koszul_classes]

    def teardown_method(self):
        clear_caches()

    def test_every_cache_is_bounded(self):
        for cached in self.cached:
            assert cached.cache_info().maxsize == CACHE_SIZE

    def test_clear_after_verdict(self):
        K = moore_complex(2)
        golod_verdict(K, prime_field(2))
        assert subset_cohomology.cache_info().currsize > 0
        assert subset_betti.cache_info().currsize > 0
        clear_caches()
        for cached in self.cached:
            assert cached.cache_info().currsize == 0

    @pytest.mark.slow
    def test_scan_larger_than_bound_evicts(self):
        K = discrete_points(13)
        for mask in range(1, CACHE_SIZE + 100):
            subset_betti(K, RATIONALS, mask)
        info = subset_betti.cache_info()
        assert info.currsize == CACHE_SIZE
        assert reduced_betti.cache_info().currsize <= CACHE_SIZE
        # oldest entries were evicted, so the first mask is recomputed
        subset_betti(K, RATIONALS, 1)
        assert subset_betti.cache_info().misses == info.misses + 1

    def test_cli_releases_caches(self, capsys):
        fixture = Path(__file__).parent / "fixtures" / "moore_2.json"
        assert main(["golod", str(fixture), "--field", "fp:2", "--threads", "1"]) == 0
        capsys.readouterr()
        for cached in self.cached:
            assert cached.cache_info().currsize == 0


if __name__ == "__main__":
    pytest.main([__file__])
