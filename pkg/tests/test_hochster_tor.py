"""
Test Hochster Tor tables and moment-angle Poincaré series
"""

import sys
from pathlib import Path

import pytest

# Add golod module to path
sys.path.insert(0, str(Path(__file__).parent.parent / "golod"))

from complex_core import join, mask_of, new_from_facets
from corpus import boundary_simplex, cycle_complex, discrete_points, triangle_with_tail, simplex
from errors import CapExceededError
from hochster_tor import hochster_table, poincare_product, zk_poincare
from linalg import RATIONALS, prime_field
from moore_complexes import moore_complex
from parallel import create_mapper
from settings import AnalysisSettings


class TestHochsterTable:
    """Test Tor tables of small complexes."""

    def test_simplex_has_trivial_tor(self):
        table = hochster_table(simplex(3), RATIONALS)
        assert table.entries == {(0, 0): 1}

    def test_two_points(self):
        table = hochster_table(discrete_points(2), RATIONALS)
        assert table.entries == {(0, 0): 1, (1, 2): 1}

    def test_square_is_a_complete_intersection(self):
        table = hochster_table(cycle_complex(4), RATIONALS)
        assert table.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
        assert sorted(table.breakdown) == [0, mask_of([1, 3]), mask_of([2, 4]), mask_of([1, 2, 3, 4])]

    def test_triangle_boundary(self):
        table = hochster_table(boundary_simplex(3), prime_field(2))
        assert table.entries == {(0, 0): 1, (1, 3): 1}

    def test_moore_2_depends_on_the_field(self):
        M = moore_complex(2)
        z2 = hochster_table(M, prime_field(2))
        q = hochster_table(M, RATIONALS)
        assert z2.total() > q.total()
        # full set: H~1 and H~2 of RP^2 over Z/2
        assert z2.betti(M.universe).as_dict() == {"1": 1, "2": 1}
        assert q.betti(M.universe) is None

    def test_breakdown_matches_entries(self):
        for K in (triangle_with_tail(), moore_complex(2), cycle_complex(5)):
            table = hochster_table(K, prime_field(2))
            assert table.breakdown_total() == table.total()

    def test_ghost_vertex_contributes(self):
        # ghost 3 is a minimal non-face: Tor_{1,2} in multidegree {3}
        K = new_from_facets(3, [[1, 2]])
        table = hochster_table(K, RATIONALS)
        assert table.entries == {(0, 0): 1, (1, 1): 1}
        assert table.betti(mask_of([3]))[-1] == 1

    def test_cap(self):
        settings = AnalysisSettings(hochster_max_m=3)
        with pytest.raises(CapExceededError) as info:
            hochster_table(cycle_complex(4), RATIONALS, settings)
        assert info.value.limit == 3
        forced = AnalysisSettings(hochster_max_m=3, force=True)
        assert hochster_table(cycle_complex(4), RATIONALS, forced).total() == 4

    def test_render_text(self):
        text = hochster_table(cycle_complex(4), prime_field(2)).render_text()
        assert text.startswith("Tor over Z/2")
        assert "H*(Z_K) dims by degree: 1 0 0 2 0 0 1" in text

    def test_to_json(self):
        document = hochster_table(discrete_points(2), RATIONALS).to_json()
        assert document["field"] == "q"
        assert document["entries"] == [{"i": 0, "j": 0, "dim": 1}, {"i": 1, "j": 2, "dim": 1}]
        assert document["breakdown"][0] == {"subset": [], "betti": {"-1": 1}}

    @pytest.mark.integration
    def test_process_pool_gives_the_same_table(self):
        M = moore_complex(2)
        serial = hochster_table(M, prime_field(2))
        with create_mapper(2) as mapper:
            pooled = hochster_table(M, prime_field(2), mapper=mapper)
        assert pooled.entries == serial.entries
        assert list(pooled.breakdown) == list(serial.breakdown)


class TestPoincareSeries:
    """Test H*(Z_K) dimensions."""

    def test_square_gives_product_of_three_spheres(self):
        assert zk_poincare(cycle_complex(4), RATIONALS).dims == (1, 0, 0, 2, 0, 0, 1)

    def test_triangle_boundary_gives_five_sphere(self):
        assert zk_poincare(boundary_simplex(3), RATIONALS).dims == (1, 0, 0, 0, 0, 1)

    def test_join_multiplies_series(self):
        left = new_from_facets(4, [[1], [2]], universe=[1, 2])
        right = new_from_facets(4, [[3], [4]], universe=[3, 4])
        a = zk_poincare(left, RATIONALS)
        b = zk_poincare(right, RATIONALS)
        assert a.dims == (1, 0, 0, 1)
        joined = zk_poincare(join(left, right), RATIONALS)
        assert poincare_product(a, b) == list(joined.dims)

    def test_indexing(self):
        series = zk_poincare(cycle_complex(4), RATIONALS)
        assert series[3] == 2
        assert series[99] == 0
        assert series.total() == 4


if __name__ == "__main__":
    pytest.main([__file__])
