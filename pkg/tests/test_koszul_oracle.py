"""
Test the Koszul complex cross-check against the Hochster computations
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add golod module to path
sys.path.insert(0, str(Path(__file__).parent.parent / "golod"))

from complex_core import full_subcomplex, mask_of, new_from_facets
from corpus import cycle_complex, discrete_points, oracle_corpus, triangle_with_tail, simplex
from errors import CapExceededError
from hochster_tor import hochster_table
from koszul_oracle import (
    commutation_defect,
    exterior_sign,
    koszul_complex,
    koszul_product_nontrivial,
    koszul_product_ranks,
    koszul_tor_table,
    multiply_basis,
)
from linalg import RATIONALS, is_zero, prime_field
from moore_complexes import moore_complex
from products_golod import find_nontrivial_product, product_ranks
from settings import AnalysisSettings

FIELDS = [RATIONALS, prime_field(2), prime_field(3), prime_field(5)]


class TestKoszulComplex:
    """Test the squarefree strands of the Koszul complex."""

    def setup_method(self):
        self.square = cycle_complex(4)

    def test_simplex_strand_sizes(self):
        kc = koszul_complex(simplex(3), mask_of([1, 2, 3]))
        assert kc.dimension() == 8
        assert [kc.size(i) for i in range(4)] == [1, 3, 3, 1]

    def test_diagonal_strand(self):
        kc = koszul_complex(self.square, mask_of([1, 3]))
        assert kc.bases == {1: (mask_of([1]), mask_of([3])), 2: (0,)}
        assert kc.differential(2).tolist() == [[1], [-1]]
        assert kc.differential(1).shape == (0, 2)

    def test_differential_squares_to_zero(self):
        K = moore_complex(2)
        for d in (K.universe, mask_of([1, 2, 4, 7]), mask_of([5, 6, 7])):
            kc = koszul_complex(K, d)
            for i in range(2, kc.length + 1):
                assert not np.any(kc.differential(i - 1) @ kc.differential(i))

    def test_multidegree_outside_universe(self):
        K = full_subcomplex(self.square, mask_of([1, 2]))
        with pytest.raises(ValueError):
            koszul_complex(K, mask_of([3]))


class TestKoszulTor:
    """Test Tor tables computed from Koszul homology."""

    def test_small_complexes(self):
        assert koszul_tor_table(simplex(3), RATIONALS).entries == {(0, 0): 1}
        assert koszul_tor_table(discrete_points(2), RATIONALS).entries == {(0, 0): 1, (1, 2): 1}
        assert koszul_tor_table(cycle_complex(4), RATIONALS).entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}

    def test_breakdown_uses_reduced_indexing(self):
        table = koszul_tor_table(cycle_complex(4), RATIONALS)
        assert table.betti(0).as_dict() == {"-1": 1}
        assert table.betti(mask_of([1, 3])).as_dict() == {"0": 1}
        assert table.betti(mask_of([1, 2, 3, 4])).as_dict() == {"1": 1}

    def test_ghost_vertex(self):
        K = new_from_facets(3, [[1, 2]])
        assert koszul_tor_table(K, RATIONALS).entries == hochster_table(K, RATIONALS).entries

    def test_cap_ignores_force(self):
        settings = AnalysisSettings(oracle_max_m=3, force=True)
        with pytest.raises(CapExceededError):
            koszul_tor_table(cycle_complex(4), RATIONALS, settings)
        with pytest.raises(CapExceededError):
            koszul_product_nontrivial(cycle_complex(4), RATIONALS, settings)


class TestKoszulProducts:
    """Test the product on Koszul homology."""

    def setup_method(self):
        self.square = cycle_complex(4)

    def test_exterior_sign(self):
        assert exterior_sign(mask_of([1]), mask_of([2])) == 1
        assert exterior_sign(mask_of([2]), mask_of([1])) == -1
        assert exterior_sign(mask_of([2, 4]), mask_of([1, 3])) == -1
        assert exterior_sign(0, mask_of([1, 2])) == 1

    def test_multiply_basis(self):
        d1, d2 = mask_of([1, 3]), mask_of([2, 4])
        assert multiply_basis(self.square, d1, mask_of([1]), d2, mask_of([2])) == (mask_of([1, 2]), 1)
        assert multiply_basis(self.square, d1, mask_of([1]), d2, mask_of([4])) == (mask_of([1, 4]), -1)
        assert multiply_basis(self.square, d1, mask_of([1, 3]), d2, 0) is None
        assert multiply_basis(self.square, d1, 0, d1, 0) is None

    def test_examples(self):
        assert koszul_product_nontrivial(self.square, RATIONALS)
        assert koszul_product_nontrivial(self.square, prime_field(2))
        assert not koszul_product_nontrivial(simplex(3), RATIONALS)
        assert not koszul_product_nontrivial(triangle_with_tail(), prime_field(3))

    def test_moore_2(self):
        M = moore_complex(2)
        assert koszul_product_nontrivial(M, prime_field(2))
        assert not koszul_product_nontrivial(M, RATIONALS)

    def test_square_ranks(self):
        ranks = koszul_product_ranks(self.square, RATIONALS)
        assert ranks == {(mask_of([1, 3]), mask_of([2, 4]), 0, 0): 1}

    @pytest.mark.parametrize("k", FIELDS, ids=lambda k: k.label)
    def test_graded_commutativity(self, k):
        defect = commutation_defect(self.square, k, mask_of([1, 3]), 1, mask_of([2, 4]), 1)
        assert defect.shape[1] == 1
        assert is_zero(defect)

    def test_graded_commutativity_on_moore_2(self):
        k = prime_field(2)
        M = moore_complex(2)
        defect = commutation_defect(M, k, mask_of([6, 7]), 1, mask_of([1, 2, 3, 4, 5]), 3)
        assert is_zero(defect)


class TestCorpusAgreement:
    """The oracle and the Hochster computations agree on the whole corpus."""

    @pytest.mark.slow
    @pytest.mark.parametrize("k", FIELDS, ids=lambda k: k.label)
    def test_tables_and_products_agree(self, k):
        corpus = oracle_corpus()
        assert len(corpus) == 33
        for name, K in corpus.items():
            hochster = hochster_table(K, k)
            koszul = koszul_tor_table(K, k)
            assert koszul.entries == hochster.entries, name
            assert ({d: b.as_dict() for d, b in koszul.breakdown.items()}
                    == {d: b.as_dict() for d, b in hochster.breakdown.items()}), name

            assert koszul_product_ranks(K, k, table=koszul) == product_ranks(K, k, table=hochster), name
            nontrivial = find_nontrivial_product(K, k, table=hochster) is not None
            assert koszul_product_nontrivial(K, k) == nontrivial, name


if __name__ == "__main__":
    pytest.main([__file__])
