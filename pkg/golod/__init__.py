"""
Golod Toolkit
=============

Golodness invariants of simplicial complexes: Hochster Tor tables, the
product pairing on full-subcomplex cohomology, chordality, neighborliness,
the mod-p Moore space family and a Koszul complex cross-check.
"""

from .complex_core import (
    SimplicialComplex,
    new_from_facets,
    faces,
    full_subcomplex,
    link,
    join,
    minimal_non_faces,
    hat_closure,
    is_k_neighborly,
    is_surface_triangulation,
    one_skeleton,
)
from .graph_chordal import is_chordal, lex_bfs, neighborhood, verify_peo
from .linalg import RATIONALS, FieldSpec, parse_field, prime_field
from .homology import integral_homology, reduced_betti, homological_dim_le_1
from .hochster_tor import TorTable, hochster_table, zk_poincare
from .products_golod import (
    GolodStatus,
    GolodReason,
    GolodVerdict,
    ProductWitness,
    cross_product_map,
    find_nontrivial_product,
    golod_verdict,
    surface_golod_equivalence_report,
)
from .moore_complexes import moore_complex, verify_moore
from .koszul_oracle import koszul_product_nontrivial, koszul_tor_table
from .complex_io import load_complex, parse_complex
from .settings import AnalysisSettings, create_settings_from_env
from .errors import CapExceededError, ComplexFormatError, ConsistencyError

__version__ = "1.0.0"

__all__ = [
    # Complexes
    "SimplicialComplex",
    "new_from_facets",
    "faces",
    "full_subcomplex",
    "link",
    "join",
    "minimal_non_faces",
    "hat_closure",
    "is_k_neighborly",
    "is_surface_triangulation",
    "one_skeleton",

    # Graphs
    "is_chordal",
    "lex_bfs",
    "neighborhood",
    "verify_peo",

    # Fields and homology
    "RATIONALS",
    "FieldSpec",
    "parse_field",
    "prime_field",
    "integral_homology",
    "reduced_betti",
    "homological_dim_le_1",

    # Tor and products
    "TorTable",
    "hochster_table",
    "zk_poincare",
    "GolodStatus",
    "GolodReason",
    "GolodVerdict",
    "ProductWitness",
    "cross_product_map",
    "find_nontrivial_product",
    "golod_verdict",
    "surface_golod_equivalence_report",

    # Moore spaces and the oracle
    "moore_complex",
    "verify_moore",
    "koszul_product_nontrivial",
    "koszul_tor_table",

    # Input, settings, errors
    "load_complex",
    "parse_complex",
    "AnalysisSettings",
    "create_settings_from_env",
    "CapExceededError",
    "ComplexFormatError",
    "ConsistencyError",
]
