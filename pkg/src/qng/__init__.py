"""Exact verification of signless-Laplacian Nordhaus-Gaddum eigenvalue bounds.

The package computes graph spectra both numerically and exactly, turns each
registered bound into an executable certifying predicate, and reproduces the
extremal-graph catalogues by isomorph-free exhaustive enumeration of small
graphs.
"""

from .graph import (
    CapacityError,
    Graph,
    Graph6Error,
    complement,
    complete,
    complete_bipartite,
    cycle,
    cartesian_product,
    disjoint_union,
    empty_graph,
    family,
    from_edges,
    from_graph6,
    h_graph,
    join,
    path,
    star,
    to_graph6,
)
from .spectra import (
    CharPoly,
    Spectrum,
    certify_qk,
    char_poly_exact,
    eigenvalues_sym,
    multiplicity_at,
    ng_sum,
    q_matrix,
    sturm_count,
)
from .partitions import (
    QuotientMatrix,
    duplicate_classes,
    interlaces,
    is_equitable,
    quotient_matrix,
    verify_quotient_eigen_containment,
)
from .enumeration import CanonicalForm, ScanResult, canonical_form, enumerate_graphs, scan
from .theorems import BoundReport, ExtremalCertificate, proof_check_thm12, proof_check_thm15

__version__ = "0.1.0"
