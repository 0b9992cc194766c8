"""Spectra and eigenfunctions of weight-band subgraphs of the binary cube.

Closed-form eigenvalues (via exact Krawtchouk polynomials and certified
tridiagonal eigensolves) with multiplicities, explicit eigenfunction
synthesis, entropy-based boundary bounds, and a brute-force dense oracle
to cross-check all of it.
"""

from .bounds import (
    BoundsReport,
    ball_bound,
    entropy,
    entropy_inv,
    modls_bound,
    reciprocity_delta_bound,
    subcube_reference,
)
from .eigenfunctions import (
    EigenFunction,
    SemiSymBasis,
    build_basis,
    check_eigenspace_membership,
    check_zonal_uniqueness,
    restricted_adjacency,
    synthesize,
)
from .errors import (
    BudgetExceededError,
    InvalidDegreeError,
    InvalidParameterError,
    ZeroFunctionError,
)
from .hamming import (
    InducedGraph,
    OracleSpectrum,
    build_graph,
    incidence_matrix,
    oracle_spectrum,
    rayleigh_fractional_boundary,
)
from .krawtchouk import (
    KrawtchoukPoly,
    RootList,
    build,
    check_reciprocity,
    eval_exact,
    first_root,
    roots,
)
from .spectrum import (
    SpectrumTable,
    TridiagonalSym,
    VerifyReport,
    coupling_matrix,
    full_spectrum,
    lambda_set,
    max_eigenvalue,
    verify_against_oracle,
)

__version__ = "0.1.0"
