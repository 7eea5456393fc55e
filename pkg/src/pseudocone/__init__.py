"""Pseudo-codeword analysis of binary linear codes.

Exact enumeration of the edges of the fundamental cone, stopping sets,
girth and column-overlap pseudo-weight bounds, an optimality certificate,
exact LP and ML decoding, and a Monte-Carlo comparison of the two.
"""

from .alist import load_matrix, parse_alist, parse_matrix, to_alist
from .bounds import (
    ASYMPTOTICALLY_OPTIMAL,
    NOT_OPTIMAL,
    UNDETERMINED,
    BoundReport,
    OptimalityCertificate,
    bound_report,
    certify,
    certify_distance,
    kv_bound,
    tanner_bound_closed_form,
    tanner_bound_dL,
)
from .cone import (
    CODEWORD_MULTIPLE,
    NON_CODEWORD,
    Ray,
    RayCatalog,
    canonicalize,
    cone_inequalities,
    enumerate_rays,
    extreme_rays,
    is_pseudo_codeword,
    pseudo_weight,
)
from .constructions import (
    circulant,
    cyclic_code_from_generator,
    eg_point_hyperplane_H,
    hamming_simplex_H,
    polynomial_vector,
)
from .decoding import decode, in_polytope, llr_awgn, lp_decode, ml_decode, polytope_constraints, snr_to_sigma
from . import errors
from .errors import DimensionTooLarge, PseudoconeError, TheoremFalsified
from .galois import GaloisField
from .gf2 import (
    BinaryMatrix,
    CodeParameters,
    code_parameters,
    dimension,
    enumerate_codewords,
    is_codeword,
    min_distance,
    nullspace_basis,
    rank,
)
from .report import AnalysisReport, Caps, analyze, emit_report
from .simulation import SimulationPoint, simulate, to_csv
from .stopping import StoppingReport, is_stopping_set, stopping_distance
from .tanner import TannerGraph, build

__version__ = "0.1.0"
