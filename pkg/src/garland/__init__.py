"""Spectral-gap certificates for weighted simplicial complexes."""

from .complex import SimplicialComplex, build_complex, link, validate_hypotheses
from .criteria import (
    Certificate,
    CriterionReport,
    certify_property_T,
    check_range_vanishing,
    check_vanishing,
    propagated_bound,
)
from .errors import GarlandError, InvalidInput
from .oracle import betti_numbers, cohomology_dim, gap_bound_probe, identity_suite
from .spectral import lambda_gap, link_matrix, link_spectrum
from .weights import WeightFunction, bs_weight, normalized_top_weight, validate_weight, weight_from_top
from .xprime import build_xprime, verify_xprime

__version__ = "0.1.0"
