"""Measurement lab for I/O cost and repair bandwidth of linear Reed-Solomon repair.

The package models full-length Reed-Solomon codes over GF(q^ell), linear repair
schemes given by dual codewords, the per-node I/O matrices they induce, and both
routes to the I/O cost (direct column counting and the weight-of-rowspace formula).
It also builds low-I/O schemes from subspace-annihilating linearized polynomials
and searches scheme space exhaustively for certified minima.
"""
from .fieldmath import FieldContext, coset_weight, poly_eval, support, weight
from .rs import RSCode
from .scheme import CostReport, RepairScheme
from .qpoly import qp_eval, qp_image, qp_kernel, solve_annihilator, subspace_intersect_kernels
from .construction import (
    build_low_io_scheme,
    compare_baselines,
    bandwidth_equals_io,
    predicted_cost,
)
from .search import gaussian_binomial, min_io_exhaustive, verify_bound

__all__ = [
    "FieldContext",
    "RSCode",
    "RepairScheme",
    "CostReport",
    "coset_weight",
    "poly_eval",
    "support",
    "weight",
    "qp_eval",
    "qp_image",
    "qp_kernel",
    "solve_annihilator",
    "subspace_intersect_kernels",
    "build_low_io_scheme",
    "predicted_cost",
    "bandwidth_equals_io",
    "compare_baselines",
    "gaussian_binomial",
    "min_io_exhaustive",
    "verify_bound",
]
