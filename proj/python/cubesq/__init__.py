"""Decomposition h = f^3 + g^2 for degree-24 binary forms.

Thin python layer over the C++ core: exact forward construction, the
multi-start inverse solver with orbit grouping, Kodaira fiber
classification, dual-lattice enumeration, and the integer representation
search n = x^3 + y^2.
"""

from ._cubesq import (
    CubesqError,
    betti2,
    euler_total,
    experiment,
    family,
    fibers,
    forward,
    forward_json,
    lattice_vectors,
    mordell_min_with_reps,
    mordell_representations,
    parse,
    picard_bound_check,
    riemann_roch_chi,
    selftest,
    solve,
    totient,
    verify,
    verify_relations,
)

__all__ = [
    "CubesqError",
    "betti2",
    "euler_total",
    "experiment",
    "family",
    "fibers",
    "forward",
    "forward_json",
    "lattice_vectors",
    "mordell_min_with_reps",
    "mordell_representations",
    "parse",
    "picard_bound_check",
    "riemann_roch_chi",
    "selftest",
    "solve",
    "totient",
    "verify",
    "verify_relations",
]
