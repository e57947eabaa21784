"""Exact arithmetic toolkit for permutation-invariant lattices."""
from .errors import ConfigError, DimensionError, PermLatError
from .lattice import (
    GramData,
    Lattice,
    determinant,
    direct_sum,
    from_generators,
    gram,
    index,
    integer_lattice,
    is_tau_invariant,
    membership,
    sym_automorphisms,
)
from .perms import (
    CycleType,
    Permutation,
    apply,
    conjugate,
    cycle_decomposition,
    identity,
    order,
    parse_permutation,
    permutation_matrix,
    sample_permutation,
    standard_cycle,
)
from .polynomials import (
    IntPolynomial,
    char_poly,
    cyclotomic,
    euler_phi,
    generic_order,
    min_poly,
    poly_divides,
    poly_gcd,
    vector_to_poly,
)
from .reduction import (
    MinimalVectorSet,
    MinimaProfile,
    is_minkowskian,
    is_well_rounded,
    lll_reduce,
    minimal_vectors,
    short_vectors,
    successive_minima,
)
from .taulat import (
    Subspace,
    cycle_constant_vector,
    invariant_subspaces_ncycle,
    is_generic,
    orbit_lattice,
    orbit_matrix,
    random_invariant_lattice,
    tau_order,
    vf_basis,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "CycleType",
    "DimensionError",
    "GramData",
    "IntPolynomial",
    "Lattice",
    "MinimaProfile",
    "MinimalVectorSet",
    "PermLatError",
    "Permutation",
    "Subspace",
    "apply",
    "char_poly",
    "conjugate",
    "cycle_constant_vector",
    "cycle_decomposition",
    "cyclotomic",
    "determinant",
    "direct_sum",
    "euler_phi",
    "from_generators",
    "generic_order",
    "gram",
    "identity",
    "index",
    "integer_lattice",
    "invariant_subspaces_ncycle",
    "is_generic",
    "is_minkowskian",
    "is_tau_invariant",
    "is_well_rounded",
    "lll_reduce",
    "membership",
    "min_poly",
    "minimal_vectors",
    "orbit_lattice",
    "orbit_matrix",
    "order",
    "parse_permutation",
    "permutation_matrix",
    "poly_divides",
    "poly_gcd",
    "random_invariant_lattice",
    "sample_permutation",
    "short_vectors",
    "standard_cycle",
    "successive_minima",
    "sym_automorphisms",
    "tau_order",
    "vector_to_poly",
    "vf_basis",
]
