"""
Orbit lattices of a permutation and the invariant-subspace machinery around them.

For a permutation ``tau`` of order ``nu`` and a vector ``x`` the orbit matrix
has columns ``x, tau(x), ..., tau^(nu-1)(x)``; its integer column span is the
orbit lattice and its rank is the tau-order of ``x``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionError, PermLatError
from .lattice import Lattice, from_generators, is_tau_invariant
from .perms import Permutation, apply, cycle_decomposition, order
from .polynomials import (
    IntPolynomial,
    cyclotomic,
    divisors,
    generic_order,
    poly_divides,
    poly_gcd,
    t_pow_minus_one,
    vector_to_poly,
)
from .seeding import random_box_vector, rng_for

DEFAULT_BOX = 10
MAX_ATTEMPTS = 10
MODES = ("orbit", "orbit-span", "direct-sum")

__all__ = [
    "Subspace",
    "SampledLattice",
    "orbit_matrix",
    "orbit_vectors",
    "orbit_lattice",
    "tau_order",
    "cycle_constant_vector",
    "vf_basis",
    "ncycle_alignment",
    "invariant_subspaces_ncycle",
    "is_generic",
    "ncycle_order_from_gcd",
    "random_invariant_lattice",
]


@dataclass(frozen=True, eq=False)
class Subspace:
    """
    A rational subspace of R^n given by independent basis columns.

    Equality compares the reduced echelon form of the span, not the basis.
    ``divisor`` records the polynomial f when the subspace is some V(f).
    """

    ambient_dim: int
    basis: tuple[tuple, ...]
    divisor: IntPolynomial | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.basis and linalg.rank(self.basis) != len(self.basis):
            raise ValueError("subspace basis columns are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def echelon(self) -> tuple[tuple, ...]:
        if not self.basis:
            return ()
        R, pivots = linalg.rref(self.basis)
        return tuple(tuple(row) for row in R[:len(pivots)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.echelon == other.echelon

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.echelon))

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} for subspace of R^{self.ambient_dim}")
        if not any(v):
            return True
        return linalg.rank(list(self.basis) + [list(v)]) == self.dim

    def is_invariant(self, tau: Permutation) -> bool:
        return all(self.contains(apply(tau, b)) for b in self.basis)

    def to_json(self) -> dict:
        out = {
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "basis_columns": [[_rat_json(v) for v in b] for b in self.basis],
        }
        if self.divisor is not None:
            out["divisor"] = str(self.divisor)
        return out


def _rat_json(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _check_vector(x: Sequence, tau: Permutation) -> None:
    if len(x) != tau.n:
        raise DimensionError(f"vector of length {len(x)} for permutation of degree {tau.n}")


def orbit_vectors(x: Sequence, tau: Permutation) -> list[tuple]:
    """``[x, tau(x), ..., tau^(nu-1)(x)]`` with ``nu = order(tau)``."""
    _check_vector(x, tau)
    out = [tuple(x)]
    for _ in range(order(tau) - 1):
        out.append(apply(tau, out[-1]))
    return out


def orbit_matrix(x: Sequence, tau: Permutation) -> list[list]:
    """n x nu matrix with column j equal to tau^j(x)."""
    return linalg.columns_to_matrix(orbit_vectors(x, tau), tau.n)


def orbit_lattice(x: Sequence[int], tau: Permutation) -> Lattice:
    _check_vector(x, tau)
    if not any(x):
        raise ValueError("the orbit lattice of the zero vector is trivial")
    return from_generators(orbit_vectors(x, tau), tau.n)


def tau_order(x: Sequence, tau: Permutation) -> int:
    """Rank of the orbit lattice of ``x``; 0 for the zero vector."""
    return linalg.rank(orbit_matrix(x, tau))


def cycle_constant_vector(tau: Permutation, values: Sequence) -> tuple:
    """
    Vector equal to ``values[j]`` on every point of the j-th cycle of ``tau``.

    Cycles are ordered by their smallest element, fixed points included.
    """
    cycles, _ = cycle_decomposition(tau)
    if len(values) != len(cycles):
        raise DimensionError(f"{len(values)} values for {len(cycles)} cycles")
    x = [0] * tau.n
    for c, v in zip(cycles, values):
        for i in c:
            x[i - 1] = v
    return tuple(x)


def vf_basis(f: IntPolynomial, n: int) -> Subspace:
    """
    The subspace of coefficient vectors ``a`` with f(t) | a(t), deg a < n.

    Basis columns are the coefficient vectors of f, t f, ..., t^(n-1-deg f) f.
    """
    if f.degree < 1:
        raise ValueError("f must be non-constant")
    if not poly_divides(f, t_pow_minus_one(n)):
        raise ValueError(f"{f} does not divide t^{n} - 1")
    f = f.monic()
    cols = []
    for k in range(n - f.degree):
        cols.append(tuple(f[j - k] if j >= k else 0 for j in range(n)))
    return Subspace(n, tuple(cols), divisor=f)


def ncycle_alignment(tau: Permutation) -> Permutation:
    """
    The permutation ``rho`` with ``conjugate(standard_cycle(n), rho) == tau``.

    Built by walking the cycle of ``tau`` from its smallest point:
    with ``c_1 = 1`` and ``c_{j+1} = tau(c_j)``, ``rho(c_j) = j``.
    """
    if not tau.is_n_cycle():
        raise ValueError(f"{tau} is not an n-cycle")
    images = [0] * tau.n
    c = 1
    for j in range(1, tau.n + 1):
        images[c - 1] = j
        c = tau(c)
    return Permutation(tuple(images))


def invariant_subspaces_ncycle(tau: Permutation) -> list[Subspace]:
    """
    All proper tau-invariant subspaces rho(V(f)) of an n-cycle ``tau``, one per
    non-constant monic divisor f of t^n - 1, sorted by decreasing dimension.
    """
    rho = ncycle_alignment(tau)
    n = tau.n
    ds = divisors(n)
    out = []
    for size in range(1, len(ds) + 1):
        for subset in itertools.combinations(ds, size):
            f = IntPolynomial.constant(1)
            for d in subset:
                f = f * cyclotomic(d)
            V = vf_basis(f, n)
            W = Subspace(n, tuple(apply(rho, b) for b in V.basis), divisor=V.divisor)
            out.append((W.dim, subset, W))
    out.sort(key=lambda t: (-t[0], t[1]))
    return [W for _, _, W in out]


def ncycle_order_from_gcd(x: Sequence, tau: Permutation) -> int:
    """
    tau-order of ``x`` for an n-cycle computed as n - deg gcd(a(t), t^n - 1),
    where a is ``x`` relabelled along the cycle of ``tau``.
    """
    _check_vector(x, tau)
    rho = ncycle_alignment(tau)
    if not any(x):
        return 0
    a = apply(rho.inverse(), x)
    return tau.n - poly_gcd(vector_to_poly(a), t_pow_minus_one(tau.n)).degree


def is_generic(x: Sequence, tau: Permutation) -> bool:
    """True iff the tau-order of ``x`` reaches the generic order of tau's cycle type."""
    _check_vector(x, tau)
    if not any(x):
        raise ValueError("genericity is undefined for the zero vector")
    return tau_order(x, tau) == generic_order(tau.cycle_type()).o_generic


@dataclass(frozen=True)
class SampledLattice:
    """Result of ``random_invariant_lattice``; ``full_rank`` is False when the attempt cap was hit."""

    lattice: Lattice
    generators: tuple[tuple[int, ...], ...]
    full_rank: bool
    attempts: int


def _sample_orbit_span(tau, box, seed, max_orbits):
    n = tau.n
    gens: list[tuple[int, ...]] = []
    cols: list[tuple] = []
    attempts = 0
    for a in range(max_orbits):
        attempts += 1
        x = random_box_vector(rng_for(seed, a), n, box)
        gens.append(x)
        cols.extend(orbit_vectors(x, tau))
        if linalg.rank(cols) == n:
            break
    return gens, cols, attempts


def _sample_direct_sum(tau, box, seed, max_attempts):
    n = tau.n
    cycles, _ = cycle_decomposition(tau)
    gens: list[tuple[int, ...]] = []
    cols: list[tuple] = []
    attempts = 0
    for b, cyc in enumerate(c for c in cycles if len(c) > 1):
        m = len(cyc)
        for a in range(max_attempts):
            attempts += 1
            y = random_box_vector(rng_for(seed, b, a), m, box)
            x = [0] * n
            for i, v in zip(cyc, y):
                x[i - 1] = v
            block = orbit_vectors(tuple(x), tau)[:m]
            if linalg.rank(block) == m:
                break
        gens.append(tuple(x))
        cols.extend(block)
    fixed = [c[0] for c in cycles if len(c) == 1]
    q = len(fixed)
    if q:
        for a in range(max_attempts):
            attempts += 1
            rng = rng_for(seed, len(cycles) + 1, a)
            omega = [random_box_vector(rng, q, box, nonzero=False) for _ in range(q)]
            if linalg.rank(omega) == q:
                break
        for w in omega:
            x = [0] * n
            for i, v in zip(fixed, w):
                x[i - 1] = v
            gens.append(tuple(x))
            cols.append(tuple(x))
    return gens, cols, attempts


def random_invariant_lattice(
    tau: Permutation,
    box: int = DEFAULT_BOX,
    mode: str = "orbit-span",
    seed: int = 0,
) -> SampledLattice:
    """
    Sample a tau-invariant integer lattice.

    ``orbit``
        orbit lattice of one uniform vector in [-box, box]^n \\ {0}.
    ``orbit-span``
        sum of orbit lattices of independent uniform vectors, adding one orbit
        at a time until rank n or ``MAX_ATTEMPTS`` orbits.
    ``direct-sum``
        one orbit lattice per cycle of length > 1, supported on that cycle's
        coordinates and resampled until it has full rank there, plus a random
        full-rank integer lattice on the fixed coordinates.

    Failure to reach rank n is reported through ``full_rank``, never raised.
    """
    if box < 1:
        raise ValueError(f"box must be >= 1, got {box}")
    if mode == "orbit":
        x = random_box_vector(rng_for(seed, 0), tau.n, box)
        gens, cols, attempts = [x], orbit_vectors(x, tau), 1
    elif mode == "orbit-span":
        gens, cols, attempts = _sample_orbit_span(tau, box, seed, MAX_ATTEMPTS)
    elif mode == "direct-sum":
        gens, cols, attempts = _sample_direct_sum(tau, box, seed, MAX_ATTEMPTS)
    else:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    L = from_generators(cols, tau.n)
    if not is_tau_invariant(L, tau):
        raise PermLatError("sampled lattice is not tau-invariant")
    return SampledLattice(L, tuple(gens), L.is_full_rank(), attempts)
