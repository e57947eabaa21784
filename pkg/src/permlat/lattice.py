"""
Integer lattices in R^n with canonical Hermite-normal-form bases.

A ``Lattice`` may have any rank ``r <= n``; orbit lattices of permutations
other than n-cycles are never of full rank, so rank-deficient lattices are
ordinary values here.  Because the basis is always the canonical HNF, two
lattices are equal exactly when their dataclass fields are equal.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .errors import DimensionError, PermLatError
from .perms import Permutation, apply

MAX_AUTOMORPHISM_DIM = 8

__all__ = [
    "Lattice",
    "GramData",
    "from_generators",
    "integer_lattice",
    "membership",
    "gram",
    "determinant",
    "direct_sum",
    "is_tau_invariant",
    "sym_automorphisms",
    "index",
    "lattice_to_json",
    "lattice_from_json",
]


@dataclass(frozen=True)
class Lattice:
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def basis_matrix(self) -> list[list[int]]:
        """n x r matrix whose columns are the basis vectors."""
        return linalg.columns_to_matrix(self.basis, self.ambient_dim)

    def is_full_rank(self) -> bool:
        return self.rank == self.ambient_dim

    def __contains__(self, v) -> bool:
        return membership(v, self)


@dataclass(frozen=True)
class GramData:
    gram: tuple[tuple[int, ...], ...]
    det_sq: int


def _as_int_vector(v: Sequence, n: int) -> tuple[int, ...]:
    if len(v) != n:
        raise DimensionError(f"vector of length {len(v)} in ambient dimension {n}")
    out = []
    for x in v:
        if isinstance(x, float) or int(x) != x:
            raise ValueError(f"lattice vectors must be integral, got {x!r}")
        out.append(int(x))
    return tuple(out)


def from_generators(vectors: Iterable[Sequence[int]], ambient_dim: int) -> Lattice:
    """
    Lattice spanned over Z by ``vectors``, in canonical HNF.

    An empty or all-zero generating set gives the rank-0 lattice.
    """
    cols = [_as_int_vector(v, ambient_dim) for v in vectors]
    basis = linalg.hnf_basis([c for c in cols if any(c)], ambient_dim)
    return Lattice(ambient_dim, tuple(tuple(c) for c in basis))


def integer_lattice(n: int) -> Lattice:
    """Z^n."""
    return from_generators(linalg.identity_matrix(n), n)


def membership(v: Sequence[int], L: Lattice) -> bool:
    """True iff ``v`` is an integer combination of the basis of ``L``."""
    if len(v) != L.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} for lattice in R^{L.ambient_dim}")
    if any(isinstance(x, float) or int(x) != x for x in v):
        return False
    res = [int(x) for x in v]
    for col in L.basis:
        p = next(i for i, x in enumerate(col) if x)
        # earlier coordinates must already have been cleared
        if any(res[:p]):
            return False
        c, r = divmod(res[p], col[p])
        if r:
            return False
        if c:
            res = [a - c * b for a, b in zip(res, col)]
    return not any(res)


def gram(L: Lattice) -> GramData:
    G = tuple(tuple(linalg.dot(u, v) for v in L.basis) for u in L.basis)
    return GramData(G, int(linalg.det([list(r) for r in G])))


def determinant(L: Lattice) -> int:
    """
    Covolume of ``L`` in its own span.  Always an integer for full-rank
    lattices; for lower rank it is sqrt(det_sq), and a ``PermLatError`` is
    raised when that is irrational (use ``gram(L).det_sq`` instead).
    """
    if L.rank == 0:
        raise PermLatError("the rank-0 lattice has no determinant")
    if L.is_full_rank():
        return abs(int(linalg.det(L.basis_matrix)))
    det_sq = gram(L).det_sq
    root = math.isqrt(det_sq)
    if root * root != det_sq:
        raise PermLatError(f"determinant sqrt({det_sq}) is irrational")
    return root


def direct_sum(parts: Sequence[Lattice]) -> Lattice:
    """Orthogonal direct sum, each part on its own consecutive block of coordinates."""
    if not parts:
        raise ValueError("direct sum of an empty list")
    n = sum(p.ambient_dim for p in parts)
    cols = []
    offset = 0
    for p in parts:
        for b in p.basis:
            cols.append((0,) * offset + b + (0,) * (n - offset - p.ambient_dim))
        offset += p.ambient_dim
    return from_generators(cols, n)


def is_tau_invariant(L: Lattice, tau: Permutation) -> bool:
    """
    True iff tau(L) == L.  Checking tau(b) in L for each basis vector suffices:
    tau is an isometry, so tau(L) has the rank and covolume of L, and a
    sublattice of equal rank and covolume is the whole lattice.
    """
    if L.ambient_dim != tau.n:
        raise DimensionError(f"permutation of degree {tau.n} on lattice in R^{L.ambient_dim}")
    return all(membership(apply(tau, b), L) for b in L.basis)


def sym_automorphisms(L: Lattice) -> list[Permutation]:
    """All coordinate permutations fixing ``L``, in lexicographic image order."""
    n = L.ambient_dim
    if n > MAX_AUTOMORPHISM_DIM:
        raise DimensionError(f"exhaustive search limited to n <= {MAX_AUTOMORPHISM_DIM}, got {n}")
    out = []
    for images in itertools.permutations(range(1, n + 1)):
        tau = Permutation(images)
        if is_tau_invariant(L, tau):
            out.append(tau)
    return out


def index(sub: Lattice, sup: Lattice) -> int:
    """|sup : sub| for a sublattice of equal rank."""
    if sub.ambient_dim != sup.ambient_dim:
        raise DimensionError("lattices live in different ambient dimensions")
    if sub.rank != sup.rank:
        raise PermLatError(f"ranks differ ({sub.rank} vs {sup.rank}); index is infinite")
    if not all(membership(b, sup) for b in sub.basis):
        raise PermLatError("first lattice is not contained in the second")
    if sub.rank == 0:
        return 1
    ratio, rem = divmod(gram(sub).det_sq, gram(sup).det_sq)
    root = math.isqrt(ratio)
    assert rem == 0 and root * root == ratio
    return root


def lattice_to_json(L: Lattice) -> dict:
    return {"ambient_dim": L.ambient_dim, "basis_columns": [list(b) for b in L.basis]}


def lattice_from_json(data: dict | str) -> Lattice:
    """Accepts any generating set in ``basis_columns``; the result is canonicalised."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["ambient_dim"])
        cols = data["basis_columns"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"lattice JSON needs 'ambient_dim' and 'basis_columns': {exc}") from exc
    return from_generators(cols, n)
