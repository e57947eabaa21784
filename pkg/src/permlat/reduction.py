"""
Shortest-vector machinery in exact arithmetic.

Norms are squared integers throughout.  Bases are LLL-reduced with rational
Gram-Schmidt data and then enumerated Fincke-Pohst style: coordinates are
fixed from the last Gram-Schmidt direction down, and each level's integer
range comes from the remaining squared-norm budget.  Range endpoints are
over-approximated with ``isqrt`` and every candidate is then checked exactly,
so no floating point enters any decision.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionError, PermLatError
from .lattice import Lattice, from_generators, gram

DEFAULT_DELTA = Fraction(3, 4)
MAX_MINKOWSKIAN_RANK = 6

__all__ = [
    "MinimaProfile",
    "MinimalVectorSet",
    "gram_schmidt",
    "lll_reduce",
    "is_lll_reduced",
    "short_vectors",
    "naive_short_vectors",
    "successive_minima",
    "minimal_vectors",
    "is_well_rounded",
    "is_minkowskian",
    "sign_normalize",
]


@dataclass(frozen=True)
class MinimaProfile:
    minima_sq: tuple[int, ...]
    attaining: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"minima_sq": list(self.minima_sq), "attaining": [list(v) for v in self.attaining]}


@dataclass(frozen=True)
class MinimalVectorSet:
    norm_sq: int
    vectors: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"norm_sq": self.norm_sq, "count": len(self.vectors), "vectors": [list(v) for v in self.vectors]}


def _norm_sq(v: Sequence[int]) -> int:
    return sum(x * x for x in v)


def sign_normalize(v: Sequence[int]) -> tuple[int, ...]:
    """``v`` or ``-v``, whichever has a positive first nonzero coordinate."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def gram_schmidt(vectors: Sequence[Sequence[int]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """
    Exact Gram-Schmidt data ``(mu, B)`` where ``B[i]`` is the squared norm of
    the i-th orthogonalised vector and ``mu[i][j]`` the projection coefficient.
    """
    r = len(vectors)
    G = [[linalg.dot(u, v) for v in vectors] for u in vectors]
    mu = [[Fraction(0)] * r for _ in range(r)]
    B = [Fraction(0)] * r
    for i in range(r):
        for j in range(i):
            s = Fraction(G[i][j]) - sum(mu[j][k] * mu[i][k] * B[k] for k in range(j))
            mu[i][j] = s / B[j]
        B[i] = Fraction(G[i][i]) - sum(mu[i][k] ** 2 * B[k] for k in range(i))
        if B[i] == 0:
            raise PermLatError("vectors are linearly dependent")
        mu[i][i] = Fraction(1)
    return mu, B


def _round_half_up(q: Fraction) -> int:
    return math.floor(q + Fraction(1, 2))


def lll_reduce(L: Lattice | Sequence[Sequence[int]], delta: Fraction = DEFAULT_DELTA) -> list[tuple[int, ...]]:
    """
    LLL-reduced basis of ``L`` as a list of integer vectors.

    The result spans the same lattice but is not in canonical HNF, so it is
    returned as vectors rather than as a ``Lattice``; pass it to
    ``from_generators`` to get the lattice back.  Accepts a ``Lattice`` or a
    list of linearly independent integer vectors.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta <= 1:
        raise ValueError(f"delta must lie in (1/4, 1], got {delta}")
    vectors = L.basis if isinstance(L, Lattice) else L
    b = [list(map(int, v)) for v in vectors]
    r = len(b)
    if r == 0:
        raise PermLatError("cannot reduce the rank-0 lattice")
    mu, B = gram_schmidt(b)
    k = 1
    while k < r:
        for j in range(k - 1, -1, -1):
            q = _round_half_up(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                for l in range(j):
                    mu[k][l] -= q * mu[j][l]
                mu[k][j] -= q
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, B = gram_schmidt(b)
            k = max(k - 1, 1)
    return [tuple(v) for v in b]


def is_lll_reduced(vectors: Sequence[Sequence[int]], delta: Fraction = DEFAULT_DELTA) -> bool:
    mu, B = gram_schmidt(vectors)
    r = len(vectors)
    for i in range(r):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    return all(B[k] >= (Fraction(delta) - mu[k][k - 1] ** 2) * B[k - 1] for k in range(1, r))


def _enumerate(basis: Sequence[Sequence[int]], bound_sq: int) -> list[tuple[int, ...]]:
    """All nonzero lattice vectors of squared norm <= bound_sq, both signs."""
    r = len(basis)
    n = len(basis[0])
    mu, B = gram_schmidt(basis)
    bound = Fraction(bound_sq)
    x = [0] * r
    out: list[tuple[int, ...]] = []

    def descend(j: int, budget: Fraction) -> None:
        c = -sum((mu[i][j] * x[i] for i in range(j + 1, r)), Fraction(0))
        s = math.isqrt(math.floor(budget / B[j])) + 1
        for xj in range(math.floor(c) - s, math.ceil(c) + s + 1):
            used = B[j] * (xj - c) ** 2
            if used > budget:
                continue
            x[j] = xj
            if j == 0:
                if any(x):
                    v = tuple(sum(x[i] * basis[i][t] for i in range(r)) for t in range(n))
                    assert _norm_sq(v) <= bound_sq
                    out.append(v)
            else:
                descend(j - 1, budget - used)
        x[j] = 0

    descend(r - 1, bound)
    return out


def _sorted_vectors(vs) -> list[tuple[int, ...]]:
    return sorted(vs, key=lambda v: (_norm_sq(v), v))


def short_vectors(L: Lattice, bound_sq: int) -> list[tuple[int, ...]]:
    """
    Every nonzero v in L with |v|^2 <= bound_sq (both v and -v), sorted by
    (squared norm, lexicographic order).  Rank-deficient lattices are
    enumerated in their own span.
    """
    if bound_sq < 1:
        raise ValueError(f"bound_sq must be >= 1, got {bound_sq}")
    if L.rank == 0:
        return []
    return _sorted_vectors(_enumerate(lll_reduce(L), bound_sq))


def naive_short_vectors(
    L: Lattice, bound_sq: int, basis: Sequence[Sequence[int]] | None = None
) -> list[tuple[int, ...]]:
    """
    Reference enumeration by brute force over a coefficient box.

    For v = A x with Gram matrix G, each coefficient satisfies
    x_i^2 <= |v|^2 * (G^-1)_ii, which bounds the box.  ``basis`` defaults to
    the HNF basis; any other basis must generate ``L`` exactly (checked
    through the canonical form) and only serves to shrink the box.
    """
    if bound_sq < 1:
        raise ValueError(f"bound_sq must be >= 1, got {bound_sq}")
    if L.rank == 0:
        return []
    if basis is None:
        basis = L.basis
    elif len(basis) != L.rank or from_generators(basis, L.ambient_dim) != L:
        raise PermLatError("supplied basis does not generate the lattice")
    G = [[linalg.dot(u, v) for v in basis] for u in basis]
    Ginv = linalg.inverse(G)
    radii = [math.isqrt(math.floor(bound_sq * Fraction(Ginv[i][i]))) for i in range(L.rank)]
    out = []
    for coeffs in itertools.product(*(range(-k, k + 1) for k in radii)):
        if not any(coeffs):
            continue
        v = tuple(sum(c * b[t] for c, b in zip(coeffs, basis)) for t in range(L.ambient_dim))
        if _norm_sq(v) <= bound_sq:
            out.append(v)
    return _sorted_vectors(out)


class _Span:
    """Incremental linear-independence test over Q."""

    def __init__(self):
        self.rows: list[tuple[int, list[Fraction]]] = []

    def add(self, v: Sequence[int]) -> bool:
        w = [Fraction(x) for x in v]
        for p, row in self.rows:
            if w[p]:
                f = w[p]
                w = [a - f * b for a, b in zip(w, row)]
        p = next((i for i, a in enumerate(w) if a), None)
        if p is None:
            return False
        w = [a / w[p] for a in w]
        self.rows.append((p, w))
        return True

    def __len__(self) -> int:
        return len(self.rows)


def _greedy_independent(candidates, r):
    span = _Span()
    picked = []
    for v in candidates:
        if span.add(v):
            picked.append(v)
            if len(picked) == r:
                break
    return picked


def successive_minima(L: Lattice) -> MinimaProfile:
    """
    Squared successive minima and one attaining vector for each.

    The enumeration radius starts at the shortest LLL basis vector and doubles
    until ``rank`` independent vectors are inside it (never exceeding the
    longest LLL basis vector, which always suffices).  Among equal norms the
    lexicographically smallest sign-normalised vector wins.
    """
    r = L.rank
    if r == 0:
        raise PermLatError("the rank-0 lattice has no successive minima")
    basis = lll_reduce(L)
    norms = [_norm_sq(b) for b in basis]
    bound, cap = min(norms), max(norms)
    while True:
        vs = _enumerate(basis, bound)
        cands = _sorted_vectors({sign_normalize(v) for v in vs})
        picked = _greedy_independent(cands, r)
        if len(picked) == r:
            return MinimaProfile(tuple(_norm_sq(v) for v in picked), tuple(picked))
        if bound >= cap:
            raise PermLatError("enumeration failed to find a full set of independent vectors")
        bound = min(2 * bound, cap)


def minimal_vectors(L: Lattice) -> MinimalVectorSet:
    """All lattice vectors of squared norm lambda_1^2, both signs, sorted lexicographically."""
    if L.rank == 0:
        raise PermLatError("the rank-0 lattice has no minimal vectors")
    basis = lll_reduce(L)
    vs = _enumerate(basis, min(_norm_sq(b) for b in basis))
    m = min(_norm_sq(v) for v in vs)
    return MinimalVectorSet(m, tuple(sorted(v for v in vs if _norm_sq(v) == m)))


def is_well_rounded(L: Lattice) -> bool:
    """
    True iff the minimal vectors span a space of dimension ``L.rank``.
    For rank-deficient lattices this is well-roundedness inside their own span.
    """
    mv = minimal_vectors(L)
    return linalg.rank(mv.vectors) == L.rank


def is_minkowskian(L: Lattice, profile: MinimaProfile | None = None) -> bool:
    """
    True iff L has a basis v_1..v_r with |v_i|^2 equal to the i-th squared
    minimum.  Searches, level by level of equal minima, over independent
    choices among the vectors of exactly that norm and accepts a choice whose
    Gram determinant equals that of L.
    """
    r = L.rank
    if r == 0:
        raise PermLatError("the rank-0 lattice has no successive minima")
    if r > MAX_MINKOWSKIAN_RANK:
        raise DimensionError(f"Minkowskian search limited to rank <= {MAX_MINKOWSKIAN_RANK}, got {r}")
    profile = profile or successive_minima(L)
    target = gram(L).det_sq
    levels: list[tuple[int, int]] = []
    for m in profile.minima_sq:
        if levels and levels[-1][0] == m:
            levels[-1] = (m, levels[-1][1] + 1)
        else:
            levels.append((m, 1))
    pool = _enumerate(lll_reduce(L), profile.minima_sq[-1])
    by_norm: dict[int, list[tuple[int, ...]]] = {}
    for v in _sorted_vectors({sign_normalize(v) for v in pool}):
        by_norm.setdefault(_norm_sq(v), []).append(v)

    def search(level: int, chosen: list) -> bool:
        if level == len(levels):
            G = [[linalg.dot(u, v) for v in chosen] for u in chosen]
            return linalg.det(G) == target
        norm, count = levels[level]
        for combo in itertools.combinations(by_norm.get(norm, []), count):
            trial = chosen + list(combo)
            if linalg.rank(trial) == len(trial) and search(level + 1, trial):
                return True
        return False

    return search(0, [])
