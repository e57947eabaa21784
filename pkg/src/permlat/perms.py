"""
Permutations of {1, ..., n} and their action on coordinate vectors.

All input and output is 1-indexed: a permutation is stored by its image list
``images`` with ``images[i - 1] == tau(i)``.  A permutation acts on vectors by
permuting coordinates,

    tau(x) = (x[tau(1)], ..., x[tau(n)]),

which is an isometry of R^n.

Products are read left to right: ``sigma * tau`` applies ``sigma`` first and
then ``tau``, so that ``(sigma * tau)(i) == tau(sigma(i))``.  With this
convention the vector action is a homomorphism,

    apply(sigma * tau, x) == apply(sigma, apply(tau, x)),

and ``permutation_matrix(sigma * tau) == permutation_matrix(sigma) @
permutation_matrix(tau)``.
"""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import DimensionError

MAX_DEGREE = 16

__all__ = [
    "Permutation",
    "CycleType",
    "identity",
    "standard_cycle",
    "apply",
    "cycle_decomposition",
    "order",
    "permutation_matrix",
    "conjugate",
    "sample_permutation",
    "parse_permutation",
    "format_cycles",
    "format_images",
    "from_cycles",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as its 1-indexed image list."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        n = len(images)
        if n < 1:
            raise ValueError("a permutation needs degree at least 1")
        if n > MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{n}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of the point ``i``."""
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        _check_degrees(self, other)
        return Permutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def is_n_cycle(self) -> bool:
        return self.cycle_type().lengths == (self.n,)

    def cycles(self) -> list[tuple[int, ...]]:
        return cycle_decomposition(self)[0]

    def cycle_type(self) -> CycleType:
        return cycle_decomposition(self)[1]

    def order(self) -> int:
        return order(self)

    def __str__(self) -> str:
        return format_cycles(self)


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, sorted descending; fixed points count as 1-cycles."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(sorted((int(k) for k in self.lengths), reverse=True))
        if not lengths:
            raise ValueError("a cycle type needs at least one cycle")
        if any(k < 1 for k in lengths):
            raise ValueError(f"cycle lengths must be positive, got {lengths}")
        object.__setattr__(self, "lengths", lengths)

    @property
    def n(self) -> int:
        return sum(self.lengths)

    @property
    def num_fixed(self) -> int:
        return sum(1 for k in self.lengths if k == 1)

    def is_n_cycle(self) -> bool:
        return len(self.lengths) == 1

    def is_identity(self) -> bool:
        return all(k == 1 for k in self.lengths)

    @classmethod
    def parse(cls, text: str) -> CycleType:
        """Parse ``"2,2,2"`` or ``"(2,3)"`` style text."""
        parts = [p for p in re.split(r"[\s,()]+", text) if p]
        if not parts:
            raise ValueError(f"empty cycle type {text!r}")
        return cls(tuple(int(p) for p in parts))

    def __str__(self) -> str:
        return ",".join(map(str, self.lengths))


def _check_degrees(a: Permutation, b: Permutation) -> None:
    if a.n != b.n:
        raise DimensionError(f"degree mismatch: {a.n} vs {b.n}")


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def standard_cycle(n: int) -> Permutation:
    """The n-cycle (1 2 ... n), with images (2, 3, ..., n, 1)."""
    return Permutation(tuple(range(2, n + 1)) + (1,))


def apply(tau: Permutation, x: Sequence) -> tuple:
    """Permute coordinates: ``output[i] = x[tau(i)]`` (1-indexed)."""
    if len(x) != tau.n:
        raise DimensionError(f"vector of length {len(x)} for permutation of degree {tau.n}")
    return tuple(x[v - 1] for v in tau.images)


def cycle_decomposition(tau: Permutation) -> tuple[list[tuple[int, ...]], CycleType]:
    """
    Disjoint cycles of ``tau``, each starting at its smallest element and listed
    in order of that element, together with the cycle type.
    """
    seen = [False] * (tau.n + 1)
    cycles = []
    for start in range(1, tau.n + 1):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = tau(i)
        cycles.append(tuple(cycle))
    return cycles, CycleType(tuple(len(c) for c in cycles))


def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Permutation:
    """Reassemble a permutation of degree ``n`` from disjoint cycles."""
    images = list(range(1, n + 1))
    seen: set[int] = set()
    for cycle in cycles:
        for a in cycle:
            if not 1 <= a <= n:
                raise ValueError(f"point {a} outside 1..{n}")
            if a in seen:
                raise ValueError(f"point {a} appears in more than one cycle")
            seen.add(a)
        for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
            images[a - 1] = b
    return Permutation(tuple(images))


def order(tau: Permutation) -> int:
    return reduce(math.lcm, cycle_decomposition(tau)[1].lengths, 1)


def permutation_matrix(tau: Permutation) -> list[list[int]]:
    """0/1 matrix ``T`` with ``T @ x == apply(tau, x)``; row i has its 1 in column tau(i)."""
    n = tau.n
    return [[1 if j + 1 == tau(i + 1) else 0 for j in range(n)] for i in range(n)]


def conjugate(tau: Permutation, rho: Permutation) -> Permutation:
    """``rho * tau * rho**-1`` in the left-to-right product convention."""
    _check_degrees(tau, rho)
    return rho * tau * rho.inverse()


def sample_permutation(cycle_type: CycleType, seed: int) -> Permutation:
    """Deterministic pseudo-random permutation with the requested cycle type."""
    if not isinstance(cycle_type, CycleType):
        cycle_type = CycleType(tuple(cycle_type))
    n = cycle_type.n
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
    points = list(range(1, n + 1))
    random.Random(seed).shuffle(points)
    cycles = []
    pos = 0
    for k in cycle_type.lengths:
        cycles.append(points[pos:pos + k])
        pos += k
    return from_cycles(cycles, n)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """
    Parse cycle notation ``"(1 2)(3 4 5)"`` or an image list ``"2,1,4,5,3"``.

    For cycle notation the degree is ``n`` if given, else the largest point
    mentioned; unmentioned points are fixed.  ``"()"`` is the identity and then
    requires ``n``.
    """
    text = text.strip()
    if text.startswith("("):
        if _CYCLE_RE.sub("", text).strip():
            raise ValueError(f"malformed cycle notation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            pts = [int(p) for p in re.split(r"[\s,]+", body.strip()) if p]
            if pts:
                cycles.append(pts)
        largest = max((p for c in cycles for p in c), default=0)
        if n is None:
            if largest == 0:
                raise ValueError("identity in cycle notation needs an explicit degree")
            n = largest
        if largest > n:
            raise DimensionError(f"point {largest} exceeds degree {n}")
        return from_cycles(cycles, n)
    images = tuple(int(p) for p in re.split(r"[\s,]+", text) if p)
    perm = Permutation(images)
    if n is not None and perm.n != n:
        raise DimensionError(f"image list has degree {perm.n}, expected {n}")
    return perm


def format_cycles(tau: Permutation) -> str:
    """Cycle notation without fixed points; the identity prints as ``()``."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in tau.cycles() if len(c) > 1]
    return "".join(parts) or "()"


def format_images(tau: Permutation) -> str:
    return ",".join(map(str, tau.images))
