"""
Exact univariate polynomials over Q in the variable ``t``.

Coefficients are stored lowest degree first and kept exact: integral values
are normalised to ``int``, everything else is a ``fractions.Fraction``.  The
text form prints highest degree first, e.g. ``"t^3 - t - 1"``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import NamedTuple, Sequence

from .errors import PermLatError
from .perms import CycleType

__all__ = [
    "IntPolynomial",
    "euler_phi",
    "divisors",
    "cyclotomic",
    "char_poly",
    "min_poly",
    "GenericOrder",
    "generic_order",
    "poly_divides",
    "poly_gcd",
    "vector_to_poly",
    "t_pow_minus_one",
]


def _exact(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, str):
        return _exact(Fraction(c))
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not allowed")
    return _exact(Fraction(c))


@dataclass(frozen=True)
class IntPolynomial:
    """
    Polynomial with exact rational coefficients, lowest degree first.

    Integer-coefficient polynomials (cyclotomic, characteristic and minimal
    polynomials) are the common case, hence the name; quotients and gcds over
    Q may carry ``Fraction`` coefficients.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [_exact(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, k: int, c=1) -> IntPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def constant(cls, c) -> IntPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(m)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return IntPolynomial(tuple(c * _exact(other) for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        result = IntPolynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dd = other.degree
        lead = Fraction(other.leading)
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] / lead
            if q:
                quot[k - dd] = q
                for j, b in enumerate(other.coeffs):
                    rem[k - dd + j] -= q * b
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:dd]))

    def __floordiv__(self, other: IntPolynomial) -> IntPolynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: IntPolynomial) -> IntPolynomial:
        return divmod(self, other)[1]

    def monic(self) -> IntPolynomial:
        if self.is_zero():
            raise ZeroDivisionError("the zero polynomial has no monic associate")
        lead = Fraction(self.leading)
        return IntPolynomial(tuple(Fraction(c) / lead for c in self.coeffs))

    def primitive_part(self) -> IntPolynomial:
        """Integer polynomial with content 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        den = reduce(math.lcm, (Fraction(c).denominator for c in self.coeffs), 1)
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = reduce(math.gcd, ints)
        if ints[-1] < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in ints))

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        """Parse the ASCII form produced by ``str``, e.g. ``"t^2 - t + 1"`` or ``"3/2*t + 1"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        coeffs: dict[int, Fraction] = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            m = re.fullmatch(r"(?:(\d+(?:/\d+)?)\*?)?(t(?:\^(\d+))?)?", body)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
            k = 0 if m.group(2) is None else int(m.group(3) or 1)
            coeffs[k] = coeffs.get(k, Fraction(0)) + (c if sign == "+" else -c)
        deg = max(coeffs)
        return cls(tuple(coeffs.get(k, 0) for k in range(deg + 1)))


def t_pow_minus_one(k: int) -> IntPolynomial:
    """The polynomial t^k - 1."""
    return IntPolynomial((-1,) + (0,) * (k - 1) + (1,))


def euler_phi(d: int) -> int:
    if d < 1:
        raise ValueError(f"euler_phi needs d >= 1, got {d}")
    result = d
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(k: int) -> list[int]:
    if k < 1:
        raise ValueError(f"divisors needs k >= 1, got {k}")
    return [d for d in range(1, k + 1) if k % d == 0]


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """d-th cyclotomic polynomial, by exact division of t^d - 1 by the smaller ones."""
    if d < 1:
        raise ValueError(f"cyclotomic needs d >= 1, got {d}")
    poly = t_pow_minus_one(d)
    for e in divisors(d)[:-1]:
        q, r = divmod(poly, cyclotomic(e))
        assert r.is_zero()
        poly = q
    return poly


def _as_cycle_type(ct) -> CycleType:
    return ct if isinstance(ct, CycleType) else CycleType(tuple(ct))


def char_poly(ct: CycleType) -> IntPolynomial:
    """Characteristic polynomial prod (t^k - 1) of a permutation matrix of cycle type ``ct``."""
    ct = _as_cycle_type(ct)
    result = IntPolynomial.constant(1)
    for k in ct.lengths:
        result = result * t_pow_minus_one(k)
    return result


def _distinct_divisors(ct: CycleType) -> list[int]:
    return sorted({d for k in ct.lengths for d in divisors(k)})


def min_poly(ct: CycleType) -> IntPolynomial:
    """Squarefree part of the characteristic polynomial: one Phi_d per d dividing some cycle length."""
    ct = _as_cycle_type(ct)
    result = IntPolynomial.constant(1)
    for d in _distinct_divisors(ct):
        result = result * cyclotomic(d)
    return result


class GenericOrder(NamedTuple):
    o_generic: int
    paper_pairwise_value: int

    @property
    def agrees(self) -> bool:
        return self.o_generic == self.paper_pairwise_value


def generic_order(ct: CycleType) -> GenericOrder:
    """
    Rank of the orbit lattice of a generic vector under a permutation of type ``ct``.

    ``o_generic`` is the number of distinct eigenvalues of the permutation
    matrix, i.e. ``deg min_poly(ct)``; it is the value every decision uses.
    ``paper_pairwise_value`` is ``n - sum_{i<j} sum_{d | gcd(k_i, k_j)} phi(d)``,
    the pairwise-overlap formula, reported for comparison only.  The two differ
    once three or more cycles share a divisor, e.g. type (2, 2, 2) gives 2 vs 0.
    """
    ct = _as_cycle_type(ct)
    o_generic = sum(euler_phi(d) for d in _distinct_divisors(ct))
    ks = ct.lengths
    overlap = 0
    for i in range(len(ks)):
        for j in range(i + 1, len(ks)):
            overlap += sum(euler_phi(d) for d in divisors(math.gcd(ks[i], ks[j])))
    return GenericOrder(o_generic, ct.n - overlap)


def poly_divides(f: IntPolynomial, g: IntPolynomial) -> bool:
    """True iff f divides g in Q[t]."""
    if f.is_zero():
        raise ZeroDivisionError("divisibility by the zero polynomial is undefined")
    return (g % f).is_zero()


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Monic gcd over Q."""
    if f.is_zero() and g.is_zero():
        raise PermLatError("gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def vector_to_poly(a: Sequence) -> IntPolynomial:
    """a(t) = a_1 + a_2 t + ... + a_n t^(n-1)."""
    return IntPolynomial(tuple(a))
