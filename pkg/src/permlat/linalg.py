"""
Exact dense linear algebra on nested lists of ints and Fractions.

A matrix is a list of rows.  Nothing here touches floating point: rank and
determinant use fraction-free (Bareiss) elimination, and the Hermite normal
form is computed with unimodular integer column operations.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError

Matrix = list[list]

__all__ = [
    "shape",
    "transpose",
    "matmul",
    "matvec",
    "identity_matrix",
    "columns_to_matrix",
    "matrix_columns",
    "rank",
    "det",
    "hnf",
    "hnf_basis",
    "rref",
    "solve_rational",
    "inverse",
    "dot",
    "matrix_to_json",
    "matrix_from_json",
]


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def transpose(M: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    if shape(A)[1] != len(B):
        raise DimensionError(f"cannot multiply {shape(A)} by {shape(B)}")
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], x: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def columns_to_matrix(columns: Sequence[Sequence], nrows: int | None = None) -> Matrix:
    """Assemble column vectors into a row-major matrix."""
    if not columns:
        return [[] for _ in range(nrows or 0)]
    return [list(r) for r in zip(*columns)]


def matrix_columns(M: Sequence[Sequence]) -> list[tuple]:
    return [tuple(c) for c in zip(*M)]


def _bareiss(M: Sequence[Sequence]) -> tuple[int, object]:
    """
    Fraction-free elimination.  Returns (rank, signed last pivot); for a square
    full-rank integer matrix the second value is its determinant.
    """
    A = [[Fraction(v) if not isinstance(v, int) else v for v in row] for row in M]
    m, n = shape(A)
    if m == 0 or n == 0:
        return 0, 1
    # clear denominators row by row so the elimination stays in Z
    scale = Fraction(1)
    for i, row in enumerate(A):
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = den * v.denominator // _gcd(den, v.denominator)
        if den != 1:
            A[i] = [int(v * den) for v in row]
            scale /= den
        else:
            A[i] = [int(v) for v in row]
    sign = 1
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            sign = -sign
        p = A[r][c]
        for i in range(r + 1, m):
            a_ic = A[i][c]
            row_i = A[i]
            row_r = A[r]
            for j in range(c + 1, n):
                row_i[j] = (p * row_i[j] - a_ic * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r, sign * prev * scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def rank(M: Sequence[Sequence]) -> int:
    """Exact rank via fraction-free elimination."""
    return _bareiss(M)[0]


def det(M: Sequence[Sequence]):
    m, n = shape(M)
    if m != n:
        raise DimensionError(f"determinant of a non-square {m}x{n} matrix")
    if m == 0:
        return 1
    r, d = _bareiss(M)
    if r < m:
        return 0
    return int(d) if isinstance(d, Fraction) and d.denominator == 1 else d


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _as_int(v) -> int:
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    raise TypeError(f"HNF needs integer entries, got {v!r}")


def hnf(M: Sequence[Sequence[int]], with_transform: bool = True) -> tuple[Matrix, Matrix | None]:
    """
    Column-style Hermite normal form ``H = M @ U`` with ``U`` unimodular.

    ``H`` is lower-triangular in staircase form: the k-th nonzero column has
    its first nonzero entry (the pivot, positive) in row ``p_k`` with
    ``p_0 < p_1 < ...``, every later column is zero in rows ``<= p_k``, and
    entries of earlier columns in row ``p_k`` lie in ``[0, pivot)``.  Zero
    columns come last.  The nonzero columns form the canonical basis of the
    lattice spanned by the columns of ``M``.
    """
    m, n = shape(M)
    cols = [[_as_int(M[i][j]) for i in range(m)] for j in range(n)]
    ucols = [[int(i == j) for i in range(n)] for j in range(n)] if with_transform else None
    k = 0
    for row in range(m):
        if k == n:
            break
        for j in range(k + 1, n):
            b = cols[j][row]
            if b == 0:
                continue
            a = cols[k][row]
            g, s, t = _xgcd(a, b)
            fa, fb = a // g, b // g
            ck, cj = cols[k], cols[j]
            cols[k] = [s * x + t * y for x, y in zip(ck, cj)]
            cols[j] = [fa * y - fb * x for x, y in zip(ck, cj)]
            if ucols is not None:
                uk, uj = ucols[k], ucols[j]
                ucols[k] = [s * x + t * y for x, y in zip(uk, uj)]
                ucols[j] = [fa * y - fb * x for x, y in zip(uk, uj)]
        piv = cols[k][row]
        if piv == 0:
            continue
        if piv < 0:
            cols[k] = [-x for x in cols[k]]
            if ucols is not None:
                ucols[k] = [-x for x in ucols[k]]
            piv = -piv
        for j in range(k):
            q = cols[j][row] // piv
            if q:
                cols[j] = [x - q * y for x, y in zip(cols[j], cols[k])]
                if ucols is not None:
                    ucols[j] = [x - q * y for x, y in zip(ucols[j], ucols[k])]
        k += 1
    H = columns_to_matrix(cols, m) if cols else [[] for _ in range(m)]
    U = columns_to_matrix(ucols, n) if ucols is not None else None
    return H, U


def hnf_basis(columns: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Canonical HNF basis columns of the integer span of ``columns``."""
    if not columns:
        return []
    M = columns_to_matrix(columns, dim)
    H, _ = hnf(M, with_transform=False)
    return [c for c in matrix_columns(H) if any(c)]


def rref(M: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q and the pivot column indices."""
    A = [[Fraction(v) for v in row] for row in M]
    m, n = shape(A)
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [v / p for v in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return [[_norm(v) for v in row] for row in A], pivots


def _norm(v: Fraction):
    return v.numerator if v.denominator == 1 else v


def solve_rational(A: Sequence[Sequence], b: Sequence) -> list | None:
    """One rational solution x of ``A x = b``, or None if the system is inconsistent."""
    m, n = shape(A)
    if len(b) != m:
        raise DimensionError(f"right-hand side of length {len(b)} for {m} equations")
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [0] * n
    for row, c in zip(R, pivots):
        x[c] = row[n]
    return x


def inverse(M: Sequence[Sequence]) -> Matrix:
    n, m = shape(M)
    if n != m:
        raise DimensionError("inverse of a non-square matrix")
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def _entry_to_json(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def matrix_to_json(M: Sequence[Sequence]) -> str:
    """Rows of integers, with non-integral rationals as ``"p/q"`` strings."""
    return json.dumps([[_entry_to_json(v) for v in row] for row in M])


def matrix_from_json(text: str) -> Matrix:
    rows = json.loads(text)
    return [[_norm(Fraction(v)) for v in row] for row in rows]
