"""Exact determinants, inverses, ranks and the Sylvester positivity test."""

from __future__ import annotations

from ppav.errors import DimensionMismatch, NotSymmetric, SingularMatrix
from ppav.exact.matrix import Matrix
from ppav.exact.scalars import GaussianRational, to_field


def _require_square(A: Matrix):
    if not A.is_square:
        raise DimensionMismatch(f"expected a square matrix, got {A.shape}")


def _bareiss_det(rows: list[list[int]]) -> int:
    n = len(rows)
    M = [r[:] for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = M[k][k]
        for i in range(k + 1, n):
            Mi, mik = M[i], M[i][k]
            for j in range(k + 1, n):
                Mi[j] = (Mi[j] * pk - mik * M[k][j]) // prev
        prev = pk
    return sign * M[n - 1][n - 1] if n else 1


def determinant(A: Matrix):
    """Exact determinant. Integer input stays in ``int`` (Bareiss)."""
    _require_square(A)
    if all(isinstance(e, int) for e in A.entries()):
        return _bareiss_det(A.tolist())
    M = [[to_field(e) for e in r] for r in A.tolist()]
    n = len(M)
    det = to_field(1)
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            return to_field(0) * det
        if p != k:
            M[k], M[p] = M[p], M[k]
            det = -det
        pivot = M[k][k]
        det = det * pivot
        inv = 1 / pivot
        for i in range(k + 1, n):
            f = M[i][k] * inv
            if f != 0:
                Mi, Mk = M[i], M[k]
                for j in range(k, n):
                    Mi[j] = Mi[j] - f * Mk[j]
    return det


def inverse(A: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan; integer entries are lifted to ``Fraction``.

    Raises ``SingularMatrix`` when ``det A = 0``.
    """
    _require_square(A)
    n = A.rows
    M = [[to_field(e) for e in r] + [to_field(int(i == j)) for j in range(n)]
         for i, r in enumerate(A.tolist())]
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            raise SingularMatrix("matrix is singular")
        M[k], M[p] = M[p], M[k]
        inv = 1 / M[k][k]
        Mk = [e * inv for e in M[k]]
        M[k] = Mk
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [a - f * b for a, b in zip(M[i], Mk)]
    return Matrix(r[n:] for r in M)


def solve_left(F: Matrix, G: Matrix) -> Matrix:
    """Return ``F^{-1} G`` without forming the inverse explicitly."""
    _require_square(F)
    if F.rows != G.rows:
        raise DimensionMismatch(f"solve {F.shape} with rhs {G.shape}")
    n, m = F.rows, G.cols
    M = [[to_field(e) for e in r] + [to_field(e) for e in s]
         for r, s in zip(F.tolist(), G.tolist())]
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            raise SingularMatrix("matrix is singular")
        M[k], M[p] = M[p], M[k]
        inv = 1 / M[k][k]
        Mk = [e * inv for e in M[k]]
        M[k] = Mk
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [a - f * b for a, b in zip(M[i], Mk)]
    return Matrix((r[n:] for r in M), cols=m)


def rank(A: Matrix) -> int:
    """Rank over the fraction field of the entries."""
    M = [[to_field(e) for e in r] for r in A.tolist()]
    r = 0
    for c in range(A.cols):
        p = next((i for i in range(r, A.rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        for i in range(r + 1, A.rows):
            if M[i][c] != 0:
                f = M[i][c] * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


def rank_mod_p(A: Matrix, p: int) -> int:
    """Rank of an integer matrix over the field Z/p (p prime)."""
    M = [[e % p for e in r] for r in A.tolist()]
    r = 0
    for c in range(A.cols):
        piv = next((i for i in range(r, A.rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [(e * inv) % p for e in M[r]]
        for i in range(A.rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[r])]
        r += 1
    return r


def is_unimodular(U: Matrix) -> bool:
    return U.is_square and U.is_integral() and abs(determinant(U.as_integer())) == 1


def is_positive_definite(A: Matrix) -> bool:
    """Sylvester's criterion on a symmetric rational matrix, exactly.

    Gaussian elimination without pivoting: the k-th pivot is the ratio of
    consecutive leading principal minors, so all minors are positive iff
    every pivot is.
    """
    _require_square(A)
    if any(isinstance(e, GaussianRational) and e.im != 0 for e in A.entries()):
        raise TypeError("is_positive_definite expects a real (rational) matrix")
    if not A.is_symmetric():
        raise NotSymmetric("positive definiteness requires a symmetric matrix")
    M = [[to_field(e.re if isinstance(e, GaussianRational) else e) for e in r]
         for r in A.tolist()]
    n = len(M)
    for k in range(n):
        pivot = M[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, n):
            f = M[i][k] / pivot
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[k])]
    return True
