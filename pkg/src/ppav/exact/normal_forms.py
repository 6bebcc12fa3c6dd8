"""Hermite and Smith normal forms over Z, and saturated integer kernels."""

from __future__ import annotations

from ppav.exact.matrix import Matrix


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) >= 0``.

    When ``a | b`` the result is ``(|a|, +-1, 0)`` so the combination leaves
    the ``b`` side untouched; SNF termination depends on this.
    """
    if a and b % a == 0:
        return (a, 1, 0) if a > 0 else (-a, -1, 0)
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _combine(rows: list[list[int]], i: int, j: int, s: int, t: int, u: int, v: int):
    """In place: (row_i, row_j) <- (s*row_i + t*row_j, u*row_i + v*row_j)."""
    ri, rj = rows[i], rows[j]
    rows[i] = [s * a + t * b for a, b in zip(ri, rj)]
    rows[j] = [u * a + v * b for a, b in zip(ri, rj)]


def hermite_normal_form(A: Matrix) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form ``H = U @ A`` with ``U`` unimodular.

    ``H`` is in row echelon form with positive pivots, zeros below each pivot
    and entries above a pivot reduced into ``[0, pivot)``. ``H`` is unique;
    ``U`` is unique only when ``A`` has full row rank.
    """
    m, n = A.shape
    H = A.tolist()
    U = Matrix.identity(m).tolist()
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][c]
            if not b:
                continue
            a = H[r][c]
            if not a:
                H[r], H[i] = H[i], H[r]
                U[r], U[i] = U[i], U[r]
                continue
            g, s, t = _xgcd(a, b)
            _combine(H, r, i, s, t, -b // g, a // g)
            _combine(U, r, i, s, t, -b // g, a // g)
        p = H[r][c]
        if not p:
            continue
        if p < 0:
            H[r] = [-e for e in H[r]]
            U[r] = [-e for e in U[r]]
            p = -p
        for k in range(r):
            q = H[k][c] // p
            if q:
                H[k] = [a - q * b for a, b in zip(H[k], H[r])]
                U[k] = [a - q * b for a, b in zip(U[k], U[r])]
        r += 1
    return Matrix(H, cols=n), Matrix(U, cols=m)


def smith_normal_form(A: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(S, U, V)`` with ``S = U @ A @ V`` diagonal, ``d_i | d_{i+1}``, ``d_i >= 0``."""
    m, n = A.shape
    S = A.tolist()
    U = Matrix.identity(m).tolist()
    Vt = Matrix.identity(n).tolist()  # rows of Vt are columns of V

    def col_op(i, j, s, t, u, v):
        # (col_i, col_j) <- (s*col_i + t*col_j, u*col_i + v*col_j)
        for row in S:
            a, b = row[i], row[j]
            row[i], row[j] = s * a + t * b, u * a + v * b
        _combine(Vt, i, j, s, t, u, v)

    for k in range(min(m, n)):
        while True:
            cand = [(abs(S[i][j]), i, j) for i in range(k, m) for j in range(k, n) if S[i][j]]
            if not cand:
                break
            _, pi, pj = min(cand)
            if pi != k:
                S[k], S[pi] = S[pi], S[k]
                U[k], U[pi] = U[pi], U[k]
            if pj != k:
                col_op(k, pj, 0, 1, 1, 0)
            dirty = False
            for i in range(k + 1, m):
                if S[i][k]:
                    a, b = S[k][k], S[i][k]
                    g, s, t = _xgcd(a, b)
                    _combine(S, k, i, s, t, -b // g, a // g)
                    _combine(U, k, i, s, t, -b // g, a // g)
            for j in range(k + 1, n):
                if S[k][j]:
                    a, b = S[k][k], S[k][j]
                    g, s, t = _xgcd(a, b)
                    col_op(k, j, s, t, -b // g, a // g)
                    dirty = True
            if dirty and any(S[i][k] for i in range(k + 1, m)):
                continue
            d = S[k][k]
            bad = next(
                (i for i in range(k + 1, m) for j in range(k + 1, n) if S[i][j] % d), None
            )
            if bad is None:
                break
            S[k] = [a + b for a, b in zip(S[k], S[bad])]
            U[k] = [a + b for a, b in zip(U[k], U[bad])]
        if S[k][k] < 0:
            S[k] = [-e for e in S[k]]
            U[k] = [-e for e in U[k]]
    V = Matrix(Vt, cols=n).T
    return Matrix(S, cols=n), Matrix(U, cols=m), V


def integer_kernel(A: Matrix) -> Matrix:
    """Basis (as columns) of the saturated lattice ``{v in Z^n : A v = 0}``.

    Rows of the HNF transform of ``A^T`` that hit zero rows span the kernel and
    extend to a basis of ``Z^n``; the basis is then put in HNF so that the
    output does not depend on the elimination path.
    """
    n = A.cols
    H, U = hermite_normal_form(A.T)
    kernel_rows = [U.row(i) for i in range(n) if not any(H.row(i))]
    if not kernel_rows:
        return Matrix.zeros(n, 0)
    K, _ = hermite_normal_form(Matrix(kernel_rows, cols=n))
    return K.T
