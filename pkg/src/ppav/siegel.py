"""Exact points of the Siegel upper half-space and the Sp(2g, Z) action on them.

The action is ``R . Z = (A + Z C)^{-1} (B + Z D)`` for ``R = (A B; C D)``.
With this formula ``act(R1 @ R2, Z) == act(R2, act(R1, Z))``: it is a right
action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ppav.errors import (
    DimensionMismatch,
    ImaginaryPartNotPositiveDefinite,
    NotSymmetric,
    NotSymplectic,
    SingularFactor,
    SingularMatrix,
    StratumMismatch,
)
from ppav.exact import GaussianRational, I, Matrix, is_positive_definite, solve_left
from ppav.symplectic import InvolutionType, is_symplectic


def imaginary_part(Z: Matrix) -> Matrix:
    return Z.map(lambda e: e.im if isinstance(e, GaussianRational) else Fraction(0))


def real_part(Z: Matrix) -> Matrix:
    return Z.map(lambda e: e.re if isinstance(e, GaussianRational) else Fraction(e))


@dataclass(frozen=True)
class SiegelPoint:
    """A symmetric g x g Gaussian-rational matrix with positive-definite imaginary part."""

    Z: Matrix

    def __post_init__(self):
        Z = self.Z
        if not Z.is_square:
            raise DimensionMismatch(f"Siegel points are square, got {Z.shape}")
        Z = Z.map(GaussianRational.coerce)
        if not Z.is_symmetric():
            raise NotSymmetric("Z must equal its transpose")
        if not is_positive_definite(imaginary_part(Z)):
            raise ImaginaryPartNotPositiveDefinite("Im(Z) is not positive definite")
        object.__setattr__(self, "Z", Z)

    @property
    def g(self) -> int:
        return self.Z.rows

    def period_matrix(self) -> Matrix:
        """``(I_g Z)``."""
        return Matrix.identity(self.g).hstack(self.Z)


def make_siegel(Z: Matrix) -> SiegelPoint:
    return SiegelPoint(Z)


def scalar_point(g: int, tau=I) -> SiegelPoint:
    """``tau * I_g``; the default is ``i * I_g``."""
    return SiegelPoint(Matrix.diag([tau] * g))


def _blocks(R: Matrix, g: int):
    if R.shape != (2 * g, 2 * g):
        raise DimensionMismatch(f"expected a {2 * g}x{2 * g} matrix, got {R.shape}")
    if not is_symplectic(R):
        raise NotSymplectic("R is not symplectic")
    return R.blocks2()


def act(R: Matrix, point: SiegelPoint) -> SiegelPoint:
    A, B, C, D = _blocks(R, point.g)
    Z = point.Z
    try:
        W = solve_left(A + Z @ C, B + Z @ D)
    except SingularMatrix as exc:
        raise SingularFactor("A + ZC is not invertible") from exc
    return SiegelPoint(W)


def is_fixed(R: Matrix, point: SiegelPoint) -> bool:
    """``(A + ZC)^{-1}(B + ZD) == Z``; for ``C = B = 0`` this is ``Z D == A Z``."""
    A, B, C, D = _blocks(R, point.g)
    Z = point.Z
    if not any(B.entries()) and not any(C.entries()):
        return Z @ D == A @ Z
    return act(R, point).Z == Z


def commutation_check(W: Matrix, point: SiegelPoint) -> bool:
    """``W Z == Z W^T`` for a g x g integer ``W``."""
    if W.shape != (point.g, point.g):
        raise DimensionMismatch(f"W must be {point.g}x{point.g}, got {W.shape}")
    return W @ point.Z == point.Z @ W.T


def check_homomorphism(M: Matrix, R: Matrix, Z1: SiegelPoint, Z2: SiegelPoint) -> bool:
    """``M (I Z1) == (I Z2) R``."""
    g = Z1.g
    if Z2.g != g or M.shape != (g, g) or R.shape != (2 * g, 2 * g):
        raise DimensionMismatch(
            f"need M {g}x{g} and R {2 * g}x{2 * g}; got M {M.shape}, R {R.shape}"
        )
    return M @ Z1.period_matrix() == Z2.period_matrix() @ R


# strata S(x, y, z) -------------------------------------------------------


def _tri(n: int) -> int:
    return n * (n + 1) // 2


@dataclass(frozen=True)
class StratumParameters:
    """Free parameters of a point of ``S(x, y, z)``.

    ``a``/``b`` list the 2x2 ``X`` blocks of the upper triangle in row-major
    order; ``c`` and ``d`` list the ``Y`` and ``U`` blocks row-major (``x``
    rows of ``y`` resp. ``z`` blocks). Only the upper triangles of ``Zy`` and
    ``Zz`` are read.
    """

    type: InvolutionType
    a: tuple
    b: tuple
    c: tuple
    d: tuple
    Zy: Matrix
    Zz: Matrix

    def __post_init__(self):
        x, y, z = self.type.as_tuple()
        expected = {"a": _tri(x), "b": _tri(x), "c": x * y, "d": x * z}
        for name, n in expected.items():
            if len(getattr(self, name)) != n:
                raise DimensionMismatch(f"{name} needs {n} entries, got {len(getattr(self, name))}")
            object.__setattr__(self, name, tuple(map(GaussianRational.coerce, getattr(self, name))))
        if self.Zy.shape != (y, y) or self.Zz.shape != (z, z):
            raise DimensionMismatch(f"Zy must be {y}x{y} and Zz {z}x{z}")

    @classmethod
    def default(cls, t: InvolutionType) -> StratumParameters:
        """``X`` diagonal blocks with ``a = b = i``, other blocks zero, ``i`` on the tails."""
        x, y, z = t.as_tuple()
        diag_idx = {_x_block_index(x, u, u) for u in range(x)}
        a = [I if j in diag_idx else 0 for j in range(_tri(x))]
        return cls(
            t, a, list(a), [0] * (x * y), [0] * (x * z),
            Matrix.diag([I] * y), Matrix.diag([I] * z),
        )

    @property
    def free_parameter_count(self) -> int:
        y, z = self.type.y, self.type.z
        return len(self.a) + len(self.b) + len(self.c) + len(self.d) + _tri(y) + _tri(z)


def _x_block_index(x: int, u: int, v: int) -> int:
    """Position of block (u, v), u <= v, in the row-major upper triangle."""
    return u * x - u * (u - 1) // 2 + (v - u)


def stratum_parameter_count(t: InvolutionType) -> int:
    return StratumParameters.default(t).free_parameter_count


def stratum_build(p: StratumParameters) -> SiegelPoint:
    x, y, z = p.type.as_tuple()
    g = p.type.g
    M = [[GaussianRational(0)] * g for _ in range(g)]

    def put(i, j, v):
        M[i][j] = v
        M[j][i] = v

    for u in range(x):
        for v in range(u, x):
            k = _x_block_index(x, u, v)
            a, b = p.a[k], p.b[k]
            put(2 * u, 2 * v, 2 * a)
            put(2 * u, 2 * v + 1, a)
            put(2 * u + 1, 2 * v, a)
            put(2 * u + 1, 2 * v + 1, b)
        for k in range(y):
            put(2 * u + 1, 2 * x + k, p.c[u * y + k])
        for k in range(z):
            d = p.d[u * z + k]
            put(2 * u, 2 * x + y + k, 2 * d)
            put(2 * u + 1, 2 * x + y + k, d)
    for i in range(y):
        for j in range(i, y):
            put(2 * x + i, 2 * x + j, GaussianRational.coerce(p.Zy[i, j]))
    for i in range(z):
        for j in range(i, z):
            put(2 * x + y + i, 2 * x + y + j, GaussianRational.coerce(p.Zz[i, j]))
    return SiegelPoint(Matrix(M))


def stratum_contains(t: InvolutionType, point: SiegelPoint) -> bool:
    """Whether ``Z`` has the block shape of ``S(x, y, z)``."""
    x, y, z = t.as_tuple()
    if point.g != t.g:
        return False
    Z = point.Z
    for u in range(x):
        for v in range(u, x):
            p, q = Z[2 * u, 2 * v], Z[2 * u, 2 * v + 1]
            r = Z[2 * u + 1, 2 * v]
            if not (p == 2 * q and p == 2 * r):
                return False
        for k in range(y):
            if Z[2 * u, 2 * x + k] != 0:
                return False
        for k in range(z):
            col = 2 * x + y + k
            if Z[2 * u, col] != 2 * Z[2 * u + 1, col]:
                return False
    return all(Z[2 * x + i, 2 * x + y + j] == 0 for i in range(y) for j in range(z))


def stratum_midpoint(Z1: SiegelPoint, Z2: SiegelPoint, t: InvolutionType) -> SiegelPoint:
    if not (stratum_contains(t, Z1) and stratum_contains(t, Z2)):
        raise StratumMismatch(f"both points must lie in S{t}")
    mid = SiegelPoint((Z1.Z + Z2.Z) * Fraction(1, 2))
    if not stratum_contains(t, mid):
        raise StratumMismatch("midpoint left the stratum")
    return mid

