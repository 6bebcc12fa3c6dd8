"""n-level structures of involutions: reduction mod n and conjugacy in GL(2g, Z/n)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from sympy import isprime

from ppav.errors import DimensionMismatch, EvenModulus, NotInvolution, NotPrime
from ppav.exact import Matrix, determinant, rank_mod_p
from ppav.symplectic import InvolutionType, SymplecticInvolution, reiner_block, reiner_normal_form


@dataclass(frozen=True)
class LevelStructure:
    n: int
    matrix: Matrix

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("modulus must be >= 2")
        M = self.matrix.mod(self.n)
        if not M.is_square or M.rows % 2:
            raise DimensionMismatch(f"level structures are 2g x 2g, got {M.shape}")
        if (M @ M).mod(self.n) != Matrix.identity(M.rows).mod(self.n):
            raise NotInvolution(f"matrix does not square to I mod {self.n}")
        object.__setattr__(self, "matrix", M)

    @property
    def g(self) -> int:
        return self.matrix.rows // 2


def reduce_mod(R: SymplecticInvolution | Matrix, n: int) -> LevelStructure:
    M = R.matrix if isinstance(R, SymplecticInvolution) else R
    return LevelStructure(n, M)


def _check_odd_prime(p: int):
    if p == 2:
        raise EvenModulus("p = 2 is refused: involutions need not diagonalize over Z/2")
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")


def plus_eigenspace_dim(R: LevelStructure, p: int) -> int:
    return R.matrix.rows - rank_mod_p(R.matrix - Matrix.identity(R.matrix.rows), p)


def conjugate_mod_p(Ra: LevelStructure, Rb: LevelStructure, p: int) -> bool:
    """Decide GL(2g, Z/p)-conjugacy of two involutions for an odd prime ``p``.

    In odd characteristic an involution is diagonalizable with eigenvalues
    +-1, so it is determined up to conjugacy by ``rank(R - I)``.
    """
    _check_odd_prime(p)
    if Ra.n % p or Rb.n % p:
        raise ValueError(f"both level structures must be reductions modulo a multiple of {p}")
    if Ra.g != Rb.g:
        raise DimensionMismatch(f"genus {Ra.g} vs {Rb.g}")
    return plus_eigenspace_dim(Ra, p) == plus_eigenspace_dim(Rb, p)


def conjugacy_certificate_check(E: Matrix, Ra: LevelStructure, Rb: LevelStructure, n: int) -> bool:
    """``det E`` is a unit mod ``n`` and ``E Ra = Rb E`` mod ``n``."""
    if E.shape != Ra.matrix.shape or E.shape != Rb.matrix.shape:
        return False
    if gcd(determinant(E) % n, n) != 1:
        return False
    return (E @ Ra.matrix).mod(n) == (Rb.matrix @ E).mod(n)


def g3_conjugator(p: int) -> Matrix:
    """``diag(M, M^-T mod p)`` with ``M = [[1,-2,0],[c,0,0],[0,0,1]]`` and ``-2c = 1 mod p``.

    ``M`` conjugates ``W(1,0,1)`` into ``W(0,1,2)`` on the first half. On the
    second half the transposed blocks require the inverse transpose of ``M``;
    ``M^T`` itself does not work for any odd ``p``. Note ``det M = 2c = -1``.
    """
    if p % 2 == 0:
        raise EvenModulus("the conjugator needs an odd modulus")
    _check_odd_prime(p)
    c = (-pow(2, -1, p)) % p
    M = Matrix([[1, -2, 0], [c, 0, 0], [0, 0, 1]])
    det_inv = pow(determinant(M) % p, -1, p)
    # adjugate / det, written out for this M
    M_inv = Matrix([[0, 2, 0], [-c, 1, 0], [0, 0, 2 * c]]).map(lambda e: (e * det_inv) % p)
    if (M @ M_inv).mod(p) != Matrix.identity(3):
        raise ArithmeticError("modular inverse of M is wrong")
    return Matrix.block_diag(M, M_inv.T)


def g3_conjugator_constant(p: int) -> int:
    """The residue ``c`` in ``0..p-1`` with ``-2c = 1 mod p``."""
    _check_odd_prime(p)
    return (-pow(2, -1, p)) % p


def g3_block_forms(p: int) -> tuple[LevelStructure, LevelStructure]:
    """``W(1,0,1) + W(1,0,1)^T`` and ``W(0,1,2) + W(0,1,2)`` reduced mod ``p``."""
    a = reiner_normal_form(InvolutionType(1, 0, 1))
    W = reiner_block(InvolutionType(0, 1, 2))
    return reduce_mod(a, p), reduce_mod(Matrix.block_diag(W, W), p)


def same_type_implies_conjugate_mod_p(ta: InvolutionType, tb: InvolutionType, p: int) -> bool:
    if ta.g != tb.g:
        raise DimensionMismatch(f"types of genus {ta.g} and {tb.g}")
    na, nb = reiner_normal_form(ta), reiner_normal_form(tb)
    return conjugate_mod_p(reduce_mod(na, p), reduce_mod(nb, p), p)


def mod_p_classes(g: int, p: int, types=None) -> list[list[InvolutionType]]:
    """Partition ``types`` (default: the admissible ones) into GL(2g, Z/p)-conjugacy classes."""
    from ppav.strata import admissible_triples

    types = admissible_triples(g) if types is None else list(types)
    classes: list[list[InvolutionType]] = []
    for t in types:
        for cls in classes:
            if same_type_implies_conjugate_mod_p(cls[0], t, p):
                cls.append(t)
                break
        else:
            classes.append([t])
    return classes
