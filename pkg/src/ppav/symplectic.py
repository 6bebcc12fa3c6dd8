"""The integral symplectic group Sp(2g, Z) and its involutions.

Matrices act on column vectors: column ``j`` of a lattice automorphism holds
the coordinates of the image of the ``j``-th basis vector, so composition is
left multiplication.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from ppav.errors import (
    CapExceeded,
    DimensionMismatch,
    InternalInconsistency,
    NotInvolution,
    NotSymplectic,
    OddDimension,
)
from ppav.exact import Matrix, determinant, integer_kernel, inverse

J1 = Matrix([[1, 0], [1, -1]])


@lru_cache(maxsize=None)
def standard_form(g: int) -> Matrix:
    """The alternating form ``J = (0 I_g; -I_g 0)``."""
    I, Z = Matrix.identity(g), Matrix.zeros(g)
    return Matrix.from_blocks([[Z, I], [-I, Z]])


@dataclass(frozen=True, order=True)
class InvolutionType:
    x: int
    y: int
    z: int

    def __post_init__(self):
        if min(self.x, self.y, self.z) < 0:
            raise ValueError(f"involution type entries must be non-negative: {self.as_tuple()}")

    @property
    def g(self) -> int:
        return 2 * self.x + self.y + self.z

    @property
    def is_admissible(self) -> bool:
        return not (self.x == 0 and (self.y == 0 or self.z == 0))

    def dual(self) -> InvolutionType:
        return InvolutionType(self.x, self.z, self.y)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def __str__(self):
        return f"({self.x},{self.y},{self.z})"


def _square_even(R: Matrix) -> int:
    if not R.is_square:
        raise DimensionMismatch(f"expected a square matrix, got {R.shape}")
    if R.rows % 2:
        raise OddDimension(f"symplectic matrices have even size, got {R.rows}")
    return R.rows // 2


def is_symplectic(R: Matrix) -> bool:
    g = _square_even(R)
    J = standard_form(g)
    return R.T @ J @ R == J


def is_involution(R: Matrix) -> bool:
    return R.is_square and R @ R == Matrix.identity(R.rows)


def symplectic_inverse(R: Matrix) -> Matrix:
    """``R^{-1} = -J R^T J`` for symplectic ``R``."""
    J = standard_form(_square_even(R))
    return -(J @ R.T @ J)


def reiner_block(t: InvolutionType) -> Matrix:
    """The g x g block ``W(x,y,z) = J_1 + ... + J_1 + (-I_y) + I_z``."""
    return Matrix.block_diag(
        *([J1] * t.x), Matrix.diag([-1] * t.y), Matrix.identity(t.z)
    )


def direct_sum_with_transpose(W: Matrix) -> Matrix:
    return Matrix.block_diag(W, W.T)


@dataclass(frozen=True)
class SymplecticInvolution:
    matrix: Matrix
    type: InvolutionType = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "type", classify_involution(self.matrix))

    @property
    def g(self) -> int:
        return self.matrix.rows // 2


@dataclass(frozen=True)
class InvolutionInvariants:
    """Everything ``classify_involution`` computes on the way to the type."""

    type: InvolutionType
    fixed_rank: int
    anti_fixed_rank: int
    index: int
    trace: int
    fixed_basis: Matrix
    anti_fixed_basis: Matrix


def involution_invariants(R: Matrix) -> InvolutionInvariants:
    """Classify an integral symplectic involution up to Sp(2g, Z)-conjugacy.

    With ``L+ = ker(R - I)`` and ``L- = ker(R + I)`` (both saturated), the
    index ``[Z^2g : L+ + L-]`` is ``2^(2x)``: each ``J_1`` block of the normal
    form contributes a factor 2 on each half. The rank of ``L+`` is
    ``2(x + z)``. Both quantities are conjugation invariants.
    """
    g = _square_even(R)
    if not is_symplectic(R):
        raise NotSymplectic("matrix does not preserve the standard symplectic form")
    n = 2 * g
    Id = Matrix.identity(n)
    if R @ R != Id:
        raise NotInvolution("matrix does not square to the identity")
    plus = integer_kernel(R - Id)
    minus = integer_kernel(R + Id)
    f = plus.cols
    if f + minus.cols != n:
        raise InternalInconsistency(f"eigenlattice ranks {f} + {minus.cols} != {n}")
    index = abs(determinant(plus.hstack(minus)))
    k = index.bit_length() - 1
    if index <= 0 or index != 1 << k or k % 2:
        raise InternalInconsistency(f"index {index} is not a power of 4")
    if f % 2:
        raise InternalInconsistency(f"fixed lattice rank {f} is odd")
    x = k // 2
    z = f // 2 - x
    y = g - 2 * x - z
    if y < 0 or z < 0:
        raise InternalInconsistency(f"derived negative multiplicity (x={x}, y={y}, z={z})")
    tr = R.trace()
    if tr != 2 * (z - y):
        raise InternalInconsistency(f"trace {tr} != 2(z - y) = {2 * (z - y)}")
    return InvolutionInvariants(InvolutionType(x, y, z), f, minus.cols, index, tr, plus, minus)


def classify_involution(R: Matrix) -> InvolutionType:
    return involution_invariants(R).type


def reiner_normal_form(t: InvolutionType) -> SymplecticInvolution:
    return SymplecticInvolution(direct_sum_with_transpose(reiner_block(t)))


def negate(inv: SymplecticInvolution) -> SymplecticInvolution:
    """Compose with ``-id``; swaps the y and z multiplicities."""
    out = SymplecticInvolution(-inv.matrix)
    if out.type != inv.type.dual():
        raise InternalInconsistency(f"-R has type {out.type}, expected {inv.type.dual()}")
    return out


# random elements --------------------------------------------------------


def _elementary(n: int, i: int, j: int, s: int) -> Matrix:
    rows = Matrix.identity(n).tolist()
    rows[i][j] += s
    return Matrix(rows)


def random_symplectic(g: int, seed: int, word_length: int) -> Matrix:
    """Deterministic random word in standard generators of Sp(2g, Z).

    Generators: ``(I B; 0 I)`` with ``B`` an elementary symmetric matrix,
    ``(A 0; 0 A^-T)`` with ``A`` an elementary transvection, and ``J``.
    """
    if word_length < 0:
        raise ValueError("word_length must be >= 0")
    rng = random.Random(seed)
    I, Z = Matrix.identity(g), Matrix.zeros(g)
    J = standard_form(g)
    R = Matrix.identity(2 * g)
    for _ in range(word_length):
        kind = rng.randrange(3) if g > 1 else rng.choice((0, 2))
        s = rng.choice((-1, 1))
        if kind == 0:
            i, j = rng.randrange(g), rng.randrange(g)
            B = [[0] * g for _ in range(g)]
            B[i][j] += s
            if i != j:
                B[j][i] += s
            gen = Matrix.from_blocks([[I, Matrix(B)], [Z, I]])
        elif kind == 1:
            i, j = rng.sample(range(g), 2)
            A = _elementary(g, i, j, s)
            gen = Matrix.block_diag(A, _elementary(g, j, i, -s))
        else:
            gen = J
        R = R @ gen
    return R


# finite groups -----------------------------------------------------------


def _integer_inverse(M: Matrix) -> Matrix:
    if M.rows % 2 == 0 and is_symplectic(M):
        return symplectic_inverse(M)
    return inverse(M).as_integer()


def group_closure(generators: Iterable[Matrix], cap: int = 10_000) -> frozenset[Matrix]:
    """Breadth-first closure of ``generators`` under products and inverses.

    Raises ``CapExceeded`` (carrying the partial size) once more than ``cap``
    elements have been found.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].rows
    if any(not G.is_square or G.rows != n for G in gens):
        raise DimensionMismatch("generators must be square of equal size")
    gens = list(dict.fromkeys(gens + [_integer_inverse(G) for G in gens]))
    ident = Matrix.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        A = queue.popleft()
        for G in gens:
            B = A @ G
            if B not in seen:
                seen.add(B)
                if len(seen) > cap:
                    raise CapExceeded(len(seen), cap)
                queue.append(B)
    return frozenset(seen)
