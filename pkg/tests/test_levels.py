import pytest
from hypothesis import given, strategies as st
from sympy import primerange

from ppav.errors import DimensionMismatch, EvenModulus, NotInvolution, NotPrime
from ppav.exact import Matrix, determinant
from ppav.levels import (
    LevelStructure,
    conjugacy_certificate_check,
    conjugate_mod_p,
    g3_block_forms,
    g3_conjugator,
    g3_conjugator_constant,
    mod_p_classes,
    reduce_mod,
    same_type_implies_conjugate_mod_p,
)
from ppav.strata import admissible_triples
from ppav.symplectic import (
    InvolutionType,
    reiner_block,
    reiner_normal_form,
    random_symplectic,
    symplectic_inverse,
)

T = InvolutionType
ODD_PRIMES = list(primerange(3, 50))


def types_of(g):
    return [T(x, y, g - 2 * x - y) for x in range(g // 2 + 1) for y in range(g - 2 * x + 1)]


def test_reduce_examples():
    assert reduce_mod(-Matrix.identity(6), 5).matrix == Matrix.identity(6) * 4
    L = reduce_mod(reiner_normal_form(T(1, 0, 1)), 3)
    assert set(L.matrix.entries()) <= {0, 1, 2}
    assert L.matrix[1, 1] == 2 and L.g == 3


def test_level_structure_validation():
    with pytest.raises(NotInvolution):
        LevelStructure(5, Matrix([[0, 1], [-1, 0]]))
    with pytest.raises(DimensionMismatch):
        LevelStructure(5, Matrix.identity(3))
    with pytest.raises(ValueError):
        LevelStructure(1, Matrix.identity(2))
    # squares to I modulo 4 though not over Z
    assert LevelStructure(4, Matrix([[1, 2], [0, 1]])).matrix == Matrix([[1, 2], [0, 1]])


@given(st.integers(1, 5), st.data(), st.integers(2, 30), st.integers(0, 2**32))
def test_reduction_properties(g, data, n, seed):
    t = data.draw(st.sampled_from(types_of(g)))
    E = random_symplectic(g, seed, 8)
    R = symplectic_inverse(E) @ reiner_normal_form(t).matrix @ E
    L = reduce_mod(R, n)
    assert (L.matrix @ L.matrix).mod(n) == Matrix.identity(2 * g).mod(n)
    assert reduce_mod(-R, n).matrix == (L.matrix * (n - 1)).mod(n)


def test_conjugate_mod_p_examples():
    a, b = g3_block_forms(5)
    assert conjugate_mod_p(a, b, 5)
    for p in ODD_PRIMES:
        n1 = reduce_mod(reiner_normal_form(T(1, 0, 1)), p)
        n2 = reduce_mod(reiner_normal_form(T(0, 1, 2)), p)
        assert conjugate_mod_p(n1, n2, p)
    c = reduce_mod(reiner_normal_form(T(0, 2, 1)), 5)
    d = reduce_mod(reiner_normal_form(T(0, 1, 2)), 5)
    assert not conjugate_mod_p(c, d, 5)
    assert conjugate_mod_p(c, c, 5)


def test_conjugate_mod_p_refusals():
    a = reduce_mod(Matrix.identity(2), 2)
    with pytest.raises(EvenModulus):
        conjugate_mod_p(a, a, 2)
    b = reduce_mod(Matrix.identity(2), 9)
    with pytest.raises(NotPrime):
        conjugate_mod_p(b, b, 9)
    with pytest.raises(DimensionMismatch):
        conjugate_mod_p(reduce_mod(Matrix.identity(2), 3), reduce_mod(Matrix.identity(4), 3), 3)


def test_certificate_check_examples():
    a, b = g3_block_forms(5)
    assert conjugacy_certificate_check(Matrix.identity(6), a, a, 5)
    assert conjugacy_certificate_check(g3_conjugator(5), a, b, 5)
    singular = Matrix.diag([5, 1, 1, 1, 1, 1])
    assert not conjugacy_certificate_check(singular, a, a, 5)
    assert not conjugacy_certificate_check(Matrix.identity(4), a, a, 5)


@pytest.mark.parametrize("p, c", [(3, 1), (5, 2), (7, 3)])
def test_conjugator_constant(p, c):
    assert g3_conjugator_constant(p) == c
    assert (-2 * c) % p == 1


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_g3_conjugator(p):
    c = g3_conjugator_constant(p)
    E = g3_conjugator(p)
    M = Matrix([[1, -2, 0], [c, 0, 0], [0, 0, 1]])
    assert E.submatrix(0, 3, 0, 3) == M
    assert E.submatrix(0, 3, 3, 6) == Matrix.zeros(3) == E.submatrix(3, 6, 0, 3)
    assert determinant(M) % p == p - 1
    a, b = g3_block_forms(p)
    assert conjugacy_certificate_check(E, a, b, p)
    # first half on its own: M W(1,0,1) = W(0,1,2) M
    W101, W012 = reiner_block(T(1, 0, 1)), reiner_block(T(0, 1, 2))
    assert (M @ W101).mod(p) == (W012 @ M).mod(p)


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_transpose_block_is_not_a_conjugator(p):
    """``diag(M, M^T)`` fails: the lower block must be the inverse transpose."""
    c = g3_conjugator_constant(p)
    M = Matrix([[1, -2, 0], [c, 0, 0], [0, 0, 1]])
    a, b = g3_block_forms(p)
    assert not conjugacy_certificate_check(Matrix.block_diag(M, M.T), a, b, p)


def test_g3_conjugator_rejects_even_and_composite():
    with pytest.raises(EvenModulus):
        g3_conjugator(2)
    with pytest.raises(NotPrime):
        g3_conjugator(15)


def test_same_type_examples():
    assert same_type_implies_conjugate_mod_p(T(1, 1, 0), T(1, 1, 0), 7)
    assert same_type_implies_conjugate_mod_p(T(1, 0, 1), T(0, 1, 2), 5)
    assert not same_type_implies_conjugate_mod_p(T(1, 1, 0), T(0, 1, 2), 5)
    with pytest.raises(DimensionMismatch):
        same_type_implies_conjugate_mod_p(T(1, 1, 0), T(0, 1, 1), 5)


@pytest.mark.parametrize("g", range(2, 7))
@pytest.mark.parametrize("p", [3, 5, 7])
def test_same_type_decision_is_x_plus_z(g, p):
    types = types_of(g)
    for ta in types:
        for tb in types:
            assert same_type_implies_conjugate_mod_p(ta, tb, p) == (ta.x + ta.z == tb.x + tb.z)


@pytest.mark.parametrize("g", range(1, 7))
@pytest.mark.parametrize("p", [3, 5, 7])
def test_random_conjugates_stay_conjugate(g, p):
    for t in types_of(g):
        base = reduce_mod(reiner_normal_form(t), p)
        N = reiner_normal_form(t).matrix
        for seed in range(50):
            E = random_symplectic(g, 1000 * g + seed, 2 * g + 4)
            R = reduce_mod(symplectic_inverse(E) @ N @ E, p)
            assert conjugate_mod_p(base, R, p)


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_g3_collapses_to_two_classes(p):
    classes = mod_p_classes(3, p)
    assert [set(c) for c in classes] == [{T(0, 1, 2), T(1, 0, 1)}, {T(0, 2, 1), T(1, 1, 0)}]
    assert sum(map(len, classes)) == len(admissible_triples(3))
