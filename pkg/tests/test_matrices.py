"""Exact matrix algorithms: HNF, SNF, charpoly, kernels.

The [[2,4],[4,2]] HNF case is checked against a naive audited column-reduction
oracle implemented below; SNF diag values are pinned from the gcd/det
argument (d1 = gcd of entries = 2, d1*d2 = |det| = 12 so d2 = 6).
"""

from fractions import Fraction

import pytest

from irredcert.errors import IntegralityError, ShapeError, SingularError
from irredcert.matrices import (
    Matrix, char_poly, hnf, integer_kernel, kernel_basis, kronecker,
    poly_at_matrix, rank, rref, snf,
)
from irredcert.prng import XorShift64
from irredcert.rings import ZZ, QQ, PolynomialRingZ, PrimeField

F2 = PrimeField(2)
F5 = PrimeField(5)


def _naive_column_hnf(rows):
    """Audit oracle: column-reduce with explicit unimodular steps only,
    then normalize, entirely independently of the library routine."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0])
    cols = [[m[i][j] for i in range(nr)] for j in range(nc)]

    def colsub(j, k, q):
        cols[j] = [x - q * y for x, y in zip(cols[j], cols[k])]

    r = 0
    for i in range(nr):
        while True:
            nz = [j for j in range(r, nc) if cols[j][i] != 0]
            if not nz:
                piv = None
                break
            if len(nz) == 1:
                piv = nz[0]
                break
            j0 = min(nz, key=lambda j: abs(cols[j][i]))
            for j in nz:
                if j != j0:
                    colsub(j, j0, cols[j][i] // cols[j0][i])
        if piv is None:
            continue
        cols[r], cols[piv] = cols[piv], cols[r]
        if cols[r][i] < 0:
            cols[r] = [-x for x in cols[r]]
        for j in range(r):
            colsub(j, r, cols[j][i] // cols[r][i])
        r += 1
    return [[cols[j][i] for j in range(nc)] for i in range(nr)]


def test_hnf_identity():
    m = Matrix.identity(ZZ, 2)
    h, t = hnf(m)
    assert h == m and t == m


def test_hnf_scaled_identity():
    m = Matrix.identity(ZZ, 2).scale(3)
    h, t = hnf(m)
    assert h == m
    assert (m * t) == h


def test_hnf_2442():
    m = Matrix(ZZ, [[2, 4], [4, 2]])
    h, t = hnf(m)
    assert m * t == h
    assert h.rows() == _naive_column_hnf([[2, 4], [4, 2]])
    # transform must be unimodular
    assert t.det() in (1, -1)


def test_hnf_canonicity_random():
    rng = XorShift64(42)
    for _ in range(100):
        m = Matrix(ZZ, [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)])
        u = _random_unimodular(rng, 3)
        h1, _ = hnf(m)
        h2, _ = hnf(m * u)
        assert h1 == h2
        assert h1.rows() == _naive_column_hnf(m.rows())


def _random_unimodular(rng, n):
    m = Matrix.identity(ZZ, n)
    for _ in range(6):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        e = Matrix.identity(ZZ, n).rows()
        e[i][j] = rng.randint(-2, 2)
        m = m * Matrix(ZZ, e)
    return m


def test_hnf_rejects_rationals():
    m = Matrix(QQ, [[Fraction(1, 2)]])
    with pytest.raises(IntegralityError):
        hnf(m)


def test_snf_identity_and_zero():
    n = Matrix.identity(ZZ, 3)
    d, l, r = snf(n)
    assert d == n and l * n * r == d
    z = Matrix.zeros(ZZ, 2, 2)
    d, l, r = snf(z)
    assert d == z


def test_snf_2442():
    m = Matrix(ZZ, [[2, 4], [4, 2]])
    d, l, r = snf(m)
    assert l * m * r == d
    assert d == Matrix(ZZ, [[2, 0], [0, 6]])
    assert l.det() in (1, -1) and r.det() in (1, -1)


def test_snf_random_properties():
    rng = XorShift64(17)
    for _ in range(60):
        nr = rng.randint(1, 4)
        nc = rng.randint(1, 4)
        m = Matrix(ZZ, [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)])
        d, l, r = snf(m)
        assert l * m * r == d
        assert l.det() in (1, -1) and r.det() in (1, -1)
        diag = [d.entry(i, i) for i in range(min(nr, nc))]
        for a, b in zip(diag, diag[1:]):
            if a != 0:
                assert b % a == 0
            else:
                assert b == 0
        for i in range(nr):
            for j in range(nc):
                if i != j:
                    assert d.entry(i, j) == 0
        if nr == nc:
            prod = 1
            for x in diag:
                prod *= x
            assert prod == abs(m.det())


def test_char_poly_examples():
    ident = Matrix.identity(F5, 2)
    assert char_poly(ident) == (1, 3, 1)  # (x-1)^2 = x^2 - 2x + 1 = x^2+3x+1 mod 5
    m = Matrix(QQ, [[0, -1], [1, -1]])
    assert char_poly(m) == (Fraction(1), Fraction(1), Fraction(1))  # x^2+x+1
    diag = Matrix(QQ, [[2, 0], [0, 3]])
    assert char_poly(diag) == (Fraction(6), Fraction(-5), Fraction(1))


def test_char_poly_companion():
    # companion matrix of x^3 + 2x + 4 over F_5
    c = Matrix(F5, [[0, 0, -4], [1, 0, -2], [0, 1, 0]])
    assert char_poly(c) == (4, 2, 0, 1)


def test_char_poly_conjugation_invariance():
    rng = XorShift64(3)
    for K in (QQ, F5):
        for _ in range(40):
            n = rng.randint(2, 4)
            m = _rand_matrix(K, n, rng)
            p = _rand_invertible(K, n, rng)
            assert char_poly(p * m * p.inverse()) == char_poly(m)


def _rand_matrix(K, n, rng):
    if K is QQ:
        return Matrix(K, [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)])
    return Matrix(K, [[rng.randrange(K.order) for _ in range(n)] for _ in range(n)])


def _rand_invertible(K, n, rng):
    while True:
        m = _rand_matrix(K, n, rng)
        if not K.is_zero(m.det()):
            return m


def test_char_poly_trace_det():
    rng = XorShift64(9)
    for _ in range(30):
        m = _rand_matrix(QQ, 3, rng)
        cp = char_poly(m)
        assert cp[3] == 1
        assert cp[2] == -m.trace()
        assert cp[0] == -m.det()


def test_kernel_basis():
    assert kernel_basis(Matrix.identity(QQ, 2)) == []
    F3 = PrimeField(3)
    z = Matrix.zeros(F3, 2, 2)
    assert kernel_basis(z) == [(1, 0), (0, 1)]
    m = Matrix(QQ, [[1, 1], [2, 2]])
    assert kernel_basis(m) == [(Fraction(-1), Fraction(1))]


def test_kernel_random_soundness():
    rng = XorShift64(21)
    for _ in range(50):
        nr = rng.randint(1, 4)
        nc = rng.randint(1, 4)
        m = Matrix(F5, [[rng.randrange(5) for _ in range(nc)] for _ in range(nr)])
        ker = kernel_basis(m)
        assert len(ker) == nc - rank(m)
        for v in ker:
            assert all(x == 0 for x in m.apply(v))


def test_integer_kernel():
    m = Matrix(ZZ, [[1, 1], [2, 2]])
    ker = integer_kernel(m)
    assert len(ker) == 1
    v = ker[0]
    assert m.apply(v) == (0, 0)
    assert sorted(abs(x) for x in v) == [1, 1]  # primitive vector
    assert integer_kernel(Matrix.identity(ZZ, 3)) == []


def test_rref_pivots():
    m = Matrix(QQ, [[0, 1, 2], [0, 2, 4]])
    red, piv = rref(m)
    assert piv == (1,)
    assert red.row(0) == (Fraction(0), Fraction(1), Fraction(2))


def test_matrix_ops_and_errors():
    m = Matrix(ZZ, [[1, 2], [3, 4]])
    assert (m * Matrix.identity(ZZ, 2)) == m
    assert m.transpose().transpose() == m
    assert m.det() == -2
    with pytest.raises(ShapeError):
        m * Matrix.identity(ZZ, 3)
    with pytest.raises(SingularError):
        Matrix(QQ, [[1, 2], [2, 4]]).inverse()
    inv = m.inverse()
    assert inv.ring == QQ  # not integral, so lives in the fraction field
    assert (inv * m.change_ring(QQ)).is_identity()
    uni = Matrix(ZZ, [[1, 1], [0, 1]])
    assert uni.inverse().ring == ZZ


def test_matrix_over_poly_ring():
    ZT = PolynomialRingZ("t")
    m = Matrix(ZT, [[(0, 1), (1,)], [(0,), (1,)]])  # [[t, 1], [0, 1]]
    assert m.det() == (0, 1)
    sq = m * m
    assert sq.entry(0, 0) == (0, 0, 1)  # t^2


def test_poly_at_matrix():
    m = Matrix(QQ, [[0, -1], [1, -1]])
    cp = char_poly(m)
    assert poly_at_matrix(QQ, cp, m).is_zero()  # Cayley-Hamilton


def test_kronecker():
    a = Matrix(ZZ, [[1, 2], [3, 4]])
    b = Matrix(ZZ, [[0, 1], [1, 0]])
    k = kronecker(a, b)
    assert k.nrows == 4 and k.ncols == 4
    assert k.entry(0, 1) == 1 and k.entry(0, 3) == 2
    # trace multiplicativity
    assert k.trace() == a.trace() * b.trace()


def test_pow():
    m = Matrix(QQ, [[0, -1], [1, -1]])
    assert (m ** 3).is_identity()
    assert (m ** -3).is_identity()
    assert (m ** 0).is_identity()
