"""Lattice bases, prime specs, saturation, and reduction."""

from fractions import Fraction

import pytest

from irredcert.errors import (BadPrime, BudgetExceeded, IntegralityError,
                              NotSublattice, ShapeError)
from irredcert.lattices import (IMAGE_FULL, IMAGE_PROPER, IMAGE_ZERO,
                                LatticeBasis, PrimeSpec, ideal_mult,
                                lattice_from_columns, lattice_intersect,
                                proper_sublattice_image, reduce_rep,
                                reduction_functorial, saturate)
from irredcert.matrices import Matrix
from irredcert.prng import XorShift64
from irredcert.reps import Representation, conjugate, evaluate
from irredcert.rings import ZZ, QQ, PolynomialRingZ, PrimeField, \
    RationalFunctionField

ZT = PolynomialRingZ("t")
QT = RationalFunctionField("t")


def s3_over(ring):
    sigma = [[0, -1], [1, -1]]
    tau = [[0, 1], [1, 0]]
    relations = [[(0, 1)] * 3, [(1, 1)] * 2, [(0, 1), (1, 1)] * 2]
    return Representation(ring, [Matrix(ring, sigma), Matrix(ring, tau)],
                          relations, label="s3")


class TestPrimeSpec:

    def test_string_round_trips(self):
        cases = [
            (PrimeSpec.zero(ZZ), "(0)", ZZ),
            (PrimeSpec.zero(ZT), "(0)", ZT),
            (PrimeSpec.integer(5), "(5)", ZZ),
            (PrimeSpec.linear(3), "(t-3)", ZT),
            (PrimeSpec.linear(-3), "(t+3)", ZT),
            (PrimeSpec.linear(0), "(t-0)", ZT),
            (PrimeSpec.maximal(2, 0), "(2,t-0)", ZT),
            (PrimeSpec.maximal(5, -1), "(5,t+1)", ZT),
        ]
        for spec, text, ring in cases:
            assert str(spec) == text
            assert PrimeSpec.parse(text, ring) == spec

    def test_parse_extras(self):
        assert PrimeSpec.parse("(t)", ZT) == PrimeSpec.linear(0)
        assert PrimeSpec.parse(" ( 2 , t-1 ) ", ZT) == PrimeSpec.maximal(2, 1)

    def test_rejects(self):
        with pytest.raises(BadPrime):
            PrimeSpec.integer(4)
        with pytest.raises(BadPrime):
            PrimeSpec.integer(1)
        with pytest.raises(BadPrime):
            PrimeSpec.maximal(6, 0)
        with pytest.raises(BadPrime):
            PrimeSpec.parse("(5)", ZT)  # principal (p) of Z[t]: not offered
        with pytest.raises(BadPrime):
            PrimeSpec.parse("(t-3)", ZZ)
        with pytest.raises(BadPrime):
            PrimeSpec.parse("5", ZZ)
        with pytest.raises(BadPrime):
            PrimeSpec.parse("(2*t-1)", ZT)

    def test_residue_rings(self):
        assert PrimeSpec.zero(ZZ).residue_ring() == QQ
        assert PrimeSpec.zero(ZT).residue_ring() == QT
        assert PrimeSpec.integer(7).residue_ring() == PrimeField(7)
        assert PrimeSpec.linear(2).residue_ring() == QQ
        assert PrimeSpec.maximal(3, 1).residue_ring() == PrimeField(3)

    def test_reduce_scalar(self):
        assert PrimeSpec.integer(5).reduce_scalar(12) == 2
        assert PrimeSpec.zero(ZZ).reduce_scalar(-4) == Fraction(-4)
        # t^2 + 2t + 3 at t = -1 is 2
        f = ZT.coerce((3, 2, 1))
        assert PrimeSpec.linear(-1).reduce_scalar(f) == Fraction(2)
        assert PrimeSpec.maximal(3, -1).reduce_scalar(f) == 2
        # t |-> 0 then mod 2
        assert PrimeSpec.maximal(2, 0).reduce_scalar(ZT.coerce((5, 7))) == 1


class TestLatticeBasis:

    def test_standard_and_scalar(self):
        std = LatticeBasis.standard(ZZ, 2)
        assert std.is_standard() and std.canonical
        tripled = LatticeBasis(ZZ, Matrix(QQ, [[3, 0], [0, 3]]))
        assert tripled == ideal_mult(std, [3])
        assert std.index_of(tripled) == 9

    def test_canonical_invariance_under_column_ops(self):
        # same lattice, many bases: canonical form must agree
        rng = XorShift64(11)
        base = Matrix(QQ, [[Fraction(1), Fraction(1, 2)], [0, Fraction(3, 2)]])
        lat = LatticeBasis(ZZ, base)
        for _ in range(60):
            # random unimodular: product of elementary column ops
            u = Matrix.identity(ZZ, 2)
            for _ in range(6):
                i = rng.randrange(2)
                j = 1 - i
                c = rng.randrange(7) - 3
                elem = [[1, 0], [0, 1]]
                elem[i][j] = c
                u = u * Matrix(ZZ, elem)
            other = LatticeBasis(ZZ, base * u.to_fraction_field())
            assert other == lat
            assert other.basis == lat.basis

    def test_containment_and_vectors(self):
        lat = lattice_from_columns(ZZ, [(1, 2), (0, 3)])
        assert lat.contains_vector((1, 2))
        assert lat.contains_vector((1, 5))
        assert not lat.contains_vector((0, 1))
        std = LatticeBasis.standard(ZZ, 2)
        assert std.contains_lattice(lat)
        assert not lat.contains_lattice(std)
        assert std.index_of(lat) == 3

    def test_rank_deficient_span_rejected(self):
        with pytest.raises(ShapeError):
            lattice_from_columns(ZZ, [(1, 2), (2, 4)])

    def test_qt_constant_basis_is_canonical(self):
        b = Matrix(QT, [[1, 0], [0, Fraction(1, 2)]])
        lat = LatticeBasis(ZT, b)
        assert lat.canonical
        # non-constant basis: compare by containment
        t = QT.coerce(((0, 1), (1,)))
        b2 = Matrix.from_columns(QT, [(QT.one(), QT.zero()),
                                      (QT.zero(), t)])
        lat2 = LatticeBasis(ZT, b2)
        assert not lat2.canonical
        assert lat2 == LatticeBasis(ZT, b2 * Matrix(QT, [[1, 1], [0, 1]]))
        assert lat2 != lat


class TestSaturate:

    def test_integral_rep_is_already_saturated(self):
        rep = s3_over(QQ)
        lat, int_rep = saturate(rep)
        assert lat == LatticeBasis.standard(ZZ, 2)
        assert int_rep.ring == ZZ
        assert int_rep.generators == s3_over(ZZ).generators

    def test_scaled_s3_two_rounds(self):
        # conjugating by diag(1, 1/2) hides the integral model; saturation
        # recovers the lattice Z(1,0) + Z(0,1/2) and the standard matrices
        rep = s3_over(QQ)
        c = Matrix(QQ, [[1, 0], [0, Fraction(1, 2)]])
        hidden = conjugate(rep, c)
        lat, int_rep = saturate(hidden)
        assert lat.basis == Matrix(QQ, [[1, 0], [0, Fraction(1, 2)]])
        assert int_rep.generators == s3_over(ZZ).generators

    def test_saturation_idempotent(self):
        rep = s3_over(QQ)
        c = Matrix(QQ, [[Fraction(1, 3), 1], [Fraction(2, 3), Fraction(5)]])
        lat, int_rep = saturate(conjugate(rep, c))
        lat2, int_rep2 = saturate(int_rep)
        assert lat2 == LatticeBasis.standard(ZZ, 2)
        assert int_rep2.generators == int_rep.generators

    def test_budget_exceeded_for_half(self):
        rep = Representation(QQ, [Matrix(QQ, [[Fraction(1, 2)]])], [])
        with pytest.raises(BudgetExceeded):
            saturate(rep)
        # non-unit integer determinant diverges the same way
        rep2 = Representation(QQ, [Matrix(QQ, [[2]])], [])
        with pytest.raises(BudgetExceeded):
            saturate(rep2)

    def test_qt_constant_delegates(self):
        rep = s3_over(QT)
        lat, int_rep = saturate(rep)
        assert int_rep.ring == ZT
        assert lat.basis.is_identity()
        assert evaluate(int_rep, [(0, 1), (0, 1), (0, 1)]).is_identity()

    def test_qt_nonconstant_two_stage(self):
        # conjugate the constant model by diag(1, t): saturation must undo it
        rep = s3_over(QT)
        t = QT.coerce(((0, 1), (1,)))
        c = Matrix.from_columns(QT, [(QT.one(), QT.zero()),
                                     (QT.zero(), t)])
        hidden = conjugate(rep, c.inverse())  # generators pick up t and 1/t
        lat, int_rep = saturate(hidden)
        assert int_rep.ring == ZT
        expected = tuple(g.change_ring(ZT) for g in s3_over(ZZ).generators)
        assert int_rep.generators == expected
        inv_t = QT.div(QT.one(), t)
        assert lat.basis == Matrix.from_columns(
            QT, [(QT.one(), QT.zero()), (QT.zero(), inv_t)])


class TestReduce:

    def test_s3_mod_3_pinned(self):
        rep = s3_over(ZZ)
        lat = LatticeBasis.standard(ZZ, 2)
        red = reduce_rep(rep, lat, PrimeSpec.integer(3))
        F3 = PrimeField(3)
        assert red.ring == F3
        assert red.generators[0] == Matrix(F3, [[0, 2], [1, 2]])
        assert red.generators[1] == Matrix(F3, [[0, 1], [1, 0]])

    def test_zero_prime_is_identity_on_matrices(self):
        rep = s3_over(ZZ)
        lat = LatticeBasis.standard(ZZ, 2)
        red = reduce_rep(rep, lat, PrimeSpec.zero(ZZ))
        assert red.ring == QQ
        words = [[(0, 1)], [(1, 1)], [(0, 1), (1, 1)],
                 [(0, 1), (0, 1), (1, 1)], [(0, -1), (1, 1), (0, 1)]]
        for w in words:
            assert evaluate(red, w).trace() == \
                Fraction(evaluate_trace_z(rep, w))

    def test_constant_zt_tower(self):
        # constant-in-t model over Z[t]: (2, t-0) lands straight in F_2
        rep_zt = Representation(
            ZT, [g.change_ring(ZT) for g in s3_over(ZZ).generators],
            s3_over(ZZ).relations, label="s3t")
        lat = LatticeBasis.standard(ZT, 2)
        red = reduce_rep(rep_zt, lat, PrimeSpec.maximal(2, 0))
        F2 = PrimeField(2)
        assert red.ring == F2
        assert red.generators[0] == Matrix(F2, [[0, 1], [1, 1]])
        mid = reduce_rep(rep_zt, lat, PrimeSpec.linear(0))
        assert mid.ring == QQ
        assert mid.generators[0] == Matrix(QQ, [[0, -1], [1, -1]])

    def test_nonconstant_zt_reduction(self):
        t = ZT.coerce((0, 1))
        g = Matrix(ZT, [[ZT.one(), t], [ZT.zero(), ZT.one()]])
        rep = Representation(ZT, [g], [])
        lat = LatticeBasis.standard(ZT, 2)
        at2 = reduce_rep(rep, lat, PrimeSpec.linear(2))
        assert at2.generators[0] == Matrix(QQ, [[1, 2], [0, 1]])
        at31 = reduce_rep(rep, lat, PrimeSpec.maximal(3, 1))
        assert at31.generators[0] == Matrix(PrimeField(3), [[1, 1], [0, 1]])

    def test_bad_prime_detected(self):
        rep = Representation(ZZ, [Matrix(ZZ, [[5]])], [])
        lat = LatticeBasis.standard(ZZ, 1)
        with pytest.raises(BadPrime):
            reduce_rep(rep, lat, PrimeSpec.integer(5))

    def test_reduce_from_field_conjugates_first(self):
        rep = s3_over(QQ)
        c = Matrix(QQ, [[1, 0], [0, Fraction(1, 2)]])
        hidden = conjugate(rep, c)
        lat, _ = saturate(hidden)
        red = reduce_rep(hidden, lat, PrimeSpec.integer(3))
        assert red.generators[0] == Matrix(PrimeField(3), [[0, 2], [1, 2]])
        bad_lat = LatticeBasis.standard(ZZ, 2)
        with pytest.raises(IntegralityError):
            reduce_rep(hidden, bad_lat, PrimeSpec.integer(3))

    def test_functoriality_random_words(self):
        rep = s3_over(ZZ)
        lat = LatticeBasis.standard(ZZ, 2)
        rng = XorShift64(7)
        words = []
        for _ in range(50):
            words.append([(rng.randrange(2), rng.choice((1, -1)))
                          for _ in range(1 + rng.randrange(5))])
        for p in (2, 3, 5, 7):
            assert reduction_functorial(rep, lat, PrimeSpec.integer(p), words)


def evaluate_trace_z(rep, word):
    m = evaluate(rep, word)
    return m.trace()


class TestIdealMult:

    def test_pinned_examples(self):
        std = LatticeBasis.standard(ZZ, 2)
        assert ideal_mult(std, [2, 3]) == \
            LatticeBasis(ZZ, Matrix(QQ, [[6, 0], [0, 6]]))
        assert ideal_mult(std, [1]) == std
        lat = lattice_from_columns(ZZ, [(1, 1), (0, 2)])
        twelve = ideal_mult(lat, [4, 6])
        assert twelve == LatticeBasis(ZZ, lat.basis.scale(Fraction(12)))

    def test_rejects_zero(self):
        std = LatticeBasis.standard(ZZ, 2)
        with pytest.raises(ValueError):
            ideal_mult(std, [4, 0])
        with pytest.raises(ValueError):
            ideal_mult(std, [])

    def test_matches_exact_intersection(self):
        # (lcm n_i) L == intersection of the n_i L, computed independently
        rng = XorShift64(23)
        for _ in range(12):
            cols = None
            while cols is None:
                cand = [(rng.randrange(9) - 4, rng.randrange(9) - 4)
                        for _ in range(2)]
                try:
                    cols = lattice_from_columns(ZZ, cand).basis
                except ShapeError:
                    cols = None
            lat = LatticeBasis(ZZ, cols)
            ns = [1 + rng.randrange(12) for _ in range(3)]
            scaled = [LatticeBasis(ZZ, lat.basis.scale(Fraction(n)))
                      for n in ns]
            meet = scaled[0]
            for other in scaled[1:]:
                meet = lattice_intersect(meet, other)
            assert meet == ideal_mult(lat, ns)
            assert meet.basis == ideal_mult(lat, ns).basis


class TestSublatticeImage:

    def test_enum_cases(self):
        std = LatticeBasis.standard(ZZ, 2)
        assert proper_sublattice_image(std, std, 5) == IMAGE_FULL
        five = ideal_mult(std, [5])
        assert proper_sublattice_image(five, std, 5) == IMAGE_ZERO
        m = lattice_from_columns(ZZ, [(1, 2), (0, 3)])
        assert proper_sublattice_image(m, std, 3) == IMAGE_PROPER

    def test_image_is_line_span(self):
        # the proper image above is the line through (1, 2) in F_3^2
        m = lattice_from_columns(ZZ, [(1, 2), (0, 3)])
        red = [(int(x) % 3, int(y) % 3)
               for x, y in zip(m.basis.row(0), m.basis.row(1))]
        nonzero = [v for v in red if v != (0, 0)]
        assert nonzero and all(v in ((1, 2), (2, 4 % 3)) for v in nonzero)

    def test_not_sublattice(self):
        std = LatticeBasis.standard(ZZ, 2)
        half = LatticeBasis(ZZ, Matrix(QQ, [[Fraction(1, 2), 0], [0, 1]]))
        with pytest.raises(NotSublattice):
            proper_sublattice_image(half, std, 3)

    def test_prime_spec_argument(self):
        std = LatticeBasis.standard(ZZ, 2)
        m = lattice_from_columns(ZZ, [(1, 2), (0, 3)])
        assert proper_sublattice_image(m, std, PrimeSpec.integer(3)) \
            == IMAGE_PROPER
        with pytest.raises(BadPrime):
            proper_sublattice_image(m, std, 4)
