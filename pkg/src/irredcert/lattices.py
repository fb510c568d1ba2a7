"""G-stable free lattices, prime ideals of Z and Z[t], and reduction.

A LatticeBasis is a full-rank free lattice L = B * R^d inside K^d, stored as
the d x d basis matrix B over K = frac(R).  Over Z there is a unique canonical
form: write B = H / D with D the least positive common denominator and H the
column-style HNF of D*B, normalized so gcd(content(H), D) = 1; two bases span
the same lattice iff their canonical forms coincide.  Over Z[t] only constant
bases get a canonical form; general bases compare by mutual containment.

A PrimeSpec names a prime of the base ring from the supported menu:

    (0)        the zero ideal             residue field  frac(R)
    (p)        p prime, ring Z            residue field  F_p
    (t-c)      c integer, ring Z[t]       residue field  Q
    (p, t-c)   maximal ideal of Z[t]      residue field  F_p

The principal primes (p) of Z[t] are deliberately not offered: reducing at
(p, t-c) reaches a finite field in one step, with the localization still a
regular local ring, so nothing is gained by stopping at F_p(t).

saturate() finds a G-stable lattice for a representation over Q or Q(t) and
rewrites the action integrally over Z or Z[t]; reduce_rep() applies the
residue map of a PrimeSpec entrywise in a lattice basis.
"""

import math
from fractions import Fraction

from . import polys
from .errors import (BadPrime, BudgetExceeded, IntegralityError, NotSublattice,
                     ShapeError)
from .matrices import Matrix, hnf, integer_kernel, rank
from .rings import (ZZ, QQ, PolynomialRingZ, PrimeField, RationalFunctionField,
                    is_prime)
from .reps import Representation, evaluate

# image classification returned by proper_sublattice_image
IMAGE_ZERO = "zero"
IMAGE_PROPER = "proper_nonzero"
IMAGE_FULL = "full"


class PrimeSpec:
    """A prime ideal of Z or Z[t] from the supported menu, with its residue
    field and entrywise residue map."""

    __slots__ = ("ring", "kind", "p", "c")

    ZERO = "zero"
    INTEGER = "integer"
    LINEAR = "linear"
    MAXIMAL = "maximal"

    def __init__(self, ring, kind, p=None, c=None):
        if kind == self.ZERO:
            if ring not in (ZZ,) and not isinstance(ring, PolynomialRingZ):
                raise BadPrime("the zero prime needs base ring Z or Z[t]")
        elif kind == self.INTEGER:
            if ring != ZZ:
                raise BadPrime("(p) primes live in Z")
            if not is_prime(p):
                raise BadPrime("%r is not prime" % (p,))
        elif kind == self.LINEAR:
            if not isinstance(ring, PolynomialRingZ):
                raise BadPrime("(t-c) primes live in Z[t]")
            c = int(c)
        elif kind == self.MAXIMAL:
            if not isinstance(ring, PolynomialRingZ):
                raise BadPrime("(p, t-c) primes live in Z[t]")
            if not is_prime(p):
                raise BadPrime("%r is not prime" % (p,))
            c = int(c)
        else:
            raise BadPrime("unknown prime kind %r" % (kind,))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeSpec is immutable")

    @classmethod
    def zero(cls, ring):
        return cls(ring, cls.ZERO)

    @classmethod
    def integer(cls, p):
        return cls(ZZ, cls.INTEGER, p=p)

    @classmethod
    def linear(cls, c, ring=None):
        return cls(ring or PolynomialRingZ("t"), cls.LINEAR, c=c)

    @classmethod
    def maximal(cls, p, c, ring=None):
        return cls(ring or PolynomialRingZ("t"), cls.MAXIMAL, p=p, c=c)

    def residue_ring(self):
        if self.kind == self.ZERO:
            return self.ring.fraction_field()
        if self.kind == self.INTEGER or self.kind == self.MAXIMAL:
            return PrimeField(self.p)
        return QQ

    def reduce_scalar(self, a):
        """Apply the residue map to a base-ring element."""
        if self.kind == self.ZERO:
            return self.ring.to_fraction_field(a)
        if self.kind == self.INTEGER:
            return a % self.p
        value = self.ring.evaluate(a, self.c)  # t -> c, an integer
        if self.kind == self.LINEAR:
            return Fraction(value)
        return value % self.p

    def _linear_str(self):
        var = self.ring.var
        return "%s-%d" % (var, self.c) if self.c >= 0 \
            else "%s+%d" % (var, -self.c)

    def __str__(self):
        if self.kind == self.ZERO:
            return "(0)"
        if self.kind == self.INTEGER:
            return "(%d)" % (self.p,)
        if self.kind == self.LINEAR:
            return "(%s)" % (self._linear_str(),)
        return "(%d,%s)" % (self.p, self._linear_str())

    @classmethod
    def parse(cls, text, ring):
        """Inverse of str(): "(0)", "(5)", "(t-3)", "(t+3)", "(2,t-0)"."""
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise BadPrime("prime %r is not parenthesized" % (text,))
        body = s[1:-1].strip()
        parts = [p.strip() for p in body.split(",")]

        def parse_linear(part):
            var = ring.var
            if part == var:
                return 0
            for sep, sign in (("-", 1), ("+", -1)):
                head, mid, tail = part.partition(sep)
                if mid and head.strip() == var:
                    try:
                        return sign * int(tail.strip())
                    except ValueError:
                        break
            raise BadPrime("cannot parse linear prime part %r" % (part,))

        if len(parts) == 1:
            part = parts[0]
            if part == "0":
                return cls.zero(ring)
            try:
                p = int(part)
            except ValueError:
                p = None
            if p is not None:
                if ring == ZZ:
                    return cls.integer(p)
                raise BadPrime("principal primes (p) of Z[t] are not supported; "
                               "use (p, t-c)")
            if not isinstance(ring, PolynomialRingZ):
                raise BadPrime("prime %r needs base ring Z[t]" % (text,))
            return cls.linear(parse_linear(part), ring)
        if len(parts) == 2:
            if not isinstance(ring, PolynomialRingZ):
                raise BadPrime("prime %r needs base ring Z[t]" % (text,))
            return cls.maximal(int(parts[0]), parse_linear(parts[1]), ring)
        raise BadPrime("cannot parse prime %r" % (text,))

    def __eq__(self, other):
        return (isinstance(other, PrimeSpec) and self.ring == other.ring
                and self.kind == other.kind and self.p == other.p
                and self.c == other.c)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.ring, self.kind, self.p, self.c))

    def __repr__(self):
        return "PrimeSpec(%s of %r)" % (self, self.ring)


# ---------------------------------------------------------------------------
# lattices


def _denominator_lcm_q(m):
    d = 1
    for a in m.entries:
        d = d * a.denominator // math.gcd(d, a.denominator)
    return d


def _canonical_pair_z(m):
    """For a full-rank matrix over Q, the canonical (H, D) with lattice
    span(m) = span(H)/D, H in HNF, gcd(content(H), D) = 1."""
    d = _denominator_lcm_q(m)
    ints = m.map_entries(lambda a: int(a * d), ZZ)
    h, _ = hnf(ints)
    content = 0
    for a in h.entries:
        content = math.gcd(content, a)
    g = math.gcd(content, d)
    if g > 1:
        h = h.map_entries(lambda a: a // g, ZZ)
        d //= g
    return h, d


class LatticeBasis:
    """Free rank-d lattice in K^d given by an invertible basis matrix over K."""

    __slots__ = ("ring", "basis", "canonical")

    def __init__(self, ring, basis, canonicalize=True):
        if ring != ZZ and not isinstance(ring, PolynomialRingZ):
            raise ValueError("lattice base ring must be Z or Z[t]")
        K = ring.fraction_field()
        if not isinstance(basis, Matrix):
            basis = Matrix(K, basis)
        if basis.ring == ring:
            basis = basis.to_fraction_field()
        if basis.ring != K:
            basis = basis.change_ring(K)
        if basis.nrows != basis.ncols:
            raise ShapeError("lattice basis must be square")
        if K.is_zero(basis.det()):
            raise ShapeError("lattice basis must be invertible over %r" % (K,))
        canonical = False
        if canonicalize:
            if ring == ZZ:
                h, d = _canonical_pair_z(basis)
                basis = h.map_entries(lambda a: Fraction(a, d), QQ)
                canonical = True
            else:
                const = _constant_q_matrix(basis)
                if const is not None:
                    h, d = _canonical_pair_z(const)
                    K = ring.fraction_field()
                    basis = h.map_entries(
                        lambda a: K.coerce(Fraction(a, d)), K)
                    canonical = True
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "canonical", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("LatticeBasis is immutable")

    @classmethod
    def standard(cls, ring, d):
        K = ring.fraction_field()
        return cls(ring, Matrix.identity(K, d))

    @property
    def dim(self):
        return self.basis.nrows

    def is_standard(self):
        return self.basis.is_identity()

    def coordinates(self, other_basis):
        """Matrix C over K with self.basis * C = other_basis."""
        return self.basis.inverse() * other_basis

    def contains_vector(self, v):
        y = self.basis.inverse().apply(tuple(v))
        try:
            for a in y:
                self.ring.from_fraction_field(a)
        except IntegralityError:
            return False
        return True

    def contains_lattice(self, other):
        c = self.coordinates(other.basis)
        try:
            c.from_fraction_field(self.ring)
        except IntegralityError:
            return False
        return True

    def index_of(self, sub):
        """[L : M] for a full-rank sublattice M, as a positive integer (Z)."""
        c = self.coordinates(sub.basis).from_fraction_field(self.ring)
        det = c.det()
        if self.ring == ZZ:
            return abs(det)
        return det

    def __eq__(self, other):
        if not isinstance(other, LatticeBasis) or self.ring != other.ring:
            return False
        if self.canonical and other.canonical:
            return self.basis == other.basis
        return self.contains_lattice(other) and other.contains_lattice(self)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if not self.canonical:
            raise TypeError("only canonical lattice bases hash")
        return hash((self.ring, self.basis))

    def __repr__(self):
        return "LatticeBasis(%r, %r)" % (self.ring, self.basis)


def _constant_q_matrix(m):
    """If every entry of a Q(t) matrix is constant, the matrix over Q; else None."""
    K = m.ring
    if K == QQ:
        return m
    if not isinstance(K, RationalFunctionField):
        return None
    out = []
    for a in m.entries:
        if not K.is_constant(a):
            return None
        out.append(K.as_constant(a))
    return Matrix._raw(QQ, m.nrows, m.ncols, out)


def lattice_from_columns(ring, columns):
    """Canonical full-rank lattice spanned by the given K-vectors (Z only)."""
    if ring != ZZ:
        raise ValueError("column spans are canonicalized over Z only")
    d = len(columns[0])
    m = Matrix(QQ, [[Fraction(columns[j][i]) for j in range(len(columns))]
                    for i in range(d)])
    den = _denominator_lcm_q(m)
    ints = m.map_entries(lambda a: int(a * den), ZZ)
    h, _ = hnf(ints)
    cols = [h.column(j) for j in range(h.ncols)
            if any(x != 0 for x in h.column(j))]
    if len(cols) != d:
        raise ShapeError("columns span a rank-%d sublattice, need rank %d"
                         % (len(cols), d))
    basis = Matrix(QQ, [[Fraction(cols[j][i], den) for j in range(d)]
                        for i in range(d)])
    return LatticeBasis(ZZ, basis)


def ideal_mult(lat, ideals):
    """The lattice (n_1) cap ... cap (n_k) * L = lcm(n_i) * L over Z."""
    if lat.ring != ZZ:
        raise ValueError("ideal_mult is defined over Z")
    ns = list(ideals)
    if not ns or any(n == 0 for n in ns):
        raise ValueError("ideals must be nonzero integers")
    scale = 1
    for n in ns:
        scale = scale * abs(n) // math.gcd(scale, abs(n))
    return LatticeBasis(ZZ, lat.basis.scale(Fraction(scale)))


def lattice_intersect(a, b):
    """Exact intersection of two full-rank lattices over Z, via the integer
    kernel of [A | -B] read off the HNF transform."""
    if a.ring != ZZ or b.ring != ZZ:
        raise ValueError("lattice_intersect is defined over Z")
    d = a.dim
    den = 1
    for m in (a.basis, b.basis):
        den = den * _denominator_lcm_q(m) // math.gcd(den, _denominator_lcm_q(m))
    A = a.basis.map_entries(lambda x: int(x * den), ZZ)
    B = b.basis.map_entries(lambda x: int(x * den), ZZ)
    stacked = Matrix(ZZ, [list(A.row(i)) + [-x for x in B.row(i)]
                          for i in range(d)])
    kernel = integer_kernel(stacked)
    columns = []
    for v in kernel:
        columns.append(tuple(Fraction(x, den) for x in A.apply(v[:d])))
    return lattice_from_columns(ZZ, columns)


def proper_sublattice_image(sub, ambient, prime):
    """Classify the image of a full-rank sublattice M inside L/pL.

    Returns IMAGE_ZERO (M inside pL), IMAGE_FULL (M + pL = L), or
    IMAGE_PROPER.  Raises NotSublattice when M is not contained in L."""
    if isinstance(prime, PrimeSpec):
        if prime.kind != PrimeSpec.INTEGER:
            raise BadPrime("sublattice images are classified at integer primes")
        p = prime.p
    else:
        p = int(prime)
        if not is_prime(p):
            raise BadPrime("%r is not prime" % (p,))
    c = ambient.coordinates(sub.basis)
    try:
        c = c.from_fraction_field(ZZ)
    except IntegralityError:
        raise NotSublattice("claimed sublattice is not contained in the "
                            "ambient lattice") from None
    F = PrimeField(p)
    cbar = c.map_entries(lambda a: a % p, F)
    r = rank(cbar)
    if r == 0:
        return IMAGE_ZERO
    if r == sub.dim:
        return IMAGE_FULL
    return IMAGE_PROPER


# ---------------------------------------------------------------------------
# saturation


def _span_step_z(basis, gens):
    """One saturation round over Z: canonical basis of L + sum g L."""
    cols = [basis.column(j) for j in range(basis.ncols)]
    for g in gens:
        prod = g * basis
        cols.extend(prod.column(j) for j in range(prod.ncols))
    return lattice_from_columns(ZZ, cols)


def _saturate_q(rep, budget):
    gens = []
    for i, g in enumerate(rep.generators):
        gens.append(g.to_fraction_field())
        gens.append(rep.generator_inverse(i).to_fraction_field())
    lat = LatticeBasis.standard(ZZ, rep.dim)
    for _ in range(budget):
        new = _span_step_z(lat.basis, gens)
        if new == lat:
            b = lat.basis
            binv = b.inverse()
            ints = []
            for g in rep.generators:
                h = binv * g.to_fraction_field() * b
                ints.append(h.from_fraction_field(ZZ))
            int_rep = Representation(ZZ, ints, rep.relations, label=rep.label)
            return lat, int_rep
        lat = new
    raise BudgetExceeded(
        "lattice chain did not stabilize in %d rounds; the generated group "
        "probably stabilizes no lattice (infinite image or non-unit "
        "determinants)" % (budget,))


def _qt_column_hnf(cols):
    """Column HNF over Q[t] of a list of Fraction-tuple columns; pivots monic,
    entries left of a pivot reduced to lower degree.  Returns the canonical
    nonzero columns, pivot rows first ordering preserved."""
    cols = [list(col) for col in cols]
    nrows = len(cols[0]) if cols else 0
    r = 0
    for i in range(nrows):
        while True:
            nz = [j for j in range(r, len(cols)) if cols[j][i]]
            if not nz:
                piv = None
                break
            if len(nz) == 1:
                piv = nz[0]
                break
            j0 = min(nz, key=lambda j: len(cols[j][i]))
            for j in nz:
                if j == j0:
                    continue
                q, _ = polys.divmod_poly(QQ, cols[j][i], cols[j0][i])
                if q:
                    cols[j] = [polys.sub(QQ, a, polys.mul(QQ, q, b))
                               for a, b in zip(cols[j], cols[j0])]
        if piv is None:
            continue
        cols[r], cols[piv] = cols[piv], cols[r]
        lead = cols[r][i][-1]
        if lead != 1:
            inv = 1 / lead
            cols[r] = [polys.scale(QQ, inv, a) for a in cols[r]]
        for j in range(r):
            q, _ = polys.divmod_poly(QQ, cols[j][i], cols[r][i])
            if q:
                cols[j] = [polys.sub(QQ, a, polys.mul(QQ, q, b))
                           for a, b in zip(cols[j], cols[r])]
        r += 1
    return [tuple(col) for col in cols[:r]]


def _saturate_qt(rep, budget):
    """Saturation over Q(t), in two stages.

    Stage 1 works over the PID Q[t]: grow the Q[t]-span of the standard basis
    under all generators and inverses, canonicalizing by column HNF over Q[t]
    after clearing a global denominator, until the chain stabilizes.  The
    stabilized basis T conjugates every generator into GL_d(Q[t]).

    Stage 2 restores Z-integrality with a constant basis change: the matrices
    T^-1 g T have polynomial entries, and a constant S works iff S^-1 A_j S is
    integral for every coefficient matrix A_j of every T^-1 g T.  So the
    standard Z-lattice is grown under all those coefficient matrices until
    stable.  If either chain fails to stabilize the input has no reachable
    integral model and BudgetExceeded propagates."""
    K = rep.ring
    ZT = PolynomialRingZ(K.var)
    d = rep.dim
    gens = []
    for i, g in enumerate(rep.generators):
        gens.append(g)
        gens.append(rep.generator_inverse(i))

    def canonical_qt(columns):
        # columns: QT values; clear one global monic denominator, HNF, then
        # strip the common polynomial content into the denominator
        den = (Fraction(1),)
        for col in columns:
            for a in col:
                g = polys.gcd_monic(QQ, den, a[1])
                den = polys.divmod_poly(QQ, polys.mul(QQ, den, a[1]), g)[0]
        cleared = []
        for col in columns:
            vec = []
            for a in col:
                q, rem = polys.divmod_poly(QQ, polys.mul(QQ, a[0], den), a[1])
                assert not rem
                vec.append(q)
            cleared.append(vec)
        h = _qt_column_hnf(cleared)
        content = ()
        for col in h:
            for a in col:
                content = polys.gcd_monic(QQ, content, a)
        g = polys.gcd_monic(QQ, content, den)
        if polys.degree(g) > 0:
            h = [tuple(polys.divmod_poly(QQ, a, g)[0] for a in col) for col in h]
            den = polys.divmod_poly(QQ, den, g)[0]
        return tuple(tuple(col) for col in h), tuple(den)

    def to_qt_matrix(h, den):
        cols = [[K._normalize(list(a), list(den)) for a in col] for col in h]
        return Matrix.from_columns(K, cols)

    ident = [tuple((Fraction(1),) if i == j else () for i in range(d))
             for j in range(d)]
    current = (tuple(ident), (Fraction(1),))
    for _ in range(budget):
        basis_m = to_qt_matrix(*current)
        columns = [basis_m.column(j) for j in range(d)]
        stacked = list(columns)
        for g in gens:
            prod = g * basis_m
            stacked.extend(prod.column(j) for j in range(d))
        new = canonical_qt(stacked)
        if len(new[0]) != d:
            raise ShapeError("saturation lost rank; generators not invertible?")
        if new == current:
            break
        current = new
    else:
        raise BudgetExceeded("Q[t]-lattice chain did not stabilize in %d rounds"
                             % (budget,))

    T = to_qt_matrix(*current)
    Tinv = T.inverse()
    taus = []
    for g in gens:
        h = Tinv * g * T
        for a in h.entries:
            if len(a[1]) != 1:
                raise BudgetExceeded("stabilized Q[t]-basis failed to clear "
                                     "denominators (unexpected)")
        taus.append(h)

    # stage 2: coefficient matrices of every tau, acting on Q^d
    coeff_maps = []
    for h in taus:
        maxdeg = max(len(a[0]) for a in h.entries)
        for j in range(maxdeg):
            rows = []
            for i in range(d):
                row = []
                for l in range(d):
                    num = h.entry(i, l)[0]
                    row.append(num[j] if j < len(num) else Fraction(0))
                rows.append(row)
            m = Matrix(QQ, rows)
            if not m.is_zero():
                coeff_maps.append(m)

    lat = LatticeBasis.standard(ZZ, d)
    for _ in range(budget):
        new = _span_step_z(lat.basis, coeff_maps)
        if new == lat:
            break
        lat = new
    else:
        raise BudgetExceeded("coefficient lattice did not stabilize in %d "
                             "rounds; no Z[t]-integral model with a constant "
                             "basis change was found" % (budget,))

    S = lat.basis.map_entries(lambda a: K.coerce(a), K)
    B = T * S
    Binv = B.inverse()
    ints = []
    for g in rep.generators:
        h = Binv * g * B
        ints.append(h.from_fraction_field(ZT))
    int_rep = Representation(ZT, ints, rep.relations, label=rep.label)
    return LatticeBasis(ZT, B), int_rep


def saturate(rep, budget=64):
    """Find a G-stable free lattice for a representation over Q or Q(t).

    Returns (lat, int_rep): int_rep acts integrally (over Z or Z[t]) in the
    lattice basis and is conjugate to rep over the field.  The lattice chain
    L + sum_g g L grows from the standard lattice; for a finite matrix group
    it stabilizes within the orbit length, and the budget (default 64 rounds)
    converts divergence into BudgetExceeded."""
    K = rep.ring
    if K == QQ:
        return _saturate_q(rep, budget)
    if isinstance(K, RationalFunctionField):
        const_gens = [_constant_q_matrix(g) for g in rep.generators]
        if all(m is not None for m in const_gens):
            qrep = Representation(QQ, const_gens, rep.relations, label=rep.label)
            lat_q, int_q = _saturate_q(qrep, budget)
            ZT = PolynomialRingZ(K.var)
            basis = lat_q.basis.map_entries(lambda a: K.coerce(a), K)
            ints = [g.change_ring(ZT) for g in int_q.generators]
            return (LatticeBasis(ZT, basis),
                    Representation(ZT, ints, rep.relations, label=rep.label))
        return _saturate_qt(rep, budget)
    if K == ZZ or isinstance(K, PolynomialRingZ):
        lifted = Representation(K.fraction_field(),
                                [g.to_fraction_field() for g in rep.generators],
                                rep.relations, label=rep.label)
        return saturate(lifted, budget)
    raise ValueError("saturate expects a representation over Q or Q(t)")


def reduce_rep(int_rep, lat, prime):
    """Reduce a representation modulo a PrimeSpec, in the given lattice basis.

    int_rep must act integrally: either its ring is already the prime's base
    ring R (the generators are the matrices in lattice coordinates), or it is
    over frac(R) and conjugating by the lattice basis makes it R-integral.
    The zero prime returns the representation over frac(R).  BadPrime is
    raised when some generator determinant dies in the residue field."""
    R = prime.ring
    K = R.fraction_field()
    gens = int_rep.generators
    if int_rep.ring == R:
        mats = list(gens)
    elif int_rep.ring == K:
        binv = lat.basis.inverse()
        mats = []
        for g in gens:
            h = binv * g * lat.basis
            try:
                mats.append(h.from_fraction_field(R))
            except IntegralityError:
                raise IntegralityError(
                    "representation is not integral in the lattice basis; "
                    "run saturate first") from None
    else:
        raise ValueError("reduce_rep needs a representation over %r or %r"
                         % (R, K))
    k = prime.residue_ring()
    if prime.kind == PrimeSpec.ZERO:
        out = [m.to_fraction_field() if m.ring != k else m for m in mats]
        return Representation(k, out, int_rep.relations, label=int_rep.label)
    reduced = []
    for m in mats:
        if m.ring != R:
            m = m.change_ring(R)
        rm = m.map_entries(prime.reduce_scalar, k)
        if k.is_zero(rm.det()):
            raise BadPrime("generator determinant vanishes at %s" % (prime,))
        reduced.append(rm)
    label = "%s mod %s" % (int_rep.label, prime) if int_rep.label else ""
    return Representation(k, reduced, int_rep.relations, label=label)


def reduction_functorial(int_rep, lat, prime, words, reduced=None):
    """Check evaluate(reduce(w)) = reduce(evaluate(w)) for the given words;
    returns True when every word commutes with reduction."""
    red = reduced if reduced is not None else reduce_rep(int_rep, lat, prime)
    for w in words:
        lhs = evaluate(red, w)
        mid = evaluate(int_rep, w)
        if mid.ring != prime.ring:
            return False  # word left the ring; cannot compare
        rhs = mid.map_entries(prime.reduce_scalar, red.ring)
        if lhs != rhs:
            return False
    return True
