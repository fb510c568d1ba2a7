"""Exact matrices over a ring descriptor, and the normal-form algorithms.

A Matrix is an immutable row-major tuple of raw scalar values together with
its RingDescriptor.  The module-level algorithms:

    hnf(m)          column-style Hermite normal form over Z with a unimodular
                    transform, m * transform = h (unique canonical form of the
                    column span)
    snf(m)          Smith normal form over Z with both transforms,
                    left * m * right = d and d_1 | d_2 | ...
    rref(m)         reduced row echelon form over a field, with pivot columns
    kernel_basis(m) basis of the right null space over a field
    char_poly(m)    monic characteristic polynomial over a field, computed by
                    Hessenberg reduction plus the standard determinant
                    recurrence (no division by integers, so it is safe in
                    small characteristic, unlike Faddeev-LeVerrier)
    integer_kernel(m)  basis of the integer null space (a saturated Z-module),
                    read off the HNF transform

The HNF/SNF recipes are the classical gcd-driven eliminations (see Cohen,
"A Course in Computational Algebraic Number Theory", ch. 2).
"""

from .errors import IntegralityError, ShapeError, SingularError
from .rings import ZZ


class Matrix:
    """Immutable matrix over a RingDescriptor."""

    __slots__ = ("ring", "nrows", "ncols", "entries")

    def __init__(self, ring, rows):
        data = []
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        for row in rows:
            if len(row) != ncols:
                raise ShapeError("ragged rows")
            for a in row:
                data.append(ring.coerce(a))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "entries", tuple(data))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, ring, nrows, ncols, entries):
        """Internal constructor skipping coercion; entries must be canonical."""
        self = object.__new__(cls)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "entries", tuple(entries))
        return self

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero(), ring.one()
        return cls._raw(ring, n, n,
                        [o if i == j else z for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        z = ring.zero()
        return cls._raw(ring, nrows, ncols, [z] * (nrows * ncols))

    @classmethod
    def from_columns(cls, ring, cols):
        nrows = len(cols[0]) if cols else 0
        return cls(ring, [[cols[j][i] for j in range(len(cols))]
                          for i in range(nrows)])

    def entry(self, i, j):
        return self.entries[i * self.ncols + j]

    def row(self, i):
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def column(self, j):
        return tuple(self.entries[i * self.ncols + j] for i in range(self.nrows))

    def rows(self):
        return [list(self.row(i)) for i in range(self.nrows)]

    def columns(self):
        return [list(self.column(j)) for j in range(self.ncols)]

    def transpose(self):
        return Matrix._raw(self.ring, self.ncols, self.nrows,
                           [self.entry(i, j) for j in range(self.ncols)
                            for i in range(self.nrows)])

    def map_entries(self, fn, ring=None):
        ring = ring if ring is not None else self.ring
        return Matrix._raw(ring, self.nrows, self.ncols,
                           [fn(a) for a in self.entries])

    def change_ring(self, ring):
        return Matrix(ring, self.rows())

    def to_fraction_field(self):
        K = self.ring.fraction_field()
        if K == self.ring:
            return self
        return self.map_entries(self.ring.to_fraction_field, K)

    def from_fraction_field(self, ring):
        """Convert entries back into ring; IntegralityError if any is not."""
        return self.map_entries(ring.from_fraction_field, ring)

    def __add__(self, other):
        self._samesize(other)
        R = self.ring
        return Matrix._raw(R, self.nrows, self.ncols,
                           [R.add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._samesize(other)
        R = self.ring
        return Matrix._raw(R, self.nrows, self.ncols,
                           [R.sub(a, b) for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        R = self.ring
        return Matrix._raw(R, self.nrows, self.ncols,
                           [R.neg(a) for a in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows or self.ring != other.ring:
            raise ShapeError("cannot multiply %dx%d by %dx%d"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        R = self.ring
        n, m, k = self.nrows, self.ncols, other.ncols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            for j in range(k):
                acc = R.zero()
                for l in range(m):
                    x = arow[l]
                    if not R.is_zero(x):
                        acc = R.add(acc, R.mul(x, b[l * k + j]))
                out.append(acc)
        return Matrix._raw(R, n, k, out)

    def __pow__(self, e):
        if self.nrows != self.ncols:
            raise ShapeError("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.ring, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        R = self.ring
        c = R.coerce(c)
        return self.map_entries(lambda a: R.mul(c, a))

    def apply(self, vec):
        """Matrix times column vector (a sequence of scalars)."""
        if len(vec) != self.ncols:
            raise ShapeError("vector length mismatch")
        R = self.ring
        out = []
        for i in range(self.nrows):
            acc = R.zero()
            row = self.row(i)
            for a, v in zip(row, vec):
                if not R.is_zero(a):
                    acc = R.add(acc, R.mul(a, v))
            out.append(acc)
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ring == other.ring
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.entries == other.entries)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.entries))

    def is_identity(self):
        R = self.ring
        if self.nrows != self.ncols:
            return False
        return all(R.is_one(a) if i == j else R.is_zero(a)
                   for i in range(self.nrows)
                   for j, a in enumerate(self.row(i)))

    def is_zero(self):
        R = self.ring
        return all(R.is_zero(a) for a in self.entries)

    def trace(self):
        if self.nrows != self.ncols:
            raise ShapeError("trace of a non-square matrix")
        R = self.ring
        acc = R.zero()
        for i in range(self.nrows):
            acc = R.add(acc, self.entry(i, i))
        return acc

    def det(self):
        """Exact determinant, as an element of the matrix's own ring."""
        if self.nrows != self.ncols:
            raise ShapeError("determinant of a non-square matrix")
        R = self.ring
        if R.is_field:
            return _det_field(self)
        if R == ZZ:
            return _det_bareiss(self.rows())
        return R.from_fraction_field(_det_field(self.to_fraction_field()))

    def inverse(self):
        """Inverse over the fraction field; converted back into the base ring
        when all entries happen to lie there."""
        if self.nrows != self.ncols:
            raise ShapeError("inverse of a non-square matrix")
        R = self.ring
        inv = _inverse_field(self.to_fraction_field())
        if R.is_field:
            return inv
        try:
            return inv.from_fraction_field(R)
        except IntegralityError:
            return inv

    def __repr__(self):
        R = self.ring
        rows = ["[" + ", ".join(R.format(a) for a in self.row(i)) + "]"
                for i in range(self.nrows)]
        return "Matrix(%r, [%s])" % (R, ", ".join(rows))

    def _samesize(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) \
                or self.ring != other.ring:
            raise ShapeError("size or ring mismatch")


def kronecker(a, b):
    """Kronecker product a (x) b over a common ring."""
    if a.ring != b.ring:
        raise ShapeError("ring mismatch")
    R = a.ring
    out = []
    for i in range(a.nrows):
        for k in range(b.nrows):
            for j in range(a.ncols):
                x = a.entry(i, j)
                for l in range(b.ncols):
                    out.append(R.mul(x, b.entry(k, l)))
    return Matrix._raw(R, a.nrows * b.nrows, a.ncols * b.ncols, out)


def poly_at_matrix(K, coeffs, m):
    """Evaluate a polynomial (ascending coefficient tuple over K) at a square
    matrix over K, by Horner."""
    n = m.nrows
    acc = Matrix.zeros(K, n, n)
    ident = Matrix.identity(K, n)
    for c in reversed(coeffs):
        acc = acc * m + ident.scale(c)
    return acc


# ---------------------------------------------------------------------------
# field algorithms


def rref(m):
    """Reduced row echelon form over a field: returns (R, pivot_columns)."""
    K = m.ring
    if not K.is_field:
        raise IntegralityError("rref requires field entries")
    rows = m.rows()
    nr, nc = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if not K.is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = K.inv(rows[r][c])
        rows[r] = [K.mul(inv, a) for a in rows[r]]
        for i in range(nr):
            if i != r and not K.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [K.sub(a, K.mul(f, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return Matrix(K, rows) if nr else m, tuple(pivots)


def rank(m):
    return len(rref(m)[1])


def kernel_basis(m):
    """Basis of {v : m v = 0} over a field, one vector per free column,
    in column order (a canonical echelon-style basis)."""
    K = m.ring
    red, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivset:
            continue
        v = [K.zero()] * m.ncols
        v[free] = K.one()
        for r, pc in enumerate(pivots):
            v[pc] = K.neg(red.entry(r, free))
        basis.append(tuple(v))
    return basis


def _det_field(m):
    K = m.ring
    rows = m.rows()
    n = m.nrows
    det = K.one()
    for c in range(n):
        piv = None
        for i in range(c, n):
            if not K.is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            return K.zero()
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = K.neg(det)
        det = K.mul(det, rows[c][c])
        inv = K.inv(rows[c][c])
        for i in range(c + 1, n):
            if not K.is_zero(rows[i][c]):
                f = K.mul(rows[i][c], inv)
                rows[i] = [K.sub(a, K.mul(f, b)) for a, b in zip(rows[i], rows[c])]
    return det


def _inverse_field(m):
    K = m.ring
    n = m.nrows
    rows = [list(m.row(i)) + [K.one() if i == j else K.zero() for j in range(n)]
            for i in range(n)]
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, n):
            if not K.is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            raise SingularError("matrix is singular")
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = K.inv(rows[r][c])
        rows[r] = [K.mul(inv, a) for a in rows[r]]
        for i in range(n):
            if i != r and not K.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [K.sub(a, K.mul(f, b)) for a, b in zip(rows[i], rows[r])]
        r += 1
    return Matrix(K, [row[n:] for row in rows])


def _det_bareiss(rows):
    """Fraction-free determinant of an integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = None
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    piv = i
                    break
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def char_poly(m):
    """Monic characteristic polynomial det(xI - m) over a field, as an
    ascending coefficient tuple.  Hessenberg reduction keeps every division
    a genuine field division, so this works in any characteristic."""
    K = m.ring
    if not K.is_field:
        raise IntegralityError("char_poly requires field entries; "
                               "map to the fraction field first")
    if m.nrows != m.ncols:
        raise ShapeError("char_poly of a non-square matrix")
    n = m.nrows
    h = m.rows()
    for j in range(n - 2):
        piv = None
        for i in range(j + 1, n):
            if not K.is_zero(h[i][j]):
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            h[j + 1], h[piv] = h[piv], h[j + 1]
            for i in range(n):
                h[i][j + 1], h[i][piv] = h[i][piv], h[i][j + 1]
        inv = K.inv(h[j + 1][j])
        for i in range(j + 2, n):
            if K.is_zero(h[i][j]):
                continue
            f = K.mul(h[i][j], inv)
            h[i] = [K.sub(a, K.mul(f, b)) for a, b in zip(h[i], h[j + 1])]
            for r in range(n):
                h[r][j + 1] = K.add(h[r][j + 1], K.mul(f, h[r][i]))
    # Leading-minor recurrence for Hessenberg h (checked by hand at 2x2, 3x3):
    # p_k = (x - h[k-1][k-1]) p_{k-1}
    #       - sum_{i=0}^{k-2} h[i][k-1] (prod_{j=i+1}^{k-1} h[j][j-1]) p_i
    zero = K.zero()
    one = K.one()
    polys = [(one,)]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        diag = h[k - 1][k - 1]
        cur = [zero] * (len(prev) + 1)
        for idx, c in enumerate(prev):
            cur[idx + 1] = K.add(cur[idx + 1], c)
            cur[idx] = K.sub(cur[idx], K.mul(diag, c))
        run = one
        for i in range(k - 2, -1, -1):
            run = K.mul(run, h[i + 1][i])
            if K.is_zero(run):
                break
            coeff = K.mul(h[i][k - 1], run)
            if not K.is_zero(coeff):
                for idx, c in enumerate(polys[i]):
                    cur[idx] = K.sub(cur[idx], K.mul(coeff, c))
        polys.append(tuple(cur))
    return polys[n]


# ---------------------------------------------------------------------------
# integer normal forms


def _check_integer_matrix(m):
    if m.ring != ZZ:
        raise IntegralityError("expected a matrix over Z, got %r" % (m.ring,))


def _row_hnf(rows, ncols):
    """Row-style HNF of an integer matrix given as lists; returns (H, U, rank)
    with U unimodular, U * A = H, pivots positive, entries above each pivot
    reduced into [0, pivot)."""
    m = len(rows)
    a = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                piv = None
                break
            if len(nz) == 1:
                piv = nz[0]
                break
            i0 = min(nz, key=lambda i: abs(a[i][c]))
            for i in nz:
                if i == i0:
                    continue
                q = a[i][c] // a[i0][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[i0])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[i0])]
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            u[r], u[piv] = u[piv], u[r]
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return a, u, r


def hnf(m):
    """Column-style Hermite normal form over Z.

    Returns (h, transform) with transform unimodular and m * transform = h;
    h is the unique canonical basis matrix of the column span (nonzero columns
    first, positive pivots descending the rows, entries to the left of each
    pivot reduced mod the pivot).  Zero columns are pushed to the right."""
    _check_integer_matrix(m)
    at = [list(m.column(j)) for j in range(m.ncols)]
    h_rows, u, _ = _row_hnf(at, m.nrows)
    h = Matrix(ZZ, [[h_rows[j][i] for j in range(m.ncols)]
                    for i in range(m.nrows)])
    transform = Matrix(ZZ, [[u[j][i] for j in range(m.ncols)]
                            for i in range(m.ncols)])
    return h, transform


def integer_kernel(m):
    """Basis of {v in Z^ncols : m v = 0}, a saturated submodule, as the HNF
    transform columns that map onto zero columns of the HNF."""
    _check_integer_matrix(m)
    h, transform = hnf(m)
    basis = []
    for j in range(m.ncols):
        if all(h.entry(i, j) == 0 for i in range(m.nrows)):
            basis.append(transform.column(j))
    return basis


def snf(m):
    """Smith normal form over Z: returns (d, left, right) with
    left * m * right = d diagonal and d_1 | d_2 | ... (nonnegative)."""
    _check_integer_matrix(m)
    nr, nc = m.nrows, m.ncols
    a = m.rows()
    left = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    right = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def rowop(i, k, q):
        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        left[i] = [x - q * y for x, y in zip(left[i], left[k])]

    def colop(j, k, q):
        for row in a:
            row[j] -= q * row[k]
        for row in right:
            row[j] -= q * row[k]

    def rowswap(i, k):
        a[i], a[k] = a[k], a[i]
        left[i], left[k] = left[k], left[i]

    def colswap(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in right:
            row[j], row[k] = row[k], row[j]

    t = 0
    while t < min(nr, nc):
        # find a nonzero pivot in the trailing submatrix
        piv = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            rowswap(t, piv[0])
        if piv[1] != t:
            colswap(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    rowop(i, t, q)
                    if a[i][t]:
                        rowswap(i, t)
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    colop(j, t, q)
                    if a[t][j]:
                        colswap(j, t)
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the trailing block by the pivot
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            rowop(t, offender, -1)  # add offender row to pivot row
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        t += 1
    return Matrix(ZZ, a), Matrix(ZZ, left), Matrix(ZZ, right)
