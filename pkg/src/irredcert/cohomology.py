"""Group cohomology of finite matrix groups and the obstruction report.

A representation over a finite field generates a finite matrix group; close
it into a multiplication table, then compute H^0, H^1, H^2 with coefficients
in any module for the same generators via the inhomogeneous bar complex.
Cochains in degree q are functions G^q -> M and the differential is

    (d f)(g_1, ..., g_{q+1}) = g_1 . f(g_2, ..., g_{q+1})
        + sum_{i=1..q} (-1)^i f(g_1, ..., g_i g_{i+1}, ..., g_{q+1})
        + (-1)^{q+1} f(g_1, ..., g_q)

so dim H^q = dim ker d^q - rank d^{q-1}.  Over a prime field the
differentials are assembled as numpy integer matrices and ranked by modular
Gaussian elimination; other coefficient fields take a slow exact fallback.

The obstruction report packages the deformation-theoretic numbers for the
adjoint module: d_i = dim H^i(G, ad), the commutant dimension, the
unobstructedness verdict (d_2 = 0), the power-series shape of the universal
deformation ring it predicts, and, when the input is irreducible with scalar
commutant, the flag that the universal deformation stays irreducible.
"""

import itertools

import numpy as np

from .errors import GroupTooLarge, SizeBound
from .matrices import Matrix, rank, rref
from .meataxe import INCONCLUSIVE, IRREDUCIBLE, endo_dim, is_irreducible
from .reps import Representation, adjoint_rep
from .rings import ExtensionField, PrimeField

GROUP_BOUND = 64
# cap on rows*cols of an assembled differential (int64 cells)
MAX_CELLS = 2 ** 24
# much smaller cap for the exact non-prime-field fallback
MAX_CELLS_GENERIC = 2 ** 16


class FiniteGroupTable:
    """A finite matrix group as a lookup structure: elements in BFS order
    from the identity, multiplication and inverse tables, and for every
    element one generator word reaching it."""

    __slots__ = ("elements", "mult", "inverse", "gen_indices", "words")

    def __init__(self, elements, mult, inverse, gen_indices, words):
        self.elements = tuple(elements)
        self.mult = tuple(tuple(row) for row in mult)
        self.inverse = tuple(inverse)
        self.gen_indices = tuple(gen_indices)
        self.words = tuple(tuple(w) for w in words)

    @property
    def order(self):
        return len(self.elements)

    def __repr__(self):
        return "FiniteGroupTable(order %d, %d generators)" \
            % (self.order, len(self.gen_indices))


def close_group(rep, bound=GROUP_BOUND):
    """BFS closure of the matrix group generated by rep's generators.

    Raises GroupTooLarge past the element bound (default 64)."""
    K = rep.ring
    if not isinstance(K, (PrimeField, ExtensionField)):
        raise ValueError("group closure needs a finite field (infinite "
                         "matrix groups are not tabulated)")
    ident = Matrix.identity(K, rep.dim)
    elements = [ident]
    index = {ident: 0}
    words = [()]
    frontier = [0]
    while frontier:
        nxt = []
        for ei in frontier:
            e = elements[ei]
            for gi, g in enumerate(rep.generators):
                f = e * g
                if f not in index:
                    if len(elements) >= bound:
                        raise GroupTooLarge(
                            "group closure exceeded %d elements" % (bound,))
                    index[f] = len(elements)
                    elements.append(f)
                    words.append(words[ei] + (gi,))
                    nxt.append(index[f])
        frontier = nxt
    n = len(elements)
    mult = [[index[elements[i] * elements[j]] for j in range(n)]
            for i in range(n)]
    inverse = [mult[i].index(0) for i in range(n)]
    gen_indices = [index[g] for g in rep.generators]
    return FiniteGroupTable(elements, mult, inverse, gen_indices, words)


def module_action(table, module):
    """Action matrix of every table element on the module, rebuilt from the
    stored generator words.

    Multiplicativity is verified on every (element, generator) pair; by
    induction along the BFS words that forces it on all pairs, so a module
    whose generators do not satisfy the group's relations is rejected."""
    if len(module.generators) != len(table.gen_indices):
        raise ValueError("module and table have different generator counts")
    K = module.ring
    acts = []
    for w in table.words:
        m = Matrix.identity(K, module.dim)
        for gi in w:
            m = m * module.generators[gi]
        acts.append(m)
    for i in range(table.order):
        for slot, gelem in enumerate(table.gen_indices):
            if acts[i] * module.generators[slot] != acts[table.mult[i][gelem]]:
                raise ValueError(
                    "module generators do not satisfy the group's relations "
                    "(action is not well defined)")
    return acts


# ---------------------------------------------------------------------------
# bar differentials


def _tuple_indices(n, q):
    """All q-tuples over range(n) as a (q, n^q) int64 array."""
    if q == 0:
        return np.zeros((0, 1), dtype=np.int64)
    return np.indices([n] * q).reshape(q, -1).astype(np.int64)


def _pack(parts, n):
    out = np.zeros(parts[0].shape if parts else (1,), dtype=np.int64)
    for arr in parts:
        out = out * n + arr
    return out


def _numpy_differential(actarr, multarr, q, m):
    """The degree-q bar differential as an int64 matrix (entries reduced mod
    p by the caller); rows index C^{q+1} coordinates, columns C^q."""
    n = multarr.shape[0]
    rows = n ** (q + 1) * m
    cols = n ** q * m
    if rows * cols > MAX_CELLS:
        raise SizeBound("degree-%d differential needs %d cells (cap %d)"
                        % (q, rows * cols, MAX_CELLS))
    A = np.zeros((rows, cols), dtype=np.int64)
    tup = _tuple_indices(n, q + 1)
    count = tup.shape[1]
    rowbase = _pack([tup[a] for a in range(q + 1)], n) * m
    # leading term g_1 . f(g_2 ... g_{q+1})
    colbase = _pack([tup[a] for a in range(1, q + 1)], n) * m
    if colbase.shape != rowbase.shape:
        colbase = np.broadcast_to(colbase, rowbase.shape).copy()
    g1 = tup[0] if q + 1 >= 1 else np.zeros(count, dtype=np.int64)
    for i in range(m):
        for j in range(m):
            np.add.at(A, (rowbase + i, colbase + j), actarr[g1, i, j])
    # inner face maps f(..., g_i g_{i+1}, ...)
    for t in range(1, q + 1):
        parts = []
        for a in range(q + 1):
            if a == t - 1:
                parts.append(multarr[tup[t - 1], tup[t]])
            elif a == t:
                continue
            else:
                parts.append(tup[a])
        colbase = _pack(parts, n) * m
        sign = -1 if t % 2 else 1
        for i in range(m):
            np.add.at(A, (rowbase + i, colbase + i), sign)
    # trailing term f(g_1 ... g_q)
    parts = [tup[a] for a in range(q)]
    colbase = _pack(parts, n) * m if parts else np.zeros(count, dtype=np.int64)
    if colbase.shape != rowbase.shape:
        colbase = np.broadcast_to(colbase, rowbase.shape).copy()
    sign = -1 if (q + 1) % 2 else 1
    for i in range(m):
        np.add.at(A, (rowbase + i, colbase + i), sign)
    return A


def _rank_mod_p(a, p):
    """Rank over F_p by vectorized Gaussian elimination on an int64 array."""
    a = np.mod(a, p)
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i0 = r + int(nz[0])
        if i0 != r:
            a[[r, i0]] = a[[i0, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1:, c]
        hot = np.nonzero(below)[0]
        if hot.size:
            a[r + 1 + hot] = (a[r + 1 + hot] - np.outer(below[hot], a[r])) % p
        r += 1
    return r


def bar_differential(table, module, degree):
    """Exact degree-q differential as a Matrix over the module field (for
    small instances and cross-checks)."""
    K = module.ring
    n = table.order
    m = module.dim
    q = degree
    rows = n ** (q + 1) * m
    cols = n ** q * m
    if rows * cols > MAX_CELLS_GENERIC:
        raise SizeBound("exact differential needs %d cells (cap %d)"
                        % (rows * cols, MAX_CELLS_GENERIC))
    acts = module_action(table, module)
    zero = K.zero()
    data = [[zero] * cols for _ in range(rows)]

    def add(r, c, v):
        data[r][c] = K.add(data[r][c], v)

    for tup in itertools.product(range(n), repeat=q + 1):
        rowbase = 0
        for g in tup:
            rowbase = rowbase * n + g
        rowbase *= m
        tail = 0
        for g in tup[1:]:
            tail = tail * n + g
        act = acts[tup[0]]
        for i in range(m):
            for j in range(m):
                add(rowbase + i, tail * m + j, act.entry(i, j))
        one, neg = K.one(), K.neg(K.one())
        for t in range(1, q + 1):
            merged = list(tup)
            merged[t - 1] = table.mult[tup[t - 1]][tup[t]]
            del merged[t]
            colbase = 0
            for g in merged:
                colbase = colbase * n + g
            v = neg if t % 2 else one
            for i in range(m):
                add(rowbase + i, colbase * m + i, v)
        head = 0
        for g in tup[:q]:
            head = head * n + g
        v = neg if (q + 1) % 2 else one
        for i in range(m):
            add(rowbase + i, head * m + i, v)
    return Matrix(K, data)


def cohomology_dims(table, module, max_degree=2):
    """(dim H^0, ..., dim H^max_degree) for the module over the table group."""
    K = module.ring
    if not K.is_field:
        raise ValueError("cohomology needs field coefficients")
    m = module.dim
    n = table.order
    if isinstance(K, PrimeField):
        p = K.p
        acts = module_action(table, module)
        actarr = np.array([[[int(a.entry(i, j)) for j in range(m)]
                            for i in range(m)] for a in acts], dtype=np.int64)
        multarr = np.array(table.mult, dtype=np.int64)
        kernels = []
        ranks = []
        for q in range(max_degree + 1):
            A = _numpy_differential(actarr, multarr, q, m)
            rk = _rank_mod_p(A, p)
            ranks.append(rk)
            kernels.append(n ** q * m - rk)
    else:
        kernels = []
        ranks = []
        for q in range(max_degree + 1):
            A = bar_differential(table, module, q)
            rk = rank(A)
            ranks.append(rk)
            kernels.append(A.ncols - rk)
    dims = [kernels[0]]
    for q in range(1, max_degree + 1):
        dims.append(kernels[q] - ranks[q - 1])
    return tuple(dims)


# ---------------------------------------------------------------------------
# obstruction report


class ObstructionReport:
    """Deformation-theoretic obstruction data of a mod-p representation.

    unobstructed means dim H^2(G, ad) = 0; in that case the universal
    deformation ring is the power series ring in d1 variables over the
    coefficient ring, reported syntactically in predicted_ring (only when
    the commutant is scalar, so the deformation functor is representable
    in the straightforward way).  universal_deformation_irreducible is True
    when irreducibility, scalar commutant, and d2 = 0 are all verified; None
    when the irreducibility test was inconclusive; False otherwise (meaning
    not established by this criterion, not a disproof)."""

    __slots__ = ("group_order", "d0", "d1", "d2", "schur_dim", "unobstructed",
                 "predicted_ring", "universal_deformation_irreducible",
                 "meataxe_status")

    def __init__(self, group_order, dims, schur_dim, meataxe_status):
        d0, d1, d2 = dims
        self.group_order = group_order
        self.d0 = d0
        self.d1 = d1
        self.d2 = d2
        self.schur_dim = schur_dim
        self.unobstructed = (d2 == 0)
        self.meataxe_status = meataxe_status
        if self.unobstructed and schur_dim == 1:
            if d1 == 0:
                self.predicted_ring = "Lambda"
            elif d1 == 1:
                self.predicted_ring = "Lambda[[x_1]]"
            else:
                self.predicted_ring = "Lambda[[x_1,...,x_%d]]" % (d1,)
        else:
            self.predicted_ring = None
        if meataxe_status == INCONCLUSIVE:
            self.universal_deformation_irreducible = None
        else:
            self.universal_deformation_irreducible = (
                meataxe_status == IRREDUCIBLE and schur_dim == 1
                and self.unobstructed)

    def to_json(self):
        return {
            "group_order": self.group_order,
            "d0": self.d0,
            "d1": self.d1,
            "d2": self.d2,
            "schur_dim": self.schur_dim,
            "unobstructed": self.unobstructed,
            "predicted_ring": self.predicted_ring,
            "universal_deformation_irreducible":
                self.universal_deformation_irreducible,
            "meataxe_status": self.meataxe_status,
        }

    def __repr__(self):
        return ("ObstructionReport(|G|=%d, d=(%d,%d,%d), schur=%d, "
                "unobstructed=%s)" % (self.group_order, self.d0, self.d1,
                                      self.d2, self.schur_dim,
                                      self.unobstructed))


def obstruction_report(rep, seed=0, budget=200, bound=GROUP_BOUND):
    """Close the group, compute (d0, d1, d2) for the adjoint module, the
    commutant dimension, and the flags of the report."""
    table = close_group(rep, bound=bound)
    ad = adjoint_rep(rep)
    dims = cohomology_dims(table, ad, max_degree=2)
    schur = endo_dim(rep)
    verdict = is_irreducible(rep, seed=seed, budget=budget)
    return ObstructionReport(table.order, dims, schur, verdict.status)
