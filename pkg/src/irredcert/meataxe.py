"""MeatAxe-style irreducibility testing over the implemented fields.

The engine is the Holt-Rees variant with Norton's criterion.  A random
element theta of the enveloping algebra is drawn as a small sum of words in
the generators, its characteristic polynomial is factored (fully over finite
fields; partially over Q and Q(t)), and for an irreducible factor g the
kernel of g(theta) is spun under the generators.

When the nullity of g(theta) equals deg g, one primal spin and one dual spin
decide: ker g(theta) is one-dimensional over F[x]/(g), so a proper invariant
subspace W either meets the kernel (then the kernel lies inside W and the
chosen vector spins to a proper subspace) or g divides the characteristic
polynomial of the quotient action, which is the transposed action on the
annihilator of W, and the chosen dual vector spins properly.  Full spins on
both sides therefore certify irreducibility (Norton's criterion).

For higher nullity the single-vector test is not decisive; over a finite
field the same two-sided argument still closes the case after enumerating
all projective classes of both kernels, which this module does whenever
q^nullity stays under a fixed bound.  At the oracle-comparison sizes
(dim <= 3 over F_2, F_3) the bound always holds, so no verdict there is ever
Inconclusive.  Over Q and Q(t) enumeration is impossible and undecided
samples simply consume budget; certification is expected to reduce modulo a
prime first and use this path only as a fallback.

Each run is deterministic given (rep, seed, budget) and yields a transcript
suitable for embedding in a certificate.  Reducible verdicts always carry a
witness basis that has been re-verified exactly against every generator.
"""

from fractions import Fraction

from . import polys
from .errors import AbsIrredUndecided, SingularError
from .matrices import Matrix, char_poly, kernel_basis, kronecker, \
    poly_at_matrix, rref
from .prng import XorShift64
from .reps import Representation, evaluate
from .rings import QQ, ExtensionField, PrimeField, RationalFunctionField

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
INCONCLUSIVE = "inconclusive"

# cap on q^nullity for exhaustive kernel enumeration in the higher
# multiplicity case; 4096 keeps the worst case around 10^4 spins
ENUM_BOUND = 4096


class MeataxeVerdict:
    """Outcome of an irreducibility test: status, optional witness basis
    (echelon rows spanning a proper nonzero invariant subspace), and a
    transcript replayable from the seed."""

    __slots__ = ("status", "witness", "transcript")

    def __init__(self, status, witness, transcript):
        self.status = status
        self.witness = witness
        self.transcript = transcript

    def __repr__(self):
        extra = ""
        if self.witness is not None:
            extra = ", witness dim %d" % (len(self.witness),)
        return "MeataxeVerdict(%s%s)" % (self.status, extra)


# ---------------------------------------------------------------------------
# subspace plumbing


def _echelon_rows(K, vecs):
    """Canonical reduced-echelon basis of the span of the given vectors."""
    red, pivots = rref(Matrix(K, [list(v) for v in vecs]))
    return tuple(red.row(i) for i in range(len(pivots)))


def _reduce_against(K, rows, pivots, w):
    w = list(w)
    for pi, r in zip(pivots, rows):
        c = w[pi]
        if not K.is_zero(c):
            w = [K.sub(a, K.mul(c, b)) for a, b in zip(w, r)]
    return w


def spin(K, mats, v):
    """Smallest subspace containing v closed under the matrices, as reduced
    echelon rows.  Stops early once the whole space is reached."""
    d = len(v)
    rows, pivots = [], []

    def add(w):
        w = _reduce_against(K, rows, pivots, w)
        for idx, a in enumerate(w):
            if not K.is_zero(a):
                inv = K.div(K.one(), a)
                w = [K.mul(inv, x) for x in w]
                for j in range(len(rows)):
                    c = rows[j][idx]
                    if not K.is_zero(c):
                        rows[j] = [K.sub(x, K.mul(c, y))
                                   for x, y in zip(rows[j], w)]
                pos = 0
                while pos < len(pivots) and pivots[pos] < idx:
                    pos += 1
                pivots.insert(pos, idx)
                rows.insert(pos, w)
                return True
        return False

    queue = [tuple(v)]
    add(v)
    while queue and len(rows) < d:
        b = queue.pop()
        for m in mats:
            w = m.apply(b)
            if add(list(w)):
                queue.append(tuple(w))
    return tuple(tuple(r) for r in rows)


def subspace_is_invariant(K, mats, rows):
    """Exact check that the row span is carried into itself by every matrix."""
    pivots = []
    for r in rows:
        for idx, a in enumerate(r):
            if not K.is_zero(a):
                pivots.append(idx)
                break
    for m in mats:
        for r in rows:
            w = _reduce_against(K, rows, pivots, m.apply(r))
            if any(not K.is_zero(a) for a in w):
                return False
    return True


def _perp_witness(K, dual_rows):
    """Annihilator of a dual subspace, as echelon rows of column vectors."""
    ker = kernel_basis(Matrix(K, [list(r) for r in dual_rows]))
    return _echelon_rows(K, ker)


# ---------------------------------------------------------------------------
# sampling


def _field_order(K):
    if isinstance(K, PrimeField):
        return K.p
    if isinstance(K, ExtensionField):
        return K.order
    return None


def _random_scalar(K, rng):
    if isinstance(K, PrimeField):
        return rng.randrange(K.p)
    if isinstance(K, ExtensionField):
        return K.coerce(tuple(rng.randrange(K.p) for _ in range(K.k)))
    # Q and Q(t): small integer box
    return K.coerce(rng.randrange(7) - 3)


def _nonzero_scalar(K, rng):
    for _ in range(8):
        c = _random_scalar(K, rng)
        if not K.is_zero(c):
            return c
    return K.one()


def _sample_theta(rep, rng, index):
    """Algebra element theta = sum c_i * rho(w_i) plus its transcript record.

    The first len(generators) samples are the generators themselves; after
    that, 1..3 words of length 1..6 with nonzero coefficients."""
    K = rep.ring
    n = len(rep.generators)
    if index < n:
        words = [[index]]
        coeffs = [K.one()]
    else:
        words, coeffs = [], []
        for _ in range(1 + rng.randrange(3)):
            words.append([rng.randrange(n) for _ in range(1 + rng.randrange(6))])
            coeffs.append(_nonzero_scalar(K, rng))
    theta = Matrix.zeros(K, rep.dim, rep.dim)
    for w, c in zip(words, coeffs):
        theta = theta + evaluate(rep, [(l, 1) for l in w]).scale(c)
    record = {"words": words, "coeffs": [K.format(c) for c in coeffs]}
    return theta, record


# ---------------------------------------------------------------------------
# Norton tests


def _projective_kernel(K, ker):
    """One representative per line of the span of the kernel basis (finite
    fields only; first nonzero coordinate normalized to 1 by construction)."""
    elements = list(K.iter_elements())
    n = len(ker)
    d = len(ker[0])
    for lead in range(n):
        tail = n - lead - 1
        counters = [0] * tail
        while True:
            coeffs = [K.zero()] * lead + [K.one()] + \
                [elements[c] for c in counters]
            v = [K.zero()] * d
            for a, b in zip(coeffs, ker):
                if not K.is_zero(a):
                    v = [K.add(x, K.mul(a, y)) for x, y in zip(v, b)]
            yield v
            i = 0
            while i < tail:
                counters[i] += 1
                if counters[i] < len(elements):
                    break
                counters[i] = 0
                i += 1
            else:
                break


def _norton_attempt(rep, theta, g, rec, rng):
    """Run Norton's test for one irreducible factor g of char_poly(theta).

    Returns (status, witness_rows) on a decision, None when this factor
    cannot decide (higher multiplicity, enumeration too large or field
    infinite and no reducibility found)."""
    K = rep.ring
    d = rep.dim
    gens = list(rep.generators)
    N = poly_at_matrix(K, g, theta)
    ker = kernel_basis(N)
    nullity = len(ker)
    degg = polys.degree(g)
    rec["degree"] = degg
    rec["nullity"] = nullity
    events = rec.setdefault("events", [])
    if nullity == 0:
        events.append("not_a_factor")
        return None
    tgens = [m.transpose() for m in gens]

    if nullity == degg:
        rows = spin(K, gens, ker[0])
        if len(rows) < d:
            events.append("primal_spin_proper:%d" % (len(rows),))
            return REDUCIBLE, rows
        events.append("primal_spin_full")
        dual_ker = kernel_basis(N.transpose())
        drows = spin(K, tgens, dual_ker[0])
        if len(drows) < d:
            events.append("dual_spin_proper:%d" % (len(drows),))
            return REDUCIBLE, _perp_witness(K, drows)
        events.append("dual_spin_full")
        return IRREDUCIBLE, None

    # higher multiplicity: exhaustive two-sided enumeration when affordable
    q = _field_order(K)
    if q is not None and q ** nullity <= ENUM_BOUND:
        for v in _projective_kernel(K, ker):
            rows = spin(K, gens, v)
            if len(rows) < d:
                events.append("primal_enumeration_proper:%d" % (len(rows),))
                return REDUCIBLE, rows
        events.append("primal_enumeration_full")
        dual_ker = kernel_basis(N.transpose())
        for u in _projective_kernel(K, dual_ker):
            drows = spin(K, tgens, u)
            if len(drows) < d:
                events.append("dual_enumeration_proper:%d" % (len(drows),))
                return REDUCIBLE, _perp_witness(K, drows)
        events.append("dual_enumeration_full")
        return IRREDUCIBLE, None

    # infinite field or oversized kernel: probe for reducibility only
    probes = list(ker)
    if len(ker) > 1:
        for _ in range(4):
            coeffs = [_random_scalar(K, rng) for _ in ker]
            v = [K.zero()] * d
            for a, b in zip(coeffs, ker):
                v = [K.add(x, K.mul(a, y)) for x, y in zip(v, b)]
            if any(not K.is_zero(a) for a in v):
                probes.append(v)
    for v in probes:
        rows = spin(K, gens, v)
        if len(rows) < d:
            events.append("primal_probe_proper:%d" % (len(rows),))
            return REDUCIBLE, rows
    dual_ker = kernel_basis(N.transpose())
    for u in dual_ker:
        drows = spin(K, tgens, u)
        if len(drows) < d:
            events.append("dual_probe_proper:%d" % (len(drows),))
            return REDUCIBLE, _perp_witness(K, drows)
    events.append("undecided_high_multiplicity")
    return None


def _finish(rep, transcript, status, witness, sample_index, factor_str):
    transcript["decision"] = {
        "status": status,
        "sample": sample_index,
        "factor": factor_str,
    }
    if witness is not None:
        K = rep.ring
        if not subspace_is_invariant(K, list(rep.generators), witness):
            raise AssertionError("internal error: witness failed exact "
                                 "re-verification")
        transcript["decision"]["witness_dim"] = len(witness)
    return MeataxeVerdict(status, witness, transcript)


def _base_transcript(rep, seed, budget):
    return {
        "seed": seed,
        "budget": budget,
        "field": rep.ring.to_json(),
        "dim": rep.dim,
        "samples": [],
    }


def _decide_finite(rep, seed, budget):
    K = rep.ring
    rng = XorShift64(seed)
    transcript = _base_transcript(rep, seed, budget)
    for i in range(budget):
        theta, srec = _sample_theta(rep, rng, i)
        f = char_poly(theta)
        srec["charpoly"] = polys.format_poly_generic(K, f, "x")
        srec["factors"] = []
        transcript["samples"].append(srec)
        for g in polys.distinct_irreducible_factors(K, f, rng):
            rec = {"poly": polys.format_poly_generic(K, g, "x")}
            srec["factors"].append(rec)
            out = _norton_attempt(rep, theta, g, rec, rng)
            if out is not None:
                return _finish(rep, transcript, out[0], out[1], i, rec["poly"])
    transcript["decision"] = {"status": INCONCLUSIVE,
                              "reason": "budget exhausted"}
    return MeataxeVerdict(INCONCLUSIVE, None, transcript)


def _certified_factors_q(f):
    """Certainly-irreducible factors of a monic f over Q that we can find
    cheaply: linear factors from rational roots, plus any squarefree part
    certified irreducible by a good-reduction witness.  Sorted with linear
    factors first."""
    out = []
    seen = set()
    for r in sorted(polys.rational_roots(f)):
        g = (QQ.neg(QQ.coerce(r)), QQ.one())
        if g not in seen:
            seen.add(g)
            out.append(g)
    for s in polys.squarefree_parts(QQ, f):
        if polys.degree(s) in (0, polys.degree(f)):
            continue
        if s not in seen and polys.certify_irreducible_q(s) is True:
            seen.add(s)
            out.append(s)
    return out


def _decide_q(rep, seed, budget):
    K = rep.ring
    rng = XorShift64(seed)
    transcript = _base_transcript(rep, seed, budget)
    for i in range(budget):
        theta, srec = _sample_theta(rep, rng, i)
        f = char_poly(theta)
        srec["charpoly"] = polys.format_poly_generic(K, f, "x")
        srec["factors"] = []
        transcript["samples"].append(srec)
        # an irreducible characteristic polynomial leaves theta no invariant
        # subspace at all, let alone a G-invariant one
        if polys.certify_irreducible_q(f) is True:
            srec["factors"].append({"poly": srec["charpoly"],
                                    "events": ["charpoly_irreducible"]})
            return _finish(rep, transcript, IRREDUCIBLE, None, i,
                           srec["charpoly"])
        for g in _certified_factors_q(f):
            rec = {"poly": polys.format_poly_generic(K, g, "x")}
            srec["factors"].append(rec)
            out = _norton_attempt(rep, theta, g, rec, rng)
            if out is not None:
                return _finish(rep, transcript, out[0], out[1], i, rec["poly"])
    transcript["decision"] = {"status": INCONCLUSIVE,
                              "reason": "budget exhausted"}
    return MeataxeVerdict(INCONCLUSIVE, None, transcript)


def _constant_q_rep(rep):
    """A Q(t) representation with constant entries, as a rep over Q; None if
    some entry actually involves t."""
    K = rep.ring
    mats = []
    for g in rep.generators:
        rows = []
        for i in range(g.nrows):
            row = []
            for a in g.row(i):
                if not K.is_constant(a):
                    return None
                row.append(K.as_constant(a))
            rows.append(row)
        mats.append(Matrix(QQ, rows))
    return Representation(QQ, mats, rep.relations, label=rep.label)


def _specialize_qt(rep, c):
    """The rep over Q obtained by t -> c; None if a pole or a vanishing
    determinant makes c a bad parameter value."""
    K = rep.ring
    mats = []
    try:
        for g in rep.generators:
            mats.append(g.map_entries(lambda a: K.evaluate(a, c), QQ))
        return Representation(QQ, mats, rep.relations, label=rep.label)
    except (SingularError, ValueError):
        return None


def _decide_qt(rep, seed, budget):
    K = rep.ring
    const = _constant_q_rep(rep)
    if const is not None:
        inner = _decide_q(const, seed, budget)
        witness = None
        if inner.witness is not None:
            witness = tuple(tuple(K.coerce(a) for a in row)
                            for row in inner.witness)
        transcript = {"delegated_to_Q": True, "inner": inner.transcript}
        return MeataxeVerdict(inner.status, witness, transcript)

    # specialization certificate: a subspace over Q(t) has coprime
    # polynomial Pluecker coordinates, which cannot all vanish at any c, so
    # it specializes to an invariant subspace at every good c.  Hence an
    # irreducible specialization forces irreducibility over Q(t).
    transcript = _base_transcript(rep, seed, budget)
    transcript["specializations"] = []
    reducible_at = []
    for c in (0, 1, -1, 2, -2, 3, -3, 5, -5, 7):
        spec = _specialize_qt(rep, c)
        if spec is None:
            transcript["specializations"].append({"t": c, "status": "bad"})
            continue
        inner = _decide_q(spec, seed, max(budget // 4, 8))
        transcript["specializations"].append({"t": c, "status": inner.status})
        if inner.status == IRREDUCIBLE:
            transcript["decision"] = {
                "status": IRREDUCIBLE,
                "rule": "irreducible_specialization",
                "t": c,
                "inner": inner.transcript,
            }
            return MeataxeVerdict(IRREDUCIBLE, None, transcript)
        if inner.status == REDUCIBLE:
            reducible_at.append((c, inner))
            break

    # hunt for a genuine Q(t)-witness: constant eigenvalue candidates of
    # sampled algebra elements come from the roots of a specialized
    # characteristic polynomial
    rng = XorShift64(seed)
    gens = list(rep.generators)
    d = rep.dim
    for i in range(min(budget, 24)):
        theta, srec = _sample_theta(rep, rng, i)
        transcript["samples"].append(srec)
        f = char_poly(theta)
        candidates = set()
        for c in (0, 1, -1, 2):
            try:
                fc = tuple(K.evaluate(a, c) for a in f)
            except SingularError:
                continue
            candidates.update(polys.rational_roots(fc))
        srec["eigenvalue_candidates"] = [str(v) for v in sorted(candidates)]
        srec["factors"] = []
        for lam in sorted(candidates):
            g = (K.neg(K.coerce(lam)), K.one())
            rec = {"poly": polys.format_poly_generic(K, g, "x")}
            srec["factors"].append(rec)
            N = poly_at_matrix(K, g, theta)
            ker = kernel_basis(N)
            rec["nullity"] = len(ker)
            if not ker:
                continue
            for v in ker:
                rows = spin(K, gens, v)
                if len(rows) < d:
                    rec["events"] = ["primal_spin_proper:%d" % (len(rows),)]
                    return _finish(rep, transcript, REDUCIBLE, rows, i,
                                   rec["poly"])
    reason = "budget exhausted"
    if reducible_at:
        reason = ("specialization at t=%d is reducible but no witness "
                  "lifted to Q(t)" % (reducible_at[0][0],))
    transcript["decision"] = {"status": INCONCLUSIVE, "reason": reason}
    return MeataxeVerdict(INCONCLUSIVE, None, transcript)


def is_irreducible(rep, seed=0, budget=200):
    """Decide irreducibility of a representation over a field.

    Returns a MeataxeVerdict; Reducible verdicts carry an exactly verified
    echelon witness basis, Irreducible means Norton's criterion succeeded,
    and Inconclusive means the sampling budget ran out (possible only over
    Q and Q(t), or past the enumeration bound over big finite fields)."""
    K = rep.ring
    if not K.is_field:
        raise ValueError("the irreducibility test works over a field; "
                         "reduce modulo a prime first")
    if rep.dim == 1:
        return MeataxeVerdict(
            IRREDUCIBLE, None,
            {"seed": seed, "budget": budget, "field": K.to_json(), "dim": 1,
             "samples": [],
             "decision": {"status": IRREDUCIBLE, "reason": "dimension 1"}})
    if isinstance(K, (PrimeField, ExtensionField)):
        return _decide_finite(rep, seed, budget)
    if K == QQ:
        return _decide_q(rep, seed, budget)
    if isinstance(K, RationalFunctionField):
        return _decide_qt(rep, seed, budget)
    raise ValueError("no irreducibility test for %r" % (K,))


def endo_dim(rep):
    """Dimension over the base field of the commutant {X : Xg = gX for all
    generators}, by exact kernel of the stacked commutator system."""
    K = rep.ring
    if not K.is_field:
        raise ValueError("endo_dim works over a field")
    d = rep.dim
    ident = Matrix.identity(K, d)
    rows = []
    for g in rep.generators:
        # row-major vec: vec(gX) = (g (x) I) vec X, vec(Xg) = (I (x) g^T) vec X
        block = kronecker(g, ident) - kronecker(ident, g.transpose())
        rows.extend(block.rows())
    system = Matrix(K, rows)
    return len(kernel_basis(system))


def is_absolutely_irreducible(rep, seed=0, budget=200):
    """Over a finite field: irreducible with one-dimensional commutant.

    By Schur and the finite-field converse (Wedderburn: a finite division
    algebra is a field) this matches absolute irreducibility; see the
    background notes for the reference."""
    K = rep.ring
    if not isinstance(K, (PrimeField, ExtensionField)):
        raise ValueError("absolute irreducibility test expects a finite field")
    verdict = is_irreducible(rep, seed=seed, budget=budget)
    if verdict.status == INCONCLUSIVE:
        raise AbsIrredUndecided("irreducibility test was inconclusive")
    return verdict.status == IRREDUCIBLE and endo_dim(rep) == 1
