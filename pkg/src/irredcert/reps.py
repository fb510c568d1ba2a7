"""Representations of finitely generated groups by matrix generators.

A Representation packages a dimension, a ring descriptor, a nonempty list of
invertible generator matrices, and optional defining relations (words that
must evaluate to the identity; they are verified at construction and are
otherwise advisory, since irreducibility only depends on the matrices).

A Word is a tuple of (generator index, exponent) pairs with exponents +-1.
`evaluate` multiplies the corresponding matrices; over a non-field ring the
product of inverses may leave the ring, in which case the result is returned
over the fraction field instead.

The JSON file format for representations is documented in docs/formats.md.
"""

import json

from .errors import ShapeError, SingularError
from .matrices import Matrix, kronecker
from .rings import ring_from_json


def normalize_word(word):
    """Validate and normalize a word into ((index, exp), ...) with exp +-1."""
    out = []
    for item in word:
        idx, exp = item
        idx = int(idx)
        exp = int(exp)
        if exp not in (1, -1):
            raise ValueError("word exponents must be +1 or -1, got %r" % (exp,))
        out.append((idx, exp))
    return tuple(out)


class Representation:
    """Immutable: ring, dim, generators (tuple of Matrix), relations, label."""

    __slots__ = ("ring", "dim", "generators", "relations", "label", "_inverses")

    def __init__(self, ring, generators, relations=(), label=""):
        if not generators:
            raise ValueError("need at least one generator")
        gens = []
        for g in generators:
            if not isinstance(g, Matrix):
                g = Matrix(ring, g)
            if g.ring != ring:
                g = g.change_ring(ring)
            if g.nrows != g.ncols:
                raise ShapeError("generators must be square")
            gens.append(g)
        dim = gens[0].nrows
        if any(g.nrows != dim for g in gens):
            raise ShapeError("generators must share one dimension")
        invs = []
        for g in gens:
            try:
                invs.append(g.inverse())
            except SingularError:
                raise SingularError("generator %r is singular" % (g,)) from None
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "relations",
                           tuple(normalize_word(w) for w in relations))
        object.__setattr__(self, "label", str(label))
        object.__setattr__(self, "_inverses", tuple(invs))
        for w in self.relations:
            for idx, _ in w:
                if not 0 <= idx < len(gens):
                    raise ValueError("relation index %d out of range" % (idx,))
            if not evaluate(self, w).is_identity():
                raise ValueError("relation %r does not evaluate to the identity"
                                 % (w,))

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    def generator_inverse(self, i):
        return self._inverses[i]

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.ring == other.ring
                and self.generators == other.generators)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __repr__(self):
        tag = " %r" % (self.label,) if self.label else ""
        return "<Representation%s dim %d over %r, %d generators>" \
            % (tag, self.dim, self.ring, len(self.generators))


def evaluate(rep, word):
    """Product of generator matrices along the word; empty word = identity.

    Over a non-field ring the result is converted back into the base ring
    when possible and otherwise returned over the fraction field."""
    word = normalize_word(word)
    R = rep.ring
    for idx, _ in word:
        if not 0 <= idx < len(rep.generators):
            raise ValueError("generator index %d out of range" % (idx,))
    if R.is_field or all(exp == 1 for _, exp in word):
        acc = Matrix.identity(R, rep.dim)
        for idx, exp in word:
            acc = acc * (rep.generators[idx] if exp == 1
                         else rep.generator_inverse(idx))
        return acc
    K = R.fraction_field()
    acc = Matrix.identity(K, rep.dim)
    for idx, exp in word:
        g = rep.generators[idx] if exp == 1 else rep.generator_inverse(idx)
        acc = acc * (g.to_fraction_field() if g.ring != K else g)
    try:
        return acc.from_fraction_field(R)
    except Exception:
        return acc


def adjoint_rep(rep):
    """Conjugation action on d x d matrices, flattened to d^2 x d^2.

    With row-major vec, X -> g X g^-1 becomes vec(X) -> (g (x) (g^-1)^T) vec(X).
    Requires field coefficients (inverses must stay in the ring)."""
    if not rep.ring.is_field:
        raise ValueError("adjoint_rep needs a representation over a field")
    gens = []
    for i, g in enumerate(rep.generators):
        gens.append(kronecker(g, rep.generator_inverse(i).transpose()))
    return Representation(rep.ring, gens, rep.relations,
                          label=("ad(%s)" % rep.label) if rep.label else "ad")


def conjugate(rep, c):
    """Replace each generator g by c g c^-1; c must be invertible.

    c may live over the base ring or its fraction field.  The result is over
    the base ring when every conjugated entry lands there, and over the
    fraction field otherwise."""
    big = rep.ring.fraction_field()
    if not isinstance(c, Matrix):
        c = Matrix(big, c)
    if c.nrows != c.ncols or c.nrows != rep.dim:
        raise ShapeError("conjugating matrix has wrong shape")
    cb = c if c.ring == big else c.change_ring(big)
    cib = cb.inverse()  # raises SingularError if singular
    new = [cb * g.to_fraction_field() * cib for g in rep.generators]
    if big != rep.ring:
        try:
            back = [h.from_fraction_field(rep.ring) for h in new]
            return Representation(rep.ring, back, rep.relations, label=rep.label)
        except Exception:
            pass
    return Representation(big, new, rep.relations, label=rep.label)


def direct_sum(a, b):
    """Block-diagonal sum; the two inputs must have matching generator lists
    over the same ring (they present actions of the same group)."""
    if a.ring != b.ring:
        raise ShapeError("ring mismatch in direct_sum")
    if len(a.generators) != len(b.generators):
        raise ShapeError("generator count mismatch in direct_sum")
    R = a.ring
    z = R.zero()
    gens = []
    for g, h in zip(a.generators, b.generators):
        n, m = g.nrows, h.nrows
        rows = []
        for i in range(n):
            rows.append(list(g.row(i)) + [z] * m)
        for i in range(m):
            rows.append([z] * n + list(h.row(i)))
        gens.append(Matrix(R, rows))
    rels = a.relations if a.relations == b.relations else ()
    return Representation(R, gens, rels,
                          label=("%s + %s" % (a.label, b.label)).strip(" +"))


def trivial_rep(ring, dim=1, ngens=1):
    """dim-dimensional representation sending every generator to the identity."""
    return Representation(ring, [Matrix.identity(ring, dim)] * ngens,
                          label="trivial")


# ---------------------------------------------------------------------------
# JSON serialization (schema in docs/formats.md)


def rep_to_json(rep):
    R = rep.ring
    return {
        "ring": R.to_json(),
        "dim": rep.dim,
        "generators": [[[R.format(a) for a in g.row(i)] for i in range(g.nrows)]
                       for g in rep.generators],
        "relations": [[[idx, exp] for idx, exp in w] for w in rep.relations],
        "label": rep.label,
    }


def rep_from_json(obj):
    if not isinstance(obj, dict):
        raise ValueError("representation document must be a JSON object")
    for key in ("ring", "dim", "generators"):
        if key not in obj:
            raise ValueError("representation document lacks %r" % (key,))
    R = ring_from_json(obj["ring"])
    dim = int(obj["dim"])
    gens = []
    for g in obj["generators"]:
        if len(g) != dim or any(len(row) != dim for row in g):
            raise ShapeError("generator is not %d x %d" % (dim, dim))
        gens.append(Matrix(R, [[R.parse(s) if isinstance(s, str) else s
                                for s in row] for row in g]))
    relations = [normalize_word(w) for w in obj.get("relations", [])]
    return Representation(R, gens, relations, label=obj.get("label", ""))


def load_rep(path):
    with open(path, "r", encoding="utf-8") as fh:
        return rep_from_json(json.load(fh))


def save_rep(rep, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rep_to_json(rep), fh, indent=2, sort_keys=True)
        fh.write("\n")
