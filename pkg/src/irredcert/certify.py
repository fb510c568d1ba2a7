"""Certification engine: from a representation over Q or Q(t) to an
auditable irreducibility certificate.

The pipeline is the criterion run forward.  Saturation produces a stable
free lattice over Z or Z[t]; reduction at a prime lands in a residue field;
an irreducible reduction at a single prime certifies irreducibility of the
input, because the localization of the base ring at any of the primes we
offer is a regular local ring and the criterion is valid there.  Reduction
is one-sided: a reducible reduction proves nothing about the input, so the
engine keeps a separate direct search over the base field whose only
certifying outcome is a reducibility witness (an invariant subspace over K,
re-verified exactly).  When neither side lands, the conclusion is
Inconclusive and says why.

Certificates carry everything needed for an independent replay: the input
digest, the run configuration (candidate primes, seed, budgets), the
lattice found, and one transcript per reduction step.  verify() re-executes
the whole pipeline deterministically and compares, then re-checks the
witness or the certifying step independently of the rerun.

Rules:
  DVR             one prime, base ring a discrete valuation ring.  Subsumed
                  by RegularOnePrime (a DVR is regular local of dimension
                  one); accepted in certificates, never emitted.
  RegularOnePrime one prime of Z, or one maximal (p, t-c) of Z[t]; the
                  localization there is regular local.
  HeightOneFamily height-one prime (t-c) of Z[t] with a recursive
                  certificate over its residue field Q; the recorded family
                  is the tower's prime list.
  DirectOverK     reducibility witness from the MeatAxe over the base
                  field itself (the zero ideal).
"""

import hashlib
import json

from .errors import (BadPrime, BudgetExceeded, IrredcertError, SizeBound,
                     VersionMismatch)
from .lattices import PrimeSpec, reduce_rep, saturate
from .meataxe import (INCONCLUSIVE, IRREDUCIBLE, REDUCIBLE, _echelon_rows,
                      is_irreducible, subspace_is_invariant)
from .oracle import count_invariant
from .reps import Representation, rep_to_json
from .rings import (PolynomialRingZ, QQ, RationalFunctionField, ZZ,
                    ring_from_json)

TOOLKIT_VERSION = "0.1.0"

RULE_DVR = "DVR"
RULE_REGULAR_ONE_PRIME = "RegularOnePrime"
RULE_HEIGHT_ONE_FAMILY = "HeightOneFamily"
RULE_DIRECT_OVER_K = "DirectOverK"
RULES = (RULE_DVR, RULE_REGULAR_ONE_PRIME, RULE_HEIGHT_ONE_FAMILY,
         RULE_DIRECT_OVER_K)

IRREDUCIBLE_CERTIFIED = "IrreducibleCertified"
REDUCIBLE_WITH_WITNESS = "ReducibleWithWitness"
INCONCLUSIVE_RUN = "Inconclusive"

# shifts of t tried when expanding a bare integer prime p over Z[t] into
# maximal pairs (p, t-c), and when choosing height-one primes (t-c)
AUTO_SHIFTS = (0, 1, -1)

# auto prime search: stop after this many consecutive non-certifying
# reductions and fall through to the direct search; explicit prime lists
# are always honored in full
AUTO_PATIENCE = 8

# largest subspace-lattice size the --oracle cross-check will enumerate
ORACLE_POINTS = 2 ** 12


def canonical_json(obj):
    """Key-sorted, whitespace-free dump; the digest and equality baseline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(obj):
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


def rep_digest(rep):
    return digest(rep_to_json(rep))


def _primes_ascending(bound=1000):
    for n in range(2, bound):
        if all(n % d for d in range(2, int(n ** 0.5) + 1)):
            yield n


class Certificate:
    """Audit trail of one certification run.

    steps is a list of dicts, one per reduction attempted, in order:
    {"prime", "residue_field", "verdict", "meataxe"} plus optional
    "oracle_count" and, for height-one recursion, "sub_certificate".
    conclusion is one of IrreducibleCertified / ReducibleWithWitness /
    Inconclusive; rule names the criterion variant that fired.
    """

    __slots__ = ("toolkit_version", "input_digest", "label", "config",
                 "base_ring", "lattice", "steps", "rule", "conclusion",
                 "witness", "family", "reducible_primes", "reason",
                 "self_digest")

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw.pop(name))
        if kw:
            raise TypeError("unknown certificate fields: %s" % sorted(kw))

    def __repr__(self):
        return "Certificate(%s, rule=%s, %d steps)" % (
            self.conclusion, self.rule, len(self.steps))

    def to_json(self):
        return {
            "format": "irredcert-certificate",
            "toolkit_version": self.toolkit_version,
            "input_digest": self.input_digest,
            "label": self.label,
            "config": self.config,
            "base_ring": self.base_ring,
            "lattice": self.lattice,
            "steps": self.steps,
            "rule": self.rule,
            "conclusion": self.conclusion,
            "witness": self.witness,
            "family": self.family,
            "reducible_primes": self.reducible_primes,
            "reason": self.reason,
            "self_digest": self.self_digest,
        }

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict):
            raise ValueError("certificate document must be a JSON object")
        if obj.get("format") != "irredcert-certificate":
            raise ValueError("not a certificate document")
        kw = {}
        for name in cls.__slots__:
            if name not in obj:
                raise ValueError("certificate document lacks %r" % (name,))
            kw[name] = obj[name]
        return cls(**kw)


def load_certificate(path):
    with open(path, "r", encoding="utf-8") as fh:
        return Certificate.from_json(json.load(fh))


def save_certificate(cert, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cert.to_json(), fh, indent=2, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# prime candidate selection


def _field_rep(rep):
    """The input viewed over its fraction field (identity when already
    over Q or Q(t))."""
    K = rep.ring
    if K.is_field:
        return rep
    F = K.fraction_field()
    return Representation(F, [g.to_fraction_field() for g in rep.generators],
                          rep.relations, label=rep.label)


def _auto_primes_z(int_rep, max_primes):
    """Ascending rational primes skipping divisors of the generator
    determinants (those reductions would be BadPrime)."""
    bad = 1
    for g in int_rep.generators:
        bad *= abs(g.det())
    out = []
    for p in _primes_ascending():
        if bad % p:
            out.append(p)
            if len(out) >= max_primes:
                break
    return out


def _normalize_prime_list(primes, R):
    """User-supplied candidates as PrimeSpec objects over the base ring R.

    Integers stand for (p) over Z; over Z[t] a bare p expands into the
    maximal pairs (p, t-c) for the automatic shifts c.  Strings go through
    the PrimeSpec grammar, so "(t-1)" or "(5,t+2)" select the exact ideal.
    """
    out = []
    for item in primes:
        if isinstance(item, PrimeSpec):
            if item.ring != R:
                raise BadPrime("prime %s lives over the wrong ring" % (item,))
            out.append(item)
        elif isinstance(item, int):
            if R == ZZ:
                out.append(PrimeSpec.integer(item))
            else:
                for c in AUTO_SHIFTS:
                    out.append(PrimeSpec.maximal(item, c, R))
        elif isinstance(item, str):
            out.append(PrimeSpec.parse(item, R))
        else:
            raise BadPrime("cannot interpret %r as a prime" % (item,))
    return out


# ---------------------------------------------------------------------------
# single reduction step


def _transcript_json(rep, verdict):
    K = rep.ring
    out = dict(verdict.transcript)
    if verdict.witness is not None:
        out["witness"] = [[K.format(a) for a in row]
                          for row in verdict.witness]
    return out


def _oracle_count_or_none(red):
    try:
        return count_invariant(red, max_size=ORACLE_POINTS)
    except (SizeBound, ValueError):
        return None


def _run_step(red, prime, seed, budget, oracle_check):
    """MeatAxe the reduced representation; return (step dict, verdict)."""
    verdict = is_irreducible(red, seed=seed, budget=budget)
    step = {
        "prime": str(prime),
        "residue_field": red.ring.to_json(),
        "verdict": verdict.status,
        "meataxe": _transcript_json(red, verdict),
    }
    if oracle_check:
        n = _oracle_count_or_none(red)
        if n is not None:
            step["oracle_count"] = n
            if verdict.status == IRREDUCIBLE and n != 2:
                raise AssertionError("oracle found %d invariant subspaces "
                                     "against verdict %s" % (n, verdict.status))
            if verdict.status == REDUCIBLE and n == 2:
                raise AssertionError("oracle found no proper invariant "
                                     "subspace against a reducible verdict")
    return step, verdict


def _skip_step(prime, exc):
    return {"prime": str(prime), "residue_field": None,
            "verdict": "skipped_bad_prime", "meataxe": None,
            "detail": str(exc)}


# ---------------------------------------------------------------------------
# the engine


def compute_self_digest(cert):
    """Integrity checksum over the whole document minus the checksum
    field itself; a cheap first line of tamper evidence (the replay in
    verify is the real one)."""
    doc = cert.to_json()
    doc.pop("self_digest", None)
    return digest(doc)


def _make_cert(rep, config, **kw):
    base = {
        "toolkit_version": TOOLKIT_VERSION,
        "input_digest": rep_digest(rep),
        "label": rep.label,
        "config": config,
        "base_ring": None,
        "lattice": None,
        "steps": [],
        "rule": None,
        "conclusion": INCONCLUSIVE_RUN,
        "witness": None,
        "family": None,
        "reducible_primes": [],
        "reason": None,
        "self_digest": "",
    }
    base.update(kw)
    cert = Certificate(**base)
    cert.self_digest = compute_self_digest(cert)
    return cert


def _direct_step(field_rep, seed, budget):
    """The zero-ideal probe: MeatAxe over K itself."""
    verdict = is_irreducible(field_rep, seed=seed, budget=budget)
    step = {
        "prime": "(0)",
        "residue_field": field_rep.ring.to_json(),
        "verdict": verdict.status,
        "meataxe": _transcript_json(field_rep, verdict),
    }
    return step, verdict


def _format_rows(K, rows):
    return [[K.format(a) for a in row] for row in rows]


def _inconclusive_reason(reducible, probe_status):
    parts = []
    if reducible:
        parts.append("reductions were reducible at %s, which the one-sided "
                     "criterion cannot convert into a conclusion over K"
                     % ", ".join(reducible))
    else:
        parts.append("no candidate prime produced an irreducible reduction")
    if probe_status == INCONCLUSIVE:
        parts.append("the direct search over K found no reducibility witness")
    elif probe_status == IRREDUCIBLE:
        parts.append("the direct factor analysis over K found no invariant "
                     "subspace (not a certifying rule here)")
    return "undecided: " + "; ".join(parts)


def certify(rep, primes=None, seed=0, budget=200, max_primes=50,
            oracle_check=False):
    """Run the criterion on a representation over Q or Q(t).

    primes: optional explicit candidate list (ints, PrimeSpec strings, or
    PrimeSpec objects); auto-selected ascending when omitted.  Explicit
    lists are tried in full; the automatic search gives up on the prime
    route after AUTO_PATIENCE fruitless reductions.  seed and budget feed
    every MeatAxe call.  oracle_check additionally enumerates invariant
    subspaces of each finite reduction when small enough and insists the
    verdict matches.

    Returns a Certificate; never raises for ordinary non-decisions (those
    become conclusion Inconclusive with a reason).
    """
    K = rep.ring
    if not (K == QQ or isinstance(K, RationalFunctionField)
            or K == ZZ or isinstance(K, PolynomialRingZ)):
        raise ValueError("certify expects a representation over Q or Q(t) "
                         "(or integrally over Z or Z[t]); for finite fields "
                         "use the MeatAxe directly")
    config = {
        "primes": (None if primes is None else
                   [x if isinstance(x, int) else str(x) for x in primes]),
        "seed": seed,
        "budget": budget,
        "max_primes": max_primes,
        "oracle": bool(oracle_check),
    }
    field_rep = _field_rep(rep)

    try:
        lat, int_rep = saturate(field_rep)
    except BudgetExceeded as exc:
        step, verdict = _direct_step(field_rep, seed, budget)
        if verdict.status == REDUCIBLE:
            return _make_cert(rep, config, steps=[step],
                              rule=RULE_DIRECT_OVER_K,
                              conclusion=REDUCIBLE_WITH_WITNESS,
                              witness=_format_rows(field_rep.ring,
                                                   verdict.witness))
        return _make_cert(rep, config, steps=[step],
                          reason="no-integral-model: %s" % (exc,))

    R = int_rep.ring
    KL = lat.ring.fraction_field()
    lattice_rows = [[KL.format(lat.basis.entry(i, j))
                     for j in range(lat.dim)] for i in range(lat.dim)]
    steps = []
    reducible = []
    explicit = primes is not None

    if explicit:
        candidates = _normalize_prime_list(primes, R)
    elif R == ZZ:
        candidates = [PrimeSpec.integer(p)
                      for p in _auto_primes_z(int_rep, max_primes)]
    else:
        candidates = []
        for p in _primes_ascending():
            for c in AUTO_SHIFTS:
                candidates.append(PrimeSpec.maximal(p, c, R))
            if len(candidates) >= 3 * max_primes:
                break

    def finish(**kw):
        return _make_cert(rep, config, base_ring=R.to_json(),
                          lattice=lattice_rows, steps=steps,
                          reducible_primes=list(reducible), **kw)

    fruitless = 0
    for prime in candidates:
        if not explicit and (fruitless >= AUTO_PATIENCE
                             or len(steps) >= max_primes):
            break
        if prime.kind == PrimeSpec.LINEAR:
            fam = _linear_descent(int_rep, lat, prime, steps, seed, budget,
                                  max_primes, oracle_check)
            if fam is not None:
                return finish(rule=RULE_HEIGHT_ONE_FAMILY,
                              conclusion=IRREDUCIBLE_CERTIFIED,
                              family=fam)
            fruitless += 1
            continue
        try:
            red = reduce_rep(int_rep, lat, prime)
        except BadPrime as exc:
            if explicit:
                steps.append(_skip_step(prime, exc))
            continue
        step, verdict = _run_step(red, prime, seed, budget, oracle_check)
        steps.append(step)
        if verdict.status == IRREDUCIBLE:
            return finish(rule=RULE_REGULAR_ONE_PRIME,
                          conclusion=IRREDUCIBLE_CERTIFIED)
        if verdict.status == REDUCIBLE:
            reducible.append(str(prime))
        fruitless += 1

    # Z[t] auto mode: try the height-one descent before giving up
    if not explicit and isinstance(R, PolynomialRingZ):
        for c in AUTO_SHIFTS:
            prime = PrimeSpec.linear(c, R)
            fam = _linear_descent(int_rep, lat, prime, steps, seed, budget,
                                  max_primes, oracle_check)
            if fam is not None:
                return finish(rule=RULE_HEIGHT_ONE_FAMILY,
                              conclusion=IRREDUCIBLE_CERTIFIED,
                              family=fam)

    step, verdict = _direct_step(field_rep, seed, budget)
    steps.append(step)
    if verdict.status == REDUCIBLE:
        return finish(rule=RULE_DIRECT_OVER_K,
                      conclusion=REDUCIBLE_WITH_WITNESS,
                      witness=_format_rows(field_rep.ring, verdict.witness))
    return finish(reason=_inconclusive_reason(reducible, verdict.status))


def _linear_descent(int_rep, lat, prime, steps, seed, budget,
                    max_primes, oracle_check):
    """Height-one route: reduce at (t-c) to a representation over Q and
    certify that recursively.  On success appends the step (with the
    sub-certificate embedded) and returns the family list; otherwise
    records the failed step and returns None."""
    try:
        red = reduce_rep(int_rep, lat, prime)
    except BadPrime as exc:
        steps.append(_skip_step(prime, exc))
        return None
    sub = certify(red, primes=None, seed=seed, budget=budget,
                  max_primes=max_primes, oracle_check=oracle_check)
    step = {
        "prime": str(prime),
        "residue_field": red.ring.to_json(),
        "verdict": ("irreducible"
                    if sub.conclusion == IRREDUCIBLE_CERTIFIED
                    else "undecided"),
        "meataxe": None,
        "sub_certificate": sub.to_json(),
    }
    steps.append(step)
    if sub.conclusion != IRREDUCIBLE_CERTIFIED:
        return None
    if sub.family:
        return [str(prime)] + list(sub.family)
    deciding = [s["prime"] for s in sub.steps if s["verdict"] == IRREDUCIBLE]
    return [str(prime)] + deciding


# ---------------------------------------------------------------------------
# replay


def family_condition_trivial_intersection(family, ring):
    """Symbolic condition (i): the recorded primes are pairwise distinct
    nonzero primes, so the (implicitly infinite) family they are drawn
    from has trivial intersection.  For distinct rational primes this is
    the classical statement that an integer divisible by arbitrarily
    large primes is zero; the (t-c) entry contributes a height-one prime
    meeting the lifted rational primes only at maximal ideals."""
    if not family:
        return False
    specs = []
    for text in family:
        spec = None
        for base in (ring, ZZ):
            try:
                spec = PrimeSpec.parse(text, base)
                break
            except (BadPrime, ValueError, TypeError):
                continue
        if spec is None or spec.kind == PrimeSpec.ZERO:
            return False
        specs.append(spec)
    return len(set(str(s) for s in specs)) == len(specs)


def _parse_rows(K, rows, dim):
    out = []
    for row in rows:
        if len(row) != dim:
            raise ValueError("row length %d, expected %d" % (len(row), dim))
        out.append(tuple(K.parse(s) for s in row))
    return out


def _witness_checks(cert, field_rep):
    K = field_rep.ring
    try:
        rows = _parse_rows(K, cert.witness, field_rep.dim)
    except (ValueError, TypeError):
        return False
    if not (0 < len(rows) < field_rep.dim):
        return False
    rows = _echelon_rows(K, rows)
    if len(rows) == 0 or len(rows) >= field_rep.dim:
        return False
    return subspace_is_invariant(K, field_rep.generators, rows)


def _certifying_step_checks(cert):
    """One irreducible step at a prime with a regular local localization
    must exist for the one-prime rules."""
    try:
        R = ring_from_json(cert.base_ring)
    except (ValueError, TypeError, KeyError):
        return False
    for step in cert.steps:
        if step.get("verdict") != IRREDUCIBLE or step.get("meataxe") is None:
            continue
        try:
            spec = PrimeSpec.parse(step.get("prime", ""), R)
        except (BadPrime, ValueError, TypeError):
            continue
        if spec.kind in (PrimeSpec.INTEGER, PrimeSpec.MAXIMAL):
            return True
    return False


def verify(cert, rep):
    """Deterministically re-execute the certified run and audit the
    conclusion; True only when everything matches.

    Raises VersionMismatch when the certificate was written by a different
    toolkit version (nothing else raises; tampered content returns False).
    """
    if cert.toolkit_version != TOOLKIT_VERSION:
        raise VersionMismatch("certificate version %r, toolkit %r"
                              % (cert.toolkit_version, TOOLKIT_VERSION))
    try:
        if cert.self_digest != compute_self_digest(cert):
            return False
        if cert.input_digest != rep_digest(rep):
            return False
        cfg = cert.config
        fresh = certify(rep,
                        primes=cfg.get("primes"),
                        seed=cfg.get("seed", 0),
                        budget=cfg.get("budget", 200),
                        max_primes=cfg.get("max_primes", 50),
                        oracle_check=cfg.get("oracle", False))
        if canonical_json(fresh.to_json()) != canonical_json(cert.to_json()):
            return False
        # independent audits, not relying on the rerun
        field_rep = _field_rep(rep)
        if cert.conclusion == REDUCIBLE_WITH_WITNESS:
            if cert.rule != RULE_DIRECT_OVER_K or cert.witness is None:
                return False
            return _witness_checks(cert, field_rep)
        if cert.conclusion == IRREDUCIBLE_CERTIFIED:
            if cert.rule in (RULE_DVR, RULE_REGULAR_ONE_PRIME):
                return _certifying_step_checks(cert)
            if cert.rule == RULE_HEIGHT_ONE_FAMILY:
                return _family_checks(cert, rep)
            return False
        if cert.conclusion == INCONCLUSIVE_RUN:
            return bool(cert.reason)
        return False
    except (IrredcertError, AssertionError):
        return False
    except (ValueError, TypeError, KeyError, AttributeError):
        return False


def _family_checks(cert, rep):
    """Audit the height-one route: replay the (t-c) reduction and verify
    the embedded sub-certificate against it, then the symbolic trivial
    intersection condition on the recorded family."""
    field_rep = _field_rep(rep)
    lat, int_rep = saturate(field_rep)
    R = int_rep.ring
    if not isinstance(R, PolynomialRingZ):
        return False
    if not family_condition_trivial_intersection(cert.family, R):
        return False
    for step in cert.steps:
        if "sub_certificate" not in step:
            continue
        if step.get("verdict") != IRREDUCIBLE:
            continue
        try:
            prime = PrimeSpec.parse(step["prime"], R)
        except (BadPrime, ValueError):
            return False
        if prime.kind != PrimeSpec.LINEAR:
            return False
        red = reduce_rep(int_rep, lat, prime)
        sub = Certificate.from_json(step["sub_certificate"])
        if str(prime) != cert.family[0]:
            return False
        if verify(sub, red):
            return True
    return False
