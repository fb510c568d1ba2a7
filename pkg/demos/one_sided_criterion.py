#!/usr/bin/env python3
"""Walk through the one-sided criterion on the standard S3 representation.

The script certifies irreducibility over Q from a single good reduction,
then shows why the criterion cannot be run backwards: mod 3 the same
lattice reduction is reducible, with an explicit invariant line, yet the
representation is irreducible over Q.  The exhaustive oracle counts
invariant subspaces on both sides so nothing rests on the MeatAxe alone.
"""

import json
import pathlib

from irredcert import (
    PrimeSpec,
    certify,
    count_invariant,
    load_rep,
    reduce_rep,
    saturate,
    verify,
)

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"


def main():
    rep = load_rep(DATA / "s3.json")
    print("representation:", rep.label)

    # Auto mode: ascending primes, skipping determinant divisors.
    cert = certify(rep)
    print("\ncertify ->", cert.conclusion, "via rule", cert.rule)
    for step in cert.steps:
        print("  step at", step["prime"], "->", step["verdict"])
    assert verify(cert, rep)
    print("verify(cert, rep) -> True")

    # The reduction mod 3 is reducible: the criterion is one-sided.
    lat, int_rep = saturate(rep)
    for p in (2, 3, 5):
        red = reduce_rep(int_rep, lat, PrimeSpec.integer(p))
        n = count_invariant(red)
        print("\nmod %d: %d invariant subspaces (oracle)" % (p, n))
        if n > 2:
            restricted = certify(rep, primes=[p])
            print("  certify restricted to {%d} -> %s" % (p, restricted.conclusion))
            print("  reducible primes:", restricted.reducible_primes)
            print("  reason:", restricted.reason)

    # A genuinely reducible input ends with a field-level witness instead.
    scaled = load_rep(DATA / "s3_scaled.json")
    cert2 = certify(scaled)
    print("\n%s:" % (scaled.label,))
    print("  stable lattice basis:", json.dumps(cert2.lattice))
    print("  conclusion:", cert2.conclusion, "(same group, just a rescaled lattice)")


if __name__ == "__main__":
    main()
