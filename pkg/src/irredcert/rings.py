"""Exact scalar arithmetic for every base ring and residue field in the package.

A ring is a small immutable descriptor object; its elements are plain Python
data manipulated through the descriptor's methods:

    Z        int
    Q        fractions.Fraction (always in lowest terms)
    Z[t]     tuple of int coefficients, ascending degree, no trailing zeros;
             the zero polynomial is the empty tuple ()
    Q(t)     pair (num, den) of Fraction-coefficient tuples with den monic
             and gcd(num, den) = 1; zero is ((), (Fraction(1),))
    F_p      int in [0, p)
    F_{p^k}  tuple of ints in [0, p), ascending, trimmed, length < k

Keeping elements as unboxed data makes matrices cheap (tuples of values) and
gives structural equality and hashing for free.  No floating point is used
anywhere: certified results must be bit-exact.

String formats for all of these ("3/4", "t^2+2*t+1/3", "x^2+x+1 mod 2") are
documented in docs/formats.md; parse() and format() implement that grammar.
"""

from fractions import Fraction

from .errors import BadPrime, IntegralityError, SingularError

# ---------------------------------------------------------------------------
# integer utilities


def xgcd(a, b):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


# The witness set {2,3,5,7,11,13,17} is known to be deterministic for
# n < 3.4e14 (Pomerance-Selfridge-Wagstaff style verification); we stop a bit
# short of the published bound.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17)
_MR_BOUND = 330 * 10 ** 12


def is_prime(n):
    """Deterministic Miller-Rabin for n < 3.3e14; larger inputs raise BadPrime."""
    if n >= _MR_BOUND:
        raise BadPrime("cannot certify primality of %d: beyond the deterministic "
                       "witness bound %d" % (n, _MR_BOUND))
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# polynomial string grammar (shared by Z[t], Q(t) and F_{p^k} elements)
#
#   poly   := ['+'|'-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := number | var ['^' nat]
#   number := nat ['/' nat]
#
# Whitespace is ignored.  Multiplication must be explicit ("2*t", not "2t").


def _tokenize_poly(s):
    tokens = []
    i = 0
    n = len(s)
    while i < n:
        c = s[i]
        if c.isspace():
            i += 1
        elif c in "+-*/^":
            tokens.append(c)
            i += 1
        elif c.isdigit():
            j = i
            while j < n and s[j].isdigit():
                j += 1
            tokens.append(int(s[i:j]))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (s[j].isalnum() or s[j] == "_"):
                j += 1
            tokens.append(s[i:j])
            i = j
        else:
            raise ValueError("bad character %r in polynomial %r" % (c, s))
    return tokens


def parse_poly_string(s, var):
    """Parse the polynomial grammar above; returns {exponent: Fraction}."""
    tokens = _tokenize_poly(s)
    if not tokens:
        raise ValueError("empty polynomial string")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        t = tokens[pos]
        pos += 1
        return t

    def parse_factor():
        t = take()
        if isinstance(t, int):
            num = t
            if peek() == "/":
                take()
                d = take()
                if not isinstance(d, int) or d == 0:
                    raise ValueError("bad denominator in %r" % (s,))
                return Fraction(num, d), 0
            return Fraction(num), 0
        if isinstance(t, str):
            if t != var:
                raise ValueError("unknown symbol %r (variable is %r)" % (t, var))
            e = 1
            if peek() == "^":
                take()
                e = take()
                if not isinstance(e, int) or e < 0:
                    raise ValueError("bad exponent in %r" % (s,))
            return Fraction(1), e
        raise ValueError("unexpected token %r in %r" % (t, s))

    def parse_term():
        coef, exp = parse_factor()
        while peek() == "*":
            take()
            c2, e2 = parse_factor()
            coef *= c2
            exp += e2
        return coef, exp

    coeffs = {}
    first = True
    while pos < len(tokens):
        sign = 1
        t = peek()
        if t == "+" or t == "-":
            take()
            sign = -1 if t == "-" else 1
        elif not first:
            raise ValueError("missing operator in %r" % (s,))
        coef, exp = parse_term()
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
        first = False
    return {e: c for e, c in coeffs.items() if c != 0}


def format_poly(coeffs, var):
    """Format ascending coefficients (ints or Fractions) per the grammar."""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = str(a)
        else:
            v = var if e == 1 else "%s^%d" % (var, e)
            body = v if a == 1 else "%s*%s" % (a, v)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# small polynomial kernels used internally by the descriptors
# (coefficient lists ascending, trimmed)


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fr_add(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _fr_neg(a):
    return [-x for x in a]


def _fr_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _fr_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] * inv
        q[k] = f
        for i in range(len(b)):
            a[k + i] -= f * b[i]
        _trim(a)
    return _trim(q), a


def _fr_gcd_monic(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _fr_divmod(a, b)[1]
    if a:
        inv = 1 / a[-1]
        a = [x * inv for x in a]
    return a


def _fp_mod(c, p):
    return _trim([x % p for x in c])


def _fp_add(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] * inv % p
        q[k] = f
        for i in range(len(b)):
            a[k + i] = (a[k + i] - f * b[i]) % p
        _trim(a)
    return _trim(q), a


def _fp_gcd_monic(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _fp_xgcd(a, b, p):
    """Extended gcd in F_p[x]: (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = list(a), list(b)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        q, r = _fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, _fp_sub(u0, _fp_mul(q, u1, p), p)
        v0, v1 = v1, _fp_sub(v0, _fp_mul(q, v1, p), p)
    if r0:
        inv = pow(r0[-1], p - 2, p)
        r0 = [x * inv % p for x in r0]
        u0 = [x * inv % p for x in u0]
        v0 = [x * inv % p for x in v0]
    return r0, u0, v0


def _fp_powmod(base, e, mod, p):
    """base^e mod (mod) in F_p[x], e an arbitrary nonnegative int."""
    result = [1]
    base = _fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, p), mod, p)[1]
        base = _fp_divmod(_fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def modulus_is_irreducible(modulus, p):
    """Rabin's test: monic f of degree k is irreducible over F_p iff
    x^(p^k) = x (mod f) and gcd(x^(p^(k/l)) - x, f) = 1 for primes l | k."""
    k = len(modulus) - 1
    f = list(modulus)
    x = [0, 1]
    for ell in _prime_factors(k):
        h = _fp_powmod(x, p ** (k // ell), f, p)
        g = _fp_gcd_monic(_fp_sub(h, x, p), f, p)
        if len(g) - 1 > 0:
            return False
    h = _fp_powmod(x, p ** k, f, p)
    return _fp_sub(h, x, p) == []


# ---------------------------------------------------------------------------
# descriptors


class RingDescriptor:
    """Base class; subclasses fill in arithmetic on their raw element type."""

    kind = None
    is_field = False
    characteristic = 0

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return a == self.zero()

    def is_one(self, a):
        return a == self.one()

    def pow(self, a, e):
        """a^e by square-and-multiply; negative e inverts first (fields/units)."""
        if e < 0:
            a = self.inv(a)
            e = -e
        result = self.one()
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def div(self, a, b):
        if not self.is_field:
            raise SingularError("division is only defined over fields; "
                                "use divexact over %s" % (self,))
        return self.mul(a, self.inv(b))

    def fraction_field(self):
        return self

    def to_fraction_field(self, a):
        return a

    def from_fraction_field(self, a):
        return a

    def __repr__(self):
        return self.kind

    def __ne__(self, other):
        return not self.__eq__(other)


class IntegerRing(RingDescriptor):
    """The ring Z; elements are Python ints."""

    kind = "Z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, a):
        if isinstance(a, bool):
            raise TypeError("bool is not an integer scalar")
        if isinstance(a, int):
            return a
        if isinstance(a, Fraction):
            if a.denominator != 1:
                raise IntegralityError("%s is not an integer" % (a,))
            return int(a)
        raise TypeError("cannot coerce %r into Z" % (a,))

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a == 1 or a == -1

    def inv(self, a):
        if not self.is_unit(a):
            raise SingularError("%d is not a unit in Z" % (a,))
        return a

    def divexact(self, a, b):
        if b == 0 or a % b != 0:
            raise IntegralityError("%d does not divide %d in Z" % (b, a))
        return a // b

    def fraction_field(self):
        return QQ

    def to_fraction_field(self, a):
        return Fraction(a)

    def from_fraction_field(self, a):
        if a.denominator != 1:
            raise IntegralityError("%s is not an integer" % (a,))
        return int(a)

    def format(self, a):
        return str(a)

    def parse(self, s):
        s = s.strip()
        body = s[1:] if s[:1] in "+-" else s
        if not body.isdigit():
            raise ValueError("bad integer literal %r" % (s,))
        return int(s)

    def to_json(self):
        return {"ring": "Z"}

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")


class RationalField(RingDescriptor):
    """The field Q; elements are Fractions in lowest terms."""

    kind = "Q"
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, a):
        if isinstance(a, bool):
            raise TypeError("bool is not a rational scalar")
        if isinstance(a, int):
            return Fraction(a)
        if isinstance(a, Fraction):
            return a
        raise TypeError("cannot coerce %r into Q" % (a,))

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise SingularError("division by zero in Q")
        return 1 / a

    def format(self, a):
        return str(a)

    def parse(self, s):
        s = s.strip()
        num, slash, den = s.partition("/")
        try:
            if slash:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError):
            raise ValueError("bad rational literal %r" % (s,)) from None

    def to_json(self):
        return {"ring": "Q"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PolynomialRingZ(RingDescriptor):
    """Z[t]; elements are tuples of int coefficients, ascending, trimmed."""

    kind = "Z[t]"

    def __init__(self, var="t"):
        self.var = var

    def zero(self):
        return ()

    def one(self):
        return (1,)

    def coerce(self, a):
        if isinstance(a, bool):
            raise TypeError("bool is not a polynomial scalar")
        if isinstance(a, int):
            return (a,) if a else ()
        if isinstance(a, Fraction):
            if a.denominator != 1:
                raise IntegralityError("%s is not in Z[%s]" % (a, self.var))
            return self.coerce(int(a))
        if isinstance(a, (tuple, list)):
            out = []
            for c in a:
                if isinstance(c, Fraction):
                    if c.denominator != 1:
                        raise IntegralityError("%s is not in Z[%s]" % (c, self.var))
                    c = int(c)
                elif isinstance(c, bool) or not isinstance(c, int):
                    raise TypeError("bad coefficient %r" % (c,))
                out.append(c)
            return tuple(_trim(out))
        raise TypeError("cannot coerce %r into Z[%s]" % (a, self.var))

    def add(self, a, b):
        n = max(len(a), len(b))
        out = [0] * n
        for i, x in enumerate(a):
            out[i] = x
        for i, x in enumerate(b):
            out[i] += x
        return tuple(_trim(out))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return tuple(_trim(out))

    def is_unit(self, a):
        return a == (1,) or a == (-1,)

    def inv(self, a):
        if not self.is_unit(a):
            raise SingularError("%r is not a unit in Z[%s]" % (a, self.var))
        return a

    def divexact(self, a, b):
        K = self.fraction_field()
        q = K.div(self.to_fraction_field(a), self.to_fraction_field(b))
        return self.from_fraction_field(q)

    def degree(self, a):
        return len(a) - 1

    def evaluate(self, a, c):
        """Evaluate at an integer c (the residue map t -> c)."""
        acc = 0
        for coef in reversed(a):
            acc = acc * c + coef
        return acc

    def fraction_field(self):
        return RationalFunctionField(self.var)

    def to_fraction_field(self, a):
        return (tuple(Fraction(c) for c in a), (Fraction(1),))

    def from_fraction_field(self, a):
        num, den = a
        if len(den) != 1:
            raise IntegralityError("denominator is not constant")
        d = den[0]
        out = []
        for c in num:
            q = c / d
            if q.denominator != 1:
                raise IntegralityError("%s has non-integral coefficients" % (q,))
            out.append(int(q))
        return tuple(_trim(out))

    def format(self, a):
        return format_poly(a, self.var)

    def parse(self, s):
        coeffs = parse_poly_string(s, self.var)
        deg = max(coeffs) if coeffs else 0
        out = [0] * (deg + 1)
        for e, c in coeffs.items():
            if c.denominator != 1:
                raise IntegralityError("%r is not in Z[%s]" % (s, self.var))
            out[e] = int(c)
        return tuple(_trim(out))

    def to_json(self):
        return {"ring": "Z[t]", "var": self.var}

    def __repr__(self):
        return "Z[%s]" % (self.var,)

    def __eq__(self, other):
        return isinstance(other, PolynomialRingZ) and other.var == self.var

    def __hash__(self):
        return hash(("Z[t]", self.var))


class RationalFunctionField(RingDescriptor):
    """Q(t); elements are (num, den) pairs of Fraction tuples, den monic,
    gcd(num, den) = 1."""

    kind = "Q(t)"
    is_field = True

    def __init__(self, var="t"):
        self.var = var

    def _normalize(self, num, den):
        num, den = list(num), list(den)
        _trim(num)
        _trim(den)
        if not den:
            raise SingularError("zero denominator in Q(%s)" % (self.var,))
        if not num:
            return ((), (Fraction(1),))
        g = _fr_gcd_monic(num, den)
        if len(g) > 1:
            num = _fr_divmod(num, g)[0]
            den = _fr_divmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            inv = 1 / lead
            num = [x * inv for x in num]
            den = [x * inv for x in den]
        return (tuple(num), tuple(den))

    def zero(self):
        return ((), (Fraction(1),))

    def one(self):
        return ((Fraction(1),), (Fraction(1),))

    def coerce(self, a):
        if isinstance(a, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(a, int) or isinstance(a, Fraction):
            a = Fraction(a)
            return ((a,), (Fraction(1),)) if a else self.zero()
        if isinstance(a, tuple) and len(a) == 2 and isinstance(a[0], (tuple, list)) \
                and isinstance(a[1], (tuple, list)):
            num = [Fraction(c) for c in a[0]]
            den = [Fraction(c) for c in a[1]]
            return self._normalize(num, den)
        if isinstance(a, (tuple, list)):
            return self._normalize([Fraction(c) for c in a], [Fraction(1)])
        raise TypeError("cannot coerce %r into Q(%s)" % (a, self.var))

    def add(self, a, b):
        an, ad = a
        bn, bd = b
        num = _fr_add(_fr_mul(an, bd), _fr_mul(bn, ad))
        den = _fr_mul(ad, bd)
        return self._normalize(num, den)

    def neg(self, a):
        return (tuple(-x for x in a[0]), a[1])

    def mul(self, a, b):
        num = _fr_mul(a[0], b[0])
        den = _fr_mul(a[1], b[1])
        return self._normalize(num, den)

    def is_unit(self, a):
        return bool(a[0])

    def inv(self, a):
        if not a[0]:
            raise SingularError("division by zero in Q(%s)" % (self.var,))
        return self._normalize(a[1], a[0])

    def is_polynomial(self, a):
        return len(a[1]) == 1

    def is_constant(self, a):
        return len(a[1]) == 1 and len(a[0]) <= 1

    def as_constant(self, a):
        """Return the element as a Fraction, or raise if it involves t."""
        if not self.is_constant(a):
            raise IntegralityError("%s is not constant" % (self.format(a),))
        return a[0][0] if a[0] else Fraction(0)

    def evaluate(self, a, c):
        """Specialize t -> c (a Fraction/int); SingularError at a pole."""
        c = Fraction(c)
        num = sum(coef * c ** i for i, coef in enumerate(a[0]))
        den = sum(coef * c ** i for i, coef in enumerate(a[1]))
        if den == 0:
            raise SingularError("pole at %s = %s" % (self.var, c))
        return num / den

    def format(self, a):
        num, den = a
        if len(den) == 1:
            return format_poly(num, self.var)
        return "(%s)/(%s)" % (format_poly(num, self.var),
                              format_poly(den, self.var))

    def parse(self, s):
        s = s.strip()
        if s.startswith("(") and ")/(" in s and s.endswith(")"):
            i = s.index(")/(")
            ns, ds = s[1:i], s[i + 3:-1]
            if "(" in ns or ")" in ns or "(" in ds or ")" in ds:
                raise ValueError("bad rational function literal %r" % (s,))
            num = parse_poly_string(ns, self.var)
            den = parse_poly_string(ds, self.var)
        else:
            num = parse_poly_string(s, self.var)
            den = {0: Fraction(1)}

        def todense(d):
            deg = max(d) if d else 0
            out = [Fraction(0)] * (deg + 1)
            for e, c in d.items():
                out[e] = c
            return out

        return self._normalize(todense(num), todense(den))

    def to_json(self):
        return {"ring": "Q(t)", "var": self.var}

    def __repr__(self):
        return "Q(%s)" % (self.var,)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.var == self.var

    def __hash__(self):
        return hash(("Q(t)", self.var))


class PrimeField(RingDescriptor):
    """F_p; elements are ints in [0, p)."""

    kind = "Fp"
    is_field = True

    def __init__(self, p):
        if not is_prime(p):
            raise BadPrime("%r is not prime" % (p,))
        self.p = p
        self.characteristic = p
        self.order = p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def coerce(self, a):
        if isinstance(a, bool):
            raise TypeError("bool is not a field scalar")
        if isinstance(a, int):
            return a % self.p
        if isinstance(a, Fraction):
            if a.denominator % self.p == 0:
                raise BadPrime("denominator of %s vanishes mod %d" % (a, self.p))
            return a.numerator * pow(a.denominator, self.p - 2, self.p) % self.p
        raise TypeError("cannot coerce %r into F_%d" % (a, self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise SingularError("division by zero in F_%d" % (self.p,))
        return pow(a, self.p - 2, self.p)

    def iter_elements(self):
        return iter(range(self.p))

    def format(self, a):
        return str(a)

    def parse(self, s):
        s = s.strip()
        body = s[1:] if s[:1] in "+-" else s
        if not body.isdigit():
            raise ValueError("bad F_%d literal %r" % (self.p, s))
        return int(s) % self.p

    def to_json(self):
        return {"ring": "Fp", "p": self.p}

    def __repr__(self):
        return "F_%d" % (self.p,)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


class ExtensionField(RingDescriptor):
    """F_{p^k} = F_p[x]/(modulus); elements are trimmed coefficient tuples.

    The modulus must be monic of degree 2..8 and irreducible over F_p
    (checked with Rabin's gcd test at construction); p is capped at 2^31.
    """

    kind = "Fq"
    is_field = True

    def __init__(self, p, modulus, var="x"):
        if not is_prime(p):
            raise BadPrime("%r is not prime" % (p,))
        if p > 2 ** 31:
            raise BadPrime("extension-field characteristic %d exceeds 2^31" % (p,))
        mod = [c % p for c in modulus]
        _trim(mod)
        k = len(mod) - 1
        if k < 2 or k > 8:
            raise ValueError("modulus degree must be between 2 and 8, got %d" % (k,))
        if mod[-1] != 1:
            raise ValueError("modulus must be monic")
        if not modulus_is_irreducible(mod, p):
            raise BadPrime("modulus %s is reducible over F_%d"
                           % (format_poly(mod, var), p))
        self.p = p
        self.k = k
        self.modulus = tuple(mod)
        self.var = var
        self.characteristic = p
        self.order = p ** k

    def zero(self):
        return ()

    def one(self):
        return (1,)

    def _reduce(self, c):
        c = [x % self.p for x in c]
        if len(c) > self.k:
            c = _fp_divmod(c, list(self.modulus), self.p)[1]
        return tuple(_trim(c))

    def coerce(self, a):
        if isinstance(a, bool):
            raise TypeError("bool is not a field scalar")
        if isinstance(a, int):
            a = a % self.p
            return (a,) if a else ()
        if isinstance(a, (tuple, list)):
            if not all(isinstance(c, int) and not isinstance(c, bool) for c in a):
                raise TypeError("bad coefficient in %r" % (a,))
            return self._reduce(list(a))
        raise TypeError("cannot coerce %r into %r" % (a, self))

    def add(self, a, b):
        return tuple(_fp_add(list(a), list(b), self.p))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        c = _fp_mul(list(a), list(b), self.p)
        return tuple(_fp_divmod(c, list(self.modulus), self.p)[1])

    def is_unit(self, a):
        return bool(a)

    def inv(self, a):
        if not a:
            raise SingularError("division by zero in %r" % (self,))
        g, u, _ = _fp_xgcd(list(a), list(self.modulus), self.p)
        if len(g) != 1:
            raise SingularError("non-invertible element %r" % (a,))
        inv_g = pow(g[0], self.p - 2, self.p)
        return tuple(_trim([x * inv_g % self.p for x in u]))

    def iter_elements(self):
        p, k = self.p, self.k
        for n in range(self.order):
            digits = []
            m = n
            for _ in range(k):
                digits.append(m % p)
                m //= p
            yield tuple(_trim(digits))

    def format(self, a):
        return format_poly(a, self.var)

    def parse(self, s):
        s = s.strip()
        body, sep, tail = s.partition(" mod ")
        if sep:
            if not tail.strip().isdigit() or int(tail) != self.p:
                raise ValueError("modulus suffix %r does not match p = %d"
                                 % (tail, self.p))
            s = body
        coeffs = parse_poly_string(s, self.var)
        deg = max(coeffs) if coeffs else 0
        out = [0] * (deg + 1)
        for e, c in coeffs.items():
            if c.denominator != 1:
                raise ValueError("non-integer coefficient in %r" % (s,))
            out[e] = c.numerator % self.p
        return self._reduce(out)

    def to_json(self):
        return {"ring": "Fq", "p": self.p, "modulus": list(self.modulus),
                "var": self.var}

    def __repr__(self):
        return "F_%d^%d" % (self.p, self.k)

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.modulus == self.modulus and other.var == self.var)

    def __hash__(self):
        return hash(("Fq", self.p, self.modulus, self.var))


ZZ = IntegerRing()
QQ = RationalField()


def ring_from_json(obj):
    """Inverse of RingDescriptor.to_json; also accepts the bare strings
    "Z", "Q", "Z[t]", "Q(t)" for convenience."""
    if isinstance(obj, str):
        obj = {"ring": obj}
    if not isinstance(obj, dict) or "ring" not in obj:
        raise ValueError("bad ring description %r" % (obj,))
    tag = obj["ring"]
    if tag == "Z":
        return ZZ
    if tag == "Q":
        return QQ
    if tag == "Z[t]":
        return PolynomialRingZ(obj.get("var", "t"))
    if tag == "Q(t)":
        return RationalFunctionField(obj.get("var", "t"))
    if tag == "Fp":
        return PrimeField(int(obj["p"]))
    if tag == "Fq":
        return ExtensionField(int(obj["p"]), [int(c) for c in obj["modulus"]],
                              obj.get("var", "x"))
    raise ValueError("unknown ring tag %r" % (tag,))
