"""Finite field contexts GF(p^e) and their quadratic extensions.

For efficiency, field elements carry no wrapper objects: an element of
GF(p^e) is an int in [0, p^e) whose base-p digits are its coordinates
in the polynomial basis, constant coordinate least significant.
Iterating range(q) therefore walks the field in odometer order
(constant coordinate fastest), and the integers 0 and 1 encode the
additive and multiplicative identities.  A FieldSpec instance supplies
the arithmetic and is passed around together with the elements.

GF(q^2) is modelled separately as GF(q)[s]/(s^2 - d) with d the first
non-square of GF(q)*: an extension element is an int u = a0 + a1*q
built from two base-field encodings, so base elements embed as
themselves and membership in the base line is the test u < q.

Construction validates everything (primality, monic irreducible
modulus); after that a FieldSpec is immutable and safe to share.
Internal lookup tables are built once at construction time.
"""

import itertools
from functools import lru_cache

from . import modpoly

# Lookup-table thresholds for extension fields.  Above these sizes the
# slow polynomial paths are used; correctness is identical.
_LOG_TABLE_MAX_Q = 4096
_ADD_TABLE_MAX_Q = 512

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class InternalCheckError(RuntimeError):
    """A redundant internal recomputation disagreed: an arithmetic bug,
    not a user error."""


def is_prime(n):
    """Deterministic Miller-Rabin, exact for all n below 3.3e24."""
    if n < 2:
        return False
    for sp in _MR_BASES:
        if n % sp == 0:
            return n == sp
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n):
    """Set of prime divisors by trial division (desk scale)."""
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.add(n)
    return out


def is_irreducible(m, p):
    """Irreducibility of a monic polynomial over GF(p).

    m is reducible iff it has an irreducible factor of degree at most
    deg(m)/2, and x**(p**i) - x is the product of all irreducibles of
    degree dividing i, so gcd checks for i up to deg(m)//2 decide.
    """
    m = list(m)
    e = modpoly.degree(m)
    if e <= 0:
        raise ValueError("modulus must have positive degree")
    x = [0, 1]
    for i in range(1, e // 2 + 1):
        xq = modpoly.powmod(x, p ** i, m, p)
        g = modpoly.gcd(modpoly.sub(xq, x, p), m, p)
        if modpoly.degree(g) > 0:
            return False
    return True


def _default_modulus(p, e):
    """Lexicographically smallest monic irreducible of degree e,
    coefficients compared constant term first."""
    for tail in itertools.product(range(p), repeat=e):
        m = list(tail) + [1]
        if is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("unreachable: irreducibles exist in every degree")


class FieldSpec:
    """Arithmetic context for GF(p^e); build instances via make_field().

    Elements are ints in [0, q).  Methods trust their operands; use
    field_arith() for a validating dispatcher.  pow() accepts
    arbitrary-precision exponents (negative allowed for nonzero base)
    and reduces them by the group order; pow(0, 0) is 1.
    """

    __slots__ = ("p", "e", "q", "modulus", "_pows", "_exp", "_log",
                 "_neg_table", "_add_table", "_half", "_quarter")

    def __init__(self, p, e, modulus):
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = tuple(modulus)
        self._pows = [p ** i for i in range(e + 1)]
        self._exp = self._log = self._neg_table = self._add_table = None
        if e >= 2 and self.q <= _LOG_TABLE_MAX_Q:
            self._build_log_tables()
        if e >= 2 and self.q <= _ADD_TABLE_MAX_Q:
            self._build_add_tables()
        if p != 2:
            self._half = self.inv(2 % self.q if e == 1 else 2)
            self._quarter = self.mul(self._half, self._half)
        else:
            self._half = self._quarter = None

    # -- identity ----------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.e, self.modulus)
                == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((FieldSpec, self.p, self.e, self.modulus))

    def __repr__(self):
        return f"FieldSpec({field_descriptor(self)!r})"

    # -- element encoding --------------------------------------------

    def coeffs(self, a):
        """Coordinate vector of an element, constant coordinate first."""
        p = self.p
        return tuple((a // self._pows[i]) % p for i in range(self.e))

    def element(self, coords):
        """Encode a coordinate vector (length <= e, zero padded)."""
        coords = list(coords)
        if len(coords) > self.e:
            raise ValueError(f"expected at most {self.e} coordinates")
        return sum((c % self.p) * self._pows[i] for i, c in enumerate(coords))

    def from_int(self, m):
        """Embed an integer via the prime subfield."""
        return m % self.p

    def elements(self):
        """All q elements in odometer order."""
        return range(self.q)

    @property
    def half(self):
        if self._half is None:
            raise ValueError("1/2 does not exist in characteristic 2")
        return self._half

    @property
    def quarter(self):
        if self._quarter is None:
            raise ValueError("1/4 does not exist in characteristic 2")
        return self._quarter

    # -- arithmetic ----------------------------------------------------

    def add(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        t = self._add_table
        if t is not None:
            return t[a * self.q + b]
        return self._add_slow(a, b)

    def neg(self, a):
        if self.e == 1:
            return -a % self.p
        t = self._neg_table
        if t is not None:
            return t[a]
        return self.element(-c for c in self.coeffs(a))

    def sub(self, a, b):
        if self.e == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return a * b % self.p
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inversion of zero in {self!r}")
        if self.e == 1:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._pow_slow(a, self.q - 2)

    def pow(self, a, n):
        if a == 0:
            if n > 0:
                return 0
            if n == 0:
                return 1
            raise ZeroDivisionError(f"negative power of zero in {self!r}")
        n %= self.q - 1
        if self.e == 1:
            return pow(a, n, self.p)
        if self._exp is not None:
            return self._exp[self._log[a] * n % (self.q - 1)]
        return self._pow_slow(a, n)

    def is_square(self, a):
        """Quadratic character test; zero counts as a square."""
        if self.p == 2:
            return True
        return a == 0 or self.pow(a, (self.q - 1) // 2) == 1

    # -- slow paths (no tables) ----------------------------------------

    def _add_slow(self, a, b):
        p, r, mult = self.p, 0, 1
        while a or b:
            r += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return r

    def _mul_slow(self, a, b):
        prod = modpoly.mulmod(list(self.coeffs(a)), list(self.coeffs(b)),
                              list(self.modulus), self.p)
        return self.element(prod)

    def _pow_slow(self, a, n):
        result = 1
        while n:
            if n & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            n >>= 1
        return result

    # -- table construction ---------------------------------------------

    def _build_log_tables(self):
        q = self.q
        fac = _prime_factors(q - 1)
        gen = next(g for g in range(2, q)
                   if all(self._pow_slow(g, (q - 1) // f) != 1 for f in fac))
        # exp is doubled so mul can index log[a] + log[b] without a mod
        exp = [1] * (2 * (q - 1))
        log = [0] * q
        acc = 1
        for i in range(1, q - 1):
            acc = self._mul_slow(acc, gen)
            exp[i] = exp[i + q - 1] = acc
            log[acc] = i
        self._exp, self._log = exp, log

    def _build_add_tables(self):
        q, p = self.q, self.p
        vecs = [self.coeffs(a) for a in range(q)]
        self._neg_table = [self.element(-c for c in v) for v in vecs]
        table = [0] * (q * q)
        for a in range(q):
            va, row = vecs[a], a * q
            for b in range(a, q):
                s = self.element((x + y) % p for x, y in zip(va, vecs[b]))
                table[row + b] = table[b * q + a] = s
        self._add_table = table


def make_field(p, e=1, modulus=None):
    """Construct GF(p**e).

    Without an explicit modulus, degree 1 uses the convention
    modulus = x, and degree >= 2 picks the lexicographically smallest
    monic irreducible (constant term compared first).  An explicit
    modulus must be monic of degree e and irreducible; coefficients
    are given constant term first and reduced mod p.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"e must be a positive integer, got {e!r}")
    if modulus is None:
        modulus = (0, 1) if e == 1 else _default_modulus(p, e)
    else:
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree e, "
                             "constant term first")
        if e >= 2 and not is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
    return FieldSpec(p, e, modulus)


_ARITH = {"add": 2, "sub": 2, "mul": 2, "neg": 1, "inv": 1, "pow": 2}


def field_arith(field, op, *operands):
    """Validating dispatcher over the FieldSpec methods.

    op is one of add/sub/mul/neg/inv/pow.  Element operands must be
    valid encodings for this exact field (a stray element of another
    field is rejected); the exponent of pow may be any integer.
    """
    if op not in _ARITH:
        raise ValueError(f"unknown field operation {op!r}")
    if len(operands) != _ARITH[op]:
        raise ValueError(f"{op} expects {_ARITH[op]} operands")
    n_elems = 1 if op == "pow" else _ARITH[op]
    for v in operands[:n_elems]:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < field.q:
            raise ValueError(f"{v!r} is not an element of {field!r} "
                             "(mixed-field operands?)")
    if op == "pow" and not isinstance(operands[1], int):
        raise ValueError("pow exponent must be an integer")
    return getattr(field, op)(*operands)


def field_descriptor(field):
    """Canonical text form: "p" for prime fields, else "p^e/c0,...,1"."""
    if field.e == 1:
        return str(field.p)
    mods = ",".join(str(c) for c in field.modulus)
    return f"{field.p}^{field.e}/{mods}"


def _factor_prime_power(n):
    if n < 2:
        raise ValueError(f"{n} is not a prime power")
    if is_prime(n):
        return n, 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e, m = 0, n
            while m % d == 0:
                m //= d
                e += 1
            if m != 1:
                raise ValueError(f"{n} is not a prime power")
            return d, e
        d += 1 if d == 2 else 2
    raise AssertionError("unreachable")


def parse_field_descriptor(text):
    """Parse "q", "p^e", or "p^e/c0,c1,...,1" into a field.

    A bare integer may be a prime or a prime power (e.g. "9" means
    GF(3^2) with the default modulus).
    """
    body, _, modpart = text.strip().partition("/")
    try:
        if "^" in body:
            ps, _, es = body.partition("^")
            p, e = int(ps), int(es)
        else:
            p, e = _factor_prime_power(int(body))
    except ValueError as exc:
        raise ValueError(f"bad field descriptor {text!r}: {exc}") from None
    modulus = None
    if modpart:
        try:
            modulus = tuple(int(c) for c in modpart.split(","))
        except ValueError:
            raise ValueError(f"bad modulus in field descriptor {text!r}") from None
    return make_field(p, e, modulus)


class QuadExt:
    """GF(q^2) built on a base field as GF(q)[s]/(s^2 - d).

    d is the first non-square in the enumeration order of GF(q)*, so
    s^((q-1)) = d^((q-1)/2) = -1 and Frobenius x -> x^q is conjugation
    (a0, a1) -> (a0, -a1).  Elements are ints u = a0 + a1*q; the base
    field embeds as the ints below q.  Requires odd characteristic.
    """

    __slots__ = ("base", "q", "size", "d")

    def __init__(self, base):
        if base.p == 2:
            raise ValueError("quadratic extension by a non-square "
                             "requires odd characteristic")
        self.base = base
        self.q = base.q
        self.size = base.q * base.q
        self.d = next(x for x in range(1, base.q) if not base.is_square(x))

    def __repr__(self):
        return f"QuadExt({field_descriptor(self.base)!r}, d={self.d})"

    def make(self, a0, a1):
        return a0 + a1 * self.q

    def parts(self, u):
        a1, a0 = divmod(u, self.q)
        return a0, a1

    def coeffs(self, u):
        a0, a1 = self.parts(u)
        return self.base.coeffs(a0) + self.base.coeffs(a1)

    def elements(self):
        return range(self.size)

    def in_base(self, u):
        return u < self.q

    def add(self, u, v):
        F = self.base
        a0, a1 = self.parts(u)
        b0, b1 = self.parts(v)
        return self.make(F.add(a0, b0), F.add(a1, b1))

    def sub(self, u, v):
        F = self.base
        a0, a1 = self.parts(u)
        b0, b1 = self.parts(v)
        return self.make(F.sub(a0, b0), F.sub(a1, b1))

    def neg(self, u):
        F = self.base
        a0, a1 = self.parts(u)
        return self.make(F.neg(a0), F.neg(a1))

    def mul(self, u, v):
        F = self.base
        a0, a1 = self.parts(u)
        b0, b1 = self.parts(v)
        re = F.add(F.mul(a0, b0), F.mul(self.d, F.mul(a1, b1)))
        im = F.add(F.mul(a0, b1), F.mul(a1, b0))
        return self.make(re, im)

    def inv(self, u):
        if u == 0:
            raise ZeroDivisionError(f"inversion of zero in {self!r}")
        F = self.base
        a0, a1 = self.parts(u)
        # conjugate over norm: norm = a0^2 - d*a1^2 lies in the base field
        nrm_inv = F.inv(F.sub(F.mul(a0, a0), F.mul(self.d, F.mul(a1, a1))))
        return self.make(F.mul(a0, nrm_inv), F.neg(F.mul(a1, nrm_inv)))

    def pow(self, u, n):
        if u == 0:
            if n > 0:
                return 0
            if n == 0:
                return 1
            raise ZeroDivisionError(f"negative power of zero in {self!r}")
        n %= self.size - 1
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, u)
            u = self.mul(u, u)
            n >>= 1
        return result

    def frobenius(self, u):
        a0, a1 = self.parts(u)
        return self.make(a0, self.base.neg(a1))


@lru_cache(maxsize=None)
def quadratic_extension(field):
    """The (cached) quadratic extension context of a field."""
    return QuadExt(field)


def sqrt_ext(ext, v, exhaustive_max=10_000):
    """Square roots of a base-field element, in GF(q) or GF(q^2).

    Returns the roots as extension encodings in ascending coordinate
    order: (0,) for v = 0, otherwise a pair.  A square is rooted in
    the base field (by exhaustive scan up to exhaustive_max elements,
    Tonelli-Shanks beyond); a non-square v is rooted as sqrt(v/d)*s,
    since v/d is then a square and s*s = d.
    """
    F = ext.base
    if v == 0:
        return (0,)
    if F.is_square(v):
        r = _base_sqrt(F, v, exhaustive_max)
        roots = (r, F.neg(r))
    else:
        w = _base_sqrt(F, F.mul(v, F.inv(ext.d)), exhaustive_max)
        roots = (ext.make(0, w), ext.make(0, F.neg(w)))
    return tuple(sorted(roots, key=ext.coeffs))


def _base_sqrt(F, v, exhaustive_max):
    """One square root of a known square v != 0 in GF(q), q odd."""
    if F.q <= exhaustive_max:
        return next(r for r in range(1, F.q) if F.mul(r, r) == v)
    return _tonelli_shanks(F, v)


def _tonelli_shanks(F, v):
    t, s = F.q - 1, 0
    while t % 2 == 0:
        t //= 2
        s += 1
    z = next(x for x in range(1, F.q) if not F.is_square(x))
    m, c = s, F.pow(z, t)
    u, r = F.pow(v, t), F.pow(v, (t + 1) // 2)
    while u != 1:
        i, w = 0, u
        while w != 1:
            w = F.mul(w, w)
            i += 1
        b = c
        for _ in range(m - i - 1):
            b = F.mul(b, b)
        m, c = i, F.mul(b, b)
        u, r = F.mul(u, c), F.mul(r, b)
    return r


def solve_y(ext, x):
    """All y in GF(q^2) with y*(1-y) = x, ascending encoding order.

    Completing the square gives y = (1 + r)/2 with r*r = 1 - 4x, so
    there is a single y exactly when x = 1/4.
    """
    F = ext.base
    disc = F.sub(1, F.mul(F.from_int(4), x))
    half = F.half
    ys = [ext.mul(ext.add(1, r), half) for r in sqrt_ext(ext, disc)]
    return tuple(sorted(ys))


def enumerate_v(ext):
    """The q-element set {v in GF(q^2) : v^q = 1 - v}, ascending.

    With Frobenius as conjugation, v = a0 + a1*s satisfies the
    equation iff a0 = 1 - a0, i.e. a0 = 1/2 with a1 free; the base
    field meets the set exactly in {1/2}.
    """
    F = ext.base
    h = F.half
    return [ext.make(h, a1) for a1 in range(F.q)]
