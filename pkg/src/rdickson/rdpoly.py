"""Evaluators for a three-parameter Dickson-type polynomial family.

The family D(n, k; a, x) is indexed by a degree n >= 0 and a kind
parameter k; over a field of characteristic p only k mod p matters.
With a = 1 the values satisfy v_0 = 2 - k, v_1 = 1 and the two-term
recurrence v_m = v_{m-1} - x * v_{m-2}, and the k-th member is the
integer combination k * (second kind) - (k - 1) * (first kind) of the
two classical kinds.  Each evaluator below is an independent route to
the same values, kept separate so they can be cross-checked:

  eval_definition   integer coefficient rows (any characteristic, any a)
  eval_recurrence   two-term recurrence with index reduction mod q^2 - 1
  eval_functional   through the parameter y with y(1 - y) = x in GF(q^2)
  eval_via_fnk      half-scaled integer form evaluated at 1 - 4x
  eval_a0           closed value at a = 0
  char2_eval        characteristic-2 reduction to a single kind
  closed_form       closed values for indices p^l, p^l + 1, p^l + 2

Coefficients are always assembled exactly over the integers and only
then reduced mod p; no route divides by quantities that can vanish.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import gf
from .gf import InternalCheckError


# -- polynomial value types ---------------------------------------------


def _format_terms(parts):
    """Join (coeff_text, degree, negative) triples into a readable sum."""
    if not parts:
        return "0"
    out = []
    for text, deg, negative in parts:
        var = "" if deg == 0 else ("x" if deg == 1 else f"x^{deg}")
        if text == "1" and var:
            text = ""
        body = f"{text}{'*' if text and var and text[-1] == ')' else ''}{var}" or "1"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"{'-' if negative else '+'} {body}")
    return " ".join(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs run from the constant term up
    and are kept canonical (no trailing zeros)."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(self.coeffs)
        n = len(c)
        while n and c[n - 1] == 0:
            n -= 1
        object.__setattr__(self, "coeffs", c[:n])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self):
        # decimal strings: the coefficients outgrow fixed-width ints fast
        return {"coeffs": [str(c) for c in self.coeffs]}

    def __str__(self):
        parts = [(str(abs(c)), i, c < 0)
                 for i, c in enumerate(self.coeffs) if c]
        return _format_terms(parts)


@dataclass(frozen=True)
class FieldPolynomial:
    """Dense polynomial with coefficients in a field, canonical form."""

    field: gf.FieldSpec
    coeffs: tuple

    def __post_init__(self):
        c = tuple(self.coeffs)
        n = len(c)
        while n and c[n - 1] == 0:
            n -= 1
        object.__setattr__(self, "coeffs", c[:n])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        F, acc = self.field, 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def to_json(self):
        F = self.field
        return {"field": gf.field_descriptor(F),
                "coeffs": [list(F.coeffs(c)) for c in self.coeffs]}

    def __str__(self):
        F = self.field
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            text = str(c) if F.e == 1 else "(" + ",".join(map(str, F.coeffs(c))) + ")"
            parts.append((text, i, False))
        return _format_terms(parts)


@dataclass(frozen=True)
class RdpParams:
    """Index triple (n, k, a); a is a field encoding, default 1."""

    n: int
    k: int
    a: int = 1

    def reduced(self, field):
        """Normalize the kind parameter into [0, p-1]."""
        return RdpParams(self.n, self.k % field.p, self.a)


# -- integer coefficient rows -------------------------------------------


@lru_cache(maxsize=None)
def first_kind_weights(n):
    """Integer row w of the first kind: value = sum_i w[i] (-x)^i a^(n-2i).

    w[i] = n/(n-i) * C(n-i, i) is an integer because it also equals
    C(n-i, i) + C(n-i-1, i-1).
    """
    if n == 0:
        return (2,)
    return tuple([1] + [comb(n - i, i) + comb(n - i - 1, i - 1)
                        for i in range(1, n // 2 + 1)])


@lru_cache(maxsize=None)
def second_kind_weights(n):
    """Integer row of the second kind: w[i] = C(n-i, i)."""
    return tuple(comb(n - i, i) for i in range(n // 2 + 1))


@lru_cache(maxsize=None)
def family_weights(n, k):
    """Row of the k-th member: k * second - (k-1) * first, over Z."""
    if n == 0:
        return (2 - k,)
    first = first_kind_weights(n)
    second = second_kind_weights(n)
    return tuple(k * s - (k - 1) * f for f, s in zip(first, second))


# -- evaluators ----------------------------------------------------------


def eval_definition(F, n, k, x, a=1):
    """Sum the integer coefficient rows; any characteristic, any a."""
    k %= F.p
    row = family_weights(n, k)
    negx = F.neg(x)
    if a == 1:
        acc = 0
        for w in reversed(row):
            acc = F.add(F.mul(acc, negx), F.from_int(w))
        return acc
    apow = [1] * (n + 1)
    for j in range(1, n + 1):
        apow[j] = F.mul(apow[j - 1], a)
    acc, xp = 0, 1
    for i, w in enumerate(row):
        acc = F.add(acc, F.mul(F.mul(F.from_int(w), xp), apow[n - 2 * i]))
        xp = F.mul(xp, negx)
    return acc


def value_at_quarter(F, n, k):
    """The constant (k(n-1) + 2) / 2^n the family takes at x = 1/4."""
    num = (k * ((n - 1) % F.p) + 2) % F.p
    return F.mul(num, F.inv(F.pow(F.from_int(2), n)))


def eval_a0(F, n, k, x):
    """a = 0 closed value: 0 for odd n, (2 - k)(-x)^l for n = 2l."""
    if n % 2:
        return 0
    return F.mul(F.from_int(2 - (k % F.p)), F.pow(F.neg(x), n // 2))


def eval_recurrence(F, n, k, x, a=1):
    """Two-term recurrence with index reduction mod q^2 - 1.

    For a = 1 and x != 1/4 the value depends only on n mod (q^2 - 1)
    once n >= 1, so arbitrary-precision indices cost O(q^2) field ops;
    the excluded point x = 1/4 takes its closed constant instead.
    Other a reduce to a = 1 by D(n,k; a,x) = a^n * D(n,k; 1, x/a^2)
    (odd characteristic; a = 0 is routed to eval_a0).
    """
    k %= F.p
    if a == 0:
        return eval_a0(F, n, k, x)
    if a != 1:
        if F.p == 2:
            raise ValueError("the scaling route needs odd characteristic")
        inner = eval_recurrence(F, n, k, F.mul(x, F.inv(F.mul(a, a))))
        return F.mul(F.pow(a, n), inner)
    if F.p != 2 and x == F.quarter:
        return value_at_quarter(F, n, k)
    if n >= 1:
        n = (n - 1) % (F.q * F.q - 1) + 1
    prev = F.from_int(2 - k)
    if n == 0:
        return prev
    cur = 1
    for _ in range(n - 1):
        prev, cur = cur, F.sub(cur, F.mul(x, prev))
    return cur


def eval_functional(F, n, k, x):
    """Value through the extension parameter y with y(1 - y) = x:

        k * (y^n (1-y) - y (1-y)^n) / (2y - 1) + y^n + (1-y)^n,

    for x != 1/4 (there y = 1/2 and the closed constant applies).  The
    two admissible y are swapped by y -> 1 - y and give the same value;
    the one with the smaller coordinate vector is used.  Odd p only.
    The result must land in GF(q); if not, the arithmetic is broken
    and InternalCheckError is raised.
    """
    if F.p == 2:
        raise ValueError("the functional route needs odd characteristic")
    k %= F.p
    if x == F.quarter:
        return value_at_quarter(F, n, k)
    ext = gf.quadratic_extension(F)
    y = _principal_y(ext, x)
    val = functional_map(ext, n, k, y)
    if not ext.in_base(val):
        raise InternalCheckError(
            f"functional value left the base field: n={n} k={k} x={x}")
    return val


@lru_cache(maxsize=None)
def _principal_y(ext, x):
    # pure in (ext, x), and extensions are cached one per base field
    return min(gf.solve_y(ext, x), key=ext.coeffs)


def functional_map(ext, n, k, y):
    """k (y^n (1-y) - y (1-y)^n)/(2y-1) + y^n + (1-y)^n in GF(q^2).

    Defined for any y != 1/2 of the extension, not just roots of
    y(1-y) = x over the base field; the permutation counting argument
    feeds it the fixed line of the q-power map as well.
    """
    k %= ext.base.p
    z = ext.sub(1, y)
    yn, zn = ext.pow(y, n), ext.pow(z, n)
    num = ext.sub(ext.mul(yn, z), ext.mul(y, zn))
    den = ext.sub(ext.add(y, y), 1)
    return ext.add(ext.mul(k, ext.mul(num, ext.inv(den))), ext.add(yn, zn))


def char2_eval(F, n, k, x, a=1):
    """Characteristic-2 reduction: only k mod 2 survives, leaving the
    second-kind row for odd k and the first-kind row for even k."""
    if F.p != 2:
        raise ValueError("char2_eval is for characteristic 2")
    return eval_definition(F, n, k % 2, x, a)


# -- closed forms for indices near prime powers --------------------------


def _power_shape(p, n):
    """Return (delta, l) with n = p^l + delta, delta in {0,1,2}, or None."""
    for delta in (0, 1, 2):
        m = n - delta
        if m < 1:
            continue
        l = 0
        while m % p == 0:
            m //= p
            l += 1
        if m == 1:
            return delta, l
    return None


def closed_form(F, n, k, x):
    """Closed value for n of shape p^l, p^l + 1 or p^l + 2 (odd p).

    In terms of u = 1 - 4x:
      n = p^l:     (k/2) u^((p^l-1)/2) + 1 - k/2
      n = p^l + 1: (1/2 - k/4) u^((p^l+1)/2) + (k/4) u^((p^l-1)/2) + 1/2
      n = p^l + 2: (1/2) u^((p^l+1)/2) + (k/2) x u^((p^l-1)/2)
                   - (1 - k/2) x + 1/2
    Shapes are tried in that order; overlaps (n = 3 is both 3^1 and
    3^0 + 2 when p = 3) agree, so the order only picks the route.
    Raises ValueError for any other n.
    """
    if F.p == 2:
        raise ValueError("closed_form needs odd characteristic")
    shape = _power_shape(F.p, n)
    if shape is None:
        raise ValueError(f"n = {n} is not p^l, p^l+1 or p^l+2 for p = {F.p}")
    delta, l = shape
    k %= F.p
    half, quarter = F.half, F.quarter
    u = F.sub(1, F.mul(F.from_int(4), x))
    low = F.pow(u, (F.p ** l - 1) // 2)
    if delta == 0:
        kh = F.mul(k, half)
        return F.add(F.mul(kh, low), F.sub(1, kh))
    high = F.mul(low, u)
    if delta == 1:
        kq = F.mul(k, quarter)
        return F.add(F.add(F.mul(F.sub(half, kq), high), F.mul(kq, low)),
                     half)
    kh = F.mul(k, half)
    t = F.add(F.mul(half, high), F.mul(F.mul(kh, x), low))
    return F.add(F.sub(t, F.mul(F.sub(1, kh), x)), half)


# -- half-scaled integer form ---------------------------------------------


@lru_cache(maxsize=None)
def fnk_coeffs(n, k):
    """Integer polynomial f with D(n,k; 1,x) = (1/2)^n f(1 - 4x), odd p.

    For n >= 1, f(t) = k * sum_j C(n-1, 2j+1) (t^j - t^(j+1))
    + 2 * sum_j C(n, 2j) t^j; the index-0 member is the constant 2 - k.
    Exact over the integers (k enters linearly, so reducing k mod p
    first changes nothing mod p).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return IntPolynomial((2 - k,))
    out = [0] * (n // 2 + 2)
    for j in range(n // 2 + 1):
        c = comb(n - 1, 2 * j + 1)
        if c:
            out[j] += k * c
            out[j + 1] -= k * c
        out[j] += 2 * comb(n, 2 * j)
    return IntPolynomial(tuple(out))


@lru_cache(maxsize=None)
def _fnk_row_mod(n, k, p):
    return tuple(c % p for c in fnk_coeffs(n, k).coeffs)


def eval_via_fnk(F, n, k, x):
    """Evaluate the half-scaled integer form at 1 - 4x (odd p)."""
    if F.p == 2:
        raise ValueError("the half-scaled route needs odd characteristic")
    k %= F.p
    t = F.sub(1, F.mul(F.from_int(4), x))
    acc = 0
    for c in reversed(_fnk_row_mod(n, k, F.p)):
        acc = F.add(F.mul(acc, t), c)
    return F.mul(acc, F.pow(F.half, n))


@dataclass(frozen=True)
class FnkIdentityReport:
    """Outcome of comparing fnk_coeffs against a reduced expansion."""

    n: int
    k: int
    holds: bool
    lhs: tuple
    rhs: tuple


def fnk_specialize(n, k):
    """Compare fnk_coeffs with the reduced expansions for kinds 0..3.

    k=0: 2 * sum_j C(n, 2j) t^j (the factor 2 is the bookkeeping that
         moves one halving into the (1/2)^(n-1) normalization)
    k=1: sum_j C(n+1, 2j+1) t^j
    k=2: 2 * sum_j C(n, 2j+1) t^j
    k=3: n = 2l even; -t^l + sum_{j<l} (3n-8j-1)/(n+1) C(n+1, 2j+1) t^j,
         compared exactly over the rationals.
    """
    if k not in (0, 1, 2, 3):
        raise ValueError("reduced expansions exist for k in {0, 1, 2, 3}")
    if k == 3 and n % 2:
        raise ValueError("the k = 3 expansion needs even n")
    if n < 0:
        raise ValueError("n must be non-negative")
    if k == 0:
        rhs = [2 * comb(n, 2 * j) for j in range(n // 2 + 1)]
    elif k == 1:
        rhs = [comb(n + 1, 2 * j + 1) for j in range(n // 2 + 1)]
    elif k == 2:
        rhs = [2 * comb(n, 2 * j + 1) for j in range((n + 1) // 2)] or [0]
    else:
        l = n // 2
        rhs = [Fraction(3 * n - 8 * j - 1, n + 1) * comb(n + 1, 2 * j + 1)
               for j in range(l)] + [Fraction(-1)]
    lhs = tuple(Fraction(c) for c in fnk_coeffs(n, k).coeffs)
    rhs = tuple(Fraction(c) for c in rhs)
    while rhs and rhs[-1] == 0:
        rhs = rhs[:-1]
    return FnkIdentityReport(n=n, k=k, holds=lhs == rhs, lhs=lhs, rhs=rhs)


# -- generating series ----------------------------------------------------


def genfun_coeffs(F, k, x, count):
    """First `count` series coefficients of
    (2 - k + (k - 1) z) / (1 - z + x z^2) by linear series division."""
    if F.p == 2:
        raise ValueError("the series route needs odd characteristic")
    if count < 0:
        raise ValueError("count must be non-negative")
    k %= F.p
    num = [F.from_int(2 - k), F.from_int(k - 1)]
    den = [1, F.neg(1), x]          # unit constant term: direct division
    out = []
    for i in range(count):
        t = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            t = F.sub(t, F.mul(den[j], out[i - j]))
        out.append(t)
    return out


# -- reduced polynomial representative ------------------------------------


def _mul_mod_reduction(F, a, b):
    """Product of two degree < q vectors modulo x^q - x."""
    q = F.q
    prod = [0] * (2 * q)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = F.add(prod[i + j], F.mul(ai, bj))
    for m in range(2 * q - 1, q - 1, -1):
        if prod[m]:
            prod[m - (q - 1)] = F.add(prod[m - (q - 1)], prod[m])
            prod[m] = 0
    return prod[:q]


def _point_indicator(F, c):
    """Degree < q vector of the function that is 1 at c and 0 elsewhere:
    1 - (x - c)^(q-1) reduced mod x^q - x."""
    base = [F.neg(c), 1] + [0] * (F.q - 2)
    acc = [1] + [0] * (F.q - 1)
    n = F.q - 1
    while n:
        if n & 1:
            acc = _mul_mod_reduction(F, acc, base)
        base = _mul_mod_reduction(F, base, base)
        n >>= 1
    out = [F.neg(v) for v in acc]
    out[0] = F.add(out[0], 1)
    return out


def as_polynomial(F, n, k):
    """The unique degree < q polynomial agreeing with x -> D(n,k; 1,x)
    on all of GF(q) (odd p).

    The recurrence is run on coefficient vectors modulo x^q - x.  For
    n past q^2 - 1 the index is reduced first and the one point x = 1/4
    (where index reduction is not valid) is patched back with a point
    indicator polynomial.
    """
    if F.p == 2:
        raise ValueError("as_polynomial needs odd characteristic")
    k %= F.p
    q = F.q
    n_red = n if n < q * q else (n - 1) % (q * q - 1) + 1
    prev = [F.from_int(2 - k)] + [0] * (q - 1)
    cur = [1] + [0] * (q - 1)
    if n_red == 0:
        cur = prev
    else:
        for _ in range(n_red - 1):
            shifted = [0] + prev[:q - 1]
            shifted[1] = F.add(shifted[1], prev[q - 1])
            prev, cur = cur, [F.sub(c, s) for c, s in zip(cur, shifted)]
    if n != n_red:
        want = value_at_quarter(F, n, k)
        got = 0
        for c in reversed(cur):
            got = F.add(F.mul(got, F.quarter), c)
        if got != want:
            delta = F.sub(want, got)
            ind = _point_indicator(F, F.quarter)
            cur = [F.add(c, F.mul(delta, ic)) for c, ic in zip(cur, ind)]
    return FieldPolynomial(F, tuple(cur))
