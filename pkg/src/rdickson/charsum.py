"""Full-field sums of the family members, computed without summing.

S(n) = sum over all x in GF(q) of D(n,k; 1,x) lies in the prime
subfield, so everything here is arithmetic on integer vectors mod p.
The route: a closed coefficient vector b (built twice, by a digit case
formula and by expanding a product, and compared), a right-hand-side
vector c derived from b, a first-order recurrence that pins down the
shifted sums d_n = S(n) - (k(n-1)+2)/2^n for 1 <= n <= q^2 - 1, and a
second, direct expression for S(n) sharing only c.  The recurrence
overdetermines the final block; the spare equations are checked, and
sums_bruteforce gives the term-by-term oracle for tests.
"""

from dataclasses import dataclass
from math import comb

from . import gf, modpoly, rdpoly
from .gf import InternalCheckError


def power_sum(F, m):
    """sum of a^m over all of GF(q), by direct summation (0^0 = 1).

    Equals -1 when (q-1) | m with m > 0, and 0 otherwise; tests hold
    this function to that shape.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    acc = 0
    for a in F.elements():
        acc = F.add(acc, F.pow(a, m))
    return acc


# -- the b vector ----------------------------------------------------------


def _b_by_cases(F, k):
    # digit formula: j = alpha + beta q with 0 <= alpha < q
    q, p = F.q, F.p
    out = [0] * (q * q - q + 2)
    for j in range(len(out)):
        alpha, beta = j % q, j // q
        s = alpha + beta
        if s == q - 1:
            v = (-1) ** (beta + 1) * (2 - k) * comb(q - 1, beta)
        elif s == q:
            v = (-1) ** (beta + 1) * (k - 1) * comb(q - 1, beta)
        elif s == 1:
            v = 1 - k
        elif s == 0:
            v = k - 2
        else:
            v = 0
        out[j] = v % p
    return out


def _b_by_product(F, k):
    # (2 - k + (k-1) z) * (-1 - (z - z^q)^(q-1)), no binomials involved
    q, p = F.q, F.p
    pw = [1]
    for _ in range(q - 1):
        nxt = [0] * (len(pw) + q)
        for i, c in enumerate(pw):
            if c:
                nxt[i + 1] = (nxt[i + 1] + c) % p
                nxt[i + q] = (nxt[i + q] - c) % p
        pw = nxt
    neg = [(-c) % p for c in pw]
    neg[0] = (neg[0] - 1) % p
    out = [0] * (q * q - q + 2)
    for i, c in enumerate(neg):
        if c:
            out[i] = (out[i] + (2 - k) * c) % p
            out[i + 1] = (out[i + 1] + (k - 1) * c) % p
    return out


def b_coeffs(F, k):
    """Coefficient vector b, indices 0 .. q^2 - q + 1, entries mod p.

    Assembled along two genuinely different routes; a mismatch raises
    InternalCheckError instead of silently preferring one.
    """
    if F.p == 2:
        raise ValueError("the sum machinery needs odd characteristic")
    k %= F.p
    cases = _b_by_cases(F, k)
    product = _b_by_product(F, k)
    if cases != product:
        raise InternalCheckError("b-vector constructions disagree")
    return cases


# -- the c vector ----------------------------------------------------------


def c_coeffs(F, k):
    """Right-hand-side vector c, indices 0 .. q^2 + q - 1.

    c(z) = (1 + z^(q-1) - z^q) * (z + ... + z^(q^2-1))
         - (z^(2(q-1)) + sum_{m=1}^{q-1} (z-1)^(q-1-m) z^(2m) (1/4)^m) * b(z).

    The constant term must vanish and the degree stays below q^2 + q;
    both are asserted, not assumed.
    """
    q, p = F.q, F.p
    k %= p
    b = b_coeffs(F, k)
    geo = [0] + [1] * (q * q - 1)
    part1 = modpoly.add(geo, modpoly.shift(geo, q - 1), p)
    part1 = modpoly.sub(part1, modpoly.shift(geo, q), p)
    inv4 = pow(4, -1, p)
    mixer = [0] * (2 * q - 2) + [1]
    zm1_pow = [1]                      # (z-1)^t, grown incrementally
    powers = {0: [1]}
    for t in range(1, q - 1):
        zm1_pow = modpoly.mul(zm1_pow, [p - 1, 1], p)
        powers[t] = zm1_pow
    r = 1
    for m in range(1, q):
        r = r * inv4 % p
        term = modpoly.scale(modpoly.shift(powers[q - 1 - m], 2 * m), r, p)
        mixer = modpoly.add(mixer, term, p)
    c = modpoly.sub(part1, modpoly.mul(mixer, b, p), p)
    if c and c[0] != 0:
        raise InternalCheckError("c-vector constant term is nonzero")
    if modpoly.degree(c) >= q * q + q:
        raise InternalCheckError("c-vector degree exceeds its bound")
    return c + [0] * (q * q + q - len(c))


# -- the recurrence and the direct expressions ------------------------------


def _d_vector(F, k, c):
    """Shifted sums d_1 .. d_{q^2-1} from the coefficient identity.

    The identity (z^q - z^(q-1) - 1) d(z) = c(z) determines d block by
    block going up and the top block again from the tail of c going
    down; the overlap must agree, and InternalCheckError reports any
    conflict.  Index 0 of the returned list is unused.
    """
    q, p = F.q, F.p
    d = [0] * (q * q)
    for j in range(1, q):
        d[j] = -c[j] % p
    d[q] = (c[1] - c[q]) % p
    for l in range(1, q - 1):
        if l >= 2:
            d[l * q] = (d[(l - 1) * q] - d[(l - 1) * q + 1] - c[l * q]) % p
        for j in range(1, q):
            d[l * q + j] = (d[(l - 1) * q + j] - d[(l - 1) * q + j + 1]
                            - c[l * q + j]) % p
    acc = 0
    for j in range(q - 1, -1, -1):
        acc = (acc + c[q * q + j]) % p
        d[q * q - q + j] = acc
    # the tail block is pinned twice over; the recurrence must agree
    l = q - 1
    for j in range(q):
        expect = (d[(l - 1) * q + j] - d[(l - 1) * q + j + 1]
                  - c[l * q + j]) % p
        if d[l * q + j] != expect:
            raise InternalCheckError(
                f"overdetermined tail disagrees at index {l * q + j}")
    return d


def _sums_direct(F, k, c):
    """The closed expressions for S(n) themselves, sharing only c."""
    q, p = F.q, F.p
    inv2 = pow(2, -1, p)
    two_q = pow(2, q, p)
    S = [0] * (q * q)
    for j in range(1, q):
        S[j] = (-c[j] + (k * (j - 1) + 2) * pow(inv2, j, p)) % p
    S[q] = (c[1] - c[q] + (2 - k) * pow(inv2, q, p)) % p
    half_step = (1 - two_q + pow(2, q - 1, p)) % p
    for l in range(1, q - 1):
        if l >= 2:
            S[l * q] = (S[(l - 1) * q] - S[(l - 1) * q + 1] - c[l * q]
                        + ((k - 2) * (two_q - 1) + two_q)
                        * pow(inv2, l * q, p)) % p
        for j in range(1, q):
            S[l * q + j] = (S[(l - 1) * q + j] - S[(l - 1) * q + j + 1]
                            - c[l * q + j]
                            + ((k * j + 2) * half_step + k * (two_q - 1))
                            * pow(inv2, l * q + j, p)) % p
    acc = 0
    for j in range(q - 1, -1, -1):
        acc = (acc + c[q * q + j]) % p
        S[q * q - q + j] = (acc + (k * (j - 1) + 2)
                            * pow(inv2, q * q - q + j, p)) % p
    return S


@dataclass
class SumTable:
    """All full-field sums of one (field, kind) pair for 1 <= n < q^2.

    sums[n] and d[n] are prime-subfield scalars; index 0 is the n = 0
    member, whose sum is identically 0 (a constant summed q times).
    """

    field: gf.FieldSpec
    k: int
    b: list
    c: list
    d: list
    sums: list

    def to_json(self):
        F = self.field
        return {"field": gf.field_descriptor(F),
                "k": self.k,
                "rows": [{"n": n, "sum": list(F.coeffs(self.sums[n])),
                          "d": self.d[n]}
                         for n in range(1, len(self.sums))]}


def sums_via_recurrence(F, k):
    """Build the SumTable along both closed routes and cross-check.

    Route one: solve for d, then add back the offsets (k(n-1)+2)/2^n.
    Route two: the direct expressions.  Any disagreement raises
    InternalCheckError; the brute-force oracle stays in the tests.
    """
    if F.p == 2:
        raise ValueError("the sum machinery needs odd characteristic")
    q, p = F.q, F.p
    k %= p
    b = b_coeffs(F, k)
    c = c_coeffs(F, k)
    d = _d_vector(F, k, c)
    inv2 = pow(2, -1, p)
    sums = [0] * (q * q)
    for n in range(1, q * q):
        sums[n] = (d[n] + (k * (n - 1) + 2) * pow(inv2, n, p)) % p
    direct = _sums_direct(F, k, c)
    for n in range(1, q * q):
        if sums[n] != direct[n]:
            raise InternalCheckError(
                f"sum routes disagree at n = {n}: {sums[n]} vs {direct[n]}")
    return SumTable(F, k, b, c, d, sums)


def sums_bruteforce(F, k, n):
    """Term-by-term oracle: actually add up D(n,k; 1,x) over the field."""
    acc = 0
    for x in F.elements():
        acc = F.add(acc, rdpoly.eval_recurrence(F, n, k, x))
    return acc


def residue_identity_holds(F, k):
    """Check (z^q - z^(q-1) - 1) * d(z) = c(z) with d built from the
    brute-force sums rather than from the recurrence."""
    q, p = F.q, F.p
    k %= p
    c = c_coeffs(F, k)
    inv2 = pow(2, -1, p)
    dpoly = [0] * (q * q)
    for n in range(1, q * q):
        off = (k * (n - 1) + 2) * pow(inv2, n, p) % p
        dpoly[n] = (sums_bruteforce(F, k, n) - off) % p
    mult = [0] * (q + 1)
    mult[0] = p - 1
    mult[q - 1] = (mult[q - 1] - 1) % p
    mult[q] = 1
    lhs = modpoly.mul(mult, dpoly, p)
    return modpoly.trim(lhs) == modpoly.trim(c)
