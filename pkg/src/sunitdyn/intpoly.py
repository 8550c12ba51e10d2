"""Dense univariate polynomials over Z and Q.

Polynomials are tuples, constant term first, with no trailing zeros;
the zero polynomial is the empty tuple. Coefficients are ints where the
routine says "integer polynomial" and Fractions otherwise; the arithmetic
helpers accept either.

The gcd here is the primitive polynomial gcd over Q computed by a
primitive pseudo-remainder sequence on integer polynomials, with a
single-prime modular degree check to shortcut the (very common) coprime
case. Integer content is deliberately discarded: callers want the
polynomial part only.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .intutil import is_prime

_GCD_CHECK_PRIME = 2**31 - 1  # Mersenne prime; only its being prime matters


def normalize(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(a) -> int:
    return len(a) - 1


def leading(a):
    return a[-1]


def add(a, b):
    n = max(len(a), len(b))
    return normalize(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def neg(a):
    return tuple(-c for c in a)


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return normalize(out)


def scale(a, c):
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def derivative(a):
    return normalize(i * a[i] for i in range(1, len(a)))


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def evaluate_homogeneous(a, x, y, deg_hint=None):
    """Value of the degree-d homogenization of a at (x, y), d = deg_hint."""
    d = degree(a) if deg_hint is None else deg_hint
    acc = 0
    xp = 1
    for i in range(d + 1):
        c = a[i] if i < len(a) else 0
        if c:
            acc += c * xp * y ** (d - i)
        xp *= x
    return acc


def content(a) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g if g else 1


def primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    g = content(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def pseudo_rem(a, b):
    """Pseudo-remainder of integer polynomials: lc(b)^(da-db+1)*a mod b."""
    da, db = degree(a), degree(b)
    if db < 0:
        raise ZeroDivisionError("pseudo_rem by zero polynomial")
    lb = b[-1]
    r = list(a)
    for i in range(da - db, -1, -1):
        coeff = r[db + i]
        if coeff:
            for j in range(len(r)):
                r[j] *= lb
            for j in range(db + 1):
                r[i + j] -= coeff * b[j]
        r = r[: db + i]
        while len(r) < db + i:
            r.append(0)
    return normalize(r)


def divmod_frac(a, b):
    """Exact (quotient, remainder) over Q; returns Fraction tuples."""
    db = degree(b)
    if db < 0:
        raise ZeroDivisionError("division by zero polynomial")
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(0, len(a) - db)
    lb = Fraction(b[-1])
    while len(r) - 1 >= db and normalize(r):
        dr = len(r) - 1
        if r[-1] == 0:
            r.pop()
            continue
        c = r[-1] / lb
        q[dr - db] = c
        for j in range(db + 1):
            r[dr - db + j] -= c * Fraction(b[j])
        r.pop()
    return normalize(q), normalize(r)


def divexact(a, b):
    """a / b when b divides a over Q; result is an integer polynomial if
    the exact quotient has integer coefficients, else Fraction tuple."""
    q, r = divmod_frac(a, b)
    if r:
        raise ArithmeticError("divexact: division not exact")
    if all(c.denominator == 1 for c in q):
        return tuple(int(c) for c in q)
    return q


def _to_fp(a, p):
    return normalize(c % p for c in a)


def _fp_gcd_degree(a, b, p):
    # plain Euclid over F_p; only the degree of the gcd is consumed
    a = _to_fp(a, p)
    b = _to_fp(b, p)
    while b:
        a, b = b, _fp_rem(a, b, p)
    return degree(a)


def _fp_rem(a, b, p):
    db = degree(b)
    inv = pow(b[-1], -1, p)
    r = list(a)
    while len(r) - 1 >= db:
        if r[-1] % p == 0:
            r.pop()
            continue
        c = r[-1] * inv % p
        dr = len(r) - 1
        for j in range(db + 1):
            r[dr - db + j] = (r[dr - db + j] - c * b[j]) % p
        r.pop()
    return normalize(r)


def gcd(a, b):
    """Primitive gcd over Q of integer polynomials (positive leading coeff).

    Integer content is discarded. For coprime inputs a single modular
    degree check certifies the answer without any big-integer work.
    """
    a = primitive(normalize(a))
    b = primitive(normalize(b))
    if not a:
        return b
    if not b:
        return a
    p = _GCD_CHECK_PRIME
    assert is_prime(p)
    if a[-1] % p and b[-1] % p:
        # deg gcd over Q <= deg gcd mod p whenever p keeps both degrees
        if _fp_gcd_degree(a, b, p) == 0:
            return (1,)
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return a


def squarefree_part(a):
    """Product of the distinct irreducible factors (primitive, over Z)."""
    a = primitive(normalize(a))
    if degree(a) <= 0:
        return a
    g = gcd(a, derivative(a))
    if degree(g) == 0:
        return a
    return primitive(_as_int(divexact(a, g)))


def _as_int(a):
    if a and isinstance(a[0], Fraction):
        lcm = 1
        for c in a:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        return tuple(int(c * lcm) for c in a)
    return a


def multiplicity_decomposition(a):
    """Yun decomposition [(g_i, i)] with a ~ prod g_i^i, g_i squarefree
    pairwise coprime, deg g_i > 0. Characteristic zero only.

    The running pair (c, d) must be divided by the *same* polynomial each
    round or the mixed difference d/h - c' loses its meaning, so no
    re-normalization happens inside the loop.
    """
    a = primitive(normalize(a))
    if degree(a) <= 0:
        return []
    g = gcd(a, derivative(a))
    if degree(g) == 0:
        return [(a, 1)]
    out = []
    c = divexact(a, g)
    d = sub(divexact(derivative(a), g), derivative(c))
    i = 1
    while degree(c) > 0:
        h = gcd(_as_int(c), _as_int(d))
        if degree(h) > 0:
            out.append((h, i))
            c = divexact(c, h)
            d = divexact(d, h)
        d = sub(d, derivative(c))
        i += 1
    return out


def resultant(a, b) -> Fraction:
    """Resultant over Q by the Euclidean recursion."""
    a = normalize(tuple(Fraction(c) for c in a))
    b = normalize(tuple(Fraction(c) for c in b))
    res = Fraction(1)
    while True:
        da, db = degree(a), degree(b)
        if da < 0 or db < 0:
            # at least one zero polynomial
            return Fraction(0)
        if db == 0:
            return res * b[0] ** da
        if da == 0:
            return res * a[0] ** db * (-1) ** (da * db)
        if da < db:
            a, b = b, a
            if da * db % 2:
                res = -res
            continue
        _, r = divmod_frac(a, b)
        if not r:
            return Fraction(0)
        res *= (-1) ** (da * db) * b[-1] ** (da - degree(r))
        a, b = b, r


def discriminant(a):
    """Discriminant of a monic integer polynomial, as an exact integer."""
    n = degree(a)
    if n <= 0:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(a, derivative(a))
    d = Fraction((-1) ** (n * (n - 1) // 2)) * r / Fraction(a[-1])
    assert d.denominator == 1
    return int(d)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def real_root_count(a) -> int:
    """Number of distinct real roots, by Sturm sign variations."""
    a = normalize(tuple(Fraction(c) for c in a))
    if degree(a) <= 0:
        return 0
    da = derivative(a)
    chain = [a, da]
    while chain[-1]:
        _, r = divmod_frac(chain[-2], chain[-1])
        if not r:
            break
        chain.append(neg(r))
    chain = [c for c in chain if c]

    def variations(at_plus_infinity):
        signs = []
        for c in chain:
            s = _sign(c[-1])
            if not at_plus_infinity and degree(c) % 2 == 1:
                s = -s
            if s:
                signs.append(s)
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    return variations(False) - variations(True)
