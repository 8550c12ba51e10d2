"""Univariate polynomial arithmetic and factorization over F_p.

Tuples of ints in [0, p), constant term first, no trailing zeros.
Factorization = squarefree decomposition, then distinct-degree, then
equal-degree splitting. Splitting elements are drawn from a fixed
enumeration of polynomials so results are reproducible; the enumeration
covers all residues, which guarantees termination.
"""

from __future__ import annotations


def normalize(a, p):
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def degree(a):
    return len(a) - 1


def add(a, b, p):
    n = max(len(a), len(b))
    return normalize(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p
    )


def sub(a, b, p):
    n = max(len(a), len(b))
    return normalize(
        [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p
    )


def mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return normalize(out, p)


def monic(a, p):
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], -1, p)
    return tuple(c * inv % p for c in a)


def divmod_(a, b, p):
    db = degree(b)
    if db < 0:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * max(0, len(a) - db)
    while len(r) - 1 >= db:
        if r[-1] % p == 0:
            r.pop()
            continue
        c = r[-1] * inv % p
        dr = len(r) - 1
        q[dr - db] = c
        for j in range(db + 1):
            r[dr - db + j] = (r[dr - db + j] - c * b[j]) % p
        r.pop()
    return normalize(q, p), normalize(r, p)


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def gcd(a, b, p):
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def derivative(a, p):
    return normalize([i * a[i] for i in range(1, len(a))], p)


def mulmod(a, b, m, p):
    return rem(mul(a, b, p), m, p)


def powmod(a, e, m, p):
    result = (1,)
    a = rem(a, m, p)
    while e:
        if e & 1:
            result = mulmod(result, a, m, p)
        a = mulmod(a, a, m, p)
        e >>= 1
    return result


def _pth_root(a, p):
    # a must only have x^(p*j) terms; coefficients are F_p-fixed by Frobenius
    out = []
    for i, c in enumerate(a):
        if i % p == 0:
            out.append(c)
        elif c:
            raise ArithmeticError("not a p-th power polynomial")
    return normalize(out, p)


def squarefree_decomposition(f, p):
    """{monic squarefree factor: multiplicity}, factors pairwise coprime."""
    f = monic(f, p)
    out: dict[tuple, int] = {}
    if degree(f) <= 0:
        return out
    fp = derivative(f, p)
    if not fp:
        g = _pth_root(f, p)
        for fac, m in squarefree_decomposition(g, p).items():
            out[fac] = out.get(fac, 0) + p * m
        return out
    c = gcd(f, fp, p)
    w = divmod_(f, c, p)[0]
    i = 1
    while degree(w) > 0:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if degree(z) > 0:
            out[monic(z, p)] = i
        w = y
        c = divmod_(c, y, p)[0]
        i += 1
    if degree(c) > 0:
        g = _pth_root(c, p)
        for fac, m in squarefree_decomposition(g, p).items():
            out[fac] = out.get(fac, 0) + p * m
    return out


def _distinct_degree(f, p):
    # f monic squarefree; yields (product of irreducible factors of degree d, d)
    out = []
    h = (0, 1)  # x
    g = f
    d = 0
    while degree(g) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, g, p)
        gd = gcd(g, sub(h, (0, 1), p), p)
        if degree(gd) > 0:
            out.append((gd, d))
            g = divmod_(g, gd, p)[0]
            h = rem(h, g, p)
    if degree(g) > 0:
        out.append((g, degree(g)))
    return out


def _candidate_polys(p, max_deg):
    # deterministic sweep over nonconstant polynomials of degree < max_deg+1
    count = p  # skip constants
    while True:
        digits = []
        n = count
        while n:
            digits.append(n % p)
            n //= p
        count += 1
        a = normalize(digits, p)
        if degree(a) >= 1:
            yield a


def _equal_degree(f, d, p):
    # f monic squarefree, all irreducible factors of degree d
    n = degree(f)
    if n == d:
        return [f]
    for a in _candidate_polys(p, n - 1):
        if p == 2:
            t = ()
            b = rem(a, f, p)
            for _ in range(d):
                t = add(t, b, p)
                b = mulmod(b, b, f, p)
        else:
            e = (p**d - 1) // 2
            t = sub(powmod(a, e, f, p), (1,), p)
        g = gcd(f, t, p)
        if 0 < degree(g) < n:
            left = _equal_degree(g, d, p)
            right = _equal_degree(divmod_(f, g, p)[0], d, p)
            return left + right
    raise ArithmeticError("equal-degree splitting failed")  # pragma: no cover


def factor(f, p):
    """Monic irreducible factorization of f mod p: sorted [(factor, mult)]."""
    f = normalize(f, p)
    if degree(f) < 1:
        return []
    pieces = []
    for sqf, mult in squarefree_decomposition(f, p).items():
        for prod, d in _distinct_degree(sqf, p):
            for irr in _equal_degree(prod, d, p):
                pieces.append((irr, mult))
    pieces.sort(key=lambda t: (degree(t[0]), t[0]))
    return pieces


def is_irreducible(f, p):
    fac = factor(f, p)
    return len(fac) == 1 and fac[0][1] == 1 and degree(fac[0][0]) == degree(normalize(f, p))
