"""Integer utilities: primality, factorization, exact roots, valuations.

Everything here is exact. Factorization is trial division below a fixed
bound, then Brent's variant of Pollard rho with Miller-Rabin primality
testing; good enough for the desk-scale norms this package produces.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SMALL_PRIME_BOUND = 10_000


def _sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    return [p for p, f in enumerate(flags) if f]

SMALL_PRIMES = _sieve(_SMALL_PRIME_BOUND)
_SMALL_PRIME_SET = set(SMALL_PRIMES)


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit."""
    if limit <= _SMALL_PRIME_BOUND:
        return [p for p in SMALL_PRIMES if p <= limit]
    return _sieve(limit)


def is_prime(n: int) -> bool:
    """Miller-Rabin, deterministic for n < 3.3e24 via a fixed witness set."""
    if n < 2:
        return False
    if n <= _SMALL_PRIME_BOUND:
        return n in _SMALL_PRIME_SET
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime > n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def _pollard_brent(n: int) -> int:
    # Deterministic parameter sweep keeps factorization reproducible.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        q = 1
        count = 0
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            q = q * abs(x - y) % n
            count += 1
            if count % 128 == 0 or x == y:
                d = math.gcd(q if q else abs(x - y), n)
                if x == y:
                    break
        if 1 < d < n:
            return d
    raise ArithmeticError(f"failed to factor {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; n must be nonzero."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return out


def factorize_fraction(q: Fraction) -> dict[int, int]:
    """Signed-exponent factorization of a nonzero rational."""
    if q == 0:
        raise ValueError("cannot factor 0")
    out = dict(factorize(q.numerator))
    for p, e in factorize(q.denominator).items():
        out[p] = out.get(p, 0) - e
    return {p: e for p, e in out.items() if e}


def int_valuation(n: int, p: int) -> int:
    """Exponent of p in n (n nonzero)."""
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def fraction_valuation(q: Fraction, p: int) -> int:
    if q == 0:
        raise ValueError("valuation of 0")
    if q.numerator % p == 0:
        return int_valuation(q.numerator, p)
    return -int_valuation(q.denominator, p)


def integer_nth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2:
        return n
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def exact_nth_root(n: int, k: int):
    """Integer r with r**k == n, or None. Handles negative n for odd k."""
    if n < 0:
        if k % 2 == 0:
            return None
        r = exact_nth_root(-n, k)
        return None if r is None else -r
    r = integer_nth_root(n, k)
    return r if r**k == n else None


def strip_factors(n: int, primes) -> int:
    """Remove all factors of the given primes from |n|; keeps the sign."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    for p in primes:
        while n % p == 0:
            n //= p
    return sign * n
